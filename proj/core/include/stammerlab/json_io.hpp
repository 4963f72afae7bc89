#pragma once

#include <json.hpp>

#include "stammerlab/ansatz.hpp"
#include "stammerlab/dyck.hpp"
#include "stammerlab/growth.hpp"
#include "stammerlab/laguerre.hpp"
#include "stammerlab/profile.hpp"
#include "stammerlab/staircase.hpp"
#include "stammerlab/stammering.hpp"
#include "stammerlab/tableau.hpp"

// Wire formats:
//   partition            [2,1]
//   tableau              [[2,3],[4]]            (bottom row first)
//   stammering tableau   [[],[1],[1],[]]
//   rook placement       {"n":5,"dots":[6,1,4,3,2]}   (null = dotless row)
//   dyck path            "UUDD"
//   chain                ["UD","UDUD",...]
//   permutation          [5,1,3,4,6,2]
//   laguerre / tableau   {"shape":"UUDD","dots":[[1,1],[2,1]]}
//   trivariate poly      [{"q_exp":0,"a_exp":1,"b_exp":0,"coeff":1},...]
//   growth diagram       {"n":..,"labels":[[..]],"dots":[[..]]}  (row-major)

namespace stammerlab {

nlohmann::json to_json(const Partition& p);
nlohmann::json to_json(const IncompleteStandardTableau& t);
nlohmann::json to_json(const StammeringTableau& t);
nlohmann::json to_json(const RookPlacement& r);
nlohmann::json to_json(const PartialRookPlacement& r);
nlohmann::json to_json(const DyckPath& p);
nlohmann::json to_json(const ChainOfDyckShapes& c);
nlohmann::json to_json(const Permutation& s);
nlohmann::json to_json(const LaguerreHistory& h);
nlohmann::json to_json(const DyckTableau& t);
nlohmann::json to_json(const TrivariatePoly& p);
nlohmann::json to_json(const GrowthDiagram& g);

Partition partition_from_json(const nlohmann::json& j);
IncompleteStandardTableau tableau_from_json(const nlohmann::json& j);
StammeringTableau stammering_from_json(const nlohmann::json& j);
RookPlacement rook_from_json(const nlohmann::json& j);
PartialRookPlacement partial_rook_from_json(const nlohmann::json& j);
DyckPath dyck_path_from_json(const nlohmann::json& j);
ChainOfDyckShapes chain_from_json(const nlohmann::json& j);
Permutation permutation_from_json(const nlohmann::json& j);
LaguerreHistory laguerre_from_json(const nlohmann::json& j);
DyckTableau dyck_tableau_from_json(const nlohmann::json& j);

}  // namespace stammerlab
