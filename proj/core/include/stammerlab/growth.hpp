#pragma once

#include <utility>
#include <vector>

#include "stammerlab/partition.hpp"
#include "stammerlab/staircase.hpp"
#include "stammerlab/stammering.hpp"
#include "stammerlab/tableau.hpp"

namespace stammerlab {

// Fomin growth diagrams on the double staircase.
//
// Vertices carry partitions; a cell has corners
//     mu  --- rho
//      |  (.)  |
//   lambda --- nu
// and rho is determined by (lambda, mu, nu, dot) through the four local
// rules. The West and South borders carry the empty partition in the plain
// case; the walk read along the North-East boundary from the top-left to
// the bottom-right corner is a stammering tableau.

// Local rules. `dotted` is only legal when lambda == mu == nu.
Partition forward_cell(const Partition& lam, const Partition& mu,
                       const Partition& nu, bool dotted);

// Exact inverse: the unique (lambda, dotted) with
// forward_cell(lambda, mu, nu, dotted) == rho. Throws on unreachable triples.
std::pair<Partition, bool> reverse_cell(const Partition& mu, const Partition& nu,
                                        const Partition& rho);

struct GrowthDiagram {
    int n = 0;
    // labels[x][y], x in 0..2n; column x holds vertices y = 0..vertex_top(x).
    std::vector<std::vector<Partition>> labels;
    // dot[x][y] for the cell whose SW corner is (x, y).
    std::vector<std::vector<char>> dot;

    static GrowthDiagram from_rook(const RookPlacement& r);
    std::vector<Partition> ne_boundary() const;

    static int vertex_top(int n, int x);
    static int cell_top(int n, int x);  // number of cells in column x (0-based)
};

StammeringTableau rook_to_stammering(const RookPlacement& r);
RookPlacement stammering_to_rook(const StammeringTableau& t);

// Same bijection through Schensted insertions along the NE boundary:
// a horizontal step over a column holding dot k row-inserts k, a vertical
// step right of row k removes k, dotless columns copy the tableau.
struct SchenstedResult {
    StammeringTableau shapes;
    std::vector<IncompleteStandardTableau> tableaux;
};
SchenstedResult rook_to_stammering_via_schensted(const RookPlacement& r);

// Same bijection through Viennot shadow lines: family j of shadow lines
// drives row j of every partition (+1 per horizontal boundary step crossing
// a line of the family, -1 per vertical one).
StammeringTableau rook_to_stammering_via_shadows(const RookPlacement& r);

// Generalized walks with one empty endpoint decode to a (partial) rook
// placement plus border data read off the completed reverse diagram.
enum class EndpointCase {
    EmptyToLambda,  // walk from the empty partition to lambda
    LambdaToEmpty,  // walk from lambda to the empty partition
};

struct GeneralizedDecoding {
    EndpointCase direction = EndpointCase::EmptyToLambda;
    // Full (one dot per row) for EmptyToLambda; n-|lambda| dots otherwise.
    PartialRookPlacement placement;
    // Standard tableau of shape lambda recording the border growth order.
    IncompleteStandardTableau tableau;
    // EmptyToLambda only: the dotless columns where the bottom border grows.
    std::vector<int> growth_columns;

    friend bool operator==(const GeneralizedDecoding&, const GeneralizedDecoding&) = default;
};

GeneralizedDecoding decode_generalized(const StammeringTableau& t, EndpointCase dir);
StammeringTableau encode_generalized(const GeneralizedDecoding& d);

RookPlacement to_full_placement(const PartialRookPlacement& p);

}  // namespace stammerlab
