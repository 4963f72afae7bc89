#pragma once

#include <string>

#include "stammerlab/dyck.hpp"
#include "stammerlab/growth.hpp"
#include "stammerlab/laguerre.hpp"
#include "stammerlab/profile.hpp"
#include "stammerlab/staircase.hpp"
#include "stammerlab/stammering.hpp"

namespace stammerlab {

// All renderers emit byte-deterministic output for a given object.
enum class RenderFormat { Ascii, Svg };

std::string render_dyck_path(const DyckPath& p, RenderFormat format);
std::string render_rook(const PartialRookPlacement& r, RenderFormat format);
std::string render_stammering(const StammeringTableau& t, RenderFormat format);
std::string render_chain(const ChainOfDyckShapes& c, RenderFormat format);
std::string render_laguerre(const LaguerreHistory& h, RenderFormat format);
std::string render_dyck_tableau(const DyckTableau& t, RenderFormat format);
std::string render_permutation(const Permutation& s, RenderFormat format);
std::string render_growth(const GrowthDiagram& g, RenderFormat format);

}  // namespace stammerlab
