#pragma once

#include <string>

#include "nestcx/fan.hpp"
#include "nestcx/nested.hpp"
#include "nestcx/polytope.hpp"

namespace nestcx {

/// Two-panel SVG: the fan as labeled rays on the left, the polytope as a
/// filled polygon with vertex dots on the right, both drawn in quotient
/// coordinates. Labels are 1-based. Requires rank at most 2 and throws
/// wrong_dimension above that; rank 0 and 1 degenerate to a dot and a
/// segment. Output is a deterministic function of the input.
std::string render_svg(const BuildingSet& b, const QuotientLattice& q, const NestedComplex& cx,
                       const Polytope& p, const DualGraph& dual);

}  // namespace nestcx
