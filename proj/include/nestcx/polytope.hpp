#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "nestcx/building.hpp"
#include "nestcx/fan.hpp"
#include "nestcx/linalg.hpp"
#include "nestcx/nested.hpp"
#include "nestcx/parallel.hpp"

namespace nestcx {

/// Right hand side of the defining inequality for a member of the given
/// size inside a component of the given size: m * (2^(c-1) - 2^(m-1)).
/// Zero exactly when the member is the whole component.
std::int64_t support_value(int member_size, int component_size);

struct Halfspace {
  Subset set;         // sum of the coordinates over set
  std::int64_t rhs;   // ... is at most rhs
};

/// H-description: one equality per component (coordinate sum zero), one
/// inequality per non-maximal member.
struct Polytope {
  int n = 0;
  std::vector<Subset> equalities;
  std::vector<Halfspace> inequalities;
};

Polytope realize(const BuildingSet& b);

using Point = std::vector<linalg::Rational>;

/// The vertex cut out by turning the face's inequalities into equalities.
/// The face must be maximal; the system is square and invertible.
Point polytope_vertex(const BuildingSet& b, const Polytope& p, const NestedSet& maximal_face);

/// The rays around an exchange step satisfy one linear relation: removed +
/// added + padding - intersection blocks - union (when not a component)
/// sums to zero in the quotient lattice.
bool relation_vanishes(const QuotientLattice& q, const ExchangeStep& step);

/// The same combination applied to caller-supplied right hand sides, for
/// experimenting with other support data. f is evaluated on members and on
/// the union set (where the default data is zero on components).
std::int64_t exchange_margin(const ExchangeStep& step,
                             const std::function<std::int64_t(Subset)>& f);

/// exchange_margin with the default right hand sides. Strict positivity
/// makes the two cones of the step fold outward across their shared wall;
/// throws convexity_violation when the margin is not positive.
std::int64_t convexity_margin(const BuildingSet& b, const ExchangeStep& step);

struct NormalFanReport {
  bool vertices_ok = true;    // every maximal face cuts out a distinct vertex
  bool tightness_ok = true;   // tight inequalities at a vertex = face members
  bool relations_ok = true;   // edge relations vanish in the lattice
  bool margins_ok = true;     // edge margins strictly positive
  bool adjacency_ok = true;   // polytope edges = dual graph edges
  bool faces2_ok = true;      // polygons match the cycles around corank 2 faces
  std::int64_t vertices = 0;
  std::int64_t edges = 0;
  std::int64_t polygons = 0;
  std::string first_violation;

  [[nodiscard]] bool ok() const {
    return vertices_ok && tightness_ok && relations_ok && margins_ok && adjacency_ok && faces2_ok;
  }
};

/// Exact check that the polytope's normal fan is the fan of the complex:
/// solves every vertex, compares tight sets with faces, verifies the edge
/// relations and margins, and matches the polytope's edge graph and
/// polygons against the dual graph and its geodesic cycles.
NormalFanReport verify_normal_fan(const BuildingSet& b, const NestedComplex& cx,
                                  const DualGraph& dual, Exec exec = Exec::par);

}  // namespace nestcx
