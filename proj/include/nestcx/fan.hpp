#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nestcx/building.hpp"
#include "nestcx/linalg.hpp"
#include "nestcx/nested.hpp"
#include "nestcx/parallel.hpp"

namespace nestcx {

/// Integer lattice of rank n - #components: the quotient of Z^n by the
/// span of the component indicator vectors. Coordinates are indexed by the
/// ground elements that survive eliminating the largest element of each
/// component.
struct QuotientLattice {
  int n = 0;
  int dim = 0;
  std::vector<Subset> components;
  std::vector<int> eliminated;    // per component, the largest element
  std::vector<int> coord_of;      // element -> coordinate, -1 when eliminated
  std::vector<int> axis_element;  // coordinate -> element
  std::vector<int> elim_of;       // element -> eliminated element of its component
};

QuotientLattice make_quotient(const BuildingSet& b);

using LatticeVector = std::vector<std::int64_t>;

/// Quotient representative with the eliminated coordinates set to zero.
LatticeVector project(const QuotientLattice& q, const std::vector<std::int64_t>& ambient);

/// Image of the indicator vector of a member; entries lie in {-1, 0, 1}.
/// Components map to zero.
LatticeVector ray_of(const QuotientLattice& q, Subset member);

/// Columns are the rays of the face members, in canonical member order.
linalg::Matrix<linalg::Int> ray_matrix(const QuotientLattice& q, const NestedSet& face);

/// Determinant of the ray matrix of a maximal face. Unimodularity of every
/// maximal face makes the fan smooth.
linalg::Int basis_det(const QuotientLattice& q, const BuildingSet& b, const NestedSet& face);

/// v written as a positive integer combination of rays with nested support.
struct Expansion {
  std::vector<std::pair<Subset, std::int64_t>> terms;  // canonical member order

  [[nodiscard]] NestedSet support() const {
    NestedSet s;
    s.reserve(terms.size());
    for (const auto& [m, c] : terms) s.push_back(m);
    return s;
  }
};

Expansion nested_expansion(const BuildingSet& b, const QuotientLattice& q, const LatticeVector& v);

/// The face whose relatively open cone contains v: the expansion support.
NestedSet locate(const BuildingSet& b, const QuotientLattice& q, const LatticeVector& v);

/// Greedy completion of a face to a maximal one, scanning vertices in
/// canonical order.
NestedSet extend_to_maximal(const BuildingSet& b, const NestedSet& face);

struct FanOptions {
  int samples = 1000;
  std::uint64_t seed = 0;
  int box = 50;  // expansion samples are drawn from [-box, box]^dim
  Exec exec = Exec::par;
};

struct FanReport {
  bool unimodular = true;      // every maximal cone has determinant +-1
  bool pairwise_ok = true;     // cones meet exactly in their shared face
  bool expansion_ok = true;    // sampled vectors expand with nested support and round-trip
  bool interior_ok = true;     // sampled interior points lie in no other maximal cone
  std::int64_t cones = 0;
  std::int64_t pairs = 0;
  std::int64_t samples_expanded = 0;
  std::int64_t samples_separated = 0;
  std::string first_violation;

  [[nodiscard]] bool ok() const { return unimodular && pairwise_ok && expansion_ok && interior_ok; }
};

/// Full structural check of the fan spanned by the maximal faces: exact
/// unimodularity, exact pairwise cone intersections (double description
/// over arbitrary-precision integers), and seeded random sampling for the
/// covering and disjointness properties.
FanReport verify_fan(const BuildingSet& b, const QuotientLattice& q, const NestedComplex& cx,
                     const FanOptions& opts = {});

}  // namespace nestcx
