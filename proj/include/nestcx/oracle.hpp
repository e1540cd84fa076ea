#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "nestcx/building.hpp"
#include "nestcx/fan.hpp"
#include "nestcx/nested.hpp"
#include "nestcx/polytope.hpp"

namespace nestcx {

/// Reference implementations kept deliberately naive. They share no logic
/// with the optimized paths: the face test quantifies over every antichain
/// with no disjointness reasoning, expansions are counted by solving one
/// linear system per candidate support, and vertices come from enumerating
/// tight row subsets of the H-description.

/// The textbook condition, checked literally on one candidate face.
bool raw_is_nested(const BuildingSet& b, const NestedSet& face);

/// The whole complex by the raw test: faces are grown one member at a time
/// (the condition is closed under subsets) and every candidate is accepted
/// by raw_is_nested alone. Up to 15 candidate members the full power set is
/// scanned as well and compared.
NestedComplex brute_nested_complex(const BuildingSet& b, std::int64_t max_faces = 1'000'000);

/// Number of faces of cx that write v as a positive combination of their
/// rays. Exactness of the claim means this is 1 for every v.
std::int64_t brute_expansion_count(const BuildingSet& b, const QuotientLattice& q,
                                   const NestedComplex& cx, const LatticeVector& v,
                                   NestedSet* found = nullptr);

/// All vertices of the H-description: every choice of rank inequalities is
/// turned into equalities, solved, and kept when feasible. Sorted, unique.
std::vector<Point> brute_vertices(const BuildingSet& b, const Polytope& p);

/// Random connected-subgraph family of a random graph on 2..max_n vertices.
BuildingSet random_graph_building(std::mt19937_64& rng, int max_n = 6);

/// Same, then union-closed again after inserting a few random subsets, so
/// roughly half the results are not graphical.
BuildingSet random_building(std::mt19937_64& rng, int max_n = 6);

struct OracleReport {
  bool complex_ok = true;
  bool expansion_ok = true;
  bool vertices_ok = true;
  bool vertices_skipped = false;  // tight-subset count too large to try
  std::int64_t faces_checked = 0;
  std::int64_t expansions_checked = 0;
  std::int64_t vertices_checked = 0;
  std::string first_violation;

  [[nodiscard]] bool ok() const { return complex_ok && expansion_ok && vertices_ok; }
};

/// Optimized paths against the references: face lists, sampled expansion
/// uniqueness, and the vertex set. Everything in this module runs on one
/// thread; the references stay simple enough to read in one sitting.
OracleReport oracle_compare(const BuildingSet& b, std::uint64_t seed, int samples);

}  // namespace nestcx
