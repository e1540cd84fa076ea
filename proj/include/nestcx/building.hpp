#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "nestcx/errors.hpp"
#include "nestcx/graph.hpp"
#include "nestcx/subset.hpp"

namespace nestcx {

/// A connectivity family on ground set {0,...,n-1}: contains every singleton,
/// and is closed under unions of intersecting members. Immutable once built.
///
/// Family members are kept in canonical order. Components are the maximal
/// members; they partition the ground set. rank = n - #components.
class BuildingSet {
 public:
  /// Checks both axioms on an explicit family (quadratic pair scan) and
  /// normalizes it. Throws Error on any violation.
  static BuildingSet validate(std::vector<Subset> sets, GroundSet ground);

  /// Connected subgraphs of g, including singleton vertex sets.
  static BuildingSet from_graph(const Graph& g);

  /// Constructs without the axiom scan. The caller guarantees both axioms;
  /// component extraction asserts the consequences it relies on.
  static BuildingSet from_family_unchecked(std::vector<Subset> sets, int ground_size);

  [[nodiscard]] int ground_size() const { return n_; }
  [[nodiscard]] Subset ground() const { return Subset::full(n_); }
  [[nodiscard]] int rank() const { return rank_; }

  /// All members, canonical order.
  [[nodiscard]] const std::vector<Subset>& sets() const { return sets_; }
  /// Maximal members, canonical order. Pairwise disjoint, cover the ground set.
  [[nodiscard]] const std::vector<Subset>& components() const { return components_; }
  /// Non-maximal members, canonical order. These index the complex.
  [[nodiscard]] const std::vector<Subset>& vertices() const { return vertices_; }

  [[nodiscard]] bool contains(Subset s) const {
    return !s.empty() && member_[s.bits()];
  }
  [[nodiscard]] bool is_component(Subset s) const;
  [[nodiscard]] bool is_vertex(Subset s) const { return contains(s) && !is_component(s); }
  /// Component containing element e.
  [[nodiscard]] Subset component_of(int e) const { return components_[comp_of_[e]]; }
  [[nodiscard]] int component_index_of(int e) const { return comp_of_[e]; }

  /// Position of s in vertices(), if it is one.
  [[nodiscard]] std::optional<int> vertex_index(Subset s) const;

  /// Maximal members among those contained in t. For t a member this gives
  /// {t}; in general the components of the family restricted to t.
  [[nodiscard]] std::vector<Subset> maximal_members_within(Subset t) const;

 private:
  BuildingSet() = default;
  void finish(std::vector<Subset> sets, int ground_size, bool check_axioms);

  int n_ = 0;
  int rank_ = 0;
  std::vector<Subset> sets_;
  std::vector<Subset> components_;
  std::vector<Subset> vertices_;
  std::vector<int> comp_of_;       // element -> index into components_
  std::vector<bool> member_;       // bit pattern -> membership
};

/// Subfamily supported on c, re-indexed to ground {0,...,|c|-1}.
struct ReindexedBuilding {
  BuildingSet building;
  Subset support;                  // c, in the parent's indexing
  std::vector<int> to_parent;      // new element -> parent element

  [[nodiscard]] Subset lift(Subset s) const { return spread(s, support); }
  [[nodiscard]] Subset drop(Subset s) const { return compress(s, support); }
};

/// Members contained in c. Throws empty_restriction on empty c.
ReindexedBuilding restriction(const BuildingSet& b, Subset c);

/// Members disjoint from c, together with J - c for members J properly
/// containing c; re-indexed to the complement of c. The formula makes sense
/// for any nonempty c; pass strict to insist that c is itself a member.
/// Throws empty_ground when c is the whole ground set.
ReindexedBuilding contraction(const BuildingSet& b, Subset c, bool strict = false);

/// Disjoint union on concatenated ground sets.
BuildingSet product(const std::vector<BuildingSet>& factors);

/// The family on the same ground set whose complex is the vertex link of
/// member c: members inside c, plus members of the contraction by c spread
/// back onto the complement. Requires c to be a non-maximal member.
BuildingSet link_building(const BuildingSet& b, Subset c);

/// The comparison graph formed by b's two-element members, together with
/// whether the connected-subgraph family of that graph reproduces b. No
/// other graph can work: edges of a witness graph must be members.
struct GraphicalTest {
  bool graphical = false;
  Graph graph;
};
GraphicalTest is_graphical(const BuildingSet& b);

}  // namespace nestcx
