#pragma once

#include "nestcx/building.hpp"
#include "nestcx/graph.hpp"

namespace fx {

using nestcx::BuildingSet;
using nestcx::GroundSet;
using nestcx::Subset;

// The five rank-2 families, named by the shape of their dual graph. Between
// them they realize every possible geodesic loop, so most tests run over
// all five.

// Singletons plus the whole set on three elements. Not graphical.
inline BuildingSet triangle() {
  return BuildingSet::validate(
      {Subset::of({0}), Subset::of({1}), Subset::of({2}), Subset::of({0, 1, 2})}, GroundSet(3));
}

// Two disjoint two-element members on four elements. Graphical.
inline BuildingSet square() {
  return BuildingSet::validate({Subset::of({0}), Subset::of({1}), Subset::of({2}), Subset::of({3}),
                                Subset::of({0, 2}), Subset::of({1, 3})},
                               GroundSet(4));
}

// Singletons, one two-element member, and the whole set. Not graphical.
inline BuildingSet trapezoid() {
  return BuildingSet::validate(
      {Subset::of({0}), Subset::of({1}), Subset::of({2}), Subset::of({0, 1}), Subset::of({0, 1, 2})},
      GroundSet(3));
}

// The path on three vertices. Graphical.
inline BuildingSet pentagon() { return BuildingSet::from_graph(nestcx::path_graph(3)); }

// All nonempty subsets of three elements (the complete graph). Graphical.
inline BuildingSet hexagon() { return BuildingSet::from_graph(nestcx::complete_graph(3)); }

inline std::vector<BuildingSet> rank2_family() {
  return {triangle(), square(), trapezoid(), pentagon(), hexagon()};
}

}  // namespace fx
