#pragma once

#include <string>

#include "nestcx/building.hpp"
#include "nestcx/fan.hpp"
#include "nestcx/graph.hpp"
#include "nestcx/nested.hpp"
#include "nestcx/polytope.hpp"

namespace nestcx {

/// Input shapes. Indices are 0-based on both sides of the boundary; only
/// human-facing text (reports, DOT, SVG) is rendered 1-based.
///   building: {"ground_set": n, "sets": [[i, ...], ...]}
///   graph:    {"vertices": n, "edges": [[i, j], ...]}
/// Malformed documents throw parse_error with the position nlohmann reports;
/// well-formed documents that fail the axioms throw the usual codes.
BuildingSet building_from_json(const std::string& text);
Graph graph_from_json(const std::string& text);

/// Output documents. Keys are sorted (nlohmann's default object order),
/// subsets appear in canonical order, and every document ends in a newline,
/// so equal inputs produce byte-equal artifacts.
std::string building_to_json(const BuildingSet& b);
std::string complex_to_json(const NestedComplex& cx);
std::string fan_to_json(const BuildingSet& b, const QuotientLattice& q, const NestedComplex& cx);
std::string polytope_to_json(const BuildingSet& b, const Polytope& p, const NestedComplex& cx);

/// Undirected DOT document with one node per maximal face, labeled 1-based.
std::string dual_graph_to_dot(const DualGraph& dual);

}  // namespace nestcx
