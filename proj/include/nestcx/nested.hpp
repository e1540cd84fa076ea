#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "nestcx/building.hpp"
#include "nestcx/parallel.hpp"

namespace nestcx {

/// A face of the complex: a set of non-maximal members, kept in canonical
/// subset order with no repeats.
using NestedSet = std::vector<Subset>;

NestedSet normalize_face(NestedSet n);
/// Lexicographic comparison of normalized faces under the canonical subset order.
bool face_less(const NestedSet& a, const NestedSet& b);

/// Both arguments must be non-maximal members. True when the two sets are
/// comparable or disjoint, and in the disjoint case their union is absent.
bool pairwise_compatible(const BuildingSet& b, Subset x, Subset y);

/// Full test: every subfamily of pairwise disjoint members, of size two or
/// more, must have its union outside the family. Throws not_a_vertex when a
/// member is maximal or absent.
bool is_nested(const BuildingSet& b, const NestedSet& n);

struct EnumOptions {
  std::int64_t max_faces = 1'000'000;
  Exec exec = Exec::par;
  /// Force the general union test even when the family comes from a graph
  /// (where the pairwise test alone is exact). Used for cross-checking.
  bool force_general = false;
};

struct NestedComplex {
  std::vector<std::int64_t> f;             // f[k] = number of faces of cardinality k
  std::vector<std::vector<NestedSet>> faces;  // by cardinality; each list sorted by face_less

  [[nodiscard]] int rank() const { return int(f.size()) - 1; }
  [[nodiscard]] const std::vector<NestedSet>& maximal() const { return faces.back(); }
  [[nodiscard]] std::int64_t total() const {
    std::int64_t t = 0;
    for (auto c : f) t += c;
    return t;
  }
};

/// Depth-first enumeration of all faces. Verifies along the way that every
/// inclusion-maximal face has exactly rank members (throws not_maximal
/// otherwise). Throws too_large past 16 ground elements or max_faces faces.
NestedComplex enumerate_complex(const BuildingSet& b, const EnumOptions& opts = {});

/// Faces N' such that N' + {c} is a face, c removed. The complex must carry
/// explicit face lists.
std::vector<NestedSet> link_faces(const NestedComplex& cx, Subset c);

/// The vertex link of c, in two equivalent presentations: a family on the
/// original ground set, and the product of the restriction to c with the
/// contraction by c.
struct VertexLink {
  Subset center;
  BuildingSet same_ground;
  BuildingSet factored;

  /// Image of a link vertex in the same-ground family: I - c when c is a
  /// proper subset of I, otherwise I itself.
  [[nodiscard]] Subset to_same_ground(Subset link_vertex) const;
  /// Image of a same-ground vertex in the factored family's indexing.
  [[nodiscard]] Subset to_factored(Subset same_ground_vertex) const;
};
VertexLink link(const BuildingSet& b, Subset c);

/// One elementary move between adjacent maximal faces, together with the
/// certificate data that makes the move valid: the maximal members of the
/// family inside removed & added, a padding family completing the union to
/// a common face member or a component, and that union.
struct ExchangeStep {
  NestedSet from;
  NestedSet to;
  Subset removed;
  Subset added;
  std::vector<Subset> intersection_blocks;
  std::vector<Subset> padding;
  Subset union_set;
  bool union_is_component = false;
};

/// Removes `out` from a maximal face and finds the unique replacement
/// vertex. Verifies uniqueness by scanning every candidate.
ExchangeStep exchange(const BuildingSet& b, const NestedSet& maximal_face, Subset out);

/// Certificate for a given adjacent pair (faces differing in one member).
ExchangeStep exchange_record(const BuildingSet& b, const NestedSet& n1, const NestedSet& n2);

/// Adjacency of maximal faces. Regular of degree rank and connected; both
/// are verified at construction.
struct DualGraph {
  std::vector<NestedSet> nodes;             // sorted by face_less
  std::vector<std::pair<int, int>> edges;   // i < j, sorted
  std::vector<std::vector<int>> neighbors;  // sorted index lists
};
DualGraph dual_graph(const BuildingSet& b, const NestedComplex& cx);

/// The cycle of maximal faces around a face of corank 2, classified by the
/// rank-2 family obtained by linking all of its members away.
enum class LoopShape { triangle, square, trapezoid, pentagon, hexagon };

const char* loop_shape_name(LoopShape s);
int loop_shape_size(LoopShape s);

struct GeodesicLoop {
  std::vector<int> nodes;  // dual graph indices in cyclic order, least node
                           // first, second entry its lesser neighbor
  LoopShape shape;
};
GeodesicLoop geodesic_loop(const BuildingSet& b, const DualGraph& dual, const NestedSet& face);

/// Shape counts over all faces of corank 2.
std::map<LoopShape, std::int64_t> loop_census(const BuildingSet& b, const NestedComplex& cx,
                                              const DualGraph& dual, Exec exec = Exec::par);

/// Identity checks on the face counts. Both hold for every family; a
/// failure indicates an implementation bug and is reported, not thrown.
bool check_f_recursion(const BuildingSet& b, const NestedComplex& cx, std::string* why = nullptr);
bool check_f_product(const BuildingSet& b, const NestedComplex& cx, std::string* why = nullptr);

}  // namespace nestcx
