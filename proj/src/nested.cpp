#include "nestcx/nested.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <exception>
#include <numeric>
#include <optional>

#include "face_state.hpp"

namespace nestcx {

using detail::FaceState;
using detail::can_extend_general;
using detail::can_extend_graphical;
using detail::pop_member;
using detail::push_member;
using detail::try_build_state;

NestedSet normalize_face(NestedSet n) {
  std::sort(n.begin(), n.end());
  n.erase(std::unique(n.begin(), n.end()), n.end());
  return n;
}

bool face_less(const NestedSet& a, const NestedSet& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

bool pairwise_compatible(const BuildingSet& b, Subset x, Subset y) {
  if (!b.is_vertex(x)) throw Error(Errc::not_a_vertex, x.to_string() + " is not a non-maximal member");
  if (!b.is_vertex(y)) throw Error(Errc::not_a_vertex, y.to_string() + " is not a non-maximal member");
  if (x.subset_of(y) || y.subset_of(x)) return true;
  if (!x.disjoint_from(y)) return false;
  return !b.contains(x | y);
}

namespace {

struct SeedResult {
  std::vector<std::int64_t> f;
  std::vector<std::vector<NestedSet>> faces;
  std::exception_ptr error;
};

class Enumerator {
 public:
  Enumerator(const BuildingSet& b, bool general, std::int64_t cap)
      : b_(b), verts_(b.vertices()), general_(general), rank_(b.rank()), cap_(cap) {}

  void run_seed(int seed, SeedResult& out) {
    out.f.assign(rank_ + 1, 0);
    out.faces.assign(rank_ + 1, {});
    FaceState st;
    push_member(b_, st, verts_[seed], general_);
    grow(seed, st, out);
  }

  std::int64_t emitted() const { return emitted_.load(); }

 private:
  bool can_extend(const FaceState& st, Subset v) const {
    return general_ ? can_extend_general(b_, st, v) : can_extend_graphical(b_, st, v);
  }

  void grow(int last, FaceState& st, SeedResult& out) {
    const int k = int(st.members.size());
    if (k > rank_)
      throw Error(Errc::not_maximal, "face " + describe(st.members) + " exceeds the rank");
    if (emitted_.fetch_add(1, std::memory_order_relaxed) >= cap_)
      throw Error(Errc::too_large, "face count exceeds the cap of " + std::to_string(cap_));
    out.f[k]++;
    out.faces[k].push_back(st.members);

    bool grew = false;
    for (int next = last + 1; next < int(verts_.size()); next++) {
      if (!can_extend(st, verts_[next])) continue;
      std::size_t mm = st.members.size(), um = st.unions.size();
      push_member(b_, st, verts_[next], general_);
      grow(next, st, out);
      pop_member(st, mm, um);
      grew = true;
    }
    if (!grew && k < rank_) {
      // No extension above the last index. The face is allowed to be
      // non-maximal only if it extends by some earlier vertex.
      bool extendable = false;
      for (Subset v : verts_) {
        if (std::binary_search(st.members.begin(), st.members.end(), v)) continue;
        if (can_extend(st, v)) { extendable = true; break; }
      }
      if (!extendable)
        throw Error(Errc::not_maximal, "maximal face " + describe(st.members) + " has " +
                                           std::to_string(k) + " members, rank is " +
                                           std::to_string(rank_));
    }
  }

  static std::string describe(const NestedSet& n) {
    std::string s = "[";
    for (std::size_t i = 0; i < n.size(); i++) {
      if (i) s += ' ';
      s += n[i].to_string();
    }
    return s + "]";
  }

  const BuildingSet& b_;
  const std::vector<Subset>& verts_;
  bool general_;
  int rank_;
  std::int64_t cap_;
  std::atomic<std::int64_t> emitted_{0};
};

}  // namespace

bool is_nested(const BuildingSet& b, const NestedSet& n) {
  NestedSet face = normalize_face(n);
  for (Subset m : face)
    if (!b.is_vertex(m)) throw Error(Errc::not_a_vertex, m.to_string() + " is not a non-maximal member");
  return try_build_state(b, face, /*general=*/true).has_value();
}

NestedComplex enumerate_complex(const BuildingSet& b, const EnumOptions& opts) {
  if (b.ground_size() > 16)
    throw Error(Errc::too_large, "enumeration supports at most 16 ground elements");
  const bool general = opts.force_general || !is_graphical(b).graphical;
  const int rank = b.rank();
  const int seeds = int(b.vertices().size());

  Enumerator en(b, general, opts.max_faces);
  std::vector<SeedResult> results(seeds);
  parallel_for(opts.exec, seeds, [&](std::int64_t s) {
    try {
      en.run_seed(int(s), results[s]);
    } catch (...) {
      results[s].error = std::current_exception();
    }
  });

  for (const auto& r : results) {
    if (!r.error) continue;
    try {
      std::rethrow_exception(r.error);
    } catch (const Error& e) {
      if (e.code() == Errc::not_maximal) throw;
    } catch (...) {
    }
  }
  for (const auto& r : results)
    if (r.error) std::rethrow_exception(r.error);

  NestedComplex cx;
  cx.f.assign(rank + 1, 0);
  cx.faces.assign(rank + 1, {});
  cx.f[0] = 1;
  cx.faces[0].push_back({});
  for (const auto& r : results) {
    for (int k = 1; k <= rank; k++) {
      cx.f[k] += r.f[k];
      cx.faces[k].insert(cx.faces[k].end(), r.faces[k].begin(), r.faces[k].end());
    }
  }
  return cx;
}

std::vector<NestedSet> link_faces(const NestedComplex& cx, Subset c) {
  std::vector<NestedSet> out;
  for (const auto& level : cx.faces) {
    for (const auto& face : level) {
      if (!std::binary_search(face.begin(), face.end(), c)) continue;
      NestedSet rest;
      for (Subset m : face)
        if (m != c) rest.push_back(m);
      out.push_back(std::move(rest));
    }
  }
  std::sort(out.begin(), out.end(), face_less);
  return out;
}

Subset VertexLink::to_same_ground(Subset link_vertex) const {
  return center.proper_subset_of(link_vertex) ? link_vertex - center : link_vertex;
}

Subset VertexLink::to_factored(Subset same_ground_vertex) const {
  Subset rest = Subset::full(factored.ground_size()) - center;
  if (same_ground_vertex.subset_of(center)) return compress(same_ground_vertex, center);
  return Subset(compress(same_ground_vertex, rest).bits() << center.count());
}

VertexLink link(const BuildingSet& b, Subset c) {
  BuildingSet same = link_building(b, c);
  auto restr = restriction(b, c);
  auto contr = contraction(b, c, /*strict=*/true);
  BuildingSet prod = product({restr.building, contr.building});
  return {c, std::move(same), std::move(prod)};
}

ExchangeStep exchange_record(const BuildingSet& b, const NestedSet& n1, const NestedSet& n2) {
  NestedSet a = normalize_face(n1), c = normalize_face(n2);
  if (a.size() != c.size()) throw Error(Errc::not_adjacent, "faces have different sizes");
  NestedSet common;
  std::set_intersection(a.begin(), a.end(), c.begin(), c.end(), std::back_inserter(common));
  if (common.size() + 1 != a.size())
    throw Error(Errc::not_adjacent, "faces do not differ in exactly one member");

  Subset i1, i2;
  for (Subset m : a)
    if (!std::binary_search(common.begin(), common.end(), m)) i1 = m;
  for (Subset m : c)
    if (!std::binary_search(common.begin(), common.end(), m)) i2 = m;

  ExchangeStep step;
  step.from = a;
  step.to = c;
  step.removed = i1;
  step.added = i2;

  Subset both = i1 & i2;
  if (!both.empty()) {
    step.intersection_blocks = b.maximal_members_within(both);
    for (Subset blk : step.intersection_blocks) {
      if (!std::binary_search(common.begin(), common.end(), blk))
        throw std::logic_error("intersection block " + blk.to_string() +
                               " is missing from the common members");
    }
  }

  Subset base = i1 | i2;
  std::vector<Subset> pool;
  for (Subset m : common)
    if (m.disjoint_from(base)) pool.push_back(m);

  auto is_target = [&](Subset u) {
    if (b.is_component(u)) return true;
    return b.contains(u) && std::binary_search(common.begin(), common.end(), u);
  };

  const int p = int(pool.size());
  std::vector<std::uint32_t> masks(std::size_t{1} << p);
  std::iota(masks.begin(), masks.end(), 0u);
  std::stable_sort(masks.begin(), masks.end(), [](std::uint32_t x, std::uint32_t y) {
    int cx = std::popcount(x), cy = std::popcount(y);
    return cx != cy ? cx < cy : x < y;
  });

  for (std::uint32_t mask : masks) {
    Subset u = base;
    std::vector<Subset> chosen;
    bool ok = true;
    for (int i = 0; i < p && ok; i++) {
      if (!(mask >> i & 1u)) continue;
      if (!pool[i].disjoint_from(u)) ok = false;
      else {
        u = u | pool[i];
        chosen.push_back(pool[i]);
      }
    }
    if (!ok || !is_target(u)) continue;
    step.padding = std::move(chosen);
    step.union_set = u;
    step.union_is_component = b.is_component(u);
    return step;
  }
  throw std::logic_error("no padding completes " + i1.to_string() + ", " + i2.to_string() +
                         " to a common member or component");
}

ExchangeStep exchange(const BuildingSet& b, const NestedSet& maximal_face, Subset out) {
  NestedSet face = normalize_face(maximal_face);
  if (int(face.size()) != b.rank())
    throw Error(Errc::not_maximal, "face has " + std::to_string(face.size()) +
                                       " members, rank is " + std::to_string(b.rank()));
  if (!std::binary_search(face.begin(), face.end(), out))
    throw Error(Errc::not_a_member, out.to_string() + " is not in the face");
  if (!is_nested(b, face)) throw Error(Errc::not_maximal, "argument is not a face");

  NestedSet base;
  for (Subset m : face)
    if (m != out) base.push_back(m);
  auto st = try_build_state(b, base, /*general=*/true);
  assert(st);

  std::vector<Subset> hits;
  for (Subset v : b.vertices()) {
    if (v == out || std::binary_search(base.begin(), base.end(), v)) continue;
    if (can_extend_general(b, *st, v)) hits.push_back(v);
  }
  if (hits.size() != 1)
    throw std::logic_error("expected exactly one replacement for " + out.to_string() + ", found " +
                           std::to_string(hits.size()));

  NestedSet to = normalize_face([&] {
    NestedSet n = base;
    n.push_back(hits[0]);
    return n;
  }());
  return exchange_record(b, face, to);
}

namespace {
struct FaceLess {
  bool operator()(const NestedSet& a, const NestedSet& b) const { return face_less(a, b); }
};
}  // namespace

DualGraph dual_graph(const BuildingSet& b, const NestedComplex& cx) {
  DualGraph g;
  g.nodes = cx.maximal();
  const int rank = b.rank();
  g.neighbors.assign(g.nodes.size(), {});
  if (rank == 0) return g;

  std::map<NestedSet, std::vector<int>, FaceLess> buckets;
  for (int i = 0; i < int(g.nodes.size()); i++) {
    for (Subset m : g.nodes[i]) {
      NestedSet key;
      for (Subset x : g.nodes[i])
        if (x != m) key.push_back(x);
      buckets[key].push_back(i);
    }
  }
  for (const auto& [key, ids] : buckets) {
    if (ids.size() != 2)
      throw std::logic_error("subface shared by " + std::to_string(ids.size()) +
                             " maximal faces, expected 2");
    g.edges.emplace_back(std::min(ids[0], ids[1]), std::max(ids[0], ids[1]));
  }
  std::sort(g.edges.begin(), g.edges.end());
  for (auto [i, j] : g.edges) {
    g.neighbors[i].push_back(j);
    g.neighbors[j].push_back(i);
  }
  for (auto& nb : g.neighbors) {
    std::sort(nb.begin(), nb.end());
    if (int(nb.size()) != rank) throw std::logic_error("dual graph is not rank-regular");
  }
  std::vector<char> seen(g.nodes.size(), 0);
  std::vector<int> queue{0};
  seen[0] = 1;
  for (std::size_t h = 0; h < queue.size(); h++)
    for (int nb : g.neighbors[queue[h]])
      if (!seen[nb]) { seen[nb] = 1; queue.push_back(nb); }
  if (queue.size() != g.nodes.size()) throw std::logic_error("dual graph is not connected");
  return g;
}

const char* loop_shape_name(LoopShape s) {
  switch (s) {
    case LoopShape::triangle: return "triangle";
    case LoopShape::square: return "square";
    case LoopShape::trapezoid: return "trapezoid";
    case LoopShape::pentagon: return "pentagon";
    case LoopShape::hexagon: return "hexagon";
  }
  return "unknown";
}

int loop_shape_size(LoopShape s) {
  switch (s) {
    case LoopShape::triangle: return 3;
    case LoopShape::square: return 4;
    case LoopShape::trapezoid: return 4;
    case LoopShape::pentagon: return 5;
    case LoopShape::hexagon: return 6;
  }
  return 0;
}

namespace {

// Links every member of the face away, leaving a rank 2 family whose
// complex is the cycle around the face. The five possibilities are told
// apart by the non-singleton components and the two-element members.
LoopShape classify_corank2(const BuildingSet& b, NestedSet face) {
  BuildingSet cur = b;
  while (!face.empty()) {
    Subset c = face.front();
    face.erase(face.begin());
    for (Subset& m : face)
      if (c.proper_subset_of(m)) m = m - c;
    cur = link_building(cur, c);
  }
  if (cur.rank() != 2) throw std::logic_error("residual family does not have rank 2");

  std::vector<Subset> big;
  for (Subset comp : cur.components())
    if (comp.count() >= 2) big.push_back(comp);
  if (big.size() == 2) return LoopShape::square;
  if (big.size() != 1 || big[0].count() != 3)
    throw std::logic_error("unexpected component shape in a rank 2 family");

  int pairs = 0;
  for (Subset s : cur.sets())
    if (s.count() == 2 && s.subset_of(big[0])) pairs++;
  switch (pairs) {
    case 0: return LoopShape::triangle;
    case 1: return LoopShape::trapezoid;
    case 2: return LoopShape::pentagon;
    case 3: return LoopShape::hexagon;
  }
  throw std::logic_error("rank 2 component with more than three two-element members");
}

}  // namespace

GeodesicLoop geodesic_loop(const BuildingSet& b, const DualGraph& dual, const NestedSet& face) {
  NestedSet f = normalize_face(face);
  if (int(f.size()) != b.rank() - 2)
    throw Error(Errc::wrong_dimension, "face must have exactly rank - 2 members");
  if (!is_nested(b, f)) throw Error(Errc::not_a_vertex, "argument is not a face");

  std::vector<int> ids;
  for (int i = 0; i < int(dual.nodes.size()); i++)
    if (std::includes(dual.nodes[i].begin(), dual.nodes[i].end(), f.begin(), f.end()))
      ids.push_back(i);

  std::vector<char> in_loop(dual.nodes.size(), 0);
  for (int i : ids) in_loop[i] = 1;
  auto loop_neighbors = [&](int i) {
    std::vector<int> nb;
    for (int j : dual.neighbors[i])
      if (in_loop[j]) nb.push_back(j);
    return nb;
  };

  GeodesicLoop out;
  out.shape = classify_corank2(b, f);
  if (int(ids.size()) != loop_shape_size(out.shape))
    throw std::logic_error("loop length disagrees with its shape");

  int start = ids[0];
  auto nb0 = loop_neighbors(start);
  if (nb0.size() != 2) throw std::logic_error("face cycle is not 2-regular");
  out.nodes.push_back(start);
  int prev = start, cur = std::min(nb0[0], nb0[1]);
  while (cur != start) {
    out.nodes.push_back(cur);
    auto nb = loop_neighbors(cur);
    if (nb.size() != 2) throw std::logic_error("face cycle is not 2-regular");
    int next = nb[0] == prev ? nb[1] : nb[0];
    prev = cur;
    cur = next;
  }
  if (out.nodes.size() != ids.size()) throw std::logic_error("face cycle is not a single cycle");
  return out;
}

std::map<LoopShape, std::int64_t> loop_census(const BuildingSet& b, const NestedComplex& cx,
                                              const DualGraph& dual, Exec exec) {
  if (b.rank() < 2) throw Error(Errc::wrong_dimension, "rank must be at least 2");
  const auto& faces = cx.faces[b.rank() - 2];
  std::vector<LoopShape> shapes(faces.size(), LoopShape::triangle);
  std::vector<std::exception_ptr> errors(faces.size());
  parallel_for(exec, int(faces.size()), [&](std::int64_t i) {
    try {
      shapes[i] = geodesic_loop(b, dual, faces[i]).shape;
    } catch (...) {
      errors[i] = std::current_exception();
    }
  });
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  std::map<LoopShape, std::int64_t> census;
  for (LoopShape s : shapes) census[s]++;
  return census;
}

bool check_f_recursion(const BuildingSet& b, const NestedComplex& cx, std::string* why) {
  const int rank = b.rank();
  std::vector<std::int64_t> sums(rank + 1, 0);
  for (Subset c : b.vertices()) {
    BuildingSet lb = link_building(b, c);
    NestedComplex lcx = enumerate_complex(lb, {.exec = Exec::seq});
    for (int k = 1; k <= rank; k++)
      sums[k] += k - 1 < int(lcx.f.size()) ? lcx.f[k - 1] : 0;
  }
  for (int k = 1; k <= rank; k++) {
    if (k * cx.f[k] != sums[k]) {
      if (why)
        *why = "level " + std::to_string(k) + ": " + std::to_string(k) + " * " +
               std::to_string(cx.f[k]) + " != " + std::to_string(sums[k]);
      return false;
    }
  }
  return true;
}

bool check_f_product(const BuildingSet& b, const NestedComplex& cx, std::string* why) {
  std::vector<std::int64_t> prod{1};
  for (Subset comp : b.components()) {
    NestedComplex fcx = enumerate_complex(restriction(b, comp).building, {.exec = Exec::seq});
    std::vector<std::int64_t> next(prod.size() + fcx.f.size() - 1, 0);
    for (std::size_t i = 0; i < prod.size(); i++)
      for (std::size_t j = 0; j < fcx.f.size(); j++) next[i + j] += prod[i] * fcx.f[j];
    prod = std::move(next);
  }
  if (prod != cx.f) {
    if (why) {
      *why = "count vector differs from the product over components: got";
      for (auto v : prod) *why += " " + std::to_string(v);
    }
    return false;
  }
  return true;
}

}  // namespace nestcx
