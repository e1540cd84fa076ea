#include "nestcx/polytope.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <exception>
#include <map>
#include <set>

namespace nestcx {

using linalg::Int;
using linalg::Matrix;
using linalg::Rational;

std::int64_t support_value(int member_size, int component_size) {
  assert(member_size >= 1 && member_size <= component_size && component_size <= 62);
  return std::int64_t(member_size) *
         ((std::int64_t{1} << (component_size - 1)) - (std::int64_t{1} << (member_size - 1)));
}

Polytope realize(const BuildingSet& b) {
  Polytope p;
  p.n = b.ground_size();
  p.equalities = b.components();
  for (Subset v : b.vertices()) {
    int c = b.component_of(v.min_element()).count();
    p.inequalities.push_back({v, support_value(v.count(), c)});
  }
  return p;
}

Point polytope_vertex(const BuildingSet& b, const Polytope& p, const NestedSet& maximal_face) {
  NestedSet face = normalize_face(maximal_face);
  if (int(face.size()) != b.rank())
    throw Error(Errc::not_maximal, "face has " + std::to_string(face.size()) +
                                       " members, rank is " + std::to_string(b.rank()));
  if (!is_nested(b, face)) throw Error(Errc::not_maximal, "argument is not a face");

  const int n = p.n;
  Matrix<Int> a;
  std::vector<Int> rhs;
  for (Subset c : p.equalities) {
    std::vector<Int> row(n, Int(0));
    for (int i : c.elements()) row[i] = 1;
    a.push_back(std::move(row));
    rhs.push_back(Int(0));
  }
  for (Subset m : face) {
    std::vector<Int> row(n, Int(0));
    for (int i : m.elements()) row[i] = 1;
    a.push_back(std::move(row));
    int c = b.component_of(m.min_element()).count();
    rhs.push_back(Int(support_value(m.count(), c)));
  }
  assert(int(a.size()) == n);
  auto x = linalg::solve_square(std::move(a), std::move(rhs));
  if (!x) throw Error(Errc::singular_system, "vertex system is singular");
  return *x;
}

bool relation_vanishes(const QuotientLattice& q, const ExchangeStep& step) {
  LatticeVector acc(q.dim, 0);
  auto add = [&](Subset m, std::int64_t sign) {
    LatticeVector r = ray_of(q, m);
    for (int i = 0; i < q.dim; i++) acc[i] += sign * r[i];
  };
  add(step.removed, 1);
  add(step.added, 1);
  for (Subset m : step.padding) add(m, 1);
  for (Subset m : step.intersection_blocks) add(m, -1);
  if (!step.union_is_component) add(step.union_set, -1);
  for (std::int64_t v : acc)
    if (v != 0) return false;
  return true;
}

std::int64_t exchange_margin(const ExchangeStep& step,
                             const std::function<std::int64_t(Subset)>& f) {
  std::int64_t margin = f(step.removed) + f(step.added);
  for (Subset m : step.padding) margin += f(m);
  for (Subset m : step.intersection_blocks) margin -= f(m);
  return margin - f(step.union_set);
}

std::int64_t convexity_margin(const BuildingSet& b, const ExchangeStep& step) {
  std::int64_t margin = exchange_margin(step, [&](Subset m) {
    int c = b.component_of(m.min_element()).count();
    return support_value(m.count(), c);  // zero when m is the component
  });
  if (margin <= 0)
    throw Error(Errc::convexity_violation,
                "margin " + std::to_string(margin) + " for the exchange of " +
                    step.removed.to_string() + " and " + step.added.to_string());
  return margin;
}

namespace {

struct FirstBad {
  std::atomic<std::int64_t> at{INT64_MAX};
  void mark(std::int64_t i) {
    std::int64_t cur = at.load();
    while (i < cur && !at.compare_exchange_weak(cur, i)) {
    }
  }
  [[nodiscard]] bool any() const { return at.load() != INT64_MAX; }
};

std::string face_text(const NestedSet& n) {
  std::string s = "[";
  for (std::size_t i = 0; i < n.size(); i++) {
    if (i) s += ' ';
    s += n[i].to_string();
  }
  return s + "]";
}

Rational sum_over(const Point& x, Subset s) {
  Rational acc(0);
  for (int i : s.elements()) acc += x[i];
  return acc;
}

}  // namespace

NormalFanReport verify_normal_fan(const BuildingSet& b, const NestedComplex& cx,
                                  const DualGraph& dual, Exec exec) {
  NormalFanReport rep;
  const Polytope poly = realize(b);
  const QuotientLattice q = make_quotient(b);
  const auto& maxf = cx.maximal();
  const int m = int(maxf.size());
  const int n = b.ground_size();
  const int rank = b.rank();
  rep.vertices = m;

  auto note = [&](const std::string& msg) {
    if (rep.first_violation.empty()) rep.first_violation = msg;
  };

  // Solve all vertices.
  std::vector<Point> pts(m);
  {
    FirstBad bad;
    std::vector<std::string> what(m);
    parallel_for(exec, m, [&](std::int64_t i) {
      try {
        pts[i] = polytope_vertex(b, poly, maxf[i]);
      } catch (const std::exception& e) {
        what[i] = e.what();
        bad.mark(i);
      }
    });
    if (bad.any()) {
      rep.vertices_ok = false;
      note("vertex of " + face_text(maxf[bad.at.load()]) + ": " + what[bad.at.load()]);
      return rep;
    }
  }
  {
    std::vector<int> order(m);
    for (int i = 0; i < m; i++) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int i, int j) { return pts[i] < pts[j]; });
    for (int k = 0; k + 1 < m; k++) {
      if (pts[order[k]] == pts[order[k + 1]]) {
        rep.vertices_ok = false;
        note("faces " + face_text(maxf[order[k]]) + " and " + face_text(maxf[order[k + 1]]) +
             " share a vertex");
        break;
      }
    }
  }

  // Tight inequalities at a vertex must be exactly the face members; every
  // other inequality must hold strictly. Records the tight rows for the
  // adjacency ranks below.
  const auto& verts = b.vertices();
  const int nv = int(verts.size());
  std::vector<std::vector<char>> tight(m, std::vector<char>(nv, 0));
  {
    FirstBad bad;
    std::vector<std::string> what(m);
    parallel_for(exec, m, [&](std::int64_t i) {
      for (Subset c : poly.equalities) {
        if (sum_over(pts[i], c) != 0) {
          what[i] = "vertex of " + face_text(maxf[i]) + " misses the plane of " + c.to_string();
          bad.mark(i);
          return;
        }
      }
      for (int k = 0; k < nv; k++) {
        Rational lhs = sum_over(pts[i], poly.inequalities[k].set);
        Rational rhs(poly.inequalities[k].rhs);
        bool in_face = std::binary_search(maxf[i].begin(), maxf[i].end(), verts[k]);
        if (lhs == rhs) {
          tight[i][k] = 1;
          if (!in_face) {
            what[i] = verts[k].to_string() + " is tight at the vertex of " + face_text(maxf[i]) +
                      " but not in the face";
            bad.mark(i);
            return;
          }
        } else if (lhs > rhs) {
          what[i] = verts[k].to_string() + " is violated at the vertex of " + face_text(maxf[i]);
          bad.mark(i);
          return;
        } else if (in_face) {
          what[i] = verts[k].to_string() + " is slack at the vertex of its own face " +
                    face_text(maxf[i]);
          bad.mark(i);
          return;
        }
      }
    });
    if (bad.any()) {
      rep.tightness_ok = false;
      note(what[bad.at.load()]);
    }
  }

  // Edge relations and margins.
  {
    const auto& edges = dual.edges;
    FirstBad bad_rel, bad_margin;
    std::vector<std::string> what(edges.size());
    parallel_for(exec, std::int64_t(edges.size()), [&](std::int64_t k) {
      auto [i, j] = edges[k];
      try {
        ExchangeStep step = exchange_record(b, maxf[i], maxf[j]);
        if (!relation_vanishes(q, step)) {
          what[k] = "edge relation of " + face_text(maxf[i]) + " / " + face_text(maxf[j]) +
                    " does not vanish";
          bad_rel.mark(k);
          return;
        }
        convexity_margin(b, step);
      } catch (const std::exception& e) {
        what[k] = e.what();
        bad_margin.mark(k);
      }
    });
    if (bad_rel.any()) {
      rep.relations_ok = false;
      note(what[bad_rel.at.load()]);
    }
    if (bad_margin.any()) {
      rep.margins_ok = false;
      note(what[bad_margin.at.load()]);
    }
  }

  // Geometric edges: two vertices are adjacent exactly when their common
  // tight rows, together with the equalities, have rank n - 1. Entries are
  // 0/1 and n stays small, so 64-bit elimination is exact here.
  std::set<std::pair<int, int>> geo_edges;
  {
    FirstBad bad;
    std::vector<std::vector<char>> adj(m, std::vector<char>(m, 0));
    parallel_for(exec, m, [&](std::int64_t i) {
      for (int j = int(i) + 1; j < m; j++) {
        Matrix<std::int64_t> rows;
        for (Subset c : poly.equalities) {
          std::vector<std::int64_t> row(n, 0);
          for (int e : c.elements()) row[e] = 1;
          rows.push_back(std::move(row));
        }
        for (int k = 0; k < nv; k++) {
          if (!tight[i][k] || !tight[j][k]) continue;
          std::vector<std::int64_t> row(n, 0);
          for (int e : poly.inequalities[k].set.elements()) row[e] = 1;
          rows.push_back(std::move(row));
        }
        adj[i][j] = linalg::rank_of(std::move(rows)) == n - 1 ? 1 : 0;
      }
    });
    for (int i = 0; i < m; i++)
      for (int j = i + 1; j < m; j++)
        if (adj[i][j]) geo_edges.insert({i, j});
    std::set<std::pair<int, int>> dual_edges(dual.edges.begin(), dual.edges.end());
    if (geo_edges != dual_edges) {
      rep.adjacency_ok = false;
      std::vector<std::pair<int, int>> diff;
      std::set_symmetric_difference(geo_edges.begin(), geo_edges.end(), dual_edges.begin(),
                                    dual_edges.end(), std::back_inserter(diff));
      auto [i, j] = diff.front();
      note("edge between " + face_text(maxf[i]) + " and " + face_text(maxf[j]) + " is " +
           (geo_edges.count(diff.front()) ? "geometric only" : "combinatorial only"));
    }
    rep.edges = std::int64_t(geo_edges.size());
  }

  // Each corank 2 face spans a polygon: its cycle's consecutive vertices
  // are adjacent, the others are not, and the supporting rows drop the rank
  // by exactly 2.
  if (rank >= 2) {
    const auto& faces2 = cx.faces[rank - 2];
    rep.polygons = std::int64_t(faces2.size());
    FirstBad bad;
    std::vector<std::string> what(faces2.size());
    parallel_for(exec, std::int64_t(faces2.size()), [&](std::int64_t k) {
      try {
        GeodesicLoop loop = geodesic_loop(b, dual, faces2[k]);
        const int len = int(loop.nodes.size());
        Matrix<std::int64_t> rows;
        for (Subset c : poly.equalities) {
          std::vector<std::int64_t> row(n, 0);
          for (int e : c.elements()) row[e] = 1;
          rows.push_back(std::move(row));
        }
        for (Subset mset : faces2[k]) {
          std::vector<std::int64_t> row(n, 0);
          for (int e : mset.elements()) row[e] = 1;
          rows.push_back(std::move(row));
        }
        if (linalg::rank_of(std::move(rows)) != n - 2) {
          what[k] = "supporting rows of " + face_text(faces2[k]) + " do not have rank n - 2";
          bad.mark(k);
          return;
        }
        for (int a = 0; a < len; a++) {
          for (int c = a + 1; c < len; c++) {
            int i = std::min(loop.nodes[a], loop.nodes[c]);
            int j = std::max(loop.nodes[a], loop.nodes[c]);
            bool consecutive = c == a + 1 || (a == 0 && c == len - 1);
            if (geo_edges.count({i, j}) != std::size_t(consecutive)) {
              what[k] = "polygon of " + face_text(faces2[k]) + " is not the cycle of its faces";
              bad.mark(k);
              return;
            }
          }
        }
      } catch (const std::exception& e) {
        what[k] = e.what();
        bad.mark(k);
      }
    });
    if (bad.any()) {
      rep.faces2_ok = false;
      note(what[bad.at.load()]);
    }
  }

  return rep;
}

}  // namespace nestcx
