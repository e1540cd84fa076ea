#include "nestcx/oracle.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace nestcx {

using linalg::Rational;

namespace {

// Decides whether a x = rhs has a unique, strictly positive solution.
// Fraction-free elimination keeps every intermediate an integer minor of the
// input bordered by rhs; with ray entries in {-1, 0, 1} and desk-scale
// targets those minors sit far below the int64 range.
bool positive_solution(linalg::Matrix<std::int64_t> a, std::vector<std::int64_t> rhs) {
  const int m = int(a.size());
  const int k = m == 0 ? 0 : int(a[0].size());
  std::int64_t prev = 1;
  for (int c = 0; c < k; c++) {
    int piv = -1;
    for (int i = c; i < m; i++)
      if (a[i][c] != 0) { piv = i; break; }
    if (piv < 0) return false;
    std::swap(a[piv], a[c]);
    std::swap(rhs[piv], rhs[c]);
    for (int i = c + 1; i < m; i++) {
      for (int j = c + 1; j < k; j++)
        a[i][j] = (a[i][j] * a[c][c] - a[i][c] * a[c][j]) / prev;
      rhs[i] = (rhs[i] * a[c][c] - a[i][c] * rhs[c]) / prev;
      a[i][c] = 0;
    }
    prev = a[c][c];
  }
  for (int i = k; i < m; i++)
    if (rhs[i] != 0) return false;
  // Back substitution in reduced fractions; denominators stay positive.
  std::vector<std::int64_t> num(k), den(k);
  for (int i = k - 1; i >= 0; i--) {
    std::int64_t n = rhs[i], d = 1;
    for (int j = i + 1; j < k; j++) {
      if (a[i][j] == 0) continue;
      n = n * den[j] - a[i][j] * num[j] * d;
      d *= den[j];
      std::int64_t g = std::gcd(n < 0 ? -n : n, d);
      if (g > 1) { n /= g; d /= g; }
    }
    d *= a[i][i];
    if (d < 0) { n = -n; d = -d; }
    if (n <= 0) return false;
    std::int64_t g = std::gcd(n, d);
    num[i] = n / g;
    den[i] = d / g;
  }
  return true;
}

}  // namespace

bool raw_is_nested(const BuildingSet& b, const NestedSet& face) {
  const int k = int(face.size());
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << k); mask++) {
    if (std::popcount(mask) < 2) continue;
    bool antichain = true;
    for (int i = 0; i < k && antichain; i++) {
      if (!(mask >> i & 1u)) continue;
      for (int j = i + 1; j < k && antichain; j++) {
        if (!(mask >> j & 1u)) continue;
        if (face[i].subset_of(face[j]) || face[j].subset_of(face[i])) antichain = false;
      }
    }
    if (!antichain) continue;
    Subset u;
    for (int i = 0; i < k; i++)
      if (mask >> i & 1u) u = u | face[i];
    if (b.contains(u)) return false;
  }
  return true;
}

namespace {

void brute_grow(const BuildingSet& b, const std::vector<Subset>& verts, int last, NestedSet& face,
                std::vector<NestedSet>& out, std::int64_t cap) {
  if (std::int64_t(out.size()) >= cap)
    throw Error(Errc::too_large, "face count exceeds the cap of " + std::to_string(cap));
  out.push_back(face);
  for (int next = last + 1; next < int(verts.size()); next++) {
    face.push_back(verts[next]);
    if (raw_is_nested(b, face)) brute_grow(b, verts, next, face, out, cap);
    face.pop_back();
  }
}

NestedComplex collect(const BuildingSet& b, std::vector<NestedSet> faces) {
  // Purity is not assumed here: the top level is whatever the raw test
  // produced. The comparison against the optimized enumeration is what
  // establishes agreement.
  std::size_t top = 0;
  for (const auto& f : faces) top = std::max(top, f.size());
  top = std::max<std::size_t>(top, std::size_t(b.rank()));
  NestedComplex cx;
  cx.f.assign(top + 1, 0);
  cx.faces.assign(top + 1, {});
  for (auto& f : faces) {
    cx.f[f.size()]++;
    cx.faces[f.size()].push_back(std::move(f));
  }
  for (auto& level : cx.faces) std::sort(level.begin(), level.end(), face_less);
  return cx;
}

}  // namespace

NestedComplex brute_nested_complex(const BuildingSet& b, std::int64_t max_faces) {
  const auto& verts = b.vertices();
  std::vector<NestedSet> faces;
  NestedSet face;
  brute_grow(b, verts, -1, face, faces, max_faces);

  if (verts.size() <= 15) {
    std::vector<NestedSet> scan;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << verts.size()); mask++) {
      NestedSet f;
      for (std::size_t i = 0; i < verts.size(); i++)
        if (mask >> i & 1u) f.push_back(verts[i]);
      if (raw_is_nested(b, f)) scan.push_back(std::move(f));
    }
    auto key = [](std::vector<NestedSet> v) {
      std::sort(v.begin(), v.end(), face_less);
      return v;
    };
    if (key(faces) != key(scan))
      throw std::logic_error("grown and scanned face sets disagree");
  }
  return collect(b, std::move(faces));
}

std::int64_t brute_expansion_count(const BuildingSet& b, const QuotientLattice& q,
                                   const NestedComplex& cx, const LatticeVector& v,
                                   NestedSet* found) {
  std::int64_t hits = 0;
  for (const auto& level : cx.faces) {
    for (const auto& face : level) {
      const int k = int(face.size());
      linalg::Matrix<std::int64_t> a(q.dim, std::vector<std::int64_t>(k));
      for (int j = 0; j < k; j++) {
        LatticeVector r = ray_of(q, face[j]);
        for (int i = 0; i < q.dim; i++) a[i][j] = r[i];
      }
      if (positive_solution(std::move(a), v)) {
        hits++;
        if (found) *found = face;
      }
    }
  }
  return hits;
}

std::vector<Point> brute_vertices(const BuildingSet& b, const Polytope& p) {
  const int n = p.n;
  const int rank = b.rank();
  const int nv = int(p.inequalities.size());

  linalg::Matrix<std::int64_t> eq_rows;
  for (Subset c : p.equalities) {
    std::vector<std::int64_t> row(n, 0);
    for (int e : c.elements()) row[e] = 1;
    eq_rows.push_back(std::move(row));
  }

  auto feasible = [&](const Point& x) {
    for (const auto& h : p.inequalities) {
      Rational lhs(0);
      for (int e : h.set.elements()) lhs += x[e];
      if (lhs > h.rhs) return false;
    }
    return true;
  };

  std::vector<Point> out;
  std::vector<int> pick;
  auto rec = [&](auto&& self, int last) -> void {
    if (int(pick.size()) == rank) {
      auto rows = eq_rows;
      std::vector<std::int64_t> rhs(p.equalities.size(), 0);
      for (int k : pick) {
        std::vector<std::int64_t> row(n, 0);
        for (int e : p.inequalities[k].set.elements()) row[e] = 1;
        rows.push_back(std::move(row));
        rhs.push_back(p.inequalities[k].rhs);
      }
      auto x = linalg::solve_square(std::move(rows), std::move(rhs));
      if (x && feasible(*x)) out.push_back(std::move(*x));
      return;
    }
    for (int next = last + 1; next < nv; next++) {
      pick.push_back(next);
      self(self, next);
      pick.pop_back();
    }
  };
  rec(rec, -1);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

BuildingSet random_graph_building(std::mt19937_64& rng, int max_n) {
  const int n = 2 + int(rng() % std::uint64_t(max_n - 1));
  const int threshold = 20 + 20 * int(rng() % 4);
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; i++)
    for (int j = i + 1; j < n; j++)
      if (int(rng() % 100) < threshold) edges.emplace_back(i, j);
  return BuildingSet::from_graph(Graph::make(n, std::move(edges)));
}

BuildingSet random_building(std::mt19937_64& rng, int max_n) {
  BuildingSet base = random_graph_building(rng, max_n);
  const int n = base.ground_size();
  if (rng() % 2 == 0) return base;

  std::vector<Subset> sets = base.sets();
  const int extras = 1 + int(rng() % 2);
  for (int t = 0; t < extras; t++) {
    Subset s(std::uint32_t(rng()) & Subset::full(n).bits());
    if (s.count() >= 2) sets.push_back(s);
  }
  // Close under unions of intersecting members again.
  for (bool grew = true; grew;) {
    grew = false;
    std::sort(sets.begin(), sets.end());
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    const std::size_t sz = sets.size();
    for (std::size_t i = 0; i < sz; i++) {
      for (std::size_t j = i + 1; j < sz; j++) {
        if (sets[i].disjoint_from(sets[j])) continue;
        Subset u = sets[i] | sets[j];
        if (!std::binary_search(sets.begin(), sets.begin() + sz, u)) {
          sets.push_back(u);
          grew = true;
        }
      }
    }
  }
  return BuildingSet::validate(std::move(sets), GroundSet(n));
}

OracleReport oracle_compare(const BuildingSet& b, std::uint64_t seed, int samples) {
  OracleReport rep;
  auto note = [&](const std::string& msg) {
    if (rep.first_violation.empty()) rep.first_violation = msg;
  };

  NestedComplex brute = brute_nested_complex(b);
  NestedComplex fast = enumerate_complex(b, {.exec = Exec::seq});
  rep.faces_checked = brute.total();
  if (fast.f != brute.f || fast.faces != brute.faces) {
    rep.complex_ok = false;
    note("face lists from the raw test and the incremental test disagree");
  }

  QuotientLattice q = make_quotient(b);
  std::mt19937_64 rng(seed);
  for (int s = 0; s < samples; s++) {
    LatticeVector v(q.dim);
    for (int c = 0; c < q.dim; c++) v[c] = std::int64_t(rng() % 41) - 20;
    NestedSet found;
    std::int64_t count = brute_expansion_count(b, q, brute, v, &found);
    rep.expansions_checked++;
    if (count != 1) {
      rep.expansion_ok = false;
      note("sample " + std::to_string(s) + " has " + std::to_string(count) +
           " positive expansions");
      break;
    }
    if (normalize_face(found) != locate(b, q, v)) {
      rep.expansion_ok = false;
      note("sample " + std::to_string(s) + " locates a different face than the reference");
      break;
    }
  }

  Polytope poly = realize(b);
  const int nv = int(poly.inequalities.size());
  // One exact solve per subset of rank rows adds up quickly; past this many
  // combinations the vertex comparison is skipped and reported as such.
  const std::int64_t cap = 300'000;
  std::int64_t combos = 1;
  for (int i = 0; i < b.rank() && combos <= cap; i++) combos = combos * (nv - i) / (i + 1);
  if (combos > cap) {
    rep.vertices_skipped = true;
  } else {
    std::vector<Point> ref = brute_vertices(b, poly);
    std::vector<Point> got;
    for (const auto& face : fast.maximal()) got.push_back(polytope_vertex(b, poly, face));
    std::sort(got.begin(), got.end());
    got.erase(std::unique(got.begin(), got.end()), got.end());
    rep.vertices_checked = std::int64_t(ref.size());
    if (ref != got) {
      rep.vertices_ok = false;
      note("vertex sets from tight rows and from faces disagree (" + std::to_string(ref.size()) +
           " vs " + std::to_string(got.size()) + ")");
    }
  }
  return rep;
}

}  // namespace nestcx
