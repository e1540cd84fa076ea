#include "nestcx/fan.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <exception>
#include <map>
#include <random>

#include "face_state.hpp"

namespace nestcx {

using linalg::Int;
using linalg::Matrix;

QuotientLattice make_quotient(const BuildingSet& b) {
  QuotientLattice q;
  q.n = b.ground_size();
  q.components = b.components();
  q.coord_of.assign(q.n, -1);
  q.elim_of.assign(q.n, -1);
  for (Subset comp : q.components) {
    int e = comp.max_element();
    q.eliminated.push_back(e);
    for (int i : comp.elements()) q.elim_of[i] = e;
  }
  for (int i = 0; i < q.n; i++) {
    if (q.elim_of[i] == i) continue;
    q.coord_of[i] = int(q.axis_element.size());
    q.axis_element.push_back(i);
  }
  q.dim = int(q.axis_element.size());
  assert(q.dim == b.rank());
  return q;
}

LatticeVector project(const QuotientLattice& q, const std::vector<std::int64_t>& ambient) {
  if (int(ambient.size()) != q.n)
    throw Error(Errc::length_mismatch, "expected " + std::to_string(q.n) + " coordinates");
  LatticeVector out(q.dim);
  for (int c = 0; c < q.dim; c++) {
    int i = q.axis_element[c];
    out[c] = ambient[i] - ambient[q.elim_of[i]];
  }
  return out;
}

LatticeVector ray_of(const QuotientLattice& q, Subset member) {
  LatticeVector out(q.dim);
  for (int c = 0; c < q.dim; c++) {
    int i = q.axis_element[c];
    out[c] = std::int64_t(member.test(i)) - std::int64_t(member.test(q.elim_of[i]));
  }
  return out;
}

Matrix<Int> ray_matrix(const QuotientLattice& q, const NestedSet& face) {
  Matrix<Int> m(q.dim, std::vector<Int>(face.size()));
  for (std::size_t j = 0; j < face.size(); j++) {
    LatticeVector r = ray_of(q, face[j]);
    for (int i = 0; i < q.dim; i++) m[i][j] = r[i];
  }
  return m;
}

Int basis_det(const QuotientLattice& q, const BuildingSet& b, const NestedSet& face) {
  NestedSet f = normalize_face(face);
  for (Subset m : f)
    if (!b.is_vertex(m)) throw Error(Errc::not_a_vertex, m.to_string() + " is not a non-maximal member");
  if (int(f.size()) != q.dim)
    throw Error(Errc::wrong_dimension, "face has " + std::to_string(f.size()) +
                                           " members, lattice rank is " + std::to_string(q.dim));
  return linalg::determinant(ray_matrix(q, f));
}

Expansion nested_expansion(const BuildingSet& b, const QuotientLattice& q, const LatticeVector& v) {
  if (int(v.size()) != q.dim)
    throw Error(Errc::length_mismatch, "expected " + std::to_string(q.dim) + " coordinates");

  // Lift to the representative with eliminated coordinates zero, then shift
  // each component so its minimum is zero. Shifts are multiples of the
  // component indicators, which project to nothing.
  std::vector<std::int64_t> x(q.n, 0);
  for (int c = 0; c < q.dim; c++) x[q.axis_element[c]] = v[c];
  for (Subset comp : q.components) {
    std::int64_t lo = INT64_MAX;
    for (int i : comp.elements()) lo = std::min(lo, x[i]);
    for (int i : comp.elements()) x[i] -= lo;
  }

  // Level sets {i : x_i >= t} are constant between consecutive distinct
  // values of x, so each distinct positive value contributes its gap to the
  // maximal members inside its level set.
  std::vector<std::int64_t> levels;
  for (int i = 0; i < q.n; i++)
    if (x[i] > 0) levels.push_back(x[i]);
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());

  std::map<Subset, std::int64_t> coeff;
  std::int64_t prev = 0;
  for (std::int64_t t : levels) {
    Subset level;
    for (int i = 0; i < q.n; i++)
      if (x[i] >= t) level = level.with(i);
    for (Subset blk : b.maximal_members_within(level)) {
      assert(b.is_vertex(blk));
      coeff[blk] += t - prev;
    }
    prev = t;
  }

  Expansion e;
  e.terms.assign(coeff.begin(), coeff.end());

  LatticeVector back(q.dim, 0);
  for (const auto& [m, c] : e.terms) {
    LatticeVector r = ray_of(q, m);
    for (int i = 0; i < q.dim; i++) back[i] += c * r[i];
  }
  if (back != v) throw std::logic_error("expansion does not reproduce its input");
  return e;
}

NestedSet locate(const BuildingSet& b, const QuotientLattice& q, const LatticeVector& v) {
  return nested_expansion(b, q, v).support();
}

NestedSet extend_to_maximal(const BuildingSet& b, const NestedSet& face) {
  NestedSet f = normalize_face(face);
  if (!is_nested(b, f)) throw Error(Errc::not_a_vertex, "argument is not a face");
  auto st = detail::try_build_state(b, f, /*general=*/true);
  assert(st);
  for (Subset v : b.vertices()) {
    if (std::binary_search(f.begin(), f.end(), v)) continue;
    if (detail::can_extend_general(b, *st, v)) detail::push_member(b, *st, v, true);
  }
  NestedSet out = normalize_face(st->members);
  if (int(out.size()) != b.rank())
    throw std::logic_error("greedy completion stopped at " + std::to_string(out.size()) +
                           " members, rank is " + std::to_string(b.rank()));
  return out;
}

namespace {

struct DDRay {
  std::vector<Int> v;
  std::uint64_t zero = 0;  // bit k set when constraint k is tight
};

Int dot(const std::vector<Int>& a, const std::vector<Int>& b) {
  Int s(0);
  for (std::size_t i = 0; i < a.size(); i++) s += a[i] * b[i];
  return s;
}

// Extreme rays of {l >= 0, row . l >= 0 for each row of extra}. Working in
// the basis coordinates of one cone turns it into the positive orthant, so
// this is the general pairwise intersection. Everything stays inside the
// orthant, hence pointed, which the combinatorial adjacency test relies on.
std::vector<std::vector<Int>> orthant_meet(int d, const Matrix<Int>& extra) {
  std::vector<std::vector<Int>> constraints(d, std::vector<Int>(d, Int(0)));
  for (int k = 0; k < d; k++) constraints[k][k] = 1;

  std::vector<DDRay> rays(d);
  for (int j = 0; j < d; j++) {
    rays[j].v.assign(d, Int(0));
    rays[j].v[j] = 1;
    for (int k = 0; k < d; k++)
      if (k != j) rays[j].zero |= std::uint64_t{1} << k;
  }

  for (const auto& row : extra) {
    const int kc = int(constraints.size());
    std::vector<Int> side(rays.size());
    for (std::size_t i = 0; i < rays.size(); i++) side[i] = dot(row, rays[i].v);

    std::vector<DDRay> next;
    for (std::size_t i = 0; i < rays.size(); i++) {
      if (side[i] < 0) continue;
      DDRay keep = rays[i];
      if (side[i] == 0) keep.zero |= std::uint64_t{1} << kc;
      next.push_back(std::move(keep));
    }
    for (std::size_t p = 0; p < rays.size(); p++) {
      if (side[p] <= 0) continue;
      for (std::size_t n = 0; n < rays.size(); n++) {
        if (side[n] >= 0) continue;
        std::uint64_t common = rays[p].zero & rays[n].zero;
        bool adjacent = true;
        for (std::size_t o = 0; o < rays.size() && adjacent; o++)
          if (o != p && o != n && (common & ~rays[o].zero) == 0) adjacent = false;
        if (!adjacent) continue;
        DDRay born;
        born.v.resize(d);
        for (int i = 0; i < d; i++) born.v[i] = side[p] * rays[n].v[i] - side[n] * rays[p].v[i];
        linalg::make_primitive(born.v);
        for (int k = 0; k <= kc; k++) {
          const auto& c = k < kc ? constraints[k] : row;
          if (dot(c, born.v) == 0) born.zero |= std::uint64_t{1} << k;
        }
        next.push_back(std::move(born));
      }
    }
    constraints.push_back(row);
    rays = std::move(next);
  }

  std::vector<std::vector<Int>> out;
  out.reserve(rays.size());
  for (auto& r : rays) out.push_back(std::move(r.v));
  return out;
}

std::string face_text(const NestedSet& n) {
  std::string s = "[";
  for (std::size_t i = 0; i < n.size(); i++) {
    if (i) s += ' ';
    s += n[i].to_string();
  }
  return s + "]";
}

// Deterministic first-violation tracking across threads: remember the
// smallest offending index, render the message afterwards.
struct FirstBad {
  std::atomic<std::int64_t> at{INT64_MAX};
  void mark(std::int64_t i) {
    std::int64_t cur = at.load();
    while (i < cur && !at.compare_exchange_weak(cur, i)) {
    }
  }
  [[nodiscard]] bool any() const { return at.load() != INT64_MAX; }
};

}  // namespace

FanReport verify_fan(const BuildingSet& b, const QuotientLattice& q, const NestedComplex& cx,
                     const FanOptions& opts) {
  FanReport rep;
  const auto& maxf = cx.maximal();
  const int m = int(maxf.size());
  const int d = q.dim;
  rep.cones = m;

  std::vector<Matrix<Int>> cols(m), inv(m);
  std::vector<char> unim(m, 1);
  FirstBad bad_det;
  parallel_for(opts.exec, m, [&](std::int64_t i) {
    cols[i] = ray_matrix(q, maxf[i]);
    Int det = linalg::determinant(cols[i]);
    if (det == 1 || det == -1) {
      inv[i] = linalg::unimodular_inverse(cols[i]);
    } else {
      unim[i] = 0;
      bad_det.mark(i);
    }
  });
  if (bad_det.any()) {
    rep.unimodular = false;
    std::int64_t i = bad_det.at.load();
    rep.first_violation = "cone " + face_text(maxf[i]) + " has determinant " +
                          linalg::determinant(ray_matrix(q, maxf[i])).str();
  }

  if (rep.unimodular && m > 1) {
    rep.pairs = std::int64_t(m) * (m - 1) / 2;
    if (rep.pairs > 50'000'000)
      throw Error(Errc::too_large, "pairwise cone verification needs " + std::to_string(rep.pairs) +
                                       " intersections");
    FirstBad bad_pair;
    parallel_for(opts.exec, m, [&](std::int64_t i) {
      for (int j = int(i) + 1; j < m; j++) {
        // Cone j's membership rows rewritten in cone i's basis; the meet must
        // come out as exactly the orthant face of the shared members.
        Matrix<Int> t(d, std::vector<Int>(d, Int(0)));
        for (int r = 0; r < d; r++)
          for (int c = 0; c < d; c++)
            for (int k = 0; k < d; k++) t[r][c] += inv[j][r][k] * cols[i][k][c];
        auto got = orthant_meet(d, t);
        std::vector<std::vector<Int>> want;
        for (int k = 0; k < d; k++) {
          if (!std::binary_search(maxf[j].begin(), maxf[j].end(), maxf[i][k])) continue;
          std::vector<Int> e(d, Int(0));
          e[k] = 1;
          want.push_back(std::move(e));
        }
        std::sort(got.begin(), got.end());
        std::sort(want.begin(), want.end());
        if (got != want) bad_pair.mark(i * std::int64_t(m) + j);
      }
    });
    if (bad_pair.any()) {
      rep.pairwise_ok = false;
      std::int64_t k = bad_pair.at.load();
      rep.first_violation = "cones " + face_text(maxf[k / m]) + " and " + face_text(maxf[k % m]) +
                            " do not meet in their common face";
    }
  }

  // One serial pass of the generator fixes every sample up front, so the
  // parallel phases below cannot depend on scheduling.
  std::mt19937_64 rng(opts.seed);
  std::vector<LatticeVector> samples(opts.samples);
  for (auto& v : samples) {
    v.resize(d);
    for (int c = 0; c < d; c++)
      v[c] = std::int64_t(rng() % (2 * std::uint64_t(opts.box) + 1)) - opts.box;
  }
  std::vector<int> home(opts.samples, 0);
  std::vector<std::vector<std::int64_t>> weights(opts.samples);
  for (int s = 0; s < opts.samples; s++) {
    home[s] = m > 0 ? int(rng() % std::uint64_t(m)) : 0;
    weights[s].resize(d);
    for (int c = 0; c < d; c++) weights[s][c] = 1 + std::int64_t(rng() % 10);
  }

  {
    FirstBad bad;
    std::vector<std::string> notes(opts.samples);
    parallel_for(opts.exec, opts.samples, [&](std::int64_t s) {
      try {
        Expansion e = nested_expansion(b, q, samples[s]);
        NestedSet sup = e.support();
        if (!is_nested(b, sup)) {
          notes[s] = "expansion support " + face_text(sup) + " is not a face";
          bad.mark(s);
          return;
        }
        if (!rep.unimodular) return;
        NestedSet full = extend_to_maximal(b, sup);
        auto it = std::lower_bound(maxf.begin(), maxf.end(), full, face_less);
        if (it == maxf.end() || *it != full) {
          notes[s] = "completion " + face_text(full) + " is not a maximal face";
          bad.mark(s);
          return;
        }
        const int fi = int(it - maxf.begin());
        // Coordinates in the cone basis must reproduce the expansion.
        std::map<Subset, Int> by_member;
        for (int r = 0; r < d; r++) {
          Int acc(0);
          for (int c = 0; c < d; c++) acc += inv[fi][r][c] * samples[s][c];
          by_member[full[r]] = acc;
        }
        std::map<Subset, Int> expected;
        for (const auto& [mem, cf] : e.terms) expected[mem] = cf;
        for (const auto& [mem, val] : by_member) {
          Int want = expected.count(mem) ? expected[mem] : Int(0);
          if (val != want) {
            notes[s] = "coordinates in " + face_text(full) + " disagree with the expansion at " +
                       mem.to_string();
            bad.mark(s);
            return;
          }
        }
      } catch (const std::exception& e) {
        notes[s] = e.what();
        bad.mark(s);
      }
    });
    rep.samples_expanded = opts.samples;
    if (bad.any()) {
      rep.expansion_ok = false;
      if (rep.first_violation.empty()) rep.first_violation = notes[bad.at.load()];
    }
  }

  if (rep.unimodular && m > 1 && d > 0) {
    FirstBad bad;
    parallel_for(opts.exec, opts.samples, [&](std::int64_t s) {
      std::vector<Int> w(d, Int(0));
      for (int i = 0; i < d; i++)
        for (int c = 0; c < d; c++) w[i] += cols[home[s]][i][c] * weights[s][c];
      for (int j = 0; j < m; j++) {
        if (j == home[s]) continue;
        bool interior = true;
        for (int r = 0; r < d && interior; r++) {
          Int acc(0);
          for (int c = 0; c < d; c++) acc += inv[j][r][c] * w[c];
          if (acc <= 0) interior = false;
        }
        if (interior) {
          bad.mark(s * std::int64_t(m) + j);
          return;
        }
      }
    });
    rep.samples_separated = opts.samples;
    if (bad.any()) {
      rep.interior_ok = false;
      if (rep.first_violation.empty()) {
        std::int64_t k = bad.at.load();
        rep.first_violation = "an interior point of cone " + face_text(maxf[home[k / m]]) +
                              " also lies inside " + face_text(maxf[k % m]);
      }
    }
  }

  return rep;
}

}  // namespace nestcx
