// End-to-end gate for the whole construction. Ten checks, one PASS/FAIL
// line each, with wall clock budgets enforced where a check has one. The
// first program argument names the CLI binary; only the determinism check
// uses it, everything else drives the library directly. Exit status is
// nonzero when any line fails.

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "nestcx/building.hpp"
#include "nestcx/fan.hpp"
#include "nestcx/json_io.hpp"
#include "nestcx/nested.hpp"
#include "nestcx/oracle.hpp"
#include "nestcx/polytope.hpp"

namespace {

using namespace nestcx;
using linalg::Rational;

double now_s() {
  return std::chrono::duration<double>(std::chrono::steady_clock::now().time_since_epoch())
      .count();
}

std::string cli_path;               // argv[1]
std::vector<BuildingSet> fixtures;  // the five rank-2 families
std::vector<BuildingSet> pool;      // 200 random families on up to 6 elements

std::vector<const BuildingSet*> all_instances() {
  std::vector<const BuildingSet*> out;
  for (const auto& b : fixtures) out.push_back(&b);
  for (const auto& b : pool) out.push_back(&b);
  return out;
}

// ---- rank-2 classification ------------------------------------------------

struct Rank2Case {
  const char* name;
  BuildingSet b;
  std::vector<NestedSet> cycle;  // expected maximal nested sets, cyclic order
};

NestedSet ns(std::initializer_list<Subset> members) { return normalize_face(NestedSet(members)); }

std::string check_rank2_cycles(std::string& stats) {
  Subset s0 = Subset::of({0}), s1 = Subset::of({1}), s2 = Subset::of({2}), s3 = Subset::of({3});
  Subset s01 = Subset::of({0, 1}), s12 = Subset::of({1, 2}), s02 = Subset::of({0, 2});
  std::vector<Rank2Case> cases;
  cases.push_back({"triangle", fx::triangle(), {ns({s0, s1}), ns({s1, s2}), ns({s0, s2})}});
  cases.push_back(
      {"square", fx::square(), {ns({s0, s1}), ns({s1, s2}), ns({s2, s3}), ns({s0, s3})}});
  cases.push_back(
      {"trapezoid", fx::trapezoid(), {ns({s0, s01}), ns({s1, s01}), ns({s1, s2}), ns({s0, s2})}});
  cases.push_back({"pentagon",
                   fx::pentagon(),
                   {ns({s0, s01}), ns({s1, s01}), ns({s1, s12}), ns({s2, s12}), ns({s0, s2})}});
  cases.push_back({"hexagon",
                   fx::hexagon(),
                   {ns({s0, s01}), ns({s1, s01}), ns({s1, s12}), ns({s2, s12}), ns({s2, s02}),
                    ns({s0, s02})}});

  std::int64_t nodes = 0;
  for (const auto& c : cases) {
    NestedComplex cx = enumerate_complex(c.b);
    DualGraph d = dual_graph(c.b, cx);
    const int m = int(c.cycle.size());
    if (int(d.nodes.size()) != m)
      return std::string(c.name) + ": expected " + std::to_string(m) + " maximal sets, found " +
             std::to_string(d.nodes.size());
    if (int(d.edges.size()) != m)
      return std::string(c.name) + ": a " + std::to_string(m) + "-cycle needs " +
             std::to_string(m) + " edges, found " + std::to_string(d.edges.size());
    std::vector<NestedSet> want = c.cycle;
    std::sort(want.begin(), want.end(), face_less);
    if (want != d.nodes) return std::string(c.name) + ": node set differs from the expected one";
    // 2-regular, connected (validated at construction) and with every
    // consecutive pair adjacent: that pins the cycle and its cyclic order.
    std::vector<int> at(m);
    for (int i = 0; i < m; i++) {
      auto it = std::find(d.nodes.begin(), d.nodes.end(), c.cycle[i]);
      at[i] = int(it - d.nodes.begin());
    }
    for (int i = 0; i < m; i++) {
      int a = at[i], b = at[(i + 1) % m];
      auto e = std::make_pair(std::min(a, b), std::max(a, b));
      if (!std::binary_search(d.edges.begin(), d.edges.end(), e))
        return std::string(c.name) + ": consecutive sets " + std::to_string(i) + "," +
               std::to_string((i + 1) % m) + " are not adjacent";
    }
    nodes += m;
  }
  stats = "5 families, " + std::to_string(nodes) + " maximal sets in the expected cyclic order";
  return "";
}

// ---- the two quadrilaterals ------------------------------------------------

Point pt_diff(const Point& a, const Point& b) {
  Point d(a.size());
  for (int i = 0; i < int(a.size()); i++) d[i] = a[i] - b[i];
  return d;
}

Rational sq_len(const Point& d) {
  Rational s(0);
  for (const Rational& x : d) s += x * x;
  return s;
}

bool parallel(const Point& u, const Point& v) {
  for (int i = 0; i < int(u.size()); i++)
    for (int j = i + 1; j < int(u.size()); j++)
      if (u[i] * v[j] != u[j] * v[i]) return false;
  return true;
}

// Nodes of a rank-2 dual graph in cyclic order, starting anywhere.
std::vector<int> cycle_order(const DualGraph& d) {
  std::vector<int> order = {0, d.neighbors[0][0]};
  for (;;) {
    int prev = order[int(order.size()) - 2];
    int cur = order.back();
    int next = d.neighbors[cur][0] == prev ? d.neighbors[cur][1] : d.neighbors[cur][0];
    if (next == 0) break;
    order.push_back(next);
  }
  return order;
}

bool lattice_eq(const LatticeVector& a, const LatticeVector& b) { return a == b; }

LatticeVector lattice_add(const LatticeVector& a, const LatticeVector& b) {
  LatticeVector s(a.size());
  for (int i = 0; i < int(a.size()); i++) s[i] = a[i] + b[i];
  return s;
}

LatticeVector lattice_neg(const LatticeVector& a) {
  LatticeVector s(a.size());
  for (int i = 0; i < int(a.size()); i++) s[i] = -a[i];
  return s;
}

std::string check_quadrilaterals(std::string& stats) {
  // Four-vertex polytope with the corner points in the dual graph's cyclic
  // order, plus the edge directions between consecutive corners.
  auto corners = [](const BuildingSet& b, std::vector<Point>& v, std::vector<Point>& dir,
                    std::string& err) {
    NestedComplex cx = enumerate_complex(b);
    Polytope p = realize(b);
    DualGraph d = dual_graph(b, cx);
    if (d.nodes.size() != 4) {
      err = "expected 4 maximal sets, found " + std::to_string(d.nodes.size());
      return false;
    }
    std::vector<int> cyc = cycle_order(d);
    if (cyc.size() != 4) {
      err = "dual graph is not a 4-cycle";
      return false;
    }
    v.clear();
    dir.clear();
    for (int i = 0; i < 4; i++) v.push_back(polytope_vertex(b, p, d.nodes[cyc[i]]));
    std::vector<Point> uniq = v;
    std::sort(uniq.begin(), uniq.end());
    if (std::unique(uniq.begin(), uniq.end()) != uniq.end()) {
      err = "corner points are not distinct";
      return false;
    }
    for (int i = 0; i < 4; i++) dir.push_back(pt_diff(v[(i + 1) % 4], v[i]));
    return true;
  };

  {
    BuildingSet b = fx::square();
    std::vector<Point> v, dir;
    std::string err;
    if (!corners(b, v, dir, err)) return "square: " + err;
    if (!parallel(dir[0], dir[2]) || !parallel(dir[1], dir[3]))
      return "square: opposite edges are not parallel";
    Rational side = sq_len(dir[0]);
    for (int i = 1; i < 4; i++)
      if (sq_len(dir[i]) != side) return "square: edge lengths differ";
    if (sq_len(pt_diff(v[2], v[0])) != sq_len(pt_diff(v[3], v[1])))
      return "square: diagonals differ";
    QuotientLattice q = make_quotient(b);
    LatticeVector zero(q.dim, 0);
    if (!lattice_eq(lattice_add(ray_of(q, Subset::of({0})), ray_of(q, Subset::of({2}))), zero) ||
        !lattice_eq(lattice_add(ray_of(q, Subset::of({1})), ray_of(q, Subset::of({3}))), zero))
      return "square: opposite rays do not cancel";
  }
  {
    BuildingSet b = fx::trapezoid();
    std::vector<Point> v, dir;
    std::string err;
    if (!corners(b, v, dir, err)) return "trapezoid: " + err;
    int pairs = int(parallel(dir[0], dir[2])) + int(parallel(dir[1], dir[3]));
    if (pairs != 1)
      return "trapezoid: expected exactly one parallel pair, found " + std::to_string(pairs);
    QuotientLattice q = make_quotient(b);
    LatticeVector r01 = ray_of(q, Subset::of({0, 1}));
    if (!lattice_eq(lattice_add(ray_of(q, Subset::of({0})), ray_of(q, Subset::of({1}))), r01))
      return "trapezoid: the two singleton rays do not sum to the pair ray";
    if (!lattice_eq(r01, lattice_neg(ray_of(q, Subset::of({2})))))
      return "trapezoid: pair ray is not opposite the third ray";
  }
  stats = "both 4-cycles realized with the stated parallelisms and ray relations";
  return "";
}

// ---- bases and expansions ---------------------------------------------------

std::string check_expansions(std::string& stats) {
  std::int64_t dets = 0, trips = 0, counts = 0;
  auto instances = all_instances();
  for (int idx = 0; idx < int(instances.size()); idx++) {
    const BuildingSet& b = *instances[idx];
    QuotientLattice q = make_quotient(b);
    NestedComplex cx = enumerate_complex(b);
    for (const auto& face : cx.maximal()) {
      linalg::Int d = basis_det(q, b, face);
      if (d != 1 && d != -1)
        return "instance " + std::to_string(idx) + ": ray basis determinant is not a unit";
      dets++;
    }
    std::mt19937_64 vr(9000 + idx);
    for (int s = 0; s < 1000; s++) {
      LatticeVector v(q.dim);
      for (auto& c : v) c = std::int64_t(vr() % 101) - 50;
      Expansion e = nested_expansion(b, q, v);
      for (const auto& [m, c] : e.terms)
        if (c <= 0)
          return "instance " + std::to_string(idx) + ": expansion has a nonpositive coefficient";
      if (!is_nested(b, e.support()))
        return "instance " + std::to_string(idx) + ": expansion support is not nested";
      LatticeVector back(q.dim, 0);
      for (const auto& [m, c] : e.terms) {
        LatticeVector r = ray_of(q, m);
        for (int k = 0; k < q.dim; k++) back[k] += c * r[k];
      }
      if (back != v)
        return "instance " + std::to_string(idx) + ": expansion does not round-trip";
      trips++;
    }
    if (q.dim <= 5) {
      for (int s = 0; s < 50; s++) {
        LatticeVector v(q.dim);
        for (auto& c : v) c = std::int64_t(vr() % 21) - 10;
        std::int64_t count = brute_expansion_count(b, q, cx, v);
        if (count != 1)
          return "instance " + std::to_string(idx) + ": " + std::to_string(count) +
                 " positive expansions for one vector";
        counts++;
      }
    }
  }
  stats = std::to_string(dets) + " unit determinants, " + std::to_string(trips) +
          " exact round trips, " + std::to_string(counts) + " uniqueness counts";
  return "";
}

// ---- cone intersections ----------------------------------------------------

std::string check_cone_meets(std::string& stats) {
  std::int64_t cones = 0, pairs = 0;
  auto instances = all_instances();
  for (int idx = 0; idx < int(instances.size()); idx++) {
    const BuildingSet& b = *instances[idx];
    QuotientLattice q = make_quotient(b);
    NestedComplex cx = enumerate_complex(b);
    FanReport rep = verify_fan(b, q, cx, {.samples = 0});
    if (!rep.ok())
      return "instance " + std::to_string(idx) + ": " + rep.first_violation;
    cones += rep.cones;
    pairs += rep.pairs;
  }
  stats = std::to_string(cones) + " cones, " + std::to_string(pairs) + " exact pair meets";
  return "";
}

// ---- normal fans -------------------------------------------------------------

std::string check_normal_fans(std::string& stats) {
  std::int64_t vertices = 0, edges = 0, polygons = 0;
  auto instances = all_instances();
  for (int idx = 0; idx < int(instances.size()); idx++) {
    const BuildingSet& b = *instances[idx];
    NestedComplex cx = enumerate_complex(b);
    DualGraph dual = dual_graph(b, cx);
    NormalFanReport rep = verify_normal_fan(b, cx, dual);
    if (!rep.ok())
      return "instance " + std::to_string(idx) + ": " + rep.first_violation;
    vertices += rep.vertices;
    edges += rep.edges;
    polygons += rep.polygons;
  }
  stats = std::to_string(vertices) + " vertices, " + std::to_string(edges) + " edges, " +
          std::to_string(polygons) + " polygons";
  return "";
}

// ---- face counts -------------------------------------------------------------

std::string check_face_counts(std::string& stats) {
  auto instances = all_instances();
  for (int idx = 0; idx < int(instances.size()); idx++) {
    const BuildingSet& b = *instances[idx];
    NestedComplex cx = enumerate_complex(b);
    std::string why;
    if (!check_f_recursion(b, cx, &why))
      return "instance " + std::to_string(idx) + ": " + why;
  }
  // Disjoint unions multiply generating functions: the face counts of a
  // product are the convolution of the factors' counts.
  std::mt19937_64 rng(777);
  int pairs = 0, attempts = 0;
  while (pairs < 20) {
    if (attempts++ > 200) return "could not draw 20 small product pairs";
    BuildingSet b1 = random_building(rng, 5);
    BuildingSet b2 = random_building(rng, 5);
    NestedComplex c1 = enumerate_complex(b1), c2 = enumerate_complex(b2);
    if (c1.total() * c2.total() > 150'000) continue;
    NestedComplex cp = enumerate_complex(product({b1, b2}));
    std::vector<std::int64_t> conv(c1.f.size() + c2.f.size() - 1, 0);
    for (int i = 0; i < int(c1.f.size()); i++)
      for (int j = 0; j < int(c2.f.size()); j++) conv[i + j] += c1.f[i] * c2.f[j];
    if (conv != cp.f) return "product pair " + std::to_string(pairs) + ": counts do not convolve";
    pairs++;
  }
  stats = std::to_string(instances.size()) + " recursions, 20 product convolutions";
  return "";
}

// ---- vertex links ------------------------------------------------------------

std::string check_vertex_links(std::string& stats) {
  std::int64_t links = 0;
  auto instances = all_instances();
  for (int idx = 0; idx < int(instances.size()); idx++) {
    const BuildingSet& b = *instances[idx];
    NestedComplex cx = enumerate_complex(b);
    for (Subset c : b.vertices()) {
      VertexLink vl = link(b, c);
      std::vector<NestedSet> mapped;
      for (const auto& face : link_faces(cx, c)) {
        NestedSet img;
        for (Subset m : face) img.push_back(vl.to_factored(vl.to_same_ground(m)));
        mapped.push_back(normalize_face(std::move(img)));
      }
      std::sort(mapped.begin(), mapped.end(), face_less);
      NestedComplex ref = brute_nested_complex(vl.factored);
      std::vector<NestedSet> all;
      for (const auto& level : ref.faces) all.insert(all.end(), level.begin(), level.end());
      std::sort(all.begin(), all.end(), face_less);
      if (mapped != all)
        return "instance " + std::to_string(idx) + ": link of " + c.to_string() +
               " does not match the factored family";
      links++;
    }
  }
  stats = std::to_string(links) + " vertex links matched against the reference";
  return "";
}

// ---- graphical families --------------------------------------------------------

std::string check_graphical(std::string& stats) {
  // Path counts are the Catalan numbers; the 3-path is the pentagon family.
  const std::int64_t catalan[] = {1, 1, 2, 5, 14, 42};
  for (int n = 3; n <= 5; n++) {
    BuildingSet b = BuildingSet::from_graph(path_graph(n));
    NestedComplex cx = enumerate_complex(b);
    if (std::int64_t(cx.maximal().size()) != catalan[n])
      return "path on " + std::to_string(n) + ": expected " + std::to_string(catalan[n]) +
             " maximal sets, found " + std::to_string(cx.maximal().size());
    if (brute_nested_complex(b).f != cx.f)
      return "path on " + std::to_string(n) + ": reference face counts disagree";
    if (n == 3 && b.sets() != fx::pentagon().sets())
      return "path on 3 does not reproduce the pentagon family";
  }
  std::int64_t factorial = 1;
  for (int n = 2; n <= 5; n++) {
    factorial *= n;
    BuildingSet b = BuildingSet::from_graph(complete_graph(n));
    NestedComplex cx = enumerate_complex(b);
    if (std::int64_t(cx.maximal().size()) != factorial)
      return "complete graph on " + std::to_string(n) + ": expected " +
             std::to_string(factorial) + " maximal sets, found " +
             std::to_string(cx.maximal().size());
    if (brute_nested_complex(b).f != cx.f)
      return "complete graph on " + std::to_string(n) + ": reference face counts disagree";
  }

  std::vector<BuildingSet> graphical = {fx::square(), fx::pentagon(), fx::hexagon()};
  for (int n = 3; n <= 5; n++) graphical.push_back(BuildingSet::from_graph(path_graph(n)));
  for (int n = 3; n <= 5; n++) graphical.push_back(BuildingSet::from_graph(complete_graph(n)));
  for (int n = 4; n <= 5; n++) graphical.push_back(BuildingSet::from_graph(cycle_graph(n)));
  std::mt19937_64 rng(555);
  for (int i = 0; i < 10; i++) graphical.push_back(random_graph_building(rng, 6));

  std::int64_t exchanges = 0, gons = 0;
  for (int gi = 0; gi < int(graphical.size()); gi++) {
    const BuildingSet& b = graphical[gi];
    if (!is_graphical(b).graphical)
      return "graphical instance " + std::to_string(gi) + " fails the recognition test";
    // Pairwise compatibility alone decides membership exactly when the
    // family comes from a graph; the full test must agree.
    NestedComplex cx = enumerate_complex(b);
    NestedComplex general = enumerate_complex(b, {.force_general = true});
    if (cx.f != general.f || cx.faces != general.faces)
      return "graphical instance " + std::to_string(gi) + ": pairwise and full tests disagree";
    DualGraph dual = dual_graph(b, cx);
    for (auto [i, j] : dual.edges) {
      ExchangeStep st = exchange_record(b, dual.nodes[i], dual.nodes[j]);
      if (!st.padding.empty())
        return "graphical instance " + std::to_string(gi) + ": an exchange needs padding";
      bool shared = std::find(st.from.begin(), st.from.end(), st.union_set) != st.from.end() &&
                    std::find(st.to.begin(), st.to.end(), st.union_set) != st.to.end();
      if (!st.union_is_component && !shared)
        return "graphical instance " + std::to_string(gi) +
               ": exchange union is neither shared nor a component";
      exchanges++;
    }
    if (b.rank() >= 2) {
      for (auto [shape, count] : loop_census(b, cx, dual)) {
        int size = loop_shape_size(shape);
        if (size < 4 || size > 6)
          return "graphical instance " + std::to_string(gi) + ": a " + std::to_string(size) +
                 "-gon two-face";
        gons += count;
      }
    }
  }

  // The one non-graphical rank-2 family is the one that makes a triangle.
  BuildingSet tri = fx::triangle();
  NestedComplex tcx = enumerate_complex(tri);
  auto census = loop_census(tri, tcx, dual_graph(tri, tcx));
  if (census.size() != 1 || census.begin()->first != LoopShape::triangle ||
      census.begin()->second != 1)
    return "triangle family does not produce exactly one 3-gon";

  stats = std::to_string(graphical.size()) + " graphical instances, " +
          std::to_string(exchanges) + " paddingless exchanges, " + std::to_string(gons) +
          " gons in {4,5,6}";
  return "";
}

// ---- support data identities ----------------------------------------------------

std::string check_support_identities(std::string& stats) {
  std::int64_t checks = 0;
  for (int n = 1; n <= 12; n++) {
    if (support_value(n, n) != 0)
      return "defining data is nonzero on a whole component of size " + std::to_string(n);
    checks++;
    for (int a = 1; a < n; a++) {
      for (int b = 1; a + b <= n; b++) {
        std::int64_t gap = support_value(a, n) + support_value(b, n) - support_value(a + b, n);
        std::int64_t split = a * ((std::int64_t{1} << (a + b - 1)) - (std::int64_t{1} << (a - 1))) +
                             b * ((std::int64_t{1} << (a + b - 1)) - (std::int64_t{1} << (b - 1)));
        if (gap != split)
          return "superadditivity gap formula fails at a=" + std::to_string(a) +
                 " b=" + std::to_string(b) + " n=" + std::to_string(n);
        if (gap <= 0)
          return "superadditivity gap is not positive at a=" + std::to_string(a) +
                 " b=" + std::to_string(b) + " n=" + std::to_string(n);
        checks++;
      }
    }
  }
  for (int r = 2; r <= 12; r++) {
    for (int p1 = 1; p1 < r; p1++) {
      for (int p2 = 1; p2 < r; p2++) {
        std::int64_t lhs = r * (std::int64_t{1} << (r - 1)) -
                           p1 * (std::int64_t{1} << (p1 - 1)) -
                           p2 * (std::int64_t{1} << (p2 - 1));
        if (lhs <= 0)
          return "weighted power inequality fails at r=" + std::to_string(r) +
                 " p1=" + std::to_string(p1) + " p2=" + std::to_string(p2);
        checks++;
      }
    }
  }
  stats = std::to_string(checks) + " exhaustive identity checks";
  return "";
}

// ---- CLI determinism --------------------------------------------------------------

int run_command(const std::string& line) {
  int rc = std::system(line.c_str());
  if (rc < 0) return -1;
  return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string check_cli_determinism(std::string& stats) {
  namespace fs = std::filesystem;
  if (cli_path.empty()) return "CLI binary path missing (pass it as the first argument)";
  fs::path root = fs::temp_directory_path() / ("nestcx-acceptance-" + std::to_string(getpid()));
  fs::remove_all(root);
  fs::create_directories(root);

  fs::path family = root / "family.json";
  std::ofstream(family) << building_to_json(fx::pentagon());
  fs::path graph = root / "graph.json";
  std::ofstream(graph) << "{\"vertices\": 4, \"edges\": [[0,1],[1,2],[2,3]]}\n";

  struct Cmd {
    std::string name;
    std::string args;
  };
  std::vector<Cmd> cmds = {
      {"validate", "validate --input " + family.string()},
      {"complex", "complex --input " + family.string()},
      {"fan", "fan --input " + family.string()},
      {"polytope", "polytope --input " + family.string()},
      {"render", "render --input " + family.string()},
      {"verify", "verify --input " + family.string() + " --seed 7 --samples 120 --oracle"},
      {"graph-complex", "complex --graph --input " + graph.string()},
      // Rank 3, so this takes the machine-format fallback path.
      {"graph-render", "render --graph --input " + graph.string()},
  };

  for (const char* run : {"a", "b"}) {
    for (const auto& c : cmds) {
      fs::path dir = root / run / c.name;
      fs::create_directories(dir);
      std::string line = "'" + cli_path + "' " + c.args + " --output '" + dir.string() + "'" +
                         " > '" + (dir / "stdout.txt").string() + "'" + " 2> '" +
                         (dir / "stderr.txt").string() + "'";
      int code = run_command(line);
      if (code != 0)
        return c.name + " exited with code " + std::to_string(code) + " on run " + run;
    }
  }

  std::int64_t files = 0;
  for (const auto& entry : fs::recursive_directory_iterator(root / "a")) {
    if (!entry.is_regular_file()) continue;
    fs::path rel = fs::relative(entry.path(), root / "a");
    fs::path other = root / "b" / rel;
    if (!fs::exists(other)) return rel.string() + " is missing from the second run";
    if (read_file(entry.path()) != read_file(other))
      return rel.string() + " differs between runs";
    files++;
  }
  for (const auto& entry : fs::recursive_directory_iterator(root / "b")) {
    if (!entry.is_regular_file()) continue;
    fs::path rel = fs::relative(entry.path(), root / "b");
    if (!fs::exists(root / "a" / rel)) return rel.string() + " appears only in the second run";
  }
  fs::remove_all(root);
  stats = std::to_string(cmds.size()) + " commands rerun, " + std::to_string(files) +
          " artifacts byte-identical";
  return "";
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) cli_path = argv[1];
  fixtures = fx::rank2_family();
  std::mt19937_64 rng(2026);
  for (int i = 0; i < 200; i++) pool.push_back(random_building(rng, 6));

  struct Criterion {
    const char* label;
    double budget;  // seconds; 0 = no budget
    std::string (*run)(std::string&);
  };
  std::vector<Criterion> criteria = {
      {"rank-2 dual graphs are the five expected cycles", 1, check_rank2_cycles},
      {"square and trapezoid realizations and ray relations", 1, check_quadrilaterals},
      {"unimodular ray bases and unique positive expansions", 60, check_expansions},
      {"maximal cones meet exactly in shared faces", 30, check_cone_meets},
      {"polytope normal fans match the complexes", 60, check_normal_fans},
      {"face count recursion and product rule", 10, check_face_counts},
      {"vertex links factor into restriction times contraction", 30, check_vertex_links},
      {"graphical family counts, cliques, exchanges, gon sizes", 60, check_graphical},
      {"defining support data identities up to twelve elements", 5, check_support_identities},
      {"CLI reruns emit byte-identical artifacts", 0, check_cli_determinism},
  };

  int failed = 0;
  for (int i = 0; i < int(criteria.size()); i++) {
    const auto& c = criteria[i];
    std::string stats, error;
    double t0 = now_s();
    try {
      error = c.run(stats);
    } catch (const std::exception& e) {
      error = std::string("exception: ") + e.what();
    }
    double elapsed = now_s() - t0;
    if (error.empty() && c.budget > 0 && elapsed > c.budget)
      error = "over budget";
    std::ostringstream line;
    line << "criterion " << std::setw(2) << i + 1 << ": "
         << (error.empty() ? "PASS" : "FAIL") << "  " << c.label << " - "
         << (error.empty() ? stats : error) << "  [" << std::fixed << std::setprecision(2)
         << elapsed;
    if (c.budget > 0) line << "s of " << int(c.budget) << "s";
    else line << "s";
    line << "]";
    std::cout << line.str() << "\n" << std::flush;
    if (!error.empty()) failed++;
  }
  std::cout << "acceptance: " << criteria.size() - failed << "/" << criteria.size()
            << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
