#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "nestcx/building.hpp"
#include "nestcx/fan.hpp"
#include "nestcx/json_io.hpp"
#include "nestcx/nested.hpp"
#include "nestcx/oracle.hpp"
#include "nestcx/polytope.hpp"
#include "nestcx/render.hpp"

namespace {

using namespace nestcx;

std::string slurp(const std::string& path) {
  if (path.empty() || path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::parse_error, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Artifact {
  std::string name;
  std::string content;
};

void emit(const std::vector<Artifact>& artifacts, const std::string& out_dir) {
  if (out_dir.empty()) {
    for (const auto& a : artifacts) std::cout << a.content;
    return;
  }
  std::filesystem::create_directories(out_dir);
  for (const auto& a : artifacts) {
    std::ofstream f(std::filesystem::path(out_dir) / a.name, std::ios::binary);
    if (!f) throw Error(Errc::parse_error, "cannot write " + a.name + " in " + out_dir);
    f << a.content;
  }
}

std::string edge_list(const Graph& g) {
  std::string s;
  for (auto [i, j] : g.edges) {
    if (!s.empty()) s += ", ";
    s += std::to_string(i + 1) + "-" + std::to_string(j + 1);
  }
  return s;
}

int run(int argc, char** argv) {
  CLI::App app{"Building sets, nested complexes, fans and polytopes"};
  std::string command, input, output, format;
  bool as_graph = false, with_oracle = false;
  std::uint64_t seed = 0;
  int samples = 1000;
  std::int64_t max_faces = 1'000'000;

  app.add_option("command", command, "validate | complex | fan | polytope | verify | render")
      ->required()
      ->check(CLI::IsMember({"validate", "complex", "fan", "polytope", "verify", "render"}));
  app.add_option("--input", input, "input JSON file, - or absent for stdin");
  app.add_flag("--graph", as_graph, "treat the input as a graph, not a set family");
  app.add_option("--output", output, "directory for artifacts (default: stdout)");
  app.add_option("--seed", seed, "random seed for sampling phases");
  app.add_option("--samples", samples, "sample count for verification phases");
  app.add_option("--max-faces", max_faces, "abort enumeration past this many faces");
  app.add_flag("--oracle", with_oracle, "also compare against the reference implementations");
  app.add_option("--format", format, "emit only artifacts of this format")
      ->check(CLI::IsMember({"json", "dot", "svg"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  std::string text = slurp(input);
  BuildingSet b = as_graph ? BuildingSet::from_graph(graph_from_json(text))
                           : building_from_json(text);

  if (command == "validate") {
    std::string maxes;
    for (Subset c : b.components()) maxes += (maxes.empty() ? "" : " ") + c.to_string(true);
    std::cout << "ground set: " << b.ground_size() << " elements\n";
    std::cout << "members: " << b.sets().size() << "\n";
    std::cout << "maximal members: " << maxes << "\n";
    std::cout << "rank: " << b.rank() << "\n";
    GraphicalTest gt = is_graphical(b);
    if (gt.graphical)
      std::cout << "graphical: yes (edges: " << edge_list(gt.graph) << ")\n";
    else
      std::cout << "graphical: no (two-element members: " << edge_list(gt.graph) << ")\n";
    return 0;
  }

  NestedComplex cx = enumerate_complex(b, {.max_faces = max_faces});
  std::vector<Artifact> artifacts;

  if (command == "complex") {
    artifacts.push_back({"complex.json", complex_to_json(cx)});
    artifacts.push_back({"dual.dot", dual_graph_to_dot(dual_graph(b, cx))});
  } else if (command == "fan") {
    artifacts.push_back({"fan.json", fan_to_json(b, make_quotient(b), cx)});
  } else if (command == "polytope") {
    artifacts.push_back({"polytope.json", polytope_to_json(b, realize(b), cx)});
  } else if (command == "render") {
    if (b.rank() <= 2) {
      QuotientLattice q = make_quotient(b);
      artifacts.push_back(
          {"render.svg", render_svg(b, q, cx, realize(b), dual_graph(b, cx))});
    } else {
      // Nothing sensible to draw; fall back to the machine formats.
      std::cerr << "rank " << b.rank() << " exceeds 2, emitting JSON instead of SVG\n";
      artifacts.push_back({"fan.json", fan_to_json(b, make_quotient(b), cx)});
      artifacts.push_back({"polytope.json", polytope_to_json(b, realize(b), cx)});
    }
  } else if (command == "verify") {
    QuotientLattice q = make_quotient(b);
    FanOptions fo;
    fo.samples = samples;
    fo.seed = seed;
    FanReport fan = verify_fan(b, q, cx, fo);
    DualGraph dual = dual_graph(b, cx);
    NormalFanReport nf = verify_normal_fan(b, cx, dual);
    bool ok = fan.ok() && nf.ok();
    std::cout << "fan: cones " << fan.cones << ", pair intersections " << fan.pairs
              << ", expansions " << fan.samples_expanded << ", separations "
              << fan.samples_separated << "\n";
    std::cout << "  unimodular: " << (fan.unimodular ? "ok" : "FAIL") << "\n";
    std::cout << "  pairwise meets: " << (fan.pairwise_ok ? "ok" : "FAIL") << "\n";
    std::cout << "  expansion round trips: " << (fan.expansion_ok ? "ok" : "FAIL") << "\n";
    std::cout << "  interior separation: " << (fan.interior_ok ? "ok" : "FAIL") << "\n";
    std::cout << "normal fan: vertices " << nf.vertices << ", edges " << nf.edges
              << ", two-faces " << nf.polygons << "\n";
    std::cout << "  vertex systems: " << (nf.vertices_ok ? "ok" : "FAIL") << "\n";
    std::cout << "  tightness: " << (nf.tightness_ok ? "ok" : "FAIL") << "\n";
    std::cout << "  relations: " << (nf.relations_ok ? "ok" : "FAIL") << "\n";
    std::cout << "  margins: " << (nf.margins_ok ? "ok" : "FAIL") << "\n";
    std::cout << "  adjacency: " << (nf.adjacency_ok ? "ok" : "FAIL") << "\n";
    std::cout << "  two-face polygons: " << (nf.faces2_ok ? "ok" : "FAIL") << "\n";
    if (with_oracle) {
      OracleReport orc = oracle_compare(b, seed, samples);
      ok = ok && orc.ok();
      std::cout << "oracle: faces " << orc.faces_checked << ", expansions "
                << orc.expansions_checked << ", vertices " << orc.vertices_checked
                << (orc.vertices_skipped ? " (skipped)" : "") << "\n";
      std::cout << "  face lists: " << (orc.complex_ok ? "ok" : "FAIL") << "\n";
      std::cout << "  expansion uniqueness: " << (orc.expansion_ok ? "ok" : "FAIL") << "\n";
      std::cout << "  vertex sets: " << (orc.vertices_ok ? "ok" : "FAIL") << "\n";
      if (!orc.ok() && !orc.first_violation.empty())
        std::cout << "counterexample: " << orc.first_violation << "\n";
    }
    if (!fan.ok() && !fan.first_violation.empty())
      std::cout << "counterexample: " << fan.first_violation << "\n";
    if (!nf.ok() && !nf.first_violation.empty())
      std::cout << "counterexample: " << nf.first_violation << "\n";
    return ok ? 0 : 2;
  }

  if (!format.empty()) {
    std::vector<Artifact> kept;
    for (auto& a : artifacts)
      if (a.name.size() > format.size() && a.name.ends_with("." + format))
        kept.push_back(std::move(a));
    if (kept.empty())
      throw Error(Errc::parse_error, "no " + format + " artifact for this command");
    artifacts = std::move(kept);
  }
  emit(artifacts, output);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.is_validation() ? 1 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
