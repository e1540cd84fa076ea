#include "nestcx/json_io.hpp"

#include <json.hpp>

namespace nestcx {

namespace {

using json = nlohmann::json;

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw Error(Errc::parse_error, e.what());
  }
}

int read_count(const json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key) || !doc[key].is_number_integer())
    throw Error(Errc::parse_error, std::string("expected an object with an integer \"") + key +
                                       "\" field");
  std::int64_t n = doc[key].get<std::int64_t>();
  if (n < 1) throw Error(Errc::empty_ground, "ground set must be nonempty");
  if (n > GroundSet::kMaxSize)
    throw Error(Errc::too_large, "ground set of size " + std::to_string(n) + " exceeds " +
                                     std::to_string(GroundSet::kMaxSize));
  return int(n);
}

Subset read_subset(const json& arr, int n, const char* what) {
  if (!arr.is_array()) throw Error(Errc::parse_error, std::string(what) + " must be an array");
  Subset s;
  for (const auto& e : arr) {
    if (!e.is_number_integer())
      throw Error(Errc::parse_error, std::string(what) + " entries must be integers");
    std::int64_t i = e.get<std::int64_t>();
    if (i < 0 || i >= n)
      throw Error(Errc::parse_error, "element " + std::to_string(i) +
                                         " out of range for ground set of size " + std::to_string(n));
    s = s.with(int(i));
  }
  return s;
}

json subset_elements(Subset s) {
  json arr = json::array();
  for (int e : s.elements()) arr.push_back(e);
  return arr;
}

json face_elements(const NestedSet& face) {
  json arr = json::array();
  for (Subset m : face) arr.push_back(subset_elements(m));
  return arr;
}

std::string finish(const json& doc) { return doc.dump(2) + "\n"; }

}  // namespace

BuildingSet building_from_json(const std::string& text) {
  json doc = parse(text);
  int n = read_count(doc, "ground_set");
  if (!doc.contains("sets") || !doc["sets"].is_array())
    throw Error(Errc::parse_error, "expected a \"sets\" array");
  std::vector<Subset> sets;
  for (const auto& arr : doc["sets"]) sets.push_back(read_subset(arr, n, "a set"));
  return BuildingSet::validate(std::move(sets), GroundSet(n));
}

Graph graph_from_json(const std::string& text) {
  json doc = parse(text);
  int n = read_count(doc, "vertices");
  if (!doc.contains("edges") || !doc["edges"].is_array())
    throw Error(Errc::parse_error, "expected an \"edges\" array");
  std::vector<std::pair<int, int>> edges;
  for (const auto& arr : doc["edges"]) {
    if (!arr.is_array() || arr.size() != 2 || !arr[0].is_number_integer() ||
        !arr[1].is_number_integer())
      throw Error(Errc::parse_error, "each edge must be a pair of integers");
    edges.emplace_back(arr[0].get<int>(), arr[1].get<int>());
  }
  return Graph::make(n, std::move(edges));
}

std::string building_to_json(const BuildingSet& b) {
  json doc;
  doc["ground_set"] = b.ground_size();
  json sets = json::array();
  for (Subset s : b.sets()) sets.push_back(subset_elements(s));
  doc["sets"] = sets;
  return finish(doc);
}

std::string complex_to_json(const NestedComplex& cx) {
  json doc;
  doc["f_vector"] = cx.f;
  json maxf = json::array();
  for (const NestedSet& face : cx.maximal()) maxf.push_back(face_elements(face));
  doc["maximal_faces"] = maxf;
  return finish(doc);
}

std::string fan_to_json(const BuildingSet& b, const QuotientLattice& q, const NestedComplex& cx) {
  json doc;
  doc["dim"] = q.dim;
  json rays = json::object();
  for (Subset v : b.vertices()) rays[v.to_string(false)] = ray_of(q, v);
  doc["rays"] = rays;
  json cones = json::array();
  for (const NestedSet& face : cx.maximal()) {
    json cone = json::array();
    for (Subset m : face) cone.push_back(m.to_string(false));
    cones.push_back(cone);
  }
  doc["maximal_cones"] = cones;
  return finish(doc);
}

std::string polytope_to_json(const BuildingSet& b, const Polytope& p, const NestedComplex& cx) {
  json doc;
  json eqs = json::array();
  for (Subset c : p.equalities) eqs.push_back(subset_elements(c));
  doc["equalities"] = eqs;
  json ineqs = json::array();
  for (const Halfspace& h : p.inequalities) {
    json one;
    one["set"] = subset_elements(h.set);
    one["rhs"] = h.rhs;
    ineqs.push_back(one);
  }
  doc["inequalities"] = ineqs;
  json verts = json::array();
  for (const NestedSet& face : cx.maximal()) {
    json one;
    one["nested_set"] = face_elements(face);
    json point = json::array();
    for (const linalg::Rational& c : polytope_vertex(b, p, face)) point.push_back(c.str());
    one["point"] = point;
    verts.push_back(one);
  }
  doc["vertices"] = verts;
  return finish(doc);
}

std::string dual_graph_to_dot(const DualGraph& dual) {
  std::string out = "graph dual {\n";
  for (int i = 0; i < int(dual.nodes.size()); i++) {
    out += "  n" + std::to_string(i) + " [label=\"{";
    for (int k = 0; k < int(dual.nodes[i].size()); k++) {
      if (k) out += ',';
      out += dual.nodes[i][k].to_string(true);
    }
    out += "}\"];\n";
  }
  for (auto [i, j] : dual.edges)
    out += "  n" + std::to_string(i) + " -- n" + std::to_string(j) + ";\n";
  return out + "}\n";
}

}  // namespace nestcx
