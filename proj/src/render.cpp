#include "nestcx/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace nestcx {

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  // Avoid the two spellings of zero.
  if (std::string(buf) == "-0.00") return "0.00";
  return buf;
}

struct Panel {
  double x0, y0, side;

  // Data coordinates to pixels, y flipped. The caller picks the data window.
  double cx, cy, scale;
  [[nodiscard]] double px(double x) const { return x0 + side / 2 + (x - cx) * scale; }
  [[nodiscard]] double py(double y) const { return y0 + side / 2 - (y - cy) * scale; }
};

void fit(Panel& p, const std::vector<std::pair<double, double>>& pts, double margin) {
  double lo_x = 0, hi_x = 0, lo_y = 0, hi_y = 0;
  for (auto [x, y] : pts) {
    lo_x = std::min(lo_x, x), hi_x = std::max(hi_x, x);
    lo_y = std::min(lo_y, y), hi_y = std::max(hi_y, y);
  }
  p.cx = (lo_x + hi_x) / 2;
  p.cy = (lo_y + hi_y) / 2;
  double span = std::max({hi_x - lo_x, hi_y - lo_y, 1e-9});
  p.scale = (p.side - 2 * margin) / span;
}

}  // namespace

std::string render_svg(const BuildingSet& b, const QuotientLattice& q, const NestedComplex& cx,
                       const Polytope& p, const DualGraph& dual) {
  const int d = q.dim;
  if (d > 2)
    throw Error(Errc::wrong_dimension,
                "drawing needs rank at most 2, this family has rank " + std::to_string(d));

  auto planar = [&](const LatticeVector& v) {
    return std::pair<double, double>{d >= 1 ? double(v[0]) : 0.0, d >= 2 ? double(v[1]) : 0.0};
  };

  std::string svg =
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"720\" height=\"360\" "
      "viewBox=\"0 0 720 360\">\n"
      "<rect width=\"720\" height=\"360\" fill=\"white\"/>\n";

  // Left panel: one labeled ray per non-maximal member, normalized to a
  // common length so only the directions carry information.
  {
    const double ox = 180, oy = 180, len = 120;
    for (Subset v : b.vertices()) {
      auto [x, y] = planar(ray_of(q, v));
      double norm = std::hypot(x, y);
      if (norm == 0) continue;
      double ux = x / norm, uy = -y / norm;
      svg += "<line x1=\"" + num(ox) + "\" y1=\"" + num(oy) + "\" x2=\"" + num(ox + ux * len) +
             "\" y2=\"" + num(oy + uy * len) + "\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
      svg += "<text x=\"" + num(ox + ux * (len + 26)) + "\" y=\"" + num(oy + uy * (len + 26)) +
             "\" font-family=\"monospace\" font-size=\"12\" text-anchor=\"middle\" "
             "dominant-baseline=\"middle\">" +
             v.to_string(true) + "</text>\n";
    }
    svg += "<circle cx=\"" + num(ox) + "\" cy=\"" + num(oy) + "\" r=\"3\" fill=\"black\"/>\n";
  }

  // Right panel: the polytope in the same coordinates.
  {
    Panel pan{370, 10, 340, 0, 0, 1};
    std::vector<std::pair<double, double>> pts;
    for (const NestedSet& face : cx.maximal()) {
      Point v = polytope_vertex(b, p, face);
      double x = 0, y = 0;
      if (d >= 1) x = linalg::Rational(v[q.axis_element[0]] - v[q.elim_of[q.axis_element[0]]])
                          .convert_to<double>();
      if (d >= 2) y = linalg::Rational(v[q.axis_element[1]] - v[q.elim_of[q.axis_element[1]]])
                          .convert_to<double>();
      pts.emplace_back(x, y);
    }
    fit(pan, pts, 40);

    std::vector<int> order;
    if (d == 2) {
      // The boundary cycle is the geodesic loop of the empty face.
      order = geodesic_loop(b, dual, {}).nodes;
    } else {
      for (int i = 0; i < int(pts.size()); i++) order.push_back(i);
    }

    if (order.size() >= 2) {
      svg += d == 2 ? "<polygon points=\"" : "<polyline points=\"";
      for (std::size_t k = 0; k < order.size(); k++) {
        if (k) svg += ' ';
        svg += num(pan.px(pts[order[k]].first)) + "," + num(pan.py(pts[order[k]].second));
      }
      svg += "\" fill=\"#c8d8f0\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
    }
    for (auto [x, y] : pts)
      svg += "<circle cx=\"" + num(pan.px(x)) + "\" cy=\"" + num(pan.py(y)) +
             "\" r=\"4\" fill=\"black\"/>\n";
  }

  return svg + "</svg>\n";
}

}  // namespace nestcx
