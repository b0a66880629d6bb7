#include "kset/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <vector>

#include "kset/arrangement.hpp"
#include "kset/chains.hpp"
#include "kset/k_graph.hpp"

namespace kset {

namespace {

constexpr double kWidth = 800;
constexpr double kHeight = 600;
constexpr double kMarginX = 0.05 * kWidth;
constexpr double kMarginY = 0.05 * kHeight;

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  std::string s(buf);
  if (s == "-0.000000") s = "0.000000";
  return s;
}

// World box in exact arithmetic; only the final canvas mapping uses doubles.
struct Frame {
  Rat xmin, xmax, ymin, ymax;

  static Frame around(const std::vector<Point>& pts) {
    Frame f{pts.front().x, pts.front().x, pts.front().y, pts.front().y};
    for (const auto& p : pts) {
      f.xmin = std::min(f.xmin, p.x);
      f.xmax = std::max(f.xmax, p.x);
      f.ymin = std::min(f.ymin, p.y);
      f.ymax = std::max(f.ymax, p.y);
    }
    Rat w = f.xmax - f.xmin;
    Rat h = f.ymax - f.ymin;
    if (w == 0) w = 1;
    if (h == 0) h = 1;
    Rat grow_x = w / 10;
    Rat grow_y = h / 10;
    f.xmin -= grow_x;
    f.xmax += grow_x;
    f.ymin -= grow_y;
    f.ymax += grow_y;
    return f;
  }

  double sx(const Rat& x) const {
    Rat u = (x - xmin) / (xmax - xmin);
    return kMarginX + u.get_d() * (kWidth - 2 * kMarginX);
  }
  double sy(const Rat& y) const {
    Rat u = (y - ymin) / (ymax - ymin);
    return kHeight - kMarginY - u.get_d() * (kHeight - 2 * kMarginY);
  }
  std::string xy(const Point& p) const { return num(sx(p.x)) + "," + num(sy(p.y)); }
};

void open_document(std::ostringstream& os, const char* title) {
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"800\" height=\"600\" "
        "viewBox=\"0 0 800 600\">\n"
     << "<title>" << title << "</title>\n"
     << "<rect x=\"0\" y=\"0\" width=\"800\" height=\"600\" fill=\"white\"/>\n"
     << "<defs><clipPath id=\"frame\"><rect x=\"" << num(kMarginX) << "\" y=\"" << num(kMarginY) << "\" width=\""
     << num(kWidth - 2 * kMarginX) << "\" height=\"" << num(kHeight - 2 * kMarginY) << "\"/></clipPath></defs>\n";
}

void segment_between(std::ostringstream& os, const Frame& f, const char* cls, const Point& a, const Point& b,
                     const char* style) {
  os << "<line class=\"" << cls << "\" x1=\"" << num(f.sx(a.x)) << "\" y1=\"" << num(f.sy(a.y)) << "\" x2=\""
     << num(f.sx(b.x)) << "\" y2=\"" << num(f.sy(b.y)) << "\" " << style << "/>\n";
}

std::string chain_color(int id, int k) {
  const int hue = (id - 1) * 360 / k;
  return "hsl(" + std::to_string(hue) + ",70%,45%)";
}

void polyline(std::ostringstream& os, const Frame& f, const char* cls, const std::vector<Point>& pts,
              const std::string& style) {
  os << "<polyline class=\"" << cls << "\" points=\"";
  for (std::size_t i = 0; i < pts.size(); ++i) os << (i ? " " : "") << f.xy(pts[i]);
  os << "\" fill=\"none\" " << style << "/>\n";
}

std::string render_primal(const Instance& inst, int k) {
  const KGraph g = build_G(inst, k);
  const Frame f = Frame::around(inst.points());
  std::ostringstream os;
  open_document(os, ("primal view, k = " + std::to_string(k)).c_str());
  os << "<g clip-path=\"url(#frame)\">\n";
  if (g.t() > 0) {
    const Line l = line_through(inst[g.edges.front().p], inst[g.edges.front().q]);
    segment_between(os, f, "witness", Point{f.xmin, l.at(f.xmin)}, Point{f.xmax, l.at(f.xmax)},
                    "stroke=\"gray\" stroke-width=\"1\" stroke-dasharray=\"6,4\"");
  }
  os << "</g>\n";
  for (const auto& e : g.edges)
    segment_between(os, f, "edge", inst[e.p], inst[e.q], "stroke=\"black\" stroke-width=\"2\"");
  for (int i = 0; i < inst.n(); ++i) {
    os << "<circle class=\"point\" cx=\"" << num(f.sx(inst[i].x)) << "\" cy=\"" << num(f.sy(inst[i].y))
       << "\" r=\"4\" fill=\"black\"/>\n";
    os << "<text x=\"" << num(f.sx(inst[i].x) + 6) << "\" y=\"" << num(f.sy(inst[i].y) - 6)
       << "\" font-size=\"12\" font-family=\"sans-serif\">" << i << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

std::string render_dual(const Instance& inst, int k) {
  const Arrangement arr = build_arrangement(inst);
  const Level level = extract_k_level(arr, k);
  const ChainSet cs = decompose_chains(arr, k);

  std::vector<Point> locations;
  for (const auto& v : arr.vertices()) locations.push_back(v.location);
  const Frame f = Frame::around(locations);
  const auto& lines = arr.lines();
  auto on = [&](int line, const Rat& x) { return Point{x, lines[line].at(x)}; };

  std::ostringstream os;
  open_document(os, ("dual view, k = " + std::to_string(k)).c_str());
  os << "<g clip-path=\"url(#frame)\">\n";
  for (int i = 0; i < arr.n(); ++i)
    segment_between(os, f, "dual-line", on(i, f.xmin), on(i, f.xmax), "stroke=\"#999999\" stroke-width=\"1\"");

  for (const auto& c : cs.chains) {
    std::vector<Point> pts{on(c.pieces.front().line, f.xmin)};
    for (int v : c.turns) pts.push_back(arr.vertex(v).location);
    pts.push_back(on(c.pieces.back().line, f.xmax));
    polyline(os, f, "chain", pts, "stroke=\"" + chain_color(c.id, k) + "\" stroke-width=\"2.5\"");
  }

  std::vector<Point> walk{on(level.edge_lines.front(), f.xmin)};
  for (int v : level.vertex_seq) walk.push_back(arr.vertex(v).location);
  walk.push_back(on(level.edge_lines.back(), f.xmax));
  polyline(os, f, "level", walk, "stroke=\"black\" stroke-width=\"4\"");
  os << "</g>\n";

  for (const auto& v : arr.vertices()) {
    if (v.below_count != k - 1) continue;
    os << "<circle class=\"turn\" cx=\"" << num(f.sx(v.location.x)) << "\" cy=\"" << num(f.sy(v.location.y))
       << "\" r=\"6\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace

std::string render_svg(const Instance& inst, int k, View view) {
  return view == View::Primal ? render_primal(inst, k) : render_dual(inst, k);
}

}  // namespace kset
