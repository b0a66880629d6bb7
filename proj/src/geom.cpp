#include "kset/geom.hpp"

#include <utility>

namespace kset {

std::string to_string(const Rat& r) { return r.get_str(); }

int sign(const Rat& r) { return sgn(r); }

bool operator==(const Point& p, const Point& q) { return p.x == q.x && p.y == q.y; }

bool operator<(const Point& p, const Point& q) {
  if (p.x != q.x) return p.x < q.x;
  return p.y < q.y;
}

bool operator==(const Line& l, const Line& m) { return l.a == m.a && l.b == m.b; }

Segment::Segment(Point p, Point q) : p_(std::move(p)), q_(std::move(q)) {
  if (p_ == q_) throw GeometryError("degenerate segment");
  if (q_ < p_) std::swap(p_, q_);
}

int orient(const Point& p, const Point& q, const Point& r) {
  Rat det = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
  return sgn(det);
}

int side_of(const Line& l, const Point& p) {
  Rat d = p.y - l.at(p.x);
  return sgn(d);
}

Line dualize_point(const Point& p) { return Line{p.x, p.y}; }

Line dualize_line(const Point& v) { return Line{v.x, v.y}; }

Point point_form(const Line& l) { return Point{l.a, l.b}; }

Line line_through(const Point& p, const Point& q) {
  if (p.x == q.x) throw VerticalLine();
  Rat a = (q.y - p.y) / (q.x - p.x);
  // p.y = a*p.x - b
  Rat b = a * p.x - p.y;
  return Line{a, b};
}

Point intersect(const Line& l1, const Line& l2) {
  if (l1.a == l2.a) {
    if (l1.b == l2.b) throw Coincident();
    throw Parallel();
  }
  // a1 x - b1 = a2 x - b2
  Rat x = (l1.b - l2.b) / (l1.a - l2.a);
  Rat y = l1.at(x);
  return Point{x, y};
}

bool segments_properly_cross(const Segment& s1, const Segment& s2) {
  const int o1 = orient(s1.p(), s1.q(), s2.p());
  const int o2 = orient(s1.p(), s1.q(), s2.q());
  const int o3 = orient(s2.p(), s2.q(), s1.p());
  const int o4 = orient(s2.p(), s2.q(), s1.q());
  return o1 * o2 < 0 && o3 * o4 < 0;
}

}  // namespace kset
