#pragma once

// Exact planar kernel: rationals, points, non-vertical lines, and the
// point/line duality (a, b) <-> y = a*x - b.

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace kset {

using Rat = mpq_class;

/// "p/q" in lowest terms, or bare "p" for integers.
std::string to_string(const Rat& r);

int sign(const Rat& r);

struct Point {
  Rat x;
  Rat y;
};

bool operator==(const Point& p, const Point& q);
inline bool operator!=(const Point& p, const Point& q) { return !(p == q); }
/// Lexicographic on (x, y).
bool operator<(const Point& p, const Point& q);

/// The line y = a*x - b. Vertical lines are not representable.
struct Line {
  Rat a;
  Rat b;

  Rat at(const Rat& x) const { return a * x - b; }
};

bool operator==(const Line& l, const Line& m);
inline bool operator!=(const Line& l, const Line& m) { return !(l == m); }

class GeometryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class VerticalLine : public GeometryError {
 public:
  VerticalLine() : GeometryError("points share an x-coordinate; the line through them is vertical") {}
};

class Parallel : public GeometryError {
 public:
  Parallel() : GeometryError("lines are parallel") {}
};

class Coincident : public GeometryError {
 public:
  Coincident() : GeometryError("lines coincide") {}
};

/// Closed segment, endpoints stored in (x, y) lexicographic order.
class Segment {
 public:
  Segment(Point p, Point q);

  const Point& p() const { return p_; }
  const Point& q() const { return q_; }

 private:
  Point p_;
  Point q_;
};

/// Sign of det(q - p, r - p): +1 counterclockwise, 0 collinear, -1 clockwise.
int orient(const Point& p, const Point& q, const Point& r);

/// +1 if p is strictly above l, -1 strictly below, 0 on it.
int side_of(const Line& l, const Point& p);

/// Primal point (a, b) to the dual line y = a*x - b.
Line dualize_point(const Point& p);

/// Dual point (a', b') to the primal line y = a'*x - b'.
Line dualize_line(const Point& v);

/// The point (a, b) whose dual is l.
Point point_form(const Line& l);

Line line_through(const Point& p, const Point& q);

Point intersect(const Line& l1, const Line& l2);

/// True iff the segments meet in a single point interior to both.
bool segments_properly_cross(const Segment& s1, const Segment& s2);

}  // namespace kset
