#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "kset/geom.hpp"

namespace kset {

struct PositionViolation {
  enum class Kind { SharedX, Collinear };
  Kind kind;
  std::vector<int> indices;

  std::string describe() const;
};

/// Every shared-x pair and collinear triple, in index order. Empty means the
/// points are in general position.
std::vector<PositionViolation> validate_general_position(std::span<const Point> points);

class InvalidInstance : public std::invalid_argument {
 public:
  InvalidInstance(std::string what, std::vector<PositionViolation> violations);

  const std::vector<PositionViolation>& violations() const { return violations_; }

 private:
  std::vector<PositionViolation> violations_;
};

/// A validated planar point set: n >= 2, distinct x-coordinates, no three
/// points collinear. Point labels are indices.
class Instance {
 public:
  explicit Instance(std::vector<Point> points);

  const std::vector<Point>& points() const { return points_; }
  const Point& operator[](std::size_t i) const { return points_[i]; }
  int n() const { return static_cast<int>(points_.size()); }

 private:
  std::vector<Point> points_;
};

/// k outside the range an operation accepts.
class BadK : public std::invalid_argument {
 public:
  BadK(int k, int lo, int hi);
};

/// Point reflection (x, y) -> (-x, -y); swaps the roles of above and below.
Instance reflect(const Instance& inst);

}  // namespace kset
