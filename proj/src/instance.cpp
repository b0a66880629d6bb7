#include "kset/instance.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace kset {

std::string PositionViolation::describe() const {
  std::ostringstream os;
  os << (kind == Kind::SharedX ? "shared x-coordinate:" : "collinear:");
  for (int i : indices) os << ' ' << i;
  return os.str();
}

std::vector<PositionViolation> validate_general_position(std::span<const Point> points) {
  std::vector<PositionViolation> out;
  const int n = static_cast<int>(points.size());

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int i, int j) {
    if (points[i].x != points[j].x) return points[i].x < points[j].x;
    return i < j;
  });
  std::vector<std::vector<int>> shared;
  for (int s = 0; s + 1 < n; ++s) {
    if (points[order[s]].x != points[order[s + 1]].x) continue;
    // every pair inside a run of equal x
    int e = s + 1;
    while (e + 1 < n && points[order[e + 1]].x == points[order[s]].x) ++e;
    for (int a = s; a <= e; ++a)
      for (int b = a + 1; b <= e; ++b)
        shared.push_back({std::min(order[a], order[b]), std::max(order[a], order[b])});
    s = e;
  }
  std::sort(shared.begin(), shared.end());
  for (auto& pair : shared) out.push_back({PositionViolation::Kind::SharedX, std::move(pair)});

  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        if (orient(points[i], points[j], points[k]) == 0)
          out.push_back({PositionViolation::Kind::Collinear, {i, j, k}});
  return out;
}

InvalidInstance::InvalidInstance(std::string what, std::vector<PositionViolation> violations)
    : std::invalid_argument(std::move(what)), violations_(std::move(violations)) {}

namespace {

std::string summarize(const std::vector<PositionViolation>& v) {
  std::ostringstream os;
  os << "points not in general position (" << v.size() << " violation" << (v.size() == 1 ? "" : "s")
     << "): " << v.front().describe();
  return os.str();
}

}  // namespace

Instance::Instance(std::vector<Point> points) : points_(std::move(points)) {
  if (points_.size() < 2) throw InvalidInstance("an instance needs at least 2 points", {});
  auto violations = validate_general_position(points_);
  if (!violations.empty()) {
    std::string msg = summarize(violations);
    throw InvalidInstance(std::move(msg), std::move(violations));
  }
}

BadK::BadK(int k, int lo, int hi)
    : std::invalid_argument("k = " + std::to_string(k) + " outside [" + std::to_string(lo) + ", " +
                            std::to_string(hi) + "]") {}

Instance reflect(const Instance& inst) {
  std::vector<Point> pts;
  pts.reserve(inst.points().size());
  for (const auto& p : inst.points()) pts.push_back(Point{-p.x, -p.y});
  return Instance(std::move(pts));
}

}  // namespace kset
