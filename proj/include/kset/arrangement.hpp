#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "kset/geom.hpp"
#include "kset/instance.hpp"

namespace kset {

struct ArrVertex {
  Point location;
  std::pair<int, int> line_pair;  // first < second
  int below_count = 0;            // lines other than the pair strictly below
};

/// All pairwise intersections of a set of lines with distinct slopes and no
/// three concurrent, each classified by strict below-count. Vertices are
/// sorted by (x, y).
class Arrangement {
 public:
  explicit Arrangement(std::vector<Line> lines);

  int n() const { return static_cast<int>(lines_.size()); }
  const std::vector<Line>& lines() const { return lines_; }
  const std::vector<ArrVertex>& vertices() const { return vertices_; }
  const ArrVertex& vertex(int v) const { return vertices_[v]; }

  /// Index of the vertex where lines i and j meet.
  int vertex_of(int i, int j) const;

  /// Vertices on line i, sorted by x.
  const std::vector<int>& vertices_on_line(int i) const { return on_line_[i]; }

  /// Position of vertex v inside vertices_on_line(line).
  int position_on_line(int v, int line) const;

  /// |V_j| for j = 0 .. n-2.
  std::vector<std::size_t> class_sizes() const;

  /// Line indices ordered by slope, largest first. At x = -inf this is the
  /// bottom-to-top order.
  std::vector<int> lines_by_slope_desc() const;

 private:
  std::vector<Line> lines_;
  std::vector<ArrVertex> vertices_;
  std::vector<int> pair_to_vertex_;            // i*n + j
  std::vector<std::vector<int>> on_line_;
  std::vector<std::pair<int, int>> position_;  // per vertex: slot on first / second line
};

/// Duals of the instance points, same indexing.
Arrangement build_arrangement(const Instance& inst);

/// Number of lines strictly below p, skipping up to two excluded indices.
int strict_below_count(std::span<const Line> lines, const Point& p, int skip_a = -1, int skip_b = -1);

/// The k-level as an x-monotone walk: edge_lines[i] carries the edge that ends
/// at vertex_seq[i] (the last edge runs to +inf).
struct Level {
  int k = 0;
  std::vector<int> vertex_seq;
  std::vector<int> edge_lines;
};

/// 0 <= k <= n-1. Every edge is certified by recounting at a sample point.
Level extract_k_level(const Arrangement& arr, int k);

struct LevelProfile {
  std::vector<std::size_t> class_sizes;  // |V_j|
  std::size_t below_level = 0;           // sum_{j <= k-1} |V_j|
  std::size_t nk = 0;
};

LevelProfile level_profile(const Arrangement& arr, int k);

/// A maximal open piece of one line between consecutive vertices on it.
/// from_vertex / to_vertex are -1 for the unbounded ends.
struct ArrEdge {
  int line = 0;
  int from_vertex = -1;
  int to_vertex = -1;
  int below_count = 0;
};

/// Interior sample point of the edge of `line` between the given vertices.
Point edge_sample_point(const Arrangement& arr, int line, int from_vertex, int to_vertex);

/// Every edge of the arrangement, with below-counts measured at sample points.
std::vector<ArrEdge> arrangement_edges(const Arrangement& arr);

}  // namespace kset
