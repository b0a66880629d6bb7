#include "kset/arrangement.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>


namespace kset {

int strict_below_count(std::span<const Line> lines, const Point& p, int skip_a, int skip_b) {
  int count = 0;
  for (int i = 0; i < static_cast<int>(lines.size()); ++i) {
    if (i == skip_a || i == skip_b) continue;
    if (lines[i].at(p.x) < p.y) ++count;
  }
  return count;
}

Arrangement::Arrangement(std::vector<Line> lines) : lines_(std::move(lines)) {
  const int n = this->n();
  std::vector<ArrVertex> raw;
  raw.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Point at = intersect(lines_[i], lines_[j]);
      int below = strict_below_count(lines_, at, i, j);
      raw.push_back(ArrVertex{std::move(at), {i, j}, below});
    }
  std::sort(raw.begin(), raw.end(), [](const ArrVertex& u, const ArrVertex& v) {
    if (u.location != v.location) return u.location < v.location;
    return u.line_pair < v.line_pair;
  });
  for (std::size_t v = 1; v < raw.size(); ++v)
    if (raw[v].location == raw[v - 1].location)
      throw GeometryError("three or more lines pass through one point");
  vertices_ = std::move(raw);

  pair_to_vertex_.assign(static_cast<std::size_t>(n) * n, -1);
  on_line_.assign(n, {});
  for (int v = 0; v < static_cast<int>(vertices_.size()); ++v) {
    auto [i, j] = vertices_[v].line_pair;
    pair_to_vertex_[i * n + j] = v;
    pair_to_vertex_[j * n + i] = v;
    // (x, y) order restricted to one line is x order
    on_line_[i].push_back(v);
    on_line_[j].push_back(v);
  }
  position_.assign(vertices_.size(), {-1, -1});
  for (int line = 0; line < n; ++line)
    for (int slot = 0; slot < static_cast<int>(on_line_[line].size()); ++slot) {
      int v = on_line_[line][slot];
      if (vertices_[v].line_pair.first == line)
        position_[v].first = slot;
      else
        position_[v].second = slot;
    }
}

int Arrangement::vertex_of(int i, int j) const {
  if (i == j || i < 0 || j < 0 || i >= n() || j >= n()) throw std::out_of_range("no vertex for line pair");
  return pair_to_vertex_[i * n() + j];
}

int Arrangement::position_on_line(int v, int line) const {
  const auto& pair = vertices_[v].line_pair;
  if (pair.first == line) return position_[v].first;
  if (pair.second == line) return position_[v].second;
  throw std::out_of_range("vertex is not on line");
}

std::vector<std::size_t> Arrangement::class_sizes() const {
  std::vector<std::size_t> sizes(std::max(n() - 1, 1), 0);
  for (const auto& v : vertices_) ++sizes[v.below_count];
  return sizes;
}

std::vector<int> Arrangement::lines_by_slope_desc() const {
  std::vector<int> order(n());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int i, int j) { return lines_[i].a > lines_[j].a; });
  return order;
}

Arrangement build_arrangement(const Instance& inst) {
  std::vector<Line> lines;
  lines.reserve(inst.points().size());
  for (const auto& p : inst.points()) lines.push_back(dualize_point(p));
  return Arrangement(std::move(lines));
}

Point edge_sample_point(const Arrangement& arr, int line, int from_vertex, int to_vertex) {
  Rat x;
  if (from_vertex >= 0 && to_vertex >= 0)
    x = (arr.vertex(from_vertex).location.x + arr.vertex(to_vertex).location.x) / 2;
  else if (from_vertex >= 0)
    x = arr.vertex(from_vertex).location.x + 1;
  else if (to_vertex >= 0)
    x = arr.vertex(to_vertex).location.x - 1;
  else
    x = 0;
  Rat y = arr.lines()[line].at(x);
  return Point{x, y};
}

Level extract_k_level(const Arrangement& arr, int k) {
  const int n = arr.n();
  if (k < 0 || k > n - 1) throw BadK(k, 0, n - 1);
  const auto order = arr.lines_by_slope_desc();

  Level level;
  level.k = k;
  int line = order[k];
  int at = -1;  // current vertex, -1 = x at -inf
  for (;;) {
    const auto& on = arr.vertices_on_line(line);
    const int slot = at < 0 ? 0 : arr.position_on_line(at, line) + 1;
    const int next = slot < static_cast<int>(on.size()) ? on[slot] : -1;

    Point sample = edge_sample_point(arr, line, at, next);
    if (strict_below_count(arr.lines(), sample, line) != k)
      throw std::logic_error("k-level edge failed below-count certification");
    level.edge_lines.push_back(line);
    if (next < 0) break;

    level.vertex_seq.push_back(next);
    const auto& pair = arr.vertex(next).line_pair;
    line = pair.first == line ? pair.second : pair.first;
    at = next;
  }
  if (line != order[n - 1 - k]) throw std::logic_error("k-level ended on the wrong line");
  return level;
}

LevelProfile level_profile(const Arrangement& arr, int k) {
  const int n = arr.n();
  if (k < 1 || k > n - 1) throw BadK(k, 1, n - 1);
  LevelProfile prof;
  prof.class_sizes = arr.class_sizes();
  for (int j = 0; j <= k - 1 && j < static_cast<int>(prof.class_sizes.size()); ++j)
    prof.below_level += prof.class_sizes[j];
  prof.nk = static_cast<std::size_t>(n) * static_cast<std::size_t>(k);
  return prof;
}

std::vector<ArrEdge> arrangement_edges(const Arrangement& arr) {
  std::vector<ArrEdge> edges;
  for (int line = 0; line < arr.n(); ++line) {
    const auto& on = arr.vertices_on_line(line);
    for (int slot = 0; slot <= static_cast<int>(on.size()); ++slot) {
      const int from = slot == 0 ? -1 : on[slot - 1];
      const int to = slot == static_cast<int>(on.size()) ? -1 : on[slot];
      Point sample = edge_sample_point(arr, line, from, to);
      edges.push_back(ArrEdge{line, from, to, strict_below_count(arr.lines(), sample, line)});
    }
  }
  return edges;
}

}  // namespace kset
