#include "kset/primal_ksets.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace kset {

const char* to_string(Side side) { return side == Side::Above ? "above" : "below"; }


PrimalOracle::PrimalOracle(const Instance& inst) : n_(inst.n()), above_(inst.n() * inst.n()) {
  const auto& pts = inst.points();
  for (int i = 0; i < n_; ++i) {
    for (int j = i + 1; j < n_; ++j) {
      // orient > 0 with p.x < q.x means r is above the line pq
      const bool forward = pts[i].x < pts[j].x;
      const Point& p = forward ? pts[i] : pts[j];
      const Point& q = forward ? pts[j] : pts[i];
      IndexSet& up = above_[i * n_ + j];
      for (int r = 0; r < n_; ++r) {
        if (r == i || r == j) continue;
        if (orient(p, q, pts[r]) > 0) up.push_back(r);
      }
    }
  }
}

const IndexSet& PrimalOracle::above(int i, int j) const {
  if (i > j) std::swap(i, j);
  return above_[i * n_ + j];
}

KSetFamily PrimalOracle::enumerate(int k, Side side) const {
  if (k < 1 || k > n_ - 1) throw BadK(k, 1, n_ - 1);
  std::set<IndexSet> found;
  IndexSet strict;
  for (int i = 0; i < n_; ++i) {
    for (int j = i + 1; j < n_; ++j) {
      const IndexSet& up = above_[i * n_ + j];
      if (side == Side::Above) {
        strict = up;
      } else {
        strict.clear();
        auto it = up.begin();
        for (int r = 0; r < n_; ++r) {
          if (r == i || r == j) continue;
          if (it != up.end() && *it == r) {
            ++it;
            continue;
          }
          strict.push_back(r);
        }
      }
      const int s = static_cast<int>(strict.size());
      auto add = [&](std::initializer_list<int> extra) {
        IndexSet set = strict;
        set.insert(set.end(), extra);
        std::sort(set.begin(), set.end());
        found.insert(std::move(set));
      };
      if (s == k) add({});
      if (s + 1 == k) {
        add({i});
        add({j});
      }
      if (s + 2 == k) add({i, j});
    }
  }
  KSetFamily fam;
  fam.k = k;
  fam.side = side;
  fam.sets.assign(found.begin(), found.end());
  return fam;
}

std::size_t PrimalOracle::count(int k, Side side) const { return enumerate(k, side).sets.size(); }

std::size_t PrimalOracle::count_at_most(int k, Side side) const {
  if (k < 1 || k > n_ - 1) throw BadK(k, 1, n_ - 1);
  std::size_t total = 0;
  for (int j = 1; j <= k; ++j) total += count(j, side);
  return total;
}

std::size_t count_directed_ksets(const Instance& inst, int k, Side side) {
  return PrimalOracle(inst).count(k, side);
}

KSetFamily enumerate_directed_ksets(const Instance& inst, int k, Side side) {
  return PrimalOracle(inst).enumerate(k, side);
}

std::size_t count_at_most_k(const Instance& inst, int k, Side side) {
  return PrimalOracle(inst).count_at_most(k, side);
}

namespace {

// Line y = m*x + c. With U the points that must lie above and D the points
// that must lie below, for a fixed slope m the feasible offsets form the open
// interval (max_D (y - m x), min_U (y - m x)). Its width g(m) is concave and
// piecewise linear in m with breakpoints at slopes of pairs inside U or
// inside D, so a positive width exists iff it is positive at a breakpoint or
// g increases along one of the two unbounded tails.
Rat gap(const std::vector<Point>& up, const std::vector<Point>& down, const Rat& m) {
  Rat lo = down.front().y - m * down.front().x;
  for (const auto& p : down) {
    Rat v = p.y - m * p.x;
    if (v > lo) lo = v;
  }
  Rat hi = up.front().y - m * up.front().x;
  for (const auto& p : up) {
    Rat v = p.y - m * p.x;
    if (v < hi) hi = v;
  }
  return Rat(hi - lo);
}

void add_pair_slopes(const std::vector<Point>& group, std::vector<Rat>& out) {
  for (std::size_t i = 0; i < group.size(); ++i)
    for (std::size_t j = i + 1; j < group.size(); ++j)
      if (group[i].x != group[j].x) out.push_back((group[j].y - group[i].y) / (group[j].x - group[i].x));
}

}  // namespace

bool is_realizable(const Instance& inst, const IndexSet& subset, Side side) {
  std::vector<bool> in(inst.n(), false);
  for (int i : subset) {
    if (i < 0 || i >= inst.n()) return false;
    in[i] = true;
  }
  std::vector<Point> chosen, rest;
  for (int i = 0; i < inst.n(); ++i) (in[i] ? chosen : rest).push_back(inst[i]);
  if (chosen.empty() || rest.empty()) return true;  // a far-away line works
  const auto& up = side == Side::Above ? chosen : rest;
  const auto& down = side == Side::Above ? rest : chosen;

  std::vector<Rat> slopes;
  add_pair_slopes(up, slopes);
  add_pair_slopes(down, slopes);
  if (slopes.empty()) slopes.push_back(Rat(0));
  std::sort(slopes.begin(), slopes.end());

  for (const auto& m : slopes)
    if (gap(up, down, m) > 0) return true;
  const Rat& first = slopes.front();
  const Rat& last = slopes.back();
  if (gap(up, down, Rat(last + 1)) > gap(up, down, last)) return true;
  if (gap(up, down, Rat(first - 1)) > gap(up, down, first)) return true;
  return false;
}

}  // namespace kset
