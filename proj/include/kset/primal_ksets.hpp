#pragma once

// Brute-force k-set enumeration in the primal plane. This is the oracle the
// dual pipeline is checked against, so it never touches the arrangement.

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "kset/instance.hpp"

namespace kset {

enum class Side { Above, Below };

const char* to_string(Side side);

/// Sorted point indices.
using IndexSet = std::vector<int>;

struct KSetFamily {
  int k = 0;
  Side side = Side::Above;
  std::vector<IndexSet> sets;  // lexicographically sorted, distinct
};

/// Precomputes, for every pair of points, which points lie strictly above the
/// line through them. Each directed k-set is then recovered by perturbing
/// some pair line: a k-set line translated toward its set until it hits p,
/// then rotated about p until it hits q, leaves the set equal to the points
/// strictly on that side plus p, or plus both p and q.
class PrimalOracle {
 public:
  explicit PrimalOracle(const Instance& inst);

  int n() const { return n_; }

  /// 1 <= k <= n-1, otherwise BadK.
  KSetFamily enumerate(int k, Side side) const;
  std::size_t count(int k, Side side) const;
  std::size_t count_at_most(int k, Side side) const;

  /// Points strictly above the line through points i and j.
  const IndexSet& above(int i, int j) const;

 private:
  int n_;
  std::vector<IndexSet> above_;  // indexed i*n + j, i < j
};

std::size_t count_directed_ksets(const Instance& inst, int k, Side side);
KSetFamily enumerate_directed_ksets(const Instance& inst, int k, Side side);
std::size_t count_at_most_k(const Instance& inst, int k, Side side);

/// Exact check that some non-vertical line has exactly `subset` strictly on
/// `side` and every other point strictly on the opposite side.
bool is_realizable(const Instance& inst, const IndexSet& subset, Side side);

}  // namespace kset
