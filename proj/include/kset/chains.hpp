#pragma once

// Concave-chain decomposition of the arrangement region below the k-level,
// with chain crossings, strict common tangents, and tangent charging.

#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "kset/arrangement.hpp"

namespace kset {

/// Interval endpoints; nullopt stands for -inf (from) or +inf (to).
struct ChainPiece {
  int line = 0;
  std::optional<Rat> x_from;
  std::optional<Rat> x_to;
};

/// turns[i] joins pieces[i] and pieces[i + 1]; piece slopes strictly decrease.
struct Chain {
  int id = 0;
  std::vector<ChainPiece> pieces;
  std::vector<int> turns;
};

struct ChainSet {
  int k = 0;
  std::vector<Chain> chains;  // chains[id - 1]
  /// Crossing vertices per chain pair (lower id first), in sweep order.
  std::map<std::pair<int, int>, std::vector<int>> crossings;
  /// Turn vertex -> (chain id, index into that chain's turns).
  std::map<int, std::pair<int, int>> turn_owner;

  const Chain& chain(int id) const { return chains.at(id - 1); }
  std::size_t total_crossings() const;
};

/// Sweep over the vertices in (x, y) order. Chains start on the k largest
/// slopes (chain 1 on the largest); at a vertex below level k-1 the two
/// chains cross, at a V_{k-1} vertex the chain on the steeper line turns.
ChainSet decompose_chains(const Arrangement& arr, int k);

/// Vertices where chains i and j exchange vertical order. Requires i < j.
std::vector<int> chain_pair_crossings(const ChainSet& cs, int i, int j);

struct Tangent {
  Line line;
  int chain_a = 0;
  int vertex_a = 0;
  int chain_b = 0;
  int vertex_b = 0;
  Rat span_lo;
  Rat span_hi;
};

/// Strict common tangent test: `line` passes through turn vertices
/// va of chain_a and vb of chain_b, its slope lies strictly inside both
/// turn slope windows, and it is strictly above every other turn of both.
bool is_strict_tangent(const Arrangement& arr, const ChainSet& cs, int chain_a, int va, int chain_b, int vb,
                       const Line& line);

std::vector<Tangent> common_tangents(const Arrangement& arr, const ChainSet& cs, int i, int j);

/// True iff the open x-spans are pairwise disjoint.
bool tangent_spans_disjoint(std::vector<Tangent> tangents);

class ChargeFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Charges each tangent of the pair to the smallest-x crossing strictly below
/// it and strictly inside its span. Throws ChargeFailure when some tangent
/// has no eligible crossing or a crossing would be charged twice.
std::vector<std::pair<Tangent, int>> charge_tangents(const Arrangement& arr, const ChainSet& cs, int i, int j);

/// Arrangement edges making up one chain piece, in x order.
std::vector<ArrEdge> piece_edges(const Arrangement& arr, const ChainPiece& piece);

}  // namespace kset
