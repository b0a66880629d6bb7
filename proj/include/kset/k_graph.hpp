#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "kset/arrangement.hpp"
#include "kset/chains.hpp"
#include "kset/instance.hpp"

namespace kset {

struct GraphEdge {
  int p = 0;  // p < q
  int q = 0;
  Segment segment;
  int dual_vertex = -1;  // arrangement vertex of the edge's line, -1 if not looked up
};

/// Straight-line graph on the instance: p-q is an edge iff exactly k-1 points
/// lie strictly above the line pq. Under y = ax - b duality this is the set
/// of arrangement vertices with k-1 lines strictly below.
struct KGraph {
  int k = 0;
  std::vector<GraphEdge> edges;

  std::size_t t() const { return edges.size(); }
};

class CrossCheckMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Primal construction only; dual_vertex left at -1.
KGraph build_primal_graph(const Instance& inst, int k);

/// Primal construction, then a mandatory dual cross-check against V_{k-1}.
/// Throws CrossCheckMismatch if the two disagree.
KGraph build_G(const Instance& inst, const Arrangement& arr, int k);
KGraph build_G(const Instance& inst, int k);

struct CrossingRecord {
  int edge_a = 0;  // edge indices, edge_a < edge_b
  int edge_b = 0;
  Point at;
  Line dual_tangent;
};

struct CrossingCount {
  std::size_t x = 0;
  std::vector<CrossingRecord> records;
};

CrossingCount crossing_number(std::span<const Segment> segments);
CrossingCount crossing_number(const KGraph& g);

struct CrossingLemmaCheck {
  bool applicable = false;  // t > 4n
  Rat threshold;            // t^3 / (64 n^2)
  bool holds = true;
};

CrossingLemmaCheck crossing_lemma_check(std::size_t t, std::size_t n, std::size_t x);

class TangentViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The dual of a crossing point is a line through both edges' dual
/// vertices; checks it is a strict common tangent of the two chains those
/// vertices turn on.
Tangent crossing_to_tangent(const CrossingRecord& record, const KGraph& g, const Arrangement& arr,
                            const ChainSet& chains);

}  // namespace kset
