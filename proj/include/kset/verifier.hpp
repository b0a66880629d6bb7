#pragma once

// Runs the whole pipeline for one (instance, k) and checks every step of the
// counting argument as a separate exact verdict.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kset/arrangement.hpp"
#include "kset/generate.hpp"
#include "kset/instance.hpp"
#include "kset/primal_ksets.hpp"

namespace kset {

struct Verdict {
  std::string name;
  Rat lhs;
  Rat rhs;
  bool holds = false;
};

// Verdict names, in report order.
namespace verdict {
inline constexpr const char* kGraphEdges = "I1_t_equals_V_k-1";
inline constexpr const char* kLevelVertices = "I2_level_vertices_equal_V_k_union_V_k-1";
inline constexpr const char* kKSetsAbove = "I3_ksets_above_equals_V_k-1_plus_1";
inline constexpr const char* kKSetsBelow = "I3_ksets_below_equals_V_n-k-1_plus_1";
inline constexpr const char* kChainCount = "I4_chain_count";
inline constexpr const char* kConcavity = "I4_concavity";
inline constexpr const char* kTurnPartition = "I4_turn_partition";
inline constexpr const char* kEdgeCover = "I4_edge_cover";
inline constexpr const char* kChainCrossings = "I5_chain_crossings_equal_sum_V_j_below_k-1";
inline constexpr const char* kCrossingsToTangents = "I6_x_le_tangents";
inline constexpr const char* kTangentsToCrossings = "I6_tangents_le_chain_crossings";
inline constexpr const char* kBelowLevel = "I7_below_level_le_nk";
inline constexpr const char* kCrossingLemma = "I8_crossing_lemma";
inline constexpr const char* kBound = "I9_t_cubed_le_64_n_cubed_k";
inline constexpr const char* kImplication = "bound_implied_by_chain_or_easy_case";
}  // namespace verdict

struct Report {
  int n = 0;
  int k = 0;
  std::size_t t = 0;
  std::size_t x = 0;
  std::size_t tangents = 0;
  std::size_t chain_crossings = 0;
  std::size_t below_level = 0;
  std::size_t nk = 0;
  std::size_t ksets_above = 0;
  std::size_t ksets_below = 0;
  std::vector<Verdict> verdicts;
  bool bound_ok = false;
  bool easy_case = false;

  bool crossing_lemma_applicable = false;
  /// Module errors caught while checking (TangentViolation, ChargeFailure, ...).
  std::vector<std::string> errors;

  bool all_hold() const;
  const Verdict& verdict(const std::string& name) const;
};

/// Shares the arrangement and the primal oracle across k.
class Verifier {
 public:
  explicit Verifier(const Instance& inst);

  const Instance& instance() const { return inst_; }
  const Arrangement& arrangement() const { return arr_; }
  const PrimalOracle& oracle() const { return oracle_; }

  /// 1 <= k <= n-1, otherwise BadK. A false verdict is data, not an error.
  Report verify(int k) const;
  std::vector<Report> verify_all() const;

 private:
  Instance inst_;
  Arrangement arr_;
  PrimalOracle oracle_;
};

Report verify_instance(const Instance& inst, int k);

struct SweepConfig {
  int n = 10;
  std::optional<int> k;  // nullopt = every k in [1, n-1]
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  Shape shape = Shape::Uniform;
  std::int64_t range = 1000;
};

struct TrialResult {
  std::size_t trial = 0;
  std::uint64_t seed = 0;
  int n = 0;
  int k = 0;
  std::size_t t = 0;
  std::size_t x = 0;
  bool bound_ok = false;
  bool easy_case = false;
  bool crossing_lemma_applicable = false;
  std::size_t ksets_total = 0;  // above + below
};

struct SweepFailure {
  std::size_t trial = 0;
  int k = 0;
  std::string what;
};

struct SweepSummary {
  SweepConfig config;
  std::vector<TrialResult> results;
  std::size_t max_t = 0;
  std::size_t max_directed_kset = 0;
  std::size_t max_total_kset = 0;
  std::size_t easy_case_count = 0;
  std::size_t crossing_lemma_applicable = 0;
  std::size_t crossing_lemma_held = 0;
  std::vector<SweepFailure> failures;
  std::vector<SweepFailure> skipped;  // generation gave up
};

/// Deterministic for a fixed config. Failed verdicts are collected, never
/// thrown.
SweepSummary sweep(const SweepConfig& config);

}  // namespace kset
