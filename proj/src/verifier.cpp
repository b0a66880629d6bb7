#include "kset/verifier.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <tuple>

#include "kset/chains.hpp"
#include "kset/k_graph.hpp"

namespace kset {

namespace {

Rat count(std::size_t v) { return Rat(static_cast<unsigned long>(v)); }

Verdict compare_eq(const char* name, std::size_t lhs, std::size_t rhs, bool extra = true) {
  return Verdict{name, count(lhs), count(rhs), lhs == rhs && extra};
}

Verdict compare_le(const char* name, std::size_t lhs, std::size_t rhs, bool extra = true) {
  return Verdict{name, count(lhs), count(rhs), lhs <= rhs && extra};
}

using EdgeKey = std::tuple<int, int, int>;

EdgeKey key(const ArrEdge& e) { return {e.line, e.from_vertex, e.to_vertex}; }

}  // namespace

bool Report::all_hold() const {
  return std::all_of(verdicts.begin(), verdicts.end(), [](const Verdict& v) { return v.holds; });
}

const Verdict& Report::verdict(const std::string& name) const {
  for (const auto& v : verdicts)
    if (v.name == name) return v;
  throw std::out_of_range("no verdict named " + name);
}

Verifier::Verifier(const Instance& inst) : inst_(inst), arr_(build_arrangement(inst)), oracle_(inst) {}

Report Verifier::verify(int k) const {
  const int n = inst_.n();
  if (k < 1 || k > n - 1) throw BadK(k, 1, n - 1);

  Report r;
  r.n = n;
  r.k = k;
  const auto sizes = arr_.class_sizes();
  auto V = [&](int j) -> std::size_t { return j >= 0 && j < static_cast<int>(sizes.size()) ? sizes[j] : 0; };

  // I1: primal graph against V_{k-1}
  KGraph g = build_primal_graph(inst_, k);
  r.t = g.t();
  bool dual_agrees = true;
  try {
    g = build_G(inst_, arr_, k);
  } catch (const CrossCheckMismatch& e) {
    dual_agrees = false;
    r.errors.push_back(e.what());
  }
  r.verdicts.push_back(compare_eq(verdict::kGraphEdges, r.t, V(k - 1), dual_agrees));

  // I2
  const Level level = extract_k_level(arr_, k);
  std::set<int> on_level(level.vertex_seq.begin(), level.vertex_seq.end());
  std::set<int> expected_level;
  for (int v = 0; v < static_cast<int>(arr_.vertices().size()); ++v) {
    const int j = arr_.vertex(v).below_count;
    if (j == k || j == k - 1) expected_level.insert(v);
  }
  r.verdicts.push_back(compare_eq(verdict::kLevelVertices, level.vertex_seq.size(), V(k) + V(k - 1),
                                  on_level == expected_level && on_level.size() == level.vertex_seq.size()));

  // I3: primal oracle against the dual classification
  r.ksets_above = oracle_.count(k, Side::Above);
  r.ksets_below = oracle_.count(k, Side::Below);
  r.verdicts.push_back(compare_eq(verdict::kKSetsAbove, r.ksets_above, V(k - 1) + 1));
  r.verdicts.push_back(compare_eq(verdict::kKSetsBelow, r.ksets_below, V(n - k - 1) + 1));

  // I4
  const ChainSet cs = decompose_chains(arr_, k);
  {
    const auto order = arr_.lines_by_slope_desc();
    bool starts_ok = true;
    for (int id = 1; id <= static_cast<int>(cs.chains.size()); ++id)
      starts_ok = starts_ok && cs.chain(id).pieces.front().line == order[id - 1];
    r.verdicts.push_back(compare_eq(verdict::kChainCount, cs.chains.size(), static_cast<std::size_t>(k), starts_ok));

    std::size_t bad_bends = 0;
    for (const auto& c : cs.chains)
      for (std::size_t p = 0; p + 1 < c.pieces.size(); ++p) {
        if (!(arr_.lines()[c.pieces[p + 1].line].a < arr_.lines()[c.pieces[p].line].a)) ++bad_bends;
      }
    r.verdicts.push_back(compare_eq(verdict::kConcavity, bad_bends, 0));

    std::multiset<int> turns;
    for (const auto& c : cs.chains) turns.insert(c.turns.begin(), c.turns.end());
    std::multiset<int> expected_turns;
    for (int v = 0; v < static_cast<int>(arr_.vertices().size()); ++v)
      if (arr_.vertex(v).below_count == k - 1) expected_turns.insert(v);
    r.verdicts.push_back(compare_eq(verdict::kTurnPartition, turns.size(), V(k - 1), turns == expected_turns));

    std::vector<EdgeKey> covered;
    bool pieces_ok = true;
    for (const auto& c : cs.chains)
      for (const auto& piece : c.pieces) {
        try {
          for (const auto& e : piece_edges(arr_, piece)) covered.push_back(key(e));
        } catch (const std::logic_error& e) {
          pieces_ok = false;
          r.errors.push_back(e.what());
        }
      }
    std::vector<EdgeKey> below;
    for (const auto& e : arrangement_edges(arr_))
      if (e.below_count <= k - 1) below.push_back(key(e));
    std::sort(covered.begin(), covered.end());
    std::sort(below.begin(), below.end());
    r.verdicts.push_back(compare_eq(verdict::kEdgeCover, covered.size(), below.size(), pieces_ok && covered == below));
  }

  // I5
  r.chain_crossings = cs.total_crossings();
  std::size_t strictly_below = 0;
  for (int j = 0; j <= k - 2; ++j) strictly_below += V(j);
  r.verdicts.push_back(compare_eq(verdict::kChainCrossings, r.chain_crossings, strictly_below));

  // I6: crossings -> tangents -> chain crossings
  const CrossingCount crossings = crossing_number(g);
  r.x = crossings.x;

  std::set<std::pair<int, int>> tangent_pairs;
  bool charging_ok = true;
  bool spans_ok = true;
  for (int i = 1; i <= k; ++i)
    for (int j = i + 1; j <= k; ++j) {
      auto tangents = common_tangents(arr_, cs, i, j);
      r.tangents += tangents.size();
      for (const auto& t : tangents) tangent_pairs.insert({t.vertex_a, t.vertex_b});
      if (!tangent_spans_disjoint(tangents)) {
        spans_ok = false;
        r.errors.push_back("tangent spans of chains " + std::to_string(i) + " and " + std::to_string(j) + " overlap");
      }
      try {
        charge_tangents(arr_, cs, i, j);
      } catch (const ChargeFailure& e) {
        charging_ok = false;
        r.errors.push_back(e.what());
      }
    }

  bool mapping_ok = dual_agrees;
  if (dual_agrees) {
    std::set<std::pair<int, int>> mapped;
    for (const auto& rec : crossings.records) {
      try {
        Tangent t = crossing_to_tangent(rec, g, arr_, cs);
        if (!mapped.insert({t.vertex_a, t.vertex_b}).second) {
          mapping_ok = false;
          r.errors.push_back("two crossings map to the same tangent");
        }
        if (!tangent_pairs.count({t.vertex_a, t.vertex_b})) {
          mapping_ok = false;
          r.errors.push_back("crossing tangent missing from the common tangent list");
        }
      } catch (const TangentViolation& e) {
        mapping_ok = false;
        r.errors.push_back(e.what());
      }
    }
  }
  r.verdicts.push_back(compare_le(verdict::kCrossingsToTangents, r.x, r.tangents, mapping_ok));
  r.verdicts.push_back(compare_le(verdict::kTangentsToCrossings, r.tangents, r.chain_crossings, charging_ok && spans_ok));

  // I7
  const LevelProfile prof = level_profile(arr_, k);
  r.below_level = prof.below_level;
  r.nk = prof.nk;
  r.verdicts.push_back(compare_le(verdict::kBelowLevel, r.below_level, r.nk));

  // I8
  const CrossingLemmaCheck lemma = crossing_lemma_check(r.t, static_cast<std::size_t>(n), r.x);
  r.crossing_lemma_applicable = lemma.applicable;
  r.verdicts.push_back(Verdict{verdict::kCrossingLemma, count(r.x), lemma.threshold, lemma.holds});

  // I9, exact form of t <= 4 n k^(1/3)
  mpz_class tz(static_cast<unsigned long>(r.t));
  mpz_class nz(static_cast<unsigned long>(n));
  mpz_class lhs = tz * tz * tz;
  mpz_class rhs = 64 * nz * nz * nz * static_cast<unsigned long>(k);
  r.bound_ok = lhs <= rhs;
  r.easy_case = r.t <= 4 * static_cast<std::size_t>(n);
  r.verdicts.push_back(Verdict{verdict::kBound, Rat(lhs), Rat(rhs), r.bound_ok});

  // (I6 and I7 and I8) or easy case must give the bound
  auto holds = [&](const char* name) { return r.verdict(name).holds; };
  const bool premise = (holds(verdict::kCrossingsToTangents) && holds(verdict::kTangentsToCrossings) &&
                        holds(verdict::kBelowLevel) && holds(verdict::kCrossingLemma)) ||
                       r.easy_case;
  r.verdicts.push_back(Verdict{verdict::kImplication, Rat(premise ? 1 : 0), Rat(r.bound_ok ? 1 : 0),
                               !premise || r.bound_ok});
  return r;
}

std::vector<Report> Verifier::verify_all() const {
  std::vector<Report> out;
  for (int k = 1; k <= inst_.n() - 1; ++k) out.push_back(verify(k));
  return out;
}

Report verify_instance(const Instance& inst, int k) { return Verifier(inst).verify(k); }

SweepSummary sweep(const SweepConfig& config) {
  SweepSummary s;
  s.config = config;
  Rng seeds(config.seed);
  for (std::size_t trial = 0; trial < config.trials; ++trial) {
    const std::uint64_t trial_seed = seeds.next();
    std::optional<Instance> inst;
    try {
      inst.emplace(generate_instance(GenSpec{config.shape, config.n, config.range, trial_seed}));
    } catch (const std::exception& e) {
      s.skipped.push_back(SweepFailure{trial, config.k.value_or(0), e.what()});
      continue;
    }
    const Verifier verifier(*inst);
    const int k_lo = config.k.value_or(1);
    const int k_hi = config.k.value_or(config.n - 1);
    for (int k = k_lo; k <= k_hi; ++k) {
      Report r;
      try {
        r = verifier.verify(k);
      } catch (const std::exception& e) {
        s.failures.push_back(SweepFailure{trial, k, e.what()});
        continue;
      }
      TrialResult tr{trial, trial_seed, r.n, r.k, r.t, r.x, r.bound_ok, r.easy_case, r.crossing_lemma_applicable,
                     r.ksets_above + r.ksets_below};
      s.max_t = std::max(s.max_t, r.t);
      s.max_directed_kset = std::max({s.max_directed_kset, r.ksets_above, r.ksets_below});
      s.max_total_kset = std::max(s.max_total_kset, tr.ksets_total);
      if (r.easy_case) ++s.easy_case_count;
      if (r.crossing_lemma_applicable) {
        ++s.crossing_lemma_applicable;
        if (r.verdict(verdict::kCrossingLemma).holds) ++s.crossing_lemma_held;
      }
      for (const auto& v : r.verdicts)
        if (!v.holds) s.failures.push_back(SweepFailure{trial, k, v.name});
      s.results.push_back(tr);
    }
  }
  return s;
}

}  // namespace kset
