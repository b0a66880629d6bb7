#include "kset/chains.hpp"

#include <algorithm>
#include <set>
#include <string>


namespace kset {

std::size_t ChainSet::total_crossings() const {
  std::size_t total = 0;
  for (const auto& [pair, list] : crossings) total += list.size();
  return total;
}

ChainSet decompose_chains(const Arrangement& arr, int k) {
  const int n = arr.n();
  if (k < 1 || k > n - 1) throw BadK(k, 1, n - 1);

  ChainSet cs;
  cs.k = k;
  std::vector<int> chain_on(n, -1);
  const auto order = arr.lines_by_slope_desc();
  for (int id = 1; id <= k; ++id) {
    Chain c;
    c.id = id;
    c.pieces.push_back(ChainPiece{order[id - 1], std::nullopt, std::nullopt});
    cs.chains.push_back(std::move(c));
    chain_on[order[id - 1]] = id;
  }

  for (int v = 0; v < static_cast<int>(arr.vertices().size()); ++v) {
    const ArrVertex& vx = arr.vertex(v);
    const auto [l1, l2] = vx.line_pair;
    if (vx.below_count <= k - 2) {
      const int c1 = chain_on[l1];
      const int c2 = chain_on[l2];
      if (c1 < 0 || c2 < 0) throw std::logic_error("chain crossing on a line no chain occupies");
      cs.crossings[{std::min(c1, c2), std::max(c1, c2)}].push_back(v);
    } else if (vx.below_count == k - 1) {
      const bool first_steeper = arr.lines()[l1].a > arr.lines()[l2].a;
      const int steep = first_steeper ? l1 : l2;
      const int flat = first_steeper ? l2 : l1;
      const int id = chain_on[steep];
      if (id < 0 || chain_on[flat] >= 0) throw std::logic_error("chain turn at an unexpected vertex");
      Chain& c = cs.chains[id - 1];
      c.pieces.back().x_to = vx.location.x;
      c.pieces.push_back(ChainPiece{flat, vx.location.x, std::nullopt});
      cs.turn_owner[v] = {id, static_cast<int>(c.turns.size())};
      c.turns.push_back(v);
      chain_on[steep] = -1;
      chain_on[flat] = id;
    }
  }
  return cs;
}

std::vector<int> chain_pair_crossings(const ChainSet& cs, int i, int j) {
  if (i >= j) throw std::invalid_argument("chain pair must satisfy i < j");
  auto it = cs.crossings.find({i, j});
  if (it == cs.crossings.end()) return {};
  return it->second;
}

namespace {

bool inside_window(const Arrangement& arr, const Chain& c, int turn, const Rat& slope) {
  const Rat& in = arr.lines()[c.pieces[turn].line].a;
  const Rat& out = arr.lines()[c.pieces[turn + 1].line].a;
  return out < slope && slope < in;
}

bool strictly_above_turns(const Arrangement& arr, const Chain& c, int skip, const Line& line) {
  for (int v : c.turns) {
    if (v == skip) continue;
    const Point& p = arr.vertex(v).location;
    if (!(line.at(p.x) > p.y)) return false;
  }
  return true;
}

}  // namespace

bool is_strict_tangent(const Arrangement& arr, const ChainSet& cs, int chain_a, int va, int chain_b, int vb,
                       const Line& line) {
  if (chain_a == chain_b) return false;
  auto oa = cs.turn_owner.find(va);
  auto ob = cs.turn_owner.find(vb);
  if (oa == cs.turn_owner.end() || ob == cs.turn_owner.end()) return false;
  if (oa->second.first != chain_a || ob->second.first != chain_b) return false;
  const Chain& ca = cs.chain(chain_a);
  const Chain& cb = cs.chain(chain_b);
  if (side_of(line, arr.vertex(va).location) != 0 || side_of(line, arr.vertex(vb).location) != 0) return false;
  if (!inside_window(arr, ca, oa->second.second, line.a)) return false;
  if (!inside_window(arr, cb, ob->second.second, line.a)) return false;
  return strictly_above_turns(arr, ca, va, line) && strictly_above_turns(arr, cb, vb, line);
}

std::vector<Tangent> common_tangents(const Arrangement& arr, const ChainSet& cs, int i, int j) {
  if (i >= j) throw std::invalid_argument("chain pair must satisfy i < j");
  std::vector<Tangent> out;
  const Chain& ci = cs.chain(i);
  const Chain& cj = cs.chain(j);
  for (int u : ci.turns) {
    for (int w : cj.turns) {
      const Point& pu = arr.vertex(u).location;
      const Point& pw = arr.vertex(w).location;
      if (pu.x == pw.x) continue;
      Line line = line_through(pu, pw);
      if (!is_strict_tangent(arr, cs, i, u, j, w, line)) continue;
      Tangent t{line, i, u, j, w, pu.x, pw.x};
      if (t.span_hi < t.span_lo) std::swap(t.span_lo, t.span_hi);
      out.push_back(std::move(t));
    }
  }
  return out;
}

bool tangent_spans_disjoint(std::vector<Tangent> tangents) {
  std::sort(tangents.begin(), tangents.end(),
            [](const Tangent& s, const Tangent& t) { return s.span_lo < t.span_lo; });
  for (std::size_t i = 1; i < tangents.size(); ++i)
    if (tangents[i].span_lo < tangents[i - 1].span_hi) return false;
  return true;
}

std::vector<std::pair<Tangent, int>> charge_tangents(const Arrangement& arr, const ChainSet& cs, int i, int j) {
  auto tangents = common_tangents(arr, cs, i, j);
  const auto crossings = chain_pair_crossings(cs, i, j);
  std::vector<std::pair<Tangent, int>> charged;
  std::set<int> used;
  for (auto& t : tangents) {
    int pick = -1;
    for (int v : crossings) {
      const Point& p = arr.vertex(v).location;
      if (t.span_lo < p.x && p.x < t.span_hi && p.y < t.line.at(p.x)) {
        pick = v;
        break;
      }
    }
    if (pick < 0)
      throw ChargeFailure("no crossing of chains " + std::to_string(i) + " and " + std::to_string(j) +
                          " lies below a tangent inside its span");
    if (!used.insert(pick).second)
      throw ChargeFailure("crossing vertex " + std::to_string(pick) + " charged by two tangents");
    charged.emplace_back(std::move(t), pick);
  }
  return charged;
}

std::vector<ArrEdge> piece_edges(const Arrangement& arr, const ChainPiece& piece) {
  std::vector<int> cut;
  for (int v : arr.vertices_on_line(piece.line)) {
    const Rat& x = arr.vertex(v).location.x;
    if (piece.x_from && x < *piece.x_from) continue;
    if (piece.x_to && x > *piece.x_to) continue;
    cut.push_back(v);
  }
  if (piece.x_from && (cut.empty() || arr.vertex(cut.front()).location.x != *piece.x_from))
    throw std::logic_error("chain piece does not start at a vertex of its line");
  if (piece.x_to && (cut.empty() || arr.vertex(cut.back()).location.x != *piece.x_to))
    throw std::logic_error("chain piece does not end at a vertex of its line");
  std::vector<int> stops;
  if (!piece.x_from) stops.push_back(-1);
  stops.insert(stops.end(), cut.begin(), cut.end());
  if (!piece.x_to) stops.push_back(-1);
  std::vector<ArrEdge> edges;
  for (std::size_t s = 0; s + 1 < stops.size(); ++s) {
    Point sample = edge_sample_point(arr, piece.line, stops[s], stops[s + 1]);
    edges.push_back(ArrEdge{piece.line, stops[s], stops[s + 1], strict_below_count(arr.lines(), sample, piece.line)});
  }
  return edges;
}

}  // namespace kset
