#include "kset/k_graph.hpp"

#include <string>


namespace kset {

KGraph build_primal_graph(const Instance& inst, int k) {
  const int n = inst.n();
  if (k < 1 || k > n - 1) throw BadK(k, 1, n - 1);
  KGraph g;
  g.k = k;
  const auto& pts = inst.points();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Line line = line_through(pts[i], pts[j]);
      int above = 0;
      for (int r = 0; r < n; ++r)
        if (r != i && r != j && side_of(line, pts[r]) > 0) ++above;
      if (above == k - 1) g.edges.push_back(GraphEdge{i, j, Segment(pts[i], pts[j]), -1});
    }
  return g;
}

KGraph build_G(const Instance& inst, const Arrangement& arr, int k) {
  KGraph g = build_primal_graph(inst, k);
  if (arr.n() != inst.n()) throw CrossCheckMismatch("arrangement does not belong to this instance");
  std::size_t dual_count = 0;
  for (const auto& v : arr.vertices())
    if (v.below_count == k - 1) ++dual_count;
  for (auto& e : g.edges) {
    const int v = arr.vertex_of(e.p, e.q);
    const ArrVertex& vx = arr.vertex(v);
    if (vx.location != point_form(line_through(inst[e.p], inst[e.q])))
      throw CrossCheckMismatch("edge " + std::to_string(e.p) + "-" + std::to_string(e.q) +
                               " does not dualize to its arrangement vertex");
    if (vx.below_count != k - 1)
      throw CrossCheckMismatch("edge " + std::to_string(e.p) + "-" + std::to_string(e.q) + " dualizes to a vertex in V_" +
                               std::to_string(vx.below_count) + ", expected V_" + std::to_string(k - 1));
    e.dual_vertex = v;
  }
  if (g.t() != dual_count)
    throw CrossCheckMismatch("primal graph has " + std::to_string(g.t()) + " edges but |V_" + std::to_string(k - 1) +
                             "| = " + std::to_string(dual_count));
  return g;
}

KGraph build_G(const Instance& inst, int k) { return build_G(inst, build_arrangement(inst), k); }

CrossingCount crossing_number(std::span<const Segment> segments) {
  CrossingCount out;
  const int m = static_cast<int>(segments.size());
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b) {
      if (!segments_properly_cross(segments[a], segments[b])) continue;
      Point at = intersect(line_through(segments[a].p(), segments[a].q()),
                           line_through(segments[b].p(), segments[b].q()));
      Line dual = dualize_point(at);
      out.records.push_back(CrossingRecord{a, b, std::move(at), std::move(dual)});
    }
  out.x = out.records.size();
  return out;
}

CrossingCount crossing_number(const KGraph& g) {
  std::vector<Segment> segs;
  segs.reserve(g.edges.size());
  for (const auto& e : g.edges) segs.push_back(e.segment);
  return crossing_number(segs);
}

CrossingLemmaCheck crossing_lemma_check(std::size_t t, std::size_t n, std::size_t x) {
  CrossingLemmaCheck c;
  c.applicable = t > 4 * n;
  if (n > 0) {
    mpz_class tt(static_cast<unsigned long>(t));
    mpz_class nn(static_cast<unsigned long>(n));
    mpz_class num = tt * tt * tt;
    mpz_class den = 64 * nn * nn;
    c.threshold = Rat(num, den);
    c.threshold.canonicalize();
  }
  c.holds = !c.applicable || Rat(mpz_class(static_cast<unsigned long>(x))) >= c.threshold;
  return c;
}

Tangent crossing_to_tangent(const CrossingRecord& record, const KGraph& g, const Arrangement& arr,
                            const ChainSet& chains) {
  const GraphEdge& ea = g.edges.at(record.edge_a);
  const GraphEdge& eb = g.edges.at(record.edge_b);
  if (ea.dual_vertex < 0 || eb.dual_vertex < 0) throw TangentViolation("graph edges carry no dual vertices");
  const Line line = dualize_point(record.at);
  const Point& va = arr.vertex(ea.dual_vertex).location;
  const Point& vb = arr.vertex(eb.dual_vertex).location;
  if (side_of(line, va) != 0 || side_of(line, vb) != 0)
    throw TangentViolation("dual of the crossing point misses an edge's dual vertex");
  auto oa = chains.turn_owner.find(ea.dual_vertex);
  auto ob = chains.turn_owner.find(eb.dual_vertex);
  if (oa == chains.turn_owner.end() || ob == chains.turn_owner.end())
    throw TangentViolation("an edge's dual vertex is not a chain turn");
  int ca = oa->second.first, cb = ob->second.first;
  int ua = ea.dual_vertex, ub = eb.dual_vertex;
  if (ca == cb) throw TangentViolation("both dual vertices turn on chain " + std::to_string(ca));
  if (ca > cb) {
    std::swap(ca, cb);
    std::swap(ua, ub);
  }
  if (!is_strict_tangent(arr, chains, ca, ua, cb, ub, line))
    throw TangentViolation("dual of the crossing point is not a strict common tangent");
  Tangent t{line, ca, ua, cb, ub, arr.vertex(ua).location.x, arr.vertex(ub).location.x};
  if (t.span_hi < t.span_lo) std::swap(t.span_lo, t.span_hi);
  return t;
}

}  // namespace kset
