#include "grafts/factor_critical.hpp"

#include <algorithm>

namespace grafts {

namespace {

using MateMap = std::map<VertexId, std::pair<VertexId, EdgeId>>;

MateMap mates(const Multigraph& g, const EdgeSet& matching) {
  MateMap out;
  for (const auto& e : matching) {
    const Edge& ends = g.edge(e);
    out[ends.u] = {ends.v, e};
    out[ends.v] = {ends.u, e};
  }
  return out;
}

bool perfect_on(const Multigraph& g, const EdgeSet& matching) { return 2 * matching.size() == g.vertex_count(); }

std::vector<VertexId> sorted_bonds(std::vector<VertexId> bonds) {
  std::sort(bonds.begin(), bonds.end());
  return bonds;
}

}  // namespace

bool is_factor_critical_graph(const Multigraph& g) {
  if (g.vertex_count() % 2 == 0) return false;
  for (const auto& v : g.vertices()) {
    Multigraph rest = g.without({v});
    if (!perfect_on(rest, max_matching(rest))) return false;
  }
  return true;
}

// Invariant: M is a perfect matching of G - r and no M-edge leaves the grown
// set S. For a new vertex v adjacent to u in S, the component of v in M Δ M'
// (M' a perfect matching of G - v) is a path from v to r starting with an
// M-edge; it enters S through an M'-edge, so uv plus its prefix up to S has
// an odd number of edges.
OddEarDecomposition odd_ear_decomposition(const Multigraph& g, const VertexId& r) {
  require_vertices(g, {r});
  OddEarDecomposition out{r, {}};
  VertexSet grown{r};

  Multigraph without_root = g.without({r});
  EdgeSet m = max_matching(without_root);
  if (!perfect_on(without_root, m)) throw NotFactorCritical("G - " + r + " has no perfect matching", grown);
  const MateMap m_mate = mates(g, m);

  EdgeSet used;
  for (;;) {
    for (const auto& [e, ends] : g.edges()) {
      if (used.contains(e) || !grown.contains(ends.u) || !grown.contains(ends.v)) continue;
      used.insert(e);
      out.ears.push_back({Walk{{ends.u, ends.v}, {e}}, {ends.u, ends.v}});
    }
    if (grown.size() == g.vertex_count()) break;

    std::optional<EdgeId> entry;
    for (const auto& [e, ends] : g.edges()) {
      if (grown.contains(ends.u) != grown.contains(ends.v)) {
        entry = e;
        break;
      }
    }
    if (!entry) throw NotFactorCritical("graph is disconnected", grown);
    const Edge& ends = g.edge(*entry);
    const VertexId u = grown.contains(ends.u) ? ends.u : ends.v;
    const VertexId v = ends.other(u);

    Multigraph without_v = g.without({v});
    EdgeSet other = max_matching(without_v);
    if (!perfect_on(without_v, other)) throw NotFactorCritical("G - " + v + " has no perfect matching", grown);
    const MateMap other_mate = mates(g, other);

    Walk walk{{u, v}, {*entry}};
    VertexId cur = v;
    for (;;) {
      const auto& [y, my] = m_mate.at(cur);
      if (grown.contains(y)) throw InvariantError("matching edge " + my + " leaves the grown set");
      const auto& [z, mz] = other_mate.at(y);
      walk.vertices.insert(walk.vertices.end(), {y, z});
      walk.edges.insert(walk.edges.end(), {my, mz});
      if (grown.contains(z)) break;
      cur = z;
    }
    const VertexId& end = walk.back();
    std::vector<VertexId> bonds = end == u ? std::vector<VertexId>{u} : sorted_bonds({u, end});
    for (const auto& x : walk.vertices) grown.insert(x);
    for (const auto& e : walk.edges) used.insert(e);
    out.ears.push_back({std::move(walk), std::move(bonds)});
  }
  return out;
}

VerifyResult verify_odd_ear_decomposition(const Multigraph& g, const OddEarDecomposition& d) {
  if (!g.has_vertex(d.root)) return VerifyResult::fail(std::nullopt, "root " + d.root + " is not a vertex");
  VertexSet grown{d.root};
  EdgeSet used;
  for (std::size_t i = 0; i < d.ears.size(); ++i) {
    const OddEar& ear = d.ears[i];
    if (!(is_path_in(g, ear.walk) || is_circuit_in(g, ear.walk))) {
      return VerifyResult::fail(i, "ear is not a path or circuit of the graph");
    }
    EdgeSet edges = ear.walk.edge_set();
    if (!intersection(edges, used).empty()) return VerifyResult::fail(i, "ear reuses an edge");
    if (edges.size() % 2 == 0) return VerifyResult::fail(i, "ear has an even number of edges");
    auto shape = classify_ear(g, edges, grown);
    if (!shape || shape->kind != EarKind::Round) return VerifyResult::fail(i, "ear is not round relative to the grown set");
    if (shape->bonds != sorted_bonds(ear.bonds)) return VerifyResult::fail(i, "recorded bonds do not match");
    for (const auto& x : ear.walk.vertices) grown.insert(x);
    used.insert(edges.begin(), edges.end());
  }
  if (grown != g.vertices()) return VerifyResult::fail(std::nullopt, "replay does not reach every vertex");
  if (used != g.edge_ids()) return VerifyResult::fail(std::nullopt, "replay does not cover every edge");
  return {};
}

bool is_factor_critical_graft(const Graft& g, const VertexId& r) {
  require_vertices(g.graph(), {r});
  return g.t() == difference(g.graph().vertices(), {r}) && is_factor_critical_graph(g.graph());
}

FcGraftDecomposition fc_graft_decomposition(const Graft& g, const VertexId& r) {
  if (!is_factor_critical_graft(g, r)) throw InputError("graft is not factor-critical with root " + r);
  FcGraftDecomposition out{r, {}};
  for (auto& ear : odd_ear_decomposition(g.graph(), r).ears) {
    VertexSet t = difference(ear.walk.vertex_set(), VertexSet(ear.bonds.begin(), ear.bonds.end()));
    out.ears.push_back({std::move(ear), std::move(t)});
  }
  return out;
}

VerifyResult verify_fc_graft_decomposition(const Graft& g, const FcGraftDecomposition& d) {
  if (!g.graph().has_vertex(d.root)) return VerifyResult::fail(std::nullopt, "root " + d.root + " is not a vertex");
  Multigraph base;
  base.add_vertex(d.root);
  Graft acc(std::move(base), {});
  for (std::size_t i = 0; i < d.ears.size(); ++i) {
    const FcGraftEar& step = d.ears[i];
    EdgeSet edges = step.ear.walk.edge_set();
    for (const auto& e : edges) {
      if (!g.graph().has_edge(e)) return VerifyResult::fail(i, "edge " + e + " is not in the graft");
    }
    Multigraph ear = g.graph().restrict_to(edges, false);
    auto shape = classify_ear(ear, edges, acc.graph().vertices());
    if (!shape || shape->kind != EarKind::Round) return VerifyResult::fail(i, "ear is not round");
    if (shape->bonds != sorted_bonds(step.ear.bonds)) return VerifyResult::fail(i, "recorded bonds do not match");
    VertexSet bonds(shape->bonds.begin(), shape->bonds.end());
    if (step.t != difference(ear.vertices(), bonds)) {
      return VerifyResult::fail(i, "ear T' must be exactly its non-bond vertices");
    }
    try {
      acc = graft_sum(acc, Graft(std::move(ear), step.t));
    } catch (const InputError& err) {
      return VerifyResult::fail(i, err.what());
    }
  }
  if (!(acc == g)) return VerifyResult::fail(std::nullopt, "replay does not reproduce the graft");
  return {};
}

}  // namespace grafts
