#include "grafts/graph.hpp"

#include <algorithm>
#include <deque>
#include <iterator>

namespace grafts {

void Multigraph::add_vertex(const VertexId& v) {
  if (v.empty()) throw InputError("empty vertex id");
  incidence_.try_emplace(v);
}

void Multigraph::add_edge(const EdgeId& id, const VertexId& u, const VertexId& v) {
  if (id.empty()) throw InputError("empty edge id");
  if (u == v) throw InputError("edge " + id + " is a loop at " + u);
  if (edges_.contains(id)) throw InputError("duplicate edge id " + id);
  add_vertex(u);
  add_vertex(v);
  edges_.emplace(id, u < v ? Edge{u, v} : Edge{v, u});
  for (const auto& x : {u, v}) {
    auto& list = incidence_[x];
    list.insert(std::upper_bound(list.begin(), list.end(), id), id);
  }
}

const Edge& Multigraph::edge(const EdgeId& e) const {
  auto it = edges_.find(e);
  if (it == edges_.end()) throw InputError("unknown edge id " + e);
  return it->second;
}

const std::vector<EdgeId>& Multigraph::incident(const VertexId& v) const {
  auto it = incidence_.find(v);
  if (it == incidence_.end()) throw InputError("unknown vertex id " + v);
  return it->second;
}

VertexSet Multigraph::vertices() const {
  VertexSet out;
  for (const auto& [v, _] : incidence_) out.insert(out.end(), v);
  return out;
}

EdgeSet Multigraph::edge_ids() const {
  EdgeSet out;
  for (const auto& [e, _] : edges_) out.insert(out.end(), e);
  return out;
}

Multigraph Multigraph::restrict_to(const EdgeSet& f, bool keep_all_vertices) const {
  Multigraph h;
  if (keep_all_vertices) {
    for (const auto& [v, _] : incidence_) h.add_vertex(v);
  }
  for (const auto& e : f) {
    const Edge& ends = edge(e);
    h.add_edge(e, ends.u, ends.v);
  }
  return h;
}

Multigraph Multigraph::without(const VertexSet& x) const {
  Multigraph h;
  for (const auto& [v, _] : incidence_) {
    if (!x.contains(v)) h.add_vertex(v);
  }
  for (const auto& [e, ends] : edges_) {
    if (!x.contains(ends.u) && !x.contains(ends.v)) h.add_edge(e, ends.u, ends.v);
  }
  return h;
}

GraphIndex::GraphIndex(const Multigraph& g) {
  for (const auto& v : g.vertices()) {
    vertex_index_.emplace(v, static_cast<int>(vertex_ids.size()));
    vertex_ids.push_back(v);
  }
  adjacency.resize(vertex_ids.size());
  for (const auto& [e, ends] : g.edges()) {
    int idx = static_cast<int>(edge_ids.size());
    edge_index_.emplace(e, idx);
    edge_ids.push_back(e);
    int u = vertex_index_.at(ends.u);
    int v = vertex_index_.at(ends.v);
    this->ends.emplace_back(u, v);
    adjacency[u].emplace_back(idx, v);
    adjacency[v].emplace_back(idx, u);
  }
}

int GraphIndex::vertex(const VertexId& v) const {
  auto it = vertex_index_.find(v);
  if (it == vertex_index_.end()) throw InputError("unknown vertex id " + v);
  return it->second;
}

int GraphIndex::edge(const EdgeId& e) const {
  auto it = edge_index_.find(e);
  if (it == edge_index_.end()) throw InputError("unknown edge id " + e);
  return it->second;
}

Walk Walk::reversed() const {
  return {{vertices.rbegin(), vertices.rend()}, {edges.rbegin(), edges.rend()}};
}

const char* to_string(EarKind kind) { return kind == EarKind::Round ? "round" : "straight"; }

void require_vertices(const Multigraph& g, const VertexSet& x) {
  for (const auto& v : x) {
    if (!g.has_vertex(v)) throw InputError("unknown vertex id " + v);
  }
}

EdgeSet cut(const Multigraph& g, const VertexSet& x) {
  require_vertices(g, x);
  EdgeSet out;
  for (const auto& [e, ends] : g.edges()) {
    if (x.contains(ends.u) != x.contains(ends.v)) out.insert(out.end(), e);
  }
  return out;
}

EdgeSet edges_between(const Multigraph& g, const VertexSet& x, const VertexSet& y) {
  require_vertices(g, x);
  require_vertices(g, y);
  EdgeSet out;
  for (const auto& [e, ends] : g.edges()) {
    if ((x.contains(ends.u) && y.contains(ends.v)) || (x.contains(ends.v) && y.contains(ends.u))) {
      out.insert(out.end(), e);
    }
  }
  return out;
}

std::vector<VertexSet> connected_components(const Multigraph& g) {
  std::vector<VertexSet> out;
  VertexSet seen;
  for (const auto& start : g.vertices()) {
    if (seen.contains(start)) continue;
    VertexSet comp{start};
    seen.insert(start);
    std::deque<VertexId> queue{start};
    while (!queue.empty()) {
      VertexId x = queue.front();
      queue.pop_front();
      for (const auto& e : g.incident(x)) {
        const VertexId& y = g.edge(e).other(x);
        if (seen.insert(y).second) {
          comp.insert(y);
          queue.push_back(y);
        }
      }
    }
    out.push_back(std::move(comp));
  }
  return out;
}

std::optional<Walk> as_path_or_circuit(const Multigraph& g, const EdgeSet& f) {
  if (f.empty()) return std::nullopt;
  for (const auto& e : f) {
    if (!g.has_edge(e)) throw InputError("unknown edge id " + e);
  }
  Multigraph h = g.restrict_to(f, false);
  if (connected_components(h).size() != 1) return std::nullopt;

  std::vector<VertexId> ends;
  for (const auto& v : h.vertices()) {
    std::size_t d = h.degree(v);
    if (d > 2) return std::nullopt;
    if (d == 1) ends.push_back(v);
  }
  if (!ends.empty() && ends.size() != 2) return std::nullopt;

  const VertexId start = ends.empty() ? *h.vertices().begin() : ends.front();
  Walk w{{start}, {}};
  EdgeSet used;
  VertexId cur = start;
  while (used.size() < f.size()) {
    const auto& inc = h.incident(cur);
    auto it = std::find_if(inc.begin(), inc.end(), [&](const EdgeId& e) { return !used.contains(e); });
    if (it == inc.end()) return std::nullopt;
    used.insert(*it);
    cur = h.edge(*it).other(cur);
    w.edges.push_back(*it);
    w.vertices.push_back(cur);
  }
  return w;
}

namespace {

bool walk_edges_consistent(const Multigraph& g, const Walk& w) {
  if (w.vertices.size() != w.edges.size() + 1) return false;
  EdgeSet seen;
  for (std::size_t i = 0; i < w.edges.size(); ++i) {
    if (!g.has_edge(w.edges[i]) || !seen.insert(w.edges[i]).second) return false;
    const Edge& ends = g.edge(w.edges[i]);
    if (!(ends.touches(w.vertices[i]) && ends.other(w.vertices[i]) == w.vertices[i + 1])) return false;
  }
  for (const auto& v : w.vertices) {
    if (!g.has_vertex(v)) return false;
  }
  return true;
}

}  // namespace

bool is_path_in(const Multigraph& g, const Walk& w) {
  if (w.vertices.empty() || !walk_edges_consistent(g, w)) return false;
  VertexSet distinct(w.vertices.begin(), w.vertices.end());
  return distinct.size() == w.vertices.size();
}

bool is_circuit_in(const Multigraph& g, const Walk& w) {
  if (w.edges.size() < 2 || !w.closed() || !walk_edges_consistent(g, w)) return false;
  VertexSet distinct(w.vertices.begin(), w.vertices.end() - 1);
  return distinct.size() == w.vertices.size() - 1;
}

std::optional<EarShape> classify_ear(const Multigraph& g, const EdgeSet& p, const VertexSet& x) {
  auto walk = as_path_or_circuit(g, p);
  if (!walk) return std::nullopt;
  VertexSet shared = intersection(walk->vertex_set(), x);

  if (walk->closed()) {
    if (shared.size() != 1) return std::nullopt;
    return EarShape{EarKind::Round, {*shared.begin()}};
  }
  const VertexId& s = walk->front();
  const VertexId& t = walk->back();
  bool s_in = x.contains(s);
  bool t_in = x.contains(t);
  if (s_in && t_in && shared.size() == 2) {
    return EarShape{EarKind::Round, {std::min(s, t), std::max(s, t)}};
  }
  if (s_in != t_in && shared.size() == 1) {
    return EarShape{EarKind::Straight, {s_in ? s : t}};
  }
  return std::nullopt;
}

Walk subpath(const Walk& p, const VertexId& x, const VertexId& y) {
  if (p.closed()) throw InputError("subpath of a circuit is ambiguous");
  auto ix = std::find(p.vertices.begin(), p.vertices.end(), x);
  auto iy = std::find(p.vertices.begin(), p.vertices.end(), y);
  if (ix == p.vertices.end()) throw InputError("vertex " + x + " is not on the path");
  if (iy == p.vertices.end()) throw InputError("vertex " + y + " is not on the path");
  auto i = static_cast<std::size_t>(ix - p.vertices.begin());
  auto j = static_cast<std::size_t>(iy - p.vertices.begin());
  Walk out;
  if (i <= j) {
    out.vertices.assign(p.vertices.begin() + i, p.vertices.begin() + j + 1);
    out.edges.assign(p.edges.begin() + i, p.edges.begin() + j);
    return out;
  }
  out.vertices.assign(p.vertices.begin() + j, p.vertices.begin() + i + 1);
  out.edges.assign(p.edges.begin() + j, p.edges.begin() + i);
  return out.reversed();
}

namespace {

// Greedy trail over the unused edges of J with circuit peeling: whenever the
// trail revisits a vertex still on the stack, the closed segment is split off.
class TrailPeeler {
 public:
  TrailPeeler(const Multigraph& g, const EdgeSet& j) : g_(g), unused_(j) {}

  /// Walks from `start` until stuck; returns the residual simple trail.
  Walk walk_from(const VertexId& start, std::vector<Walk>& circuits) {
    Walk stack{{start}, {}};
    for (;;) {
      const VertexId cur = stack.vertices.back();
      auto next = smallest_unused_at(cur);
      if (!next) break;
      unused_.erase(*next);
      const VertexId y = g_.edge(*next).other(cur);
      auto pos = std::find(stack.vertices.begin(), stack.vertices.end(), y);
      if (pos == stack.vertices.end()) {
        stack.vertices.push_back(y);
        stack.edges.push_back(*next);
        continue;
      }
      auto k = static_cast<std::size_t>(pos - stack.vertices.begin());
      Walk circuit;
      circuit.vertices.assign(stack.vertices.begin() + k, stack.vertices.end());
      circuit.vertices.push_back(y);
      circuit.edges.assign(stack.edges.begin() + k, stack.edges.end());
      circuit.edges.push_back(*next);
      circuits.push_back(std::move(circuit));
      stack.vertices.resize(k + 1);
      stack.edges.resize(k);
    }
    return stack;
  }

  const EdgeSet& unused() const { return unused_; }

 private:
  std::optional<EdgeId> smallest_unused_at(const VertexId& v) const {
    for (const auto& e : g_.incident(v)) {
      if (unused_.contains(e)) return e;
    }
    return std::nullopt;
  }

  const Multigraph& g_;
  EdgeSet unused_;
};

}  // namespace

PathAndCircuits decompose_into_path_and_circuits(const Multigraph& g, const EdgeSet& j,
                                                 const VertexId& u, const VertexId& v) {
  require_vertices(g, {u, v});
  if (u == v) throw InputError("path ends must differ");
  std::map<VertexId, int> degree;
  for (const auto& e : j) {
    const Edge& ends = g.edge(e);
    ++degree[ends.u];
    ++degree[ends.v];
  }
  for (const auto& [x, d] : degree) {
    bool odd = d % 2 == 1;
    if (odd != (x == u || x == v)) {
      throw InputError("edge set has odd degree at " + x + " (expected exactly at " + u + ", " + v + ")");
    }
  }
  if (degree[u] % 2 == 0 || degree[v] % 2 == 0) {
    throw InputError("edge set must have odd degree at " + u + " and " + v);
  }

  PathAndCircuits out;
  TrailPeeler peeler(g, j);
  out.path = peeler.walk_from(u, out.circuits);
  if (out.path.back() != v) throw InvariantError("trail from " + u + " did not end at " + v);
  while (!peeler.unused().empty()) {
    const VertexId start = g.edge(*peeler.unused().begin()).u;
    Walk rest = peeler.walk_from(start, out.circuits);
    if (!rest.edges.empty()) throw InvariantError("even remainder left an open trail");
  }
  return out;
}

IdSet symmetric_difference(const IdSet& x, const IdSet& y) {
  IdSet out;
  std::set_symmetric_difference(x.begin(), x.end(), y.begin(), y.end(), std::inserter(out, out.end()));
  return out;
}

IdSet set_union(const IdSet& x, const IdSet& y) {
  IdSet out = x;
  out.insert(y.begin(), y.end());
  return out;
}

IdSet intersection(const IdSet& x, const IdSet& y) {
  IdSet out;
  std::set_intersection(x.begin(), x.end(), y.begin(), y.end(), std::inserter(out, out.end()));
  return out;
}

IdSet difference(const IdSet& x, const IdSet& y) {
  IdSet out;
  std::set_difference(x.begin(), x.end(), y.begin(), y.end(), std::inserter(out, out.end()));
  return out;
}

bool is_subset(const IdSet& x, const IdSet& y) {
  return std::includes(y.begin(), y.end(), x.begin(), x.end());
}

}  // namespace grafts
