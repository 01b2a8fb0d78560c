#include "grafts/graft.hpp"

namespace grafts {

namespace {

void require_parity(const Multigraph& g, const VertexSet& t) {
  require_vertices(g, t);
  for (const auto& comp : connected_components(g)) {
    if (intersection(comp, t).size() % 2 != 0) {
      throw InputError("component containing " + *comp.begin() + " has an odd number of T-vertices");
    }
  }
}

}  // namespace

Graft::Graft(Multigraph graph, VertexSet t) : graph_(std::move(graph)), t_(std::move(t)) {
  require_parity(graph_, t_);
}

BipartiteGraft::BipartiteGraft(Graft graft, VertexSet a, VertexSet b)
    : graft_(std::move(graft)), a_(std::move(a)), b_(std::move(b)) {
  if (auto why = bipartite_violation(graft_.graph(), a_, b_); !why.empty()) throw InputError(why);
}

BipartiteGraft single_vertex_graft(const VertexId& root) {
  Multigraph g;
  g.add_vertex(root);
  return BipartiteGraft(Graft(std::move(g), {}), {}, {root});
}

bool is_graft(const Multigraph& g, const VertexSet& t) {
  require_vertices(g, t);
  for (const auto& comp : connected_components(g)) {
    if (intersection(comp, t).size() % 2 != 0) return false;
  }
  return true;
}

std::string bipartite_violation(const Multigraph& g, const VertexSet& a, const VertexSet& b) {
  for (const auto& v : intersection(a, b)) return "vertex " + v + " is in both A and B";
  VertexSet vs = g.vertices();
  if (set_union(a, b) != vs) {
    for (const auto& v : difference(vs, set_union(a, b))) return "vertex " + v + " is in neither A nor B";
    for (const auto& v : difference(set_union(a, b), vs)) return "class member " + v + " is not a vertex";
  }
  for (const auto& [e, ends] : g.edges()) {
    if (a.contains(ends.u) == a.contains(ends.v)) {
      return "edge " + e + " joins " + ends.u + " and " + ends.v + " inside " + (a.contains(ends.u) ? "A" : "B");
    }
  }
  return {};
}

int join_degree(const Multigraph& g, const EdgeSet& f, const VertexId& v) {
  int d = 0;
  for (const auto& e : g.incident(v)) d += f.contains(e) ? 1 : 0;
  return d;
}

VertexSet parity_defects(const Graft& g, const EdgeSet& f) {
  for (const auto& e : f) {
    if (!g.graph().has_edge(e)) throw InputError("join edge " + e + " is not in the graph");
  }
  std::map<VertexId, int> degree;
  for (const auto& e : f) {
    const Edge& ends = g.graph().edge(e);
    ++degree[ends.u];
    ++degree[ends.v];
  }
  VertexSet out;
  for (const auto& v : g.graph().vertices()) {
    bool odd = degree[v] % 2 == 1;
    if (odd != g.t().contains(v)) out.insert(v);
  }
  return out;
}

bool is_join(const Graft& g, const EdgeSet& f) { return parity_defects(g, f).empty(); }

Graft graft_sum(const Graft& g1, const Graft& g2) {
  Multigraph g = g1.graph();
  for (const auto& v : g2.graph().vertices()) g.add_vertex(v);
  for (const auto& [e, ends] : g2.graph().edges()) {
    if (g.has_edge(e)) throw InputError("edge id " + e + " appears in both operands of the sum");
    g.add_edge(e, ends.u, ends.v);
  }
  return Graft(std::move(g), symmetric_difference(g1.t(), g2.t()));
}

BipartiteGraft graft_sum(const BipartiteGraft& g1, const BipartiteGraft& g2) {
  for (const auto& v : intersection(g1.a(), g2.b())) {
    throw InputError("class clash: " + v + " is in A of the first operand and B of the second");
  }
  for (const auto& v : intersection(g2.a(), g1.b())) {
    throw InputError("class clash: " + v + " is in A of the second operand and B of the first");
  }
  return BipartiteGraft(graft_sum(g1.graft(), g2.graft()), set_union(g1.a(), g2.a()),
                        set_union(g1.b(), g2.b()));
}

int f_weight(const EdgeSet& f, const EdgeSet& s) {
  int w = 0;
  for (const auto& e : s) w += f.contains(e) ? -1 : 1;
  return w;
}

int f_weight(const EdgeSet& f, const Walk& s) { return f_weight(f, s.edge_set()); }

bool is_balanced_path(const BipartiteGraft& bg, const Walk& p, const EdgeSet& f) {
  if (!is_path_in(bg.graph(), p)) throw InputError("walk is not a path of the graft");
  for (std::size_t i = 1; i + 1 < p.vertices.size(); ++i) {
    if (!bg.in_b(p.vertices[i])) continue;
    int count = (f.contains(p.edges[i - 1]) ? 1 : 0) + (f.contains(p.edges[i]) ? 1 : 0);
    if (count != 1) return false;
  }
  return true;
}

BalancedPathVerdict classify_balanced_path(const BipartiteGraft& bg, const Walk& p, const EdgeSet& f) {
  if (!is_path_in(bg.graph(), p)) throw InputError("walk is not a path of the graft");
  BalancedPathVerdict out{};
  out.weight = f_weight(f, p);
  const bool front_b = bg.in_b(p.front());
  const bool back_b = bg.in_b(p.back());
  auto end_edge_in_f = [&](bool at_front) {
    return f.contains(at_front ? p.edges.front() : p.edges.back());
  };

  if (!front_b && !back_b) {
    out.ends = EndClasses::AA;
    out.allowed = {0};
    out.expected = 0;
  } else if (front_b != back_b) {
    out.ends = EndClasses::AB;
    out.allowed = {-1, 1};
    out.expected = end_edge_in_f(front_b) ? -1 : 1;
  } else {
    out.ends = EndClasses::BB;
    out.allowed = {-2, 0, 2};
    if (p.edges.empty()) {
      out.expected = 0;
    } else {
      bool first = end_edge_in_f(true);
      bool last = end_edge_in_f(false);
      out.expected = first && last ? -2 : (!first && !last ? 2 : 0);
    }
  }
  out.consistent = out.weight == out.expected;
  return out;
}

}  // namespace grafts
