#pragma once

#include <optional>
#include <string>
#include <vector>

#include "grafts/graph.hpp"

namespace grafts {

/// Join (T-join): an edge-id set with odd degree exactly at T.
using Join = EdgeSet;

/// (G, T) with |T ∩ C| even on every component C.
class Graft {
 public:
  Graft() = default;
  /// Throws InputError when T ⊄ V(G) or a component has odd |T ∩ C|.
  Graft(Multigraph graph, VertexSet t);

  const Multigraph& graph() const { return graph_; }
  const VertexSet& t() const { return t_; }

  friend bool operator==(const Graft&, const Graft&) = default;

 private:
  Multigraph graph_;
  VertexSet t_;
};

/// (G, T; A, B). The bipartition is ordered: swapping A and B yields a
/// different object.
class BipartiteGraft {
 public:
  BipartiteGraft() = default;
  /// Throws InputError unless A, B partition V(G) and every edge joins A to B.
  BipartiteGraft(Graft graft, VertexSet a, VertexSet b);

  const Graft& graft() const { return graft_; }
  const Multigraph& graph() const { return graft_.graph(); }
  const VertexSet& t() const { return graft_.t(); }
  const VertexSet& a() const { return a_; }
  const VertexSet& b() const { return b_; }
  bool in_a(const VertexId& v) const { return a_.contains(v); }
  bool in_b(const VertexId& v) const { return b_.contains(v); }

  friend bool operator==(const BipartiteGraft&, const BipartiteGraft&) = default;

 private:
  Graft graft_;
  VertexSet a_;
  VertexSet b_;
};

/// ({r}, ∅; ∅, {r}).
BipartiteGraft single_vertex_graft(const VertexId& root);

bool is_graft(const Multigraph& g, const VertexSet& t);
/// Empty string when (G, T; A, B) is a valid bipartite graft, otherwise the reason.
std::string bipartite_violation(const Multigraph& g, const VertexSet& a, const VertexSet& b);

bool is_join(const Graft& g, const EdgeSet& f);
/// Vertices whose F-degree parity disagrees with membership in T.
VertexSet parity_defects(const Graft& g, const EdgeSet& f);
/// |∂_G(v) ∩ F|.
int join_degree(const Multigraph& g, const EdgeSet& f, const VertexId& v);

/// (G1 + G2, T1 Δ T2). Operand edge ids must be disjoint; shared vertex ids
/// are identified and must carry equal endpoints.
Graft graft_sum(const Graft& g1, const Graft& g2);
/// Bipartite ⊕; requires A1 ∩ B2 = ∅ and A2 ∩ B1 = ∅.
BipartiteGraft graft_sum(const BipartiteGraft& g1, const BipartiteGraft& g2);

/// |E(S) \ F| - |E(S) ∩ F|.
int f_weight(const EdgeSet& f, const EdgeSet& s);
int f_weight(const EdgeSet& f, const Walk& s);

/// Every B-vertex of P other than the ends has exactly one P-edge in F.
bool is_balanced_path(const BipartiteGraft& bg, const Walk& p, const EdgeSet& f);

enum class EndClasses { AA, AB, BB };

/// Outcome of checking an F-balanced path against the weight classification
/// that holds on quasicombs.
struct BalancedPathVerdict {
  EndClasses ends;
  int weight;
  std::vector<int> allowed;  // weights admissible for this end pattern
  int expected;              // the weight the end-edge pattern forces
  bool consistent;
};

BalancedPathVerdict classify_balanced_path(const BipartiteGraft& bg, const Walk& p, const EdgeSet& f);

}  // namespace grafts
