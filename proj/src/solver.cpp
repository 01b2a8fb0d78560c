#include "grafts/solver.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <limits>
#include <numeric>

namespace grafts {

namespace {

// Edge-indexed bit set for the cycle-space enumeration.
class EdgeBits {
 public:
  explicit EdgeBits(std::size_t n) : words_((n + 63) / 64, 0) {}

  void flip(std::size_t i) { words_[i / 64] ^= std::uint64_t{1} << (i % 64); }
  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }
  EdgeBits& operator^=(const EdgeBits& o) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] ^= o.words_[k];
    return *this;
  }
  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  /// True when *this precedes o as sorted index sequences of equal length.
  bool lex_less(const EdgeBits& o) const {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      std::uint64_t diff = words_[k] ^ o.words_[k];
      if (diff != 0) return (words_[k] >> std::countr_zero(diff)) & 1U;
    }
    return false;
  }

 private:
  std::vector<std::uint64_t> words_;
};

struct Forest {
  std::vector<int> parent_edge;    // -1 at roots
  std::vector<int> parent_vertex;  // -1 at roots
  std::vector<int> depth;
  std::vector<int> order;          // BFS order
  std::vector<bool> tree_edge;
};

Forest bfs_forest(const GraphIndex& idx) {
  const auto n = idx.vertex_ids.size();
  Forest f{std::vector<int>(n, -1), std::vector<int>(n, -1), std::vector<int>(n, -1), {},
           std::vector<bool>(idx.edge_ids.size(), false)};
  for (std::size_t root = 0; root < n; ++root) {
    if (f.depth[root] >= 0) continue;
    f.depth[root] = 0;
    std::deque<int> queue{static_cast<int>(root)};
    while (!queue.empty()) {
      int x = queue.front();
      queue.pop_front();
      f.order.push_back(x);
      for (auto [e, y] : idx.adjacency[x]) {
        if (f.depth[y] >= 0) continue;
        f.depth[y] = f.depth[x] + 1;
        f.parent_edge[y] = e;
        f.parent_vertex[y] = x;
        f.tree_edge[e] = true;
        queue.push_back(y);
      }
    }
  }
  return f;
}

std::size_t component_count(const GraphIndex& idx) {
  std::size_t roots = 0;
  Forest f = bfs_forest(idx);
  for (int pe : f.parent_edge) roots += pe < 0 ? 1 : 0;
  return roots;
}

EdgeSet to_edge_set(const GraphIndex& idx, const EdgeBits& bits) {
  EdgeSet out;
  for (std::size_t e = 0; e < idx.edge_ids.size(); ++e) {
    if (bits.test(e)) out.insert(out.end(), idx.edge_ids[e]);
  }
  return out;
}

// Tree join: the parent edge of c is in the join iff the subtree of c holds
// an odd number of T-vertices.
EdgeBits forest_join(const GraphIndex& idx, const Forest& forest, const VertexSet& t) {
  std::vector<int> parity(idx.vertex_ids.size(), 0);
  for (const auto& v : t) parity[idx.vertex(v)] = 1;
  EdgeBits join(idx.edge_ids.size());
  for (auto it = forest.order.rbegin(); it != forest.order.rend(); ++it) {
    int c = *it;
    if (forest.parent_edge[c] < 0) {
      if (parity[c] != 0) throw InputError("not a graft: component of " + idx.vertex_ids[c] + " has odd |T|");
      continue;
    }
    if (parity[c] != 0) {
      join.flip(static_cast<std::size_t>(forest.parent_edge[c]));
      parity[forest.parent_vertex[c]] ^= 1;
    }
  }
  return join;
}

constexpr int kUnreachable = std::numeric_limits<int>::max() / 4;

struct BfsTree {
  std::vector<int> dist;
  std::vector<int> parent_edge;
  std::vector<int> parent_vertex;
};

BfsTree bfs_from(const GraphIndex& idx, int source) {
  const auto n = idx.vertex_ids.size();
  BfsTree t{std::vector<int>(n, kUnreachable), std::vector<int>(n, -1), std::vector<int>(n, -1)};
  t.dist[source] = 0;
  std::deque<int> queue{source};
  while (!queue.empty()) {
    int x = queue.front();
    queue.pop_front();
    for (auto [e, y] : idx.adjacency[x]) {
      if (t.dist[y] != kUnreachable) continue;
      t.dist[y] = t.dist[x] + 1;
      t.parent_edge[y] = e;
      t.parent_vertex[y] = x;
      queue.push_back(y);
    }
  }
  return t;
}

// Minimum-weight perfect matching on a complete weighted graph of k <= ~20
// vertices by DP over subsets; mate[i] is i's partner.
std::vector<int> min_weight_perfect_matching(const std::vector<std::vector<int>>& w) {
  const auto k = w.size();
  std::vector<int> mate(k, -1);
  if (k == 0) return mate;
  if (k > 26) throw CapacityError("subset DP over " + std::to_string(k) + " T-vertices is not supported");
  const std::size_t full = (std::size_t{1} << k) - 1;
  std::vector<int> best(full + 1, kUnreachable);
  std::vector<std::uint8_t> choice(full + 1, 0);
  best[0] = 0;
  // best[mask]: cheapest perfect matching of the vertices in mask, pairing the
  // lowest member of mask first.
  for (std::size_t mask = 1; mask <= full; ++mask) {
    if (std::popcount(mask) % 2 != 0) continue;
    int i = std::countr_zero(mask);
    std::size_t rest = mask & ~(std::size_t{1} << i);
    for (std::size_t m = rest; m != 0; m &= m - 1) {
      int j = std::countr_zero(m);
      int sub = best[rest & ~(std::size_t{1} << j)];
      if (sub >= kUnreachable || w[i][j] >= kUnreachable) continue;
      int cost = sub + w[i][j];
      if (cost < best[mask]) {
        best[mask] = cost;
        choice[mask] = static_cast<std::uint8_t>(j);
      }
    }
  }
  if (best[full] >= kUnreachable) throw InvariantError("T-vertices of a component cannot be paired");
  for (std::size_t mask = full; mask != 0;) {
    int i = std::countr_zero(mask);
    int j = choice[mask];
    mate[i] = j;
    mate[j] = i;
    mask &= ~((std::size_t{1} << i) | (std::size_t{1} << j));
  }
  return mate;
}

}  // namespace

std::size_t cyclomatic_number(const Multigraph& g) {
  GraphIndex idx(g);
  return idx.edge_ids.size() + component_count(idx) - idx.vertex_ids.size();
}

Join find_any_join(const Graft& g) {
  GraphIndex idx(g.graph());
  Forest forest = bfs_forest(idx);
  return to_edge_set(idx, forest_join(idx, forest, g.t()));
}

SolveResult min_join_oracle(const Graft& g, const SolverLimits& limits) {
  GraphIndex idx(g.graph());
  Forest forest = bfs_forest(idx);
  const std::size_t m = idx.edge_ids.size();

  std::vector<EdgeBits> basis;
  for (std::size_t e = 0; e < m; ++e) {
    if (forest.tree_edge[e]) continue;
    EdgeBits cycle(m);
    cycle.flip(e);
    auto [x, y] = idx.ends[e];
    while (x != y) {
      if (forest.depth[x] < forest.depth[y]) std::swap(x, y);
      cycle.flip(static_cast<std::size_t>(forest.parent_edge[x]));
      x = forest.parent_vertex[x];
    }
    basis.push_back(std::move(cycle));
  }
  if (basis.size() > limits.max_cyclomatic) {
    throw CapacityError("cyclomatic number " + std::to_string(basis.size()) + " exceeds oracle limit " +
                        std::to_string(limits.max_cyclomatic));
  }

  EdgeBits current = forest_join(idx, forest, g.t());
  EdgeBits best = current;
  std::size_t best_size = best.count();
  const std::uint64_t members = std::uint64_t{1} << basis.size();
  // Gray-code walk: each step toggles one basis circuit.
  for (std::uint64_t i = 1; i < members; ++i) {
    current ^= basis[static_cast<std::size_t>(std::countr_zero(i))];
    std::size_t size = current.count();
    if (size < best_size || (size == best_size && current.lex_less(best))) {
      best = current;
      best_size = size;
    }
  }
  return {to_edge_set(idx, best), best_size, SolveMethod::Oracle};
}

SolveResult min_join(const Graft& g, const SolverLimits& limits) {
  if (g.t().size() > limits.max_t_size) {
    throw CapacityError("|T| = " + std::to_string(g.t().size()) + " exceeds matching limit " +
                        std::to_string(limits.max_t_size));
  }
  GraphIndex idx(g.graph());
  EdgeBits join(idx.edge_ids.size());
  std::size_t total = 0;

  for (const auto& comp : connected_components(g.graph())) {
    std::vector<int> terminals;
    for (const auto& v : intersection(comp, g.t())) terminals.push_back(idx.vertex(v));
    if (terminals.empty()) continue;
    if (terminals.size() % 2 != 0) throw InputError("not a graft: component of " + *comp.begin() + " has odd |T|");

    std::vector<BfsTree> trees;
    trees.reserve(terminals.size());
    for (int s : terminals) trees.push_back(bfs_from(idx, s));
    const auto k = terminals.size();
    std::vector<std::vector<int>> w(k, std::vector<int>(k, 0));
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) w[i][j] = trees[i].dist[terminals[j]];
    }
    std::vector<int> mate = min_weight_perfect_matching(w);
    for (std::size_t i = 0; i < k; ++i) {
      auto j = static_cast<std::size_t>(mate[i]);
      if (j < i) continue;
      total += static_cast<std::size_t>(w[i][j]);
      for (int x = terminals[j]; x != terminals[i]; x = trees[i].parent_vertex[x]) {
        join.flip(static_cast<std::size_t>(trees[i].parent_edge[x]));
      }
    }
  }
  // Overlapping paths cancel; the result is still a join, so it cannot be
  // smaller than the matching bound.
  if (join.count() != total) throw InvariantError("matched shortest paths overlap in a minimum join");
  return {to_edge_set(idx, join), total, SolveMethod::Matching};
}

SolveResult solve(const Graft& g, const SolverLimits& limits) {
  if (g.t().size() <= limits.max_t_size) return min_join(g, limits);
  return min_join_oracle(g, limits);
}

std::size_t nu(const Graft& g, const SolverLimits& limits) { return solve(g, limits).size; }

bool verify_minimum(const Graft& g, const Join& f, const SolverLimits& limits) {
  if (!is_join(g, f)) throw InputError("edge set is not a join of the graft");
  return f.size() == nu(g, limits);
}

namespace {

void require_distance_preconditions(const Graft& g, const Join& f, const VertexId& u, const VertexId& v,
                                    const SolverLimits& limits) {
  require_vertices(g.graph(), {u, v});
  if (!verify_minimum(g, f, limits)) throw InputError("join is not minimum");
  for (const auto& comp : connected_components(g.graph())) {
    if (comp.contains(u) != comp.contains(v)) {
      throw InputError(u + " and " + v + " lie in different components");
    }
  }
}

DistanceResult distance_unchecked(const Graft& g, const Join& f, const VertexId& u, const VertexId& v,
                                  const SolverLimits& limits) {
  if (u == v) return {u, v, 0, Walk{{u}, {}}};
  Graft shifted(g.graph(), symmetric_difference(g.t(), VertexSet{u, v}));
  SolveResult other = solve(shifted, limits);
  DistanceResult out{u, v, static_cast<int>(other.size) - static_cast<int>(f.size()), {}};
  out.witness = decompose_into_path_and_circuits(g.graph(), symmetric_difference(f, other.join), u, v).path;
  if (out.witness.front() != u) out.witness = out.witness.reversed();
  if (f_weight(f, out.witness) != out.distance) {
    throw InvariantError("extracted path from " + u + " to " + v + " is not F-shortest");
  }
  return out;
}

}  // namespace

DistanceResult distance(const Graft& g, const Join& f, const VertexId& u, const VertexId& v,
                        const SolverLimits& limits) {
  require_distance_preconditions(g, f, u, v, limits);
  return distance_unchecked(g, f, u, v, limits);
}

Walk shortest_path(const Graft& g, const Join& f, const VertexId& u, const VertexId& v,
                   const SolverLimits& limits) {
  return distance(g, f, u, v, limits).witness;
}

EdgeSet max_matching(const Multigraph& g) {
  GraphIndex idx(g);
  const int n = static_cast<int>(idx.vertex_ids.size());
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) {
    for (auto [e, y] : idx.adjacency[x]) {
      if (std::find(adj[x].begin(), adj[x].end(), y) == adj[x].end()) adj[x].push_back(y);
    }
  }

  std::vector<int> mate(n, -1), parent(n, -1), base(n);
  std::vector<bool> used(n), blossom(n);

  auto lca = [&](int a, int b) {
    std::vector<bool> seen(n, false);
    for (;;) {
      a = base[a];
      seen[a] = true;
      if (mate[a] == -1) break;
      a = parent[mate[a]];
    }
    for (;;) {
      b = base[b];
      if (seen[b]) return b;
      b = parent[mate[b]];
    }
  };
  auto mark_path = [&](int v, int b, int child) {
    while (base[v] != b) {
      blossom[base[v]] = blossom[base[mate[v]]] = true;
      parent[v] = child;
      child = mate[v];
      v = parent[mate[v]];
    }
  };
  auto find_augmenting = [&](int root) {
    std::fill(used.begin(), used.end(), false);
    std::fill(parent.begin(), parent.end(), -1);
    std::iota(base.begin(), base.end(), 0);
    used[root] = true;
    std::deque<int> queue{root};
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (int to : adj[v]) {
        if (base[v] == base[to] || mate[v] == to) continue;
        if (to == root || (mate[to] != -1 && parent[mate[to]] != -1)) {
          int top = lca(v, to);
          std::fill(blossom.begin(), blossom.end(), false);
          mark_path(v, top, to);
          mark_path(to, top, v);
          for (int i = 0; i < n; ++i) {
            if (!blossom[base[i]]) continue;
            base[i] = top;
            if (!used[i]) {
              used[i] = true;
              queue.push_back(i);
            }
          }
        } else if (parent[to] == -1) {
          parent[to] = v;
          if (mate[to] == -1) return to;
          used[mate[to]] = true;
          queue.push_back(mate[to]);
        }
      }
    }
    return -1;
  };

  for (int root = 0; root < n; ++root) {
    if (mate[root] != -1) continue;
    for (int v = find_augmenting(root); v != -1;) {
      int pv = parent[v];
      int next = mate[pv];
      mate[v] = pv;
      mate[pv] = v;
      v = next;
    }
  }

  EdgeSet out;
  for (int x = 0; x < n; ++x) {
    if (mate[x] < x) continue;
    for (auto [e, y] : idx.adjacency[x]) {
      if (y == mate[x]) {
        out.insert(idx.edge_ids[e]);
        break;
      }
    }
  }
  return out;
}

}  // namespace grafts
