#pragma once

#include <cstddef>

#include "grafts/graft.hpp"

namespace grafts {

/// Capacity limits. Exceeding one raises CapacityError.
struct SolverLimits {
  /// Oracle: |E| - |V| + #components.
  std::size_t max_cyclomatic = 20;
  /// Matching solver: |T|.
  std::size_t max_t_size = 20;
};

enum class SolveMethod { Oracle, Matching };

struct SolveResult {
  Join join;
  std::size_t size = 0;  // ν(G, T)
  SolveMethod method = SolveMethod::Matching;
};

/// F-distance between u and v together with an F-shortest path.
///
/// Sign convention: distance = ν(G, T Δ {u, v}) - ν(G, T), which equals the
/// minimum F-weight over u-v paths. A single edge uv with T = {u, v} and
/// F = {uv} has distance -1.
struct DistanceResult {
  VertexId u;
  VertexId v;
  int distance = 0;
  Walk witness;
};

std::size_t cyclomatic_number(const Multigraph& g);

/// Some join: the unique join of a BFS spanning forest.
Join find_any_join(const Graft& g);

/// Exact minimum join by enumerating the cycle space around find_any_join.
/// Ties go to the lexicographically smallest edge-id set.
SolveResult min_join_oracle(const Graft& g, const SolverLimits& limits = {});

/// Exact minimum join via shortest paths between T-vertices and a subset-DP
/// minimum-weight perfect matching on T.
SolveResult min_join(const Graft& g, const SolverLimits& limits = {});

/// min_join, falling back to the oracle when only |T| is over its limit.
SolveResult solve(const Graft& g, const SolverLimits& limits = {});
std::size_t nu(const Graft& g, const SolverLimits& limits = {});

/// |F| = ν(G, T). Throws InputError when F is not a join.
bool verify_minimum(const Graft& g, const Join& f, const SolverLimits& limits = {});

/// Requires F minimum and u, v in one component (InputError otherwise).
DistanceResult distance(const Graft& g, const Join& f, const VertexId& u, const VertexId& v,
                        const SolverLimits& limits = {});

/// Simple u-v path of F-weight equal to the F-distance, extracted from
/// F Δ F' where F' is a minimum join of (G, T Δ {u, v}).
Walk shortest_path(const Graft& g, const Join& f, const VertexId& u, const VertexId& v,
                   const SolverLimits& limits = {});

/// Maximum-cardinality matching (Edmonds' blossom algorithm). Between
/// parallel edges the smallest id is used.
EdgeSet max_matching(const Multigraph& g);

}  // namespace grafts
