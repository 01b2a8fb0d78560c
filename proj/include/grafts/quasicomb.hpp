#pragma once

#include <map>
#include <string>
#include <vector>

#include "grafts/graft.hpp"
#include "grafts/solver.hpp"

namespace grafts {

/// B ⊆ T and ν(G, T) = |B|.
bool is_comb(const BipartiteGraft& bg, const SolverLimits& limits = {});
/// ν(G, T) = |B ∩ T|.
bool is_quasicomb(const BipartiteGraft& bg, const SolverLimits& limits = {});
/// Degree form of the quasicomb test for a minimum join F: at most one F-edge
/// at every B-vertex.
bool is_quasicomb_by_degrees(const BipartiteGraft& bg, const Join& f);

struct CriticalityReport {
  VertexId root;
  std::size_t nu = 0;                          // ν(G, T)
  std::map<VertexId, std::size_t> nu_shifted;  // ν(G, T Δ {x, r})
  std::map<VertexId, int> distances;           // F-distance from x to r
  bool verdict = false;
  std::vector<std::string> violations;
};

/// Root r must lie in B. Critical iff every A-vertex has distance 1 and every
/// B-vertex distance 0 to r; cross-component vertices are violations.
CriticalityReport is_critical(const BipartiteGraft& bg, const VertexId& r, const SolverLimits& limits = {});

/// Quasicomb with T ∩ B = B \ {r}.
bool check_cr2qcomb(const BipartiteGraft& bg, const VertexId& r, const SolverLimits& limits = {});

struct StructureReport {
  bool ok = true;
  std::vector<std::string> failures;

  void fail(std::string why) {
    ok = false;
    failures.push_back(std::move(why));
  }
};

/// Structure of a minimum join of a critical quasicomb:
///  (i)   no F-edge at r;
///  (ii)  exactly one F-edge at each v in B \ {r};
///  (iii) shortest paths v -> r from B \ {r} are balanced, weight 0, start in F;
///  (iv)  shortest paths v -> r from A are balanced, weight 1.
StructureReport check_critical_structure(const BipartiteGraft& bg, const VertexId& r, const Join& f,
                                         const SolverLimits& limits = {});

/// For r in A: if dist(r, v) is 0 on A and -1 on B then the graft is a comb.
/// Vacuously true when the hypothesis fails.
bool check_comb_sufficiency(const BipartiteGraft& bg, const VertexId& r, const Join& f,
                            const SolverLimits& limits = {});

}  // namespace grafts
