#pragma once

#include <optional>
#include <string>
#include <vector>

#include "grafts/factor_critical.hpp"
#include "grafts/graft.hpp"
#include "grafts/solver.hpp"

namespace grafts {

/// An ear graft (P, T'; A', B') read against a base graft: P as an ordered
/// walk plus its shape. Straight ears run from the free end to the bond;
/// round paths from the smaller bond to the other; circuits start and end at
/// their bond.
struct AttachedEar {
  BipartiteGraft ear;
  Walk walk;
  EarShape shape;
};

/// Validates (P, T'; A', B') as an ear graft relative to `base`: P is an ear
/// relative to V(base), A ∩ B' = ∅, A' ∩ B = ∅, and the edge ids are new.
/// Throws InputError when malformed.
AttachedEar attach_ear(const BipartiteGraft& base, const BipartiteGraft& ear);

/// Empty when the ear graft is effective relative to `base`, else the first
/// failed condition. With B* = B ∪ B' and s, t the bonds:
///  (i)   every non-bond vertex of P in B' lies in T';
///  (ii)  no bond in B* lies in T';
///  (iii) straight ears: the free end v is not in A' ∩ T', and the bond is
///        not in A' \ T';
///  (iv)  straight ears: every vertex other than v and the bond lies in T'.
/// Throws InputError when the ear graft is malformed.
std::string effectiveness_violation(const BipartiteGraft& base, const BipartiteGraft& ear);
bool is_effective(const BipartiteGraft& base, const BipartiteGraft& ear);

/// The only minimum join of an effective straight ear, read off the end
/// classes (s the free end, t the bond):
///   s in A', t in B' -> perfect matching of P - s - t
///   s in A', t in A' -> perfect matching of P - s
///   s in B', t in A' -> perfect matching of P
///   s in B', t in B' -> perfect matching of P - t
Join straight_ear_unique_join(const BipartiteGraft& base, const BipartiteGraft& ear);

struct EarWitness {
  VertexId vertex;
  VertexId bond;
  Walk path;  // from vertex to bond along the ear
  int weight = 0;
  bool is_bond = false;
  bool ok = false;
};

/// For every vertex x of the ear, a bond b and the segment xPb with
///   x in A': weight 0 to a bond in A', weight 1 to a bond in B';
///   x in B': weight -1 to a bond in A', weight 0 to a bond in B' with x's
///            path edge in F'.
/// Segments must be F'-balanced. Bonds get a trivial entry. Entries with
/// ok == false have no witness.
std::vector<EarWitness> ear_path_witness(const BipartiteGraft& base, const BipartiteGraft& ear, const Join& ear_join);

struct CertificateEdge {
  EdgeId id;
  VertexId u;
  VertexId v;
  friend bool operator==(const CertificateEdge&, const CertificateEdge&) = default;
};

struct CertificateStep {
  EarKind kind = EarKind::Round;
  std::vector<CertificateEdge> edges;  // walk order
  VertexSet t;
  VertexSet a;
  VertexSet b;
  std::vector<VertexId> bonds;
  EdgeSet join;
  friend bool operator==(const CertificateStep&, const CertificateStep&) = default;
};

struct GraftSummary {
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::size_t t_size = 0;
  std::size_t nu = 0;
  friend bool operator==(const GraftSummary&, const GraftSummary&) = default;
};

/// Graft ear decomposition from ({r}, ∅; ∅, {r}). Each step carries its ear
/// join; the union of the step joins is a minimum join of the final graft.
struct EarDecomposition {
  VertexId root;
  std::vector<CertificateStep> steps;
  GraftSummary summary;
  friend bool operator==(const EarDecomposition&, const EarDecomposition&) = default;
};

/// Rebuilds the ear graft a step describes. Throws InputError when malformed.
BipartiteGraft step_graft(const CertificateStep& step);

struct EarInput {
  BipartiteGraft ear;
  std::optional<Join> join;  // computed when absent
};

struct BuildResult {
  BipartiteGraft graft;
  Join join;
  EarDecomposition certificate;
};

/// ⊕-fold of the base and the ears. Every ear must be effective relative to
/// the running sum and its join minimum; the running union of the joins is
/// checked to stay a minimum join. Errors name the failing ear index.
BuildResult build(const VertexId& root, const std::vector<EarInput>& ears, const SolverLimits& limits = {});

/// F-balanced graft ear decomposition of a critical quasicomb with root r.
/// F must be a minimum join. Throws InputError on failed preconditions and
/// InvariantError on an internal breach.
EarDecomposition decompose(const BipartiteGraft& bg, const VertexId& r, const Join& f, const SolverLimits& limits = {});

/// Full replay of a certificate against `bg`. With `f`, each step's join must
/// also equal F ∩ E(P).
VerifyResult verify_decomposition(const BipartiteGraft& bg, const VertexId& r, const EarDecomposition& d,
                                  const std::optional<Join>& f = std::nullopt, const SolverLimits& limits = {});

}  // namespace grafts
