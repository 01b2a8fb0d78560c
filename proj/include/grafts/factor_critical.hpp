#pragma once

#include <optional>
#include <string>
#include <vector>

#include "grafts/graft.hpp"
#include "grafts/solver.hpp"
#include "grafts/verify_result.hpp"

namespace grafts {

struct OddEar {
  Walk walk;  // path or circuit, in attachment order
  std::vector<VertexId> bonds;
};

/// Member-witness of the family grown from ({r}, ∅) by round ears with an
/// odd number of edges.
struct OddEarDecomposition {
  VertexId root;
  std::vector<OddEar> ears;
};

struct FcGraftEar {
  OddEar ear;
  VertexSet t;  // the ear's own T': its non-bond vertices
};

struct FcGraftDecomposition {
  VertexId root;
  std::vector<FcGraftEar> ears;
};

/// Raised when no odd ear can be attached; carries the grown vertex set.
class NotFactorCritical : public InputError {
 public:
  NotFactorCritical(const std::string& what, VertexSet grown)
      : InputError(what), grown_(std::move(grown)) {}
  const VertexSet& grown() const { return grown_; }

 private:
  VertexSet grown_;
};

bool is_factor_critical_graph(const Multigraph& g);

/// Grows the decomposition from r; throws NotFactorCritical when stuck.
OddEarDecomposition odd_ear_decomposition(const Multigraph& g, const VertexId& r);

VerifyResult verify_odd_ear_decomposition(const Multigraph& g, const OddEarDecomposition& d);

/// G factor-critical and T = V(G) \ {r}. Throws InputError unless (G, T) is a graft.
bool is_factor_critical_graft(const Graft& g, const VertexId& r);
FcGraftDecomposition fc_graft_decomposition(const Graft& g, const VertexId& r);
VerifyResult verify_fc_graft_decomposition(const Graft& g, const FcGraftDecomposition& d);

}  // namespace grafts
