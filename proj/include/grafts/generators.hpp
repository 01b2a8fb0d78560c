#pragma once

#include <cstdint>
#include <random>

#include "grafts/ear_graft.hpp"
#include "grafts/graft.hpp"

namespace grafts {

enum class InstanceKind { RandomGraft, CriticalQuasicomb, FactorCritical };

/// Identical configurations produce identical instances. The engine is
/// std::mt19937_64 and bounded draws are taken by modulo, so streams do not
/// depend on the standard library's distribution implementations.
struct GenConfig {
  std::uint64_t seed = 0;
  InstanceKind kind = InstanceKind::RandomGraft;
  std::size_t max_vertices = 8;
  std::size_t max_edges = 12;
  std::size_t max_t = 8;
  double t_density = 0.5;
  std::size_t ears = 3;            // exact ear count for the ear-grown kinds
  std::size_t max_ear_length = 5;
};

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  /// Uniform-ish in [0, n); n > 0.
  std::size_t below(std::size_t n) { return static_cast<std::size_t>(engine_() % n); }
  std::size_t between(std::size_t lo, std::size_t hi) { return lo + below(hi - lo + 1); }
  bool chance(double p) { return static_cast<double>(engine_() >> 11) * 0x1.0p-53 < p; }

 private:
  std::mt19937_64 engine_;
};

/// Multigraph on 1..max_vertices vertices with up to max_edges edges
/// (parallel edges allowed) and a T of at most max_t vertices with even count
/// on every component.
Graft random_graft(const GenConfig& cfg);

/// Critical quasicomb with root "r" grown from `cfg.ears` randomly sampled
/// effective ears (rejection sampling, 1000 draws per ear; the ear length
/// bound shrinks on exhaustion). Throws CapacityError when sampling fails.
BuildResult random_critical_quasicomb(const GenConfig& cfg);

/// Factor-critical graph grown from root "r" by `cfg.ears` random round ears
/// with an odd number of edges.
Multigraph random_factor_critical(const GenConfig& cfg);

}  // namespace grafts
