#include "grafts/quasicomb.hpp"

namespace grafts {

namespace {

bool same_component(const Multigraph& g, const VertexId& u, const VertexId& v) {
  for (const auto& comp : connected_components(g)) {
    if (comp.contains(u)) return comp.contains(v);
  }
  return false;
}

}  // namespace

bool is_comb(const BipartiteGraft& bg, const SolverLimits& limits) {
  return is_subset(bg.b(), bg.t()) && nu(bg.graft(), limits) == bg.b().size();
}

bool is_quasicomb(const BipartiteGraft& bg, const SolverLimits& limits) {
  return nu(bg.graft(), limits) == intersection(bg.b(), bg.t()).size();
}

bool is_quasicomb_by_degrees(const BipartiteGraft& bg, const Join& f) {
  for (const auto& v : bg.b()) {
    if (join_degree(bg.graph(), f, v) > 1) return false;
  }
  return true;
}

CriticalityReport is_critical(const BipartiteGraft& bg, const VertexId& r, const SolverLimits& limits) {
  if (!bg.in_b(r)) throw InputError("root " + r + " is not in B");
  SolveResult base = solve(bg.graft(), limits);
  CriticalityReport report{r, base.size, {}, {}, true, {}};

  for (const auto& x : bg.graph().vertices()) {
    if (x == r) continue;
    const int expected = bg.in_a(x) ? 1 : 0;
    if (!same_component(bg.graph(), x, r)) {
      report.violations.push_back(x + ": not connected to the root");
      continue;
    }
    DistanceResult d = distance(bg.graft(), base.join, x, r, limits);
    report.distances[x] = d.distance;
    report.nu_shifted[x] = base.size + static_cast<std::size_t>(d.distance);
    if (d.distance != expected) {
      report.violations.push_back(x + ": distance " + std::to_string(d.distance) + ", expected " +
                                  std::to_string(expected));
    }
  }
  report.verdict = report.violations.empty();
  return report;
}

bool check_cr2qcomb(const BipartiteGraft& bg, const VertexId& r, const SolverLimits& limits) {
  return is_quasicomb(bg, limits) && intersection(bg.t(), bg.b()) == difference(bg.b(), {r});
}

StructureReport check_critical_structure(const BipartiteGraft& bg, const VertexId& r, const Join& f,
                                         const SolverLimits& limits) {
  if (!bg.in_b(r)) throw InputError("root " + r + " is not in B");
  if (!verify_minimum(bg.graft(), f, limits)) throw InputError("join is not minimum");
  StructureReport report;
  const Multigraph& g = bg.graph();

  if (join_degree(g, f, r) != 0) report.fail("(i) root " + r + " is incident to a join edge");
  for (const auto& v : bg.b()) {
    if (v != r && join_degree(g, f, v) != 1) report.fail("(ii) " + v + " is not incident to exactly one join edge");
  }
  for (const auto& v : g.vertices()) {
    if (v == r) continue;
    if (!same_component(g, v, r)) {
      report.fail(v + ": not connected to the root");
      continue;
    }
    Walk p = shortest_path(bg.graft(), f, v, r, limits);
    const int weight = f_weight(f, p);
    const bool balanced = is_balanced_path(bg, p, f);
    if (bg.in_b(v)) {
      if (!balanced || weight != 0 || !f.contains(p.edges.front())) {
        report.fail("(iii) shortest path from " + v + " has weight " + std::to_string(weight) +
                    (balanced ? "" : ", unbalanced") + (f.contains(p.edges.front()) ? "" : ", first edge off F"));
      }
    } else if (!balanced || weight != 1) {
      report.fail("(iv) shortest path from " + v + " has weight " + std::to_string(weight) +
                  (balanced ? "" : ", unbalanced"));
    }
  }
  return report;
}

bool check_comb_sufficiency(const BipartiteGraft& bg, const VertexId& r, const Join& f, const SolverLimits& limits) {
  if (!bg.in_a(r)) throw InputError("vertex " + r + " is not in A");
  for (const auto& v : bg.graph().vertices()) {
    if (!same_component(bg.graph(), r, v)) return true;
    const int expected = bg.in_a(v) ? 0 : -1;
    if (distance(bg.graft(), f, r, v, limits).distance != expected) return true;
  }
  return is_comb(bg, limits);
}

}  // namespace grafts
