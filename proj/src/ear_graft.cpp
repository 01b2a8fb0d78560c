#include "grafts/ear_graft.hpp"

#include <algorithm>

#include "grafts/quasicomb.hpp"

namespace grafts {

namespace {

Walk rotate_circuit(const Walk& w, const VertexId& start) {
  auto it = std::find(w.vertices.begin(), w.vertices.end() - 1, start);
  if (it == w.vertices.end() - 1) throw InputError("vertex " + start + " is not on the circuit");
  auto i = static_cast<std::size_t>(it - w.vertices.begin());
  const std::size_t k = w.edges.size();
  Walk out;
  for (std::size_t j = 0; j <= k; ++j) out.vertices.push_back(w.vertices[(i + j) % k]);
  for (std::size_t j = 0; j < k; ++j) out.edges.push_back(w.edges[(i + j) % k]);
  return out;
}

// Segments of the ear from x to bond b: one for paths, both arcs for circuits.
std::vector<Walk> segments_to_bond(const Walk& walk, const VertexId& x, const VertexId& b) {
  if (!walk.closed()) return {subpath(walk, x, b)};
  Walk w = rotate_circuit(walk, b);
  auto i = static_cast<std::size_t>(std::find(w.vertices.begin(), w.vertices.end() - 1, x) - w.vertices.begin());
  Walk forward{{w.vertices.begin() + i, w.vertices.end()}, {w.edges.begin() + i, w.edges.end()}};
  Walk backward{{w.vertices.begin(), w.vertices.begin() + i + 1}, {w.edges.begin(), w.edges.begin() + i}};
  return {forward, backward.reversed()};
}

const VertexId& free_end(const AttachedEar& ear) { return ear.walk.front(); }

Join path_perfect_matching(const Walk& walk, std::size_t first, std::size_t last) {
  // Vertices first..last (inclusive) of a path; empty range when first > last.
  Join out;
  if (first > last) return out;
  if ((last - first + 1) % 2 != 0) throw InvariantError("path segment has an odd number of vertices");
  for (std::size_t i = first; i < last; i += 2) out.insert(walk.edges[i]);
  return out;
}

}  // namespace

AttachedEar attach_ear(const BipartiteGraft& base, const BipartiteGraft& ear) {
  const Multigraph& p = ear.graph();
  if (p.edge_count() == 0) throw InputError("ear has no edges");
  for (const auto& [e, _] : p.edges()) {
    if (base.graph().has_edge(e)) throw InputError("ear edge id " + e + " already exists in the base");
  }
  Multigraph spanned = p.restrict_to(p.edge_ids(), false);
  if (spanned.vertex_count() != p.vertex_count()) throw InputError("ear has a vertex without edges");
  for (const auto& v : intersection(base.a(), ear.b())) throw InputError("class clash: " + v + " is in A and in B'");
  for (const auto& v : intersection(ear.a(), base.b())) throw InputError("class clash: " + v + " is in A' and in B");

  const VertexSet base_vertices = base.graph().vertices();
  auto shape = classify_ear(p, p.edge_ids(), base_vertices);
  if (!shape) throw InputError("ear is not a path or circuit attached to the base as an ear");
  Walk walk = *as_path_or_circuit(p, p.edge_ids());
  if (walk.closed()) {
    walk = rotate_circuit(walk, shape->bonds.front());
  } else if (shape->kind == EarKind::Straight) {
    if (walk.front() == shape->bonds.front()) walk = walk.reversed();
  } else if (walk.front() != shape->bonds.front()) {
    walk = walk.reversed();
  }
  return {ear, std::move(walk), std::move(*shape)};
}

std::string effectiveness_violation(const BipartiteGraft& base, const BipartiteGraft& ear) {
  AttachedEar attached = attach_ear(base, ear);
  const VertexSet& tp = ear.t();
  const VertexSet bonds(attached.shape.bonds.begin(), attached.shape.bonds.end());

  for (const auto& x : ear.graph().vertices()) {
    if (!bonds.contains(x) && ear.in_b(x) && !tp.contains(x)) {
      return "(i) vertex " + x + " is on the tooth side but not in T'";
    }
  }
  for (const auto& s : bonds) {
    if ((base.in_b(s) || ear.in_b(s)) && tp.contains(s)) {
      return "(ii) bond " + s + " is on the tooth side and in T'";
    }
  }
  if (attached.shape.kind == EarKind::Straight) {
    const VertexId& v = free_end(attached);
    const VertexId& s = attached.shape.bonds.front();
    if (ear.in_a(v) && tp.contains(v)) return "(iii) free end " + v + " is in A' ∩ T'";
    if (ear.in_a(s) && !tp.contains(s)) return "(iii) bond " + s + " is in A' \\ T'";
    for (const auto& x : ear.graph().vertices()) {
      if (x != v && x != s && !tp.contains(x)) return "(iv) inner vertex " + x + " of a straight ear is not in T'";
    }
  }
  return {};
}

bool is_effective(const BipartiteGraft& base, const BipartiteGraft& ear) {
  return effectiveness_violation(base, ear).empty();
}

Join straight_ear_unique_join(const BipartiteGraft& base, const BipartiteGraft& ear) {
  AttachedEar attached = attach_ear(base, ear);
  if (attached.shape.kind != EarKind::Straight) throw InputError("ear is not straight");
  if (auto why = effectiveness_violation(base, ear); !why.empty()) throw InputError("ear is not effective: " + why);

  const Walk& w = attached.walk;
  const std::size_t k = w.edges.size();
  const bool s_in_a = ear.in_a(w.front());
  const bool t_in_a = ear.in_a(w.back());
  Join f;
  if (s_in_a && !t_in_a) {
    f = k >= 2 ? path_perfect_matching(w, 1, k - 1) : Join{};
  } else if (s_in_a && t_in_a) {
    f = path_perfect_matching(w, 1, k);
  } else if (!s_in_a && t_in_a) {
    f = path_perfect_matching(w, 0, k);
  } else {
    f = path_perfect_matching(w, 0, k - 1);
  }

  for (std::size_t i = 1; i < k; ++i) {
    if (!ear.t().contains(w.vertices[i])) throw InvariantError("inner vertex " + w.vertices[i] + " is not in T'");
  }
  if (!is_join(ear.graft(), f)) throw InvariantError("straight-ear matching is not a join of the ear");
  return f;
}

std::vector<EarWitness> ear_path_witness(const BipartiteGraft& base, const BipartiteGraft& ear, const Join& ear_join) {
  AttachedEar attached = attach_ear(base, ear);
  const VertexSet bonds(attached.shape.bonds.begin(), attached.shape.bonds.end());
  std::vector<EarWitness> out;

  for (const auto& x : ear.graph().vertices()) {
    if (bonds.contains(x)) {
      out.push_back({x, x, Walk{{x}, {}}, 0, true, true});
      continue;
    }
    EarWitness entry{x, {}, {}, 0, false, false};
    for (const auto& b : attached.shape.bonds) {
      for (Walk& seg : segments_to_bond(attached.walk, x, b)) {
        const int weight = f_weight(ear_join, seg);
        if (!is_balanced_path(ear, seg, ear_join)) continue;
        bool ok = false;
        if (ear.in_a(x)) {
          ok = weight == (ear.in_a(b) ? 0 : 1);
        } else if (ear.in_a(b)) {
          ok = weight == -1;
        } else {
          ok = weight == 0 && ear_join.contains(seg.edges.front());
        }
        if (ok) {
          entry = {x, b, std::move(seg), weight, false, true};
          break;
        }
      }
      if (entry.ok) break;
    }
    out.push_back(std::move(entry));
  }
  return out;
}

BipartiteGraft step_graft(const CertificateStep& step) {
  Multigraph p;
  for (const auto& e : step.edges) p.add_edge(e.id, e.u, e.v);
  return BipartiteGraft(Graft(std::move(p), step.t), step.a, step.b);
}

namespace {

CertificateStep make_step(const AttachedEar& attached, const Join& join) {
  CertificateStep step;
  step.kind = attached.shape.kind;
  for (std::size_t i = 0; i < attached.walk.edges.size(); ++i) {
    step.edges.push_back({attached.walk.edges[i], attached.walk.vertices[i], attached.walk.vertices[i + 1]});
  }
  step.t = attached.ear.t();
  step.a = attached.ear.a();
  step.b = attached.ear.b();
  step.bonds = attached.shape.bonds;
  step.join = join;
  return step;
}

GraftSummary summarize(const BipartiteGraft& bg, std::size_t nu_value) {
  return {bg.graph().vertex_count(), bg.graph().edge_count(), bg.t().size(), nu_value};
}

std::string at_ear(std::size_t i) { return "ear " + std::to_string(i) + ": "; }

}  // namespace

BuildResult build(const VertexId& root, const std::vector<EarInput>& ears, const SolverLimits& limits) {
  BuildResult out{single_vertex_graft(root), {}, {root, {}, {}}};
  for (std::size_t i = 0; i < ears.size(); ++i) {
    const BipartiteGraft& ear = ears[i].ear;
    AttachedEar attached;
    std::string why;
    try {
      attached = attach_ear(out.graft, ear);
      why = effectiveness_violation(out.graft, ear);
    } catch (const InputError& err) {
      throw InputError(at_ear(i) + err.what());
    }
    if (!why.empty()) throw InputError(at_ear(i) + "not effective: " + why);

    Join join;
    if (attached.shape.kind == EarKind::Straight) {
      join = straight_ear_unique_join(out.graft, ear);
      if (ears[i].join && *ears[i].join != join) throw InputError(at_ear(i) + "join differs from the unique minimum join");
    } else if (ears[i].join) {
      join = *ears[i].join;
      if (!is_join(ear.graft(), join)) throw InputError(at_ear(i) + "join is not a join of the ear");
      if (join.size() != nu(ear.graft(), limits)) throw InputError(at_ear(i) + "join is not minimum");
    } else {
      join = solve(ear.graft(), limits).join;
    }

    out.graft = graft_sum(out.graft, ear);
    out.join.insert(join.begin(), join.end());
    if (!verify_minimum(out.graft.graft(), out.join, limits)) {
      throw InvariantError(at_ear(i) + "union of ear joins is not a minimum join");
    }
    out.certificate.steps.push_back(make_step(attached, join));
  }
  out.certificate.summary = summarize(out.graft, out.join.size());
  return out;
}

namespace {

// Grows the subgraft (G', T'; A', B') and keeps E_G[B', A \ A'] ∩ F = ∅.
class Decomposer {
 public:
  Decomposer(const BipartiteGraft& bg, const VertexId& r, const Join& f, const SolverLimits& limits)
      : bg_(bg), root_(r), f_(f), limits_(limits), acc_(single_vertex_graft(r)) {}

  EarDecomposition run() {
    EarDecomposition out{root_, {}, {}};
    const VertexSet all = bg_.graph().vertices();
    while (acc_.graph().vertex_count() < all.size()) {
      check_invariant();
      out.steps.push_back(extend_by_vertex());
    }
    check_invariant();
    for (const auto& [e, ends] : bg_.graph().edges()) {
      if (acc_.graph().has_edge(e)) continue;
      VertexSet t = f_.contains(e) ? VertexSet{ends.u, ends.v} : VertexSet{};
      out.steps.push_back(emit(Walk{{ends.u, ends.v}, {e}}, std::move(t)));
    }
    if (!(acc_ == bg_)) throw InvariantError("replay of the decomposition differs from the input graft");
    out.summary = summarize(bg_, f_.size());
    return out;
  }

 private:
  CertificateStep extend_by_vertex() {
    const VertexSet& a_cov = acc_.a();
    const VertexSet& b_cov = acc_.b();
    const VertexSet a_new = difference(bg_.a(), a_cov);
    const VertexSet b_new = difference(bg_.b(), b_cov);

    // (a) a non-join edge from B' to an uncovered A-vertex.
    EdgeSet grow_a = edges_between(bg_.graph(), b_cov, a_new);
    if (!grow_a.empty()) {
      const EdgeId& e = *grow_a.begin();
      const Edge& ends = bg_.graph().edge(e);
      const VertexId y = b_cov.contains(ends.u) ? ends.u : ends.v;
      return emit(Walk{{ends.other(y), y}, {e}}, {});
    }

    EdgeSet grow_b = edges_between(bg_.graph(), a_cov, b_new);
    if (grow_b.empty()) throw InvariantError("no edge leaves the covered subgraft; input is not connected");
    const EdgeId& f = *grow_b.begin();
    const Edge& ends = bg_.graph().edge(f);
    const VertexId u = a_cov.contains(ends.u) ? ends.u : ends.v;
    const VertexId v = ends.other(u);

    // (c) the join edge itself.
    if (f_.contains(f)) return emit(Walk{{u, v}, {f}}, {u, v});

    // (b) f plus the prefix of a weight-0 shortest path from v to r, up to the
    // first covered vertex.
    Walk p = shortest_path(bg_.graft(), f_, v, root_, limits_);
    if (p.edges.empty() || !f_.contains(p.edges.front())) {
      throw InvariantError("shortest path from " + v + " does not start with a join edge");
    }
    Walk q{{u, v}, {f}};
    for (std::size_t i = 1; i < p.vertices.size(); ++i) {
      q.edges.push_back(p.edges[i - 1]);
      q.vertices.push_back(p.vertices[i]);
      if (acc_.graph().has_vertex(p.vertices[i])) break;
    }
    if (!acc_.graph().has_vertex(q.back())) throw InvariantError("shortest path never reaches the covered subgraft");
    VertexSet t;
    for (const auto& x : q.vertex_set()) {
      int d = 0;
      for (std::size_t i = 0; i < q.edges.size(); ++i) {
        const Edge& ends_i = bg_.graph().edge(q.edges[i]);
        if (ends_i.touches(x) && f_.contains(q.edges[i])) ++d;
      }
      if (d % 2 == 1) t.insert(x);
    }
    return emit(q, std::move(t));
  }

  CertificateStep emit(const Walk& walk, VertexSet t) {
    Multigraph p;
    VertexSet a;
    VertexSet b;
    for (std::size_t i = 0; i < walk.edges.size(); ++i) {
      p.add_edge(walk.edges[i], walk.vertices[i], walk.vertices[i + 1]);
    }
    for (const auto& x : p.vertices()) (bg_.in_a(x) ? a : b).insert(x);
    BipartiteGraft ear(Graft(std::move(p), std::move(t)), std::move(a), std::move(b));
    const std::size_t index = acc_.graph().edge_count();

    AttachedEar attached = attach_ear(acc_, ear);
    if (auto why = effectiveness_violation(acc_, ear); !why.empty()) {
      throw InvariantError("decomposition ear at " + std::to_string(index) + " covered edges is not effective: " + why);
    }
    Join join = intersection(f_, ear.graph().edge_ids());
    if (!is_join(ear.graft(), join) || join.size() != nu(ear.graft(), limits_)) {
      throw InvariantError("F restricted to an ear is not a minimum join of the ear");
    }
    acc_ = graft_sum(acc_, ear);
    return make_step(attached, join);
  }

  void check_invariant() const {
    EdgeSet crossing = edges_between(bg_.graph(), acc_.b(), difference(bg_.a(), acc_.a()));
    for (const auto& e : crossing) {
      if (f_.contains(e)) throw InvariantError("join edge " + e + " joins B' to an uncovered A-vertex");
    }
  }

  const BipartiteGraft& bg_;
  VertexId root_;
  const Join& f_;
  SolverLimits limits_;
  BipartiteGraft acc_;
};

}  // namespace

EarDecomposition decompose(const BipartiteGraft& bg, const VertexId& r, const Join& f, const SolverLimits& limits) {
  if (!bg.in_b(r)) throw InputError("root " + r + " is not in B");
  if (!verify_minimum(bg.graft(), f, limits)) throw InputError("join is not minimum");
  if (!is_critical(bg, r, limits).verdict) throw InputError("graft is not a critical quasicomb with root " + r);
  return Decomposer(bg, r, f, limits).run();
}

VerifyResult verify_decomposition(const BipartiteGraft& bg, const VertexId& r, const EarDecomposition& d,
                                  const std::optional<Join>& f, const SolverLimits& limits) {
  if (d.root != r) return VerifyResult::fail(std::nullopt, "certificate root " + d.root + " differs from " + r);
  if (!bg.in_b(r)) return VerifyResult::fail(std::nullopt, "root " + r + " is not in B");
  if (f && !is_join(bg.graft(), *f)) return VerifyResult::fail(std::nullopt, "given edge set is not a join");

  BipartiteGraft acc = single_vertex_graft(r);
  Join joined;
  for (std::size_t i = 0; i < d.steps.size(); ++i) {
    const CertificateStep& step = d.steps[i];
    try {
      BipartiteGraft ear = step_graft(step);
      AttachedEar attached = attach_ear(acc, ear);
      if (attached.shape.kind != step.kind) return VerifyResult::fail(i, "recorded ear kind does not match");
      if (attached.shape.bonds != step.bonds) return VerifyResult::fail(i, "recorded bonds do not match");
      for (std::size_t j = 0; j < step.edges.size(); ++j) {
        if (step.edges[j].u != attached.walk.vertices[j] || step.edges[j].v != attached.walk.vertices[j + 1] ||
            step.edges[j].id != attached.walk.edges[j]) {
          return VerifyResult::fail(i, "edges are not listed in ear order");
        }
      }
      if (auto why = effectiveness_violation(acc, ear); !why.empty()) {
        return VerifyResult::fail(i, "ear is not effective: " + why);
      }
      if (!is_subset(step.join, ear.graph().edge_ids()) || !is_join(ear.graft(), step.join)) {
        return VerifyResult::fail(i, "recorded join is not a join of the ear");
      }
      if (step.join.size() != nu(ear.graft(), limits)) return VerifyResult::fail(i, "recorded join is not minimum");
      if (f && step.join != intersection(*f, ear.graph().edge_ids())) {
        return VerifyResult::fail(i, "recorded join differs from F restricted to the ear");
      }
      acc = graft_sum(acc, ear);
      joined.insert(step.join.begin(), step.join.end());
    } catch (const InputError& err) {
      return VerifyResult::fail(i, err.what());
    }
  }
  if (!(acc == bg)) return VerifyResult::fail(std::nullopt, "replay does not reproduce the graft");
  if (!verify_minimum(bg.graft(), joined, limits)) {
    return VerifyResult::fail(std::nullopt, "union of the ear joins is not a minimum join");
  }
  if (f && joined != *f) return VerifyResult::fail(std::nullopt, "union of the ear joins differs from F");
  if (d.summary != summarize(bg, joined.size())) return VerifyResult::fail(std::nullopt, "summary does not match");
  return {};
}

}  // namespace grafts
