#include "grafts/generators.hpp"

#include <algorithm>

namespace grafts {

namespace {

std::string vertex_name(std::size_t i) { return "v" + std::to_string(i); }
std::string edge_name(std::size_t i) { return "e" + std::to_string(i); }

template <typename T>
const T& pick(Rng& rng, const std::vector<T>& items) {
  return items[rng.below(items.size())];
}

// Fresh ids continue after the largest id already issued.
struct Namer {
  std::size_t vertices = 0;
  std::size_t edges = 0;
  VertexId vertex() { return vertex_name(++vertices); }
  EdgeId edge() { return edge_name(++edges); }
};

}  // namespace

Graft random_graft(const GenConfig& cfg) {
  if (cfg.max_vertices == 0) throw InputError("max_vertices must be positive");
  Rng rng(cfg.seed);
  const std::size_t n = rng.between(1, cfg.max_vertices);
  const std::size_t m = n < 2 ? 0 : rng.between(0, cfg.max_edges);

  Multigraph g;
  std::vector<VertexId> ids;
  for (std::size_t i = 1; i <= n; ++i) {
    ids.push_back(vertex_name(i));
    g.add_vertex(ids.back());
  }
  for (std::size_t i = 1; i <= m; ++i) {
    std::size_t u = rng.below(n);
    std::size_t v = rng.below(n - 1);
    if (v >= u) ++v;
    g.add_edge(edge_name(i), ids[u], ids[v]);
  }

  std::vector<VertexSet> per_component;
  for (const auto& comp : connected_components(g)) {
    VertexSet chosen;
    for (const auto& v : comp) {
      if (rng.chance(cfg.t_density)) chosen.insert(v);
    }
    if (chosen.size() % 2 != 0) chosen.erase(std::prev(chosen.end()));
    per_component.push_back(std::move(chosen));
  }
  std::size_t total = 0;
  for (const auto& c : per_component) total += c.size();
  for (auto& c : per_component) {
    while (total > cfg.max_t && c.size() >= 2) {
      c.erase(std::prev(c.end()));
      c.erase(std::prev(c.end()));
      total -= 2;
    }
  }
  VertexSet t;
  for (const auto& c : per_component) t.insert(c.begin(), c.end());
  return Graft(std::move(g), std::move(t));
}

namespace {

enum class Side { A, B };

Side flip(Side s) { return s == Side::A ? Side::B : Side::A; }

// One attempt at an ear attached to `acc`; nullopt when the draw is not
// effective or does not fit.
std::optional<BipartiteGraft> sample_ear(Rng& rng, const BipartiteGraft& acc, std::size_t max_len,
                                         std::size_t room, Namer names) {
  const VertexSet current = acc.graph().vertices();
  const std::vector<VertexId> existing(current.begin(), current.end());
  auto side_of = [&](const VertexId& v) { return acc.in_a(v) ? Side::A : Side::B; };

  std::vector<VertexId> path;
  std::vector<Side> sides;
  const std::size_t shape = rng.below(3);  // 0 straight, 1 round path, 2 circuit
  if (shape == 0) {
    if (room == 0) return std::nullopt;
    const std::size_t len = rng.between(1, std::min(max_len, room));
    path.push_back(pick(rng, existing));
    sides.push_back(side_of(path.back()));
    for (std::size_t i = 0; i < len; ++i) {
      path.push_back(names.vertex());
      sides.push_back(flip(sides.back()));
    }
  } else if (shape == 1) {
    if (existing.size() < 2) return std::nullopt;
    const VertexId s = pick(rng, existing);
    VertexId t = pick(rng, existing);
    if (s == t) return std::nullopt;
    const bool same = side_of(s) == side_of(t);
    std::size_t len = rng.between(1, std::max<std::size_t>(max_len, 2));
    if ((len % 2 == 0) != same) ++len;
    if (len - 1 > room) return std::nullopt;
    path.push_back(s);
    sides.push_back(side_of(s));
    for (std::size_t i = 1; i < len; ++i) {
      path.push_back(names.vertex());
      sides.push_back(flip(sides.back()));
    }
    path.push_back(t);
    sides.push_back(side_of(t));
  } else {
    std::size_t len = 2 * rng.between(1, std::max<std::size_t>(max_len / 2, 1));
    if (len - 1 > room) return std::nullopt;
    const VertexId s = pick(rng, existing);
    path.push_back(s);
    sides.push_back(side_of(s));
    for (std::size_t i = 1; i < len; ++i) {
      path.push_back(names.vertex());
      sides.push_back(flip(sides.back()));
    }
    path.push_back(s);
    sides.push_back(side_of(s));
  }

  Multigraph p;
  VertexSet a;
  VertexSet b;
  VertexSet t;
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (i + 1 < path.size()) p.add_edge(names.edge(), path[i], path[i + 1]);
    (sides[i] == Side::A ? a : b).insert(path[i]);
  }
  for (const auto& v : p.vertices()) {
    if (rng.chance(0.5)) t.insert(v);
  }
  if (!is_graft(p, t)) return std::nullopt;
  BipartiteGraft ear(Graft(std::move(p), std::move(t)), std::move(a), std::move(b));
  try {
    if (!is_effective(acc, ear)) return std::nullopt;
  } catch (const InputError&) {
    return std::nullopt;
  }
  return ear;
}

}  // namespace

BuildResult random_critical_quasicomb(const GenConfig& cfg) {
  constexpr std::size_t kRetries = 1000;
  Rng rng(cfg.seed);
  const VertexId root = "r";
  BipartiteGraft acc = single_vertex_graft(root);
  std::vector<EarInput> ears;
  Namer names;

  for (std::size_t i = 0; i < cfg.ears; ++i) {
    const std::size_t room = cfg.max_vertices > acc.graph().vertex_count()
                                 ? cfg.max_vertices - acc.graph().vertex_count()
                                 : 0;
    std::optional<BipartiteGraft> ear;
    for (std::size_t len = std::max<std::size_t>(cfg.max_ear_length, 1); !ear && len >= 1; --len) {
      for (std::size_t attempt = 0; attempt < kRetries && !ear; ++attempt) {
        ear = sample_ear(rng, acc, len, room, names);
      }
    }
    if (!ear) throw CapacityError("no effective ear found for ear " + std::to_string(i));
    names.vertices += difference(ear->graph().vertices(), acc.graph().vertices()).size();
    names.edges += ear->graph().edge_count();
    acc = graft_sum(acc, *ear);
    ears.push_back({std::move(*ear), std::nullopt});
  }
  return build(root, ears);
}

Multigraph random_factor_critical(const GenConfig& cfg) {
  Rng rng(cfg.seed);
  Multigraph g;
  g.add_vertex("r");
  Namer names;
  const std::size_t max_len = std::max<std::size_t>(cfg.max_ear_length, 3);

  for (std::size_t i = 0; i < cfg.ears; ++i) {
    const VertexSet current = g.vertices();
    const std::vector<VertexId> existing(current.begin(), current.end());
    const std::size_t room = cfg.max_vertices > g.vertex_count() ? cfg.max_vertices - g.vertex_count() : 0;
    const bool circuit = existing.size() < 2 || rng.below(2) == 0;
    std::size_t len = rng.between(1, max_len) | 1U;  // odd
    if (circuit) {
      len = std::max<std::size_t>(len, 3);
      while (len > 3 && len - 1 > room) len -= 2;
    } else {
      while (len > 1 && len - 1 > room) len -= 2;
    }
    const VertexId s = pick(rng, existing);
    VertexId t = s;
    if (!circuit) {
      while (t == s) t = pick(rng, existing);
    }
    VertexId prev = s;
    for (std::size_t k = 1; k < len; ++k) {
      VertexId next = names.vertex();
      g.add_edge(names.edge(), prev, next);
      prev = next;
    }
    g.add_edge(names.edge(), prev, t);
  }
  return g;
}

}  // namespace grafts
