#include <doctest.h>

#include "grafts/generators.hpp"
#include "grafts/quasicomb.hpp"
#include "support/brute.hpp"
#include "support/fixtures.hpp"

using namespace grafts;

namespace {

BipartiteGraft comb_edge() {
  Multigraph g;
  g.add_edge("ab", "a", "b");
  return BipartiteGraft(Graft(g, {"a", "b"}), {"a"}, {"b"});
}

}  // namespace

TEST_CASE("combs and quasicombs") {
  CHECK_FALSE(is_comb(fixtures::f2()));
  CHECK(is_comb(comb_edge()));
  CHECK(is_quasicomb(fixtures::f2()));
  CHECK(is_quasicomb(fixtures::f1()));
  CHECK(is_quasicomb(fixtures::q5()));
  CHECK_FALSE(is_quasicomb(fixtures::c4({"a1", "a2"})));
}

TEST_CASE("degree form of the quasicomb test") {
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    GenConfig cfg;
    cfg.seed = seed;
    cfg.max_vertices = 8;
    cfg.max_edges = 10;
    Graft g = random_graft(cfg);
    // Any 2-colouring of a spanning forest gives classes; keep bipartite samples only.
    VertexSet a;
    for (const auto& comp : connected_components(g.graph())) {
      std::map<VertexId, int> side{{*comp.begin(), 0}};
      std::vector<VertexId> stack{*comp.begin()};
      while (!stack.empty()) {
        VertexId x = stack.back();
        stack.pop_back();
        for (const auto& e : g.graph().incident(x)) {
          const VertexId& y = g.graph().edge(e).other(x);
          if (side.emplace(y, 1 - side[x]).second) stack.push_back(y);
        }
      }
      for (const auto& [v, s] : side) {
        if (s == 0) a.insert(v);
      }
    }
    VertexSet b = difference(g.graph().vertices(), a);
    if (!bipartite_violation(g.graph(), a, b).empty()) continue;
    BipartiteGraft bg(g, a, b);
    Join f = solve(g).join;
    CHECK(is_quasicomb(bg) == is_quasicomb_by_degrees(bg, f));
  }
}

TEST_CASE("criticality of the fixtures") {
  for (const auto& [name, bg] : fixtures::critical_fixtures()) {
    CAPTURE(name);
    auto rep = is_critical(bg, "r");
    CHECK(rep.verdict);
    CHECK(rep.violations.empty());
    CHECK(check_cr2qcomb(bg, "r"));
  }
  auto rep = is_critical(fixtures::f2(), "r");
  CHECK(rep.distances.at("a") == 1);
  CHECK(rep.distances.at("b") == 0);
  CHECK(rep.nu == 1);
  CHECK(rep.nu_shifted.at("a") == 2);
}

TEST_CASE("non-critical inputs") {
  auto c4 = is_critical(fixtures::c4({"a1", "b1", "a2", "b2"}), "b1");
  CHECK_FALSE(c4.verdict);
  CHECK_FALSE(c4.violations.empty());
  CHECK_THROWS_AS(is_critical(fixtures::f2(), "a"), InputError);

  Multigraph g;
  g.add_edge("ra", "r", "a");
  g.add_edge("xy", "x", "y");
  auto split = is_critical(BipartiteGraft(Graft(g, {}), {"a", "y"}, {"r", "x"}), "r");
  CHECK_FALSE(split.verdict);
  CHECK(split.violations.size() == 2);
}

TEST_CASE("critical verdict agrees with direct nu differences") {
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    GenConfig cfg;
    cfg.seed = seed;
    cfg.max_vertices = 9;
    cfg.ears = 4;
    BipartiteGraft bg = random_critical_quasicomb(cfg).graft;
    // Toggle one T pair on every other sample so both verdicts occur.
    if (seed % 2 == 1 && bg.graph().vertex_count() > 2) {
      const VertexSet vs = bg.graph().vertices();
      auto it = vs.begin();
      VertexSet t = symmetric_difference(bg.t(), {*it, *std::next(it)});
      bg = BipartiteGraft(Graft(bg.graph(), t), bg.a(), bg.b());
    }
    const std::size_t base = nu(bg.graft());
    bool direct = true;
    for (const auto& x : bg.graph().vertices()) {
      const VertexSet pair = x == "r" ? VertexSet{} : VertexSet{x, "r"};
      const std::size_t shifted = nu(Graft(bg.graph(), symmetric_difference(bg.t(), pair)));
      direct = direct && shifted == base + (bg.in_a(x) ? 1 : 0);
    }
    CHECK(is_critical(bg, "r").verdict == direct);
  }
}

TEST_CASE("critical structure of minimum joins") {
  BipartiteGraft f2 = fixtures::f2();
  CHECK(check_critical_structure(f2, "r", {"ab"}).ok);
  CHECK(check_critical_structure(fixtures::f1(), "r", {}).ok);
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    GenConfig cfg;
    cfg.seed = seed;
    cfg.max_vertices = 10;
    cfg.ears = 5;
    auto built = random_critical_quasicomb(cfg);
    auto rep = check_critical_structure(built.graft, "r", built.join);
    CHECK(rep.ok);
    if (built.graft.graph().edge_count() == 0) continue;
    Join bad = symmetric_difference(built.join, {*built.graft.graph().edge_ids().begin()});
    CHECK_THROWS_AS(check_critical_structure(built.graft, "r", bad), InputError);
  }
}

TEST_CASE("comb sufficiency") {
  CHECK(check_comb_sufficiency(comb_edge(), "a", {"ab"}));
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    GenConfig cfg;
    cfg.seed = seed;
    cfg.max_vertices = 8;
    auto built = random_critical_quasicomb(cfg);
    for (const auto& a : built.graft.a()) CHECK(check_comb_sufficiency(built.graft, a, built.join));
  }
}

TEST_CASE("quasicomb distance bounds") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    GenConfig cfg;
    cfg.seed = seed;
    cfg.max_vertices = 9;
    auto built = random_critical_quasicomb(cfg);
    const BipartiteGraft& bg = built.graft;
    for (const auto& x : bg.graph().vertices()) {
      for (const auto& y : bg.graph().vertices()) {
        const int d = distance(bg.graft(), built.join, x, y).distance;
        const int bound = -(bg.in_b(x) ? 1 : 0) - (bg.in_b(y) ? 1 : 0);
        CHECK(d >= bound);
      }
    }
  }
}
