#pragma once

#include <string>
#include <vector>

#include "grafts/graft.hpp"

namespace fixtures {

using namespace grafts;

inline Multigraph path_graph(const std::vector<VertexId>& vs, const std::string& prefix = "e") {
  Multigraph g;
  for (const auto& v : vs) g.add_vertex(v);
  for (std::size_t i = 0; i + 1 < vs.size(); ++i) g.add_edge(prefix + std::to_string(i + 1), vs[i], vs[i + 1]);
  return g;
}

/// c1 - c2 - ... - cn - c1 with edges e1..en.
inline Multigraph cycle(std::size_t n) {
  std::vector<VertexId> vs;
  for (std::size_t i = 1; i <= n; ++i) vs.push_back("c" + std::to_string(i));
  Multigraph g = path_graph(vs);
  g.add_edge("e" + std::to_string(n), vs.back(), vs.front());
  return g;
}

/// r - a, T = {}, A = {a}, B = {r}.
inline BipartiteGraft f1() {
  Multigraph g;
  g.add_edge("ra", "r", "a");
  return BipartiteGraft(Graft(std::move(g), {}), {"a"}, {"r"});
}

/// r - a - b, T = {a, b}, A = {a}, B = {r, b}.
inline BipartiteGraft f2() {
  Multigraph g;
  g.add_edge("ra", "r", "a");
  g.add_edge("ab", "a", "b");
  return BipartiteGraft(Graft(std::move(g), {"a", "b"}), {"a"}, {"r", "b"});
}

/// C4 on a1 b1 a2 b2 with the given T.
inline BipartiteGraft c4(VertexSet t) {
  Multigraph g;
  g.add_edge("e1", "a1", "b1");
  g.add_edge("e2", "b1", "a2");
  g.add_edge("e3", "a2", "b2");
  g.add_edge("e4", "b2", "a1");
  return BipartiteGraft(Graft(std::move(g), std::move(t)), {"a1", "a2"}, {"b1", "b2"});
}

/// 4-cycle r a1 b1 a2 with a pendant tooth a2 - b2; a critical quasicomb.
inline BipartiteGraft q5() {
  Multigraph g;
  g.add_edge("f1", "r", "a1");
  g.add_edge("f2", "a1", "b1");
  g.add_edge("f3", "r", "a2");
  g.add_edge("f4", "a2", "b2");
  g.add_edge("f5", "b1", "a2");
  return BipartiteGraft(Graft(std::move(g), {"a1", "b1", "a2", "b2"}), {"a1", "a2"}, {"r", "b1", "b2"});
}

struct Named {
  std::string name;
  BipartiteGraft graft;
};

/// Critical quasicombs with root r.
inline std::vector<Named> critical_fixtures() { return {{"F1", f1()}, {"F2", f2()}, {"Q5", q5()}}; }

}  // namespace fixtures
