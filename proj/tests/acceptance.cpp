// Acceptance suite: one line per criterion, exit status 0 only when all pass.
// Usage: acceptance [N ...] to run selected criteria.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "grafts/ear_graft.hpp"
#include "grafts/factor_critical.hpp"
#include "grafts/generators.hpp"
#include "grafts/io.hpp"
#include "grafts/quasicomb.hpp"
#include "support/brute.hpp"
#include "support/cli_runner.hpp"
#include "support/fixtures.hpp"

using namespace grafts;

namespace {

struct Tally {
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::vector<std::string> notes;

  void expect(bool ok, const std::string& what) {
    ++cases;
    if (ok) return;
    ++failures;
    if (notes.size() < 5) notes.push_back(what);
  }
};

struct Criterion {
  int id;
  const char* title;
  std::function<std::string(Tally&)> run;  // returns a short summary
};

GenConfig quasicomb_config(std::uint64_t seed, std::size_t max_vertices) {
  GenConfig cfg;
  cfg.seed = seed;
  cfg.kind = InstanceKind::CriticalQuasicomb;
  cfg.max_vertices = max_vertices;
  cfg.ears = 1 + seed % 8;
  return cfg;
}

VertexSet pair_or_empty(const VertexId& x, const VertexId& y) { return x == y ? VertexSet{} : VertexSet{x, y}; }

// 1 ------------------------------------------------------------------------

std::string solver_equivalence(Tally& t) {
  std::size_t max_cyc = 0;
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    GenConfig cfg;
    cfg.seed = 1'000'000 + seed;
    cfg.max_vertices = 12;
    cfg.max_edges = 18;
    cfg.max_t = 8;
    Graft g = random_graft(cfg);
    max_cyc = std::max(max_cyc, cyclomatic_number(g.graph()));
    auto a = min_join(g);
    auto b = min_join_oracle(g);
    t.expect(a.size == b.size && is_join(g, a.join) && is_join(g, b.join),
             "seed " + std::to_string(cfg.seed) + ": " + std::to_string(a.size) + " vs " + std::to_string(b.size));
  }
  return "500 grafts, max cyclomatic number " + std::to_string(max_cyc);
}

// 2 ------------------------------------------------------------------------

std::string distance_identity(Tally& t) {
  Multigraph e;
  e.add_edge("uv", "u", "v");
  auto single = distance(Graft(e, {"u", "v"}), {"uv"}, "u", "v");
  t.expect(single.distance == -1 && f_weight({"uv"}, single.witness) == -1, "single edge distance is not -1");

  std::size_t pairs = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    GenConfig cfg;
    cfg.seed = 2'000'000 + seed;
    cfg.max_vertices = 10;
    cfg.max_edges = 14;
    Graft g = random_graft(cfg);
    Join f = solve(g).join;
    for (const auto& comp : connected_components(g.graph())) {
      for (const auto& u : comp) {
        for (const auto& v : comp) {
          ++pairs;
          const int d = distance(g, f, u, v).distance;
          const auto brute_w = brute::min_path_weight(g.graph(), f, u, v);
          t.expect(brute_w && d == *brute_w, "seed " + std::to_string(cfg.seed) + " pair " + u + "," + v);
        }
      }
    }
  }
  return "200 grafts, " + std::to_string(pairs) + " pairs";
}

// 3 ------------------------------------------------------------------------

std::string negative_circuits(Tally& t) {
  std::size_t minimum = 0;
  std::size_t negative = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    GenConfig cfg;
    cfg.seed = 3'000'000 + seed;
    cfg.max_vertices = 8;
    cfg.max_edges = 12;
    Graft g = random_graft(cfg);
    const auto circuits = brute::circuits(g.graph());
    const auto edges = brute::edge_list(g.graph());
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << edges.size()); ++mask) {
      Join f = brute::subset(edges, mask);
      if (!is_join(g, f)) continue;
      bool no_negative = true;
      for (const auto& c : circuits) no_negative = no_negative && f_weight(f, c) >= 0;
      const bool is_min = verify_minimum(g, f);
      (is_min ? minimum : negative) += 1;
      t.expect(is_min == no_negative, "seed " + std::to_string(cfg.seed) + " join " + std::to_string(mask));
    }
  }
  return std::to_string(minimum) + " minimum joins, " + std::to_string(negative) + " non-minimum joins";
}

// 4, 5, 6 ------------------------------------------------------------------

std::vector<BuildResult> quasicomb_sample() {
  std::vector<BuildResult> out;
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    out.push_back(random_critical_quasicomb(quasicomb_config(4'000'000 + seed, 20)));
  }
  return out;
}

const std::vector<BuildResult>& sample() {
  static const std::vector<BuildResult> s = quasicomb_sample();
  return s;
}

std::string critical_from_ears(Tally& t) {
  std::size_t vertices = 0;
  for (std::size_t i = 0; i < sample().size(); ++i) {
    const BipartiteGraft& bg = sample()[i].graft;
    vertices += bg.graph().vertex_count();
    const std::size_t base = nu(bg.graft());
    bool direct = true;
    for (const auto& x : bg.graph().vertices()) {
      const std::size_t shifted = nu(Graft(bg.graph(), symmetric_difference(bg.t(), pair_or_empty(x, "r"))));
      direct = direct && shifted == base + (bg.in_a(x) ? 1 : 0);
    }
    t.expect(direct, "instance " + std::to_string(i) + ": nu differences");
    t.expect(is_critical(bg, "r").verdict, "instance " + std::to_string(i) + ": is_critical");
  }
  return "300 instances, " + std::to_string(vertices) + " vertices checked";
}

void check_balanced_decomposition(Tally& t, const BipartiteGraft& bg, const Join& f, const std::string& name) {
  EarDecomposition d;
  try {
    d = decompose(bg, "r", f);
  } catch (const std::exception& e) {
    t.expect(false, name + ": decompose threw: " + e.what());
    return;
  }
  BipartiteGraft acc = single_vertex_graft("r");
  bool ok = true;
  for (const auto& step : d.steps) {
    BipartiteGraft ear = step_graft(step);
    const Join restricted = intersection(f, ear.graph().edge_ids());
    ok = ok && is_effective(acc, ear) && step.join == restricted && restricted.size() == nu(ear.graft()) &&
         is_join(ear.graft(), restricted);
    acc = graft_sum(acc, ear);
  }
  t.expect(ok, name + ": a step is ineffective or not F-balanced");
  t.expect(acc == bg, name + ": replay differs");
  auto verdict = verify_decomposition(bg, "r", d, f);
  t.expect(static_cast<bool>(verdict), name + ": verify: " + verdict.reason);
}

std::string decompose_balanced(Tally& t) {
  for (std::size_t i = 0; i < sample().size(); ++i) {
    check_balanced_decomposition(t, sample()[i].graft, sample()[i].join, "instance " + std::to_string(i));
  }
  check_balanced_decomposition(t, fixtures::f1(), {}, "F1");
  check_balanced_decomposition(t, fixtures::f2(), {"ab"}, "F2");
  return "302 grafts decomposed";
}

std::string critical_implies_quasicomb(Tally& t) {
  std::size_t critical = 0;
  auto check = [&](const BipartiteGraft& bg, const VertexId& r, const std::string& name) {
    if (!is_critical(bg, r).verdict) return;
    ++critical;
    t.expect(is_quasicomb(bg), name + ": not a quasicomb");
    t.expect(intersection(bg.t(), bg.b()) == difference(bg.b(), {r}), name + ": T ∩ B differs from B - r");
  };
  for (std::size_t i = 0; i < sample().size(); ++i) check(sample()[i].graft, "r", "instance " + std::to_string(i));
  for (const auto& [name, bg] : fixtures::critical_fixtures()) check(bg, "r", name);
  // Random bipartite grafts with every B vertex as a candidate root.
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    GenConfig cfg;
    cfg.seed = 6'000'000 + seed;
    cfg.max_vertices = 7;
    cfg.max_edges = 9;
    cfg.t_density = 0.7;
    Graft g = random_graft(cfg);
    VertexSet a;
    for (const auto& v : g.graph().vertices()) {
      if ((std::hash<std::string>{}(v) ^ seed) % 2 == 0) a.insert(v);
    }
    VertexSet b = difference(g.graph().vertices(), a);
    if (!bipartite_violation(g.graph(), a, b).empty()) continue;
    BipartiteGraft bg(g, a, b);
    for (const auto& r : b) check(bg, r, "random seed " + std::to_string(cfg.seed) + " root " + r);
  }
  return std::to_string(critical) + " critical instances";
}

// 7 ------------------------------------------------------------------------

// Alternate edges of the path segment starting with its first edge; nullopt
// when the segment has an odd number of vertices.
std::optional<Join> path_matching(const Walk& p, std::size_t from, std::size_t to) {
  if ((to - from + 1) % 2 != 0) return std::nullopt;
  Join m;
  for (std::size_t i = from; i < to; i += 2) m.insert(p.edges[i]);
  return m;
}

std::string straight_ears(Tally& t) {
  std::size_t effective = 0;
  std::size_t candidates = 0;
  for (const bool bond_in_a : {true, false}) {
    Multigraph base_g;
    base_g.add_vertex("t");
    BipartiteGraft base(Graft(base_g, {}), bond_in_a ? VertexSet{"t"} : VertexSet{},
                        bond_in_a ? VertexSet{} : VertexSet{"t"});
    for (std::size_t len = 1; len <= 7; ++len) {
      // Walk from the free end s = x0 to the bond t.
      Walk w;
      for (std::size_t i = 0; i < len; ++i) w.vertices.push_back("x" + std::to_string(i));
      w.vertices.push_back("t");
      Multigraph p;
      VertexSet a;
      VertexSet b;
      for (std::size_t i = 0; i < w.vertices.size(); ++i) {
        const bool in_a = ((len - i) % 2 == 0) == bond_in_a;
        (in_a ? a : b).insert(w.vertices[i]);
        if (i + 1 < w.vertices.size()) {
          w.edges.push_back("p" + std::to_string(i));
          p.add_edge(w.edges.back(), w.vertices[i], w.vertices[i + 1]);
        }
      }
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << w.vertices.size()); ++mask) {
        VertexSet tp;
        for (std::size_t i = 0; i < w.vertices.size(); ++i) {
          if (mask >> i & 1U) tp.insert(w.vertices[i]);
        }
        if (tp.size() % 2 != 0) continue;
        ++candidates;
        BipartiteGraft ear(Graft(p, tp), a, b);
        if (!is_effective(base, ear)) continue;
        ++effective;
        const bool s_a = a.contains(w.front());
        const bool t_a = a.contains(w.back());
        const std::size_t last = w.vertices.size() - 1;
        std::optional<Join> expected;
        if (s_a && !t_a) expected = path_matching(w, 1, last - 1);
        if (s_a && t_a) expected = path_matching(w, 1, last);
        if (!s_a && t_a) expected = path_matching(w, 0, last);
        if (!s_a && !t_a) expected = path_matching(w, 0, last - 1);
        const std::string name = "len " + std::to_string(len) + " mask " + std::to_string(mask);
        t.expect(expected.has_value(), name + ": formula has no perfect matching");
        if (!expected) continue;
        Join got = straight_ear_unique_join(base, ear);
        t.expect(got == *expected, name + ": join differs from the formula");
        const auto all = brute::min_joins(ear.graft());
        t.expect(all.size() == 1 && all.front() == got, name + ": minimum join is not unique");
        t.expect(min_join_oracle(ear.graft()).join == got, name + ": oracle disagrees");
      }
    }
  }
  return std::to_string(candidates) + " ear grafts enumerated, " + std::to_string(effective) + " effective";
}

// 8 ------------------------------------------------------------------------

void witness_checks(Tally& t, const BipartiteGraft& bg, const Join& f, const EarDecomposition& cert,
                    const std::string& name) {
  const Multigraph& g = bg.graph();
  for (const auto& x : g.vertices()) {
    for (const auto& y : g.vertices()) {
      const int bound = bg.in_a(x) && bg.in_a(y) ? 0 : (bg.in_a(x) || bg.in_a(y) ? -1 : -2);
      t.expect(distance(bg.graft(), f, x, y).distance >= bound, name + ": distance bound " + x + "," + y);
      if (x >= y) continue;
      brute::for_each_simple_path(g, x, y, [&](const Walk& p) {
        if (p.edges.empty() || !is_balanced_path(bg, p, f)) return;
        const auto v = classify_balanced_path(bg, p, f);
        const bool allowed = std::find(v.allowed.begin(), v.allowed.end(), v.weight) != v.allowed.end();
        t.expect(v.consistent && allowed, name + ": balanced path " + x + "-" + y);
      });
    }
  }
  BipartiteGraft acc = single_vertex_graft("r");
  for (std::size_t i = 0; i < cert.steps.size(); ++i) {
    BipartiteGraft ear = step_graft(cert.steps[i]);
    for (const auto& w : ear_path_witness(acc, ear, cert.steps[i].join)) {
      t.expect(w.ok, name + ": ear " + std::to_string(i) + " has no witness for " + w.vertex);
    }
    acc = graft_sum(acc, ear);
  }
  auto rep = check_critical_structure(bg, "r", f);
  t.expect(rep.ok, name + ": " + (rep.failures.empty() ? "" : rep.failures.front()));
}

std::string witness_suite(Tally& t) {
  for (const auto& [name, bg] : fixtures::critical_fixtures()) {
    Join f = solve(bg.graft()).join;
    witness_checks(t, bg, f, decompose(bg, "r", f), name);
  }
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    auto built = random_critical_quasicomb(quasicomb_config(8'000'000 + seed, 10));
    witness_checks(t, built.graft, built.join, built.certificate, "seed " + std::to_string(8'000'000 + seed));
  }
  return "3 fixtures and 200 instances";
}

// 9 ------------------------------------------------------------------------

void factor_critical_case(Tally& t, const Multigraph& g, const std::string& name) {
  t.expect(is_factor_critical_graph(g), name + ": not recognized");
  for (const auto& r : g.vertices()) {
    auto d = odd_ear_decomposition(g, r);
    t.expect(static_cast<bool>(verify_odd_ear_decomposition(g, d)), name + ": odd ear replay, root " + r);
    Graft fg(g, difference(g.vertices(), {r}));
    t.expect(is_factor_critical_graft(fg, r), name + ": graft not recognized, root " + r);
    t.expect(static_cast<bool>(verify_fc_graft_decomposition(fg, fc_graft_decomposition(fg, r))),
             name + ": graft ear replay, root " + r);
    Join f = solve(fg).join;
    bool degrees = join_degree(g, f, r) == 0;
    for (const auto& v : g.vertices()) degrees = degrees && (v == r || join_degree(g, f, v) == 1);
    t.expect(degrees, name + ": join degrees, root " + r);
  }
}

std::string factor_critical_suite(Tally& t) {
  for (std::size_t n : {3, 5, 7}) factor_critical_case(t, fixtures::cycle(n), "C" + std::to_string(n));
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    GenConfig cfg;
    cfg.seed = 9'000'000 + seed;
    cfg.kind = InstanceKind::FactorCritical;
    cfg.max_vertices = 14;
    cfg.ears = 1 + seed % 7;
    factor_critical_case(t, random_factor_critical(cfg), "seed " + std::to_string(cfg.seed));
  }
  std::size_t rejected = 0;
  for (std::size_t n : {4, 6, 8, 10}) {
    t.expect(!is_factor_critical_graph(fixtures::cycle(n)), "C" + std::to_string(n) + " accepted");
    ++rejected;
  }
  for (std::size_t i = 0; i < 100; ++i) {
    const Multigraph& g = sample()[i].graft.graph();
    if (g.vertex_count() < 2) continue;
    t.expect(!is_factor_critical_graph(g), "bipartite sample " + std::to_string(i) + " accepted");
    ++rejected;
  }
  return "103 recognized, " + std::to_string(rejected) + " rejected";
}

// 10 -----------------------------------------------------------------------

nlohmann::json mutate(const nlohmann::json& cert, const BipartiteGraft& bg, Rng& rng) {
  nlohmann::json m = cert;
  const VertexSet vs = bg.graph().vertices();
  const EdgeSet es = bg.graph().edge_ids();
  const std::vector<VertexId> vertices(vs.begin(), vs.end());
  const std::vector<EdgeId> edges(es.begin(), es.end());
  auto& steps = m["steps"];
  auto& step = steps[rng.below(steps.size())];
  auto toggle = [&](nlohmann::json& arr, const std::string& id) {
    std::set<std::string> s = arr.get<std::set<std::string>>();
    if (!s.erase(id)) s.insert(id);
    arr = s;
  };
  auto other_vertex = [&](const std::string& not_this) {
    for (;;) {
      const auto& v = vertices[rng.below(vertices.size())];
      if (v != not_this || vertices.size() == 1) return v;
    }
  };
  switch (rng.below(12)) {
    case 0:
      m["root"] = other_vertex(m["root"].get<std::string>());
      break;
    case 1:
      step["kind"] = step["kind"] == "round" ? "straight" : "round";
      break;
    case 2: {
      auto& e = step["edges"][rng.below(step["edges"].size())];
      std::swap(e[1], e[2]);
      break;
    }
    case 3: {
      auto& e = step["edges"][rng.below(step["edges"].size())];
      e[0] = edges[rng.below(edges.size())];
      break;
    }
    case 4: {
      auto& e = step["edges"][rng.below(step["edges"].size())];
      e[1 + rng.below(2)] = other_vertex(e[1].get<std::string>());
      break;
    }
    case 5: {
      auto& es_json = step["edges"];
      if (es_json.size() < 2) {
        es_json.erase(0);
      } else {
        const std::size_t i = rng.below(es_json.size() - 1);
        std::swap(es_json[i], es_json[i + 1]);
      }
      break;
    }
    case 6:
      toggle(step["T"], vertices[rng.below(vertices.size())]);
      break;
    case 7:
      toggle(step["A"], vertices[rng.below(vertices.size())]);
      break;
    case 8:
      toggle(step["B"], vertices[rng.below(vertices.size())]);
      break;
    case 9: {
      auto& bonds = step["bonds"];
      if (rng.chance(0.5) || bonds.empty()) {
        bonds.push_back(other_vertex(""));
      } else {
        bonds[rng.below(bonds.size())] = other_vertex(bonds[0].get<std::string>());
      }
      break;
    }
    case 10: {
      const auto& e = step["edges"][rng.below(step["edges"].size())];
      toggle(step["join"], e[0].get<std::string>());
      break;
    }
    default: {
      static const char* keys[] = {"vertices", "edges", "T", "nu"};
      auto& field = m["summary"][keys[rng.below(4)]];
      field = field.get<std::size_t>() + 1;
      break;
    }
  }
  return m;
}

std::string cli_round_trip(Tally& t) {
  using cli_runner::run;
  cli_runner::TempDir dir("graftool-acceptance");

  std::size_t files = 0;
  for (const auto& entry : std::filesystem::directory_iterator(GRAFTS_FIXTURE_DIR)) {
    if (entry.path().extension() != ".graft") continue;
    ++files;
    std::ifstream in(entry.path());
    GraftFile f = parse_graft(in, entry.path().string());
    const std::string once = emit_graft(f);
    t.expect(parse_graft_text(once) == f && emit_graft(parse_graft_text(once)) == once,
             entry.path().filename().string() + ": emit is not stable");
  }

  const std::string f2 = cli_runner::fixture("F2.graft");
  t.expect(run({"check", f2, "--critical", "r"}).code == 0, "check F2 --critical r");
  t.expect(run({"check", cli_runner::fixture("C4-allT.graft"), "--critical", "b1"}).code == 1, "check C4 --critical b1");
  t.expect(run({"decompose", f2, "--root", "r", "-o", dir.file("f2.json")}).code == 0, "decompose F2");
  t.expect(run({"verify", f2, dir.file("f2.json")}).code == 0, "verify F2");
  t.expect(run({"verify", cli_runner::fixture("Q5.graft"), dir.file("f2.json")}).code == 1, "verify against Q5");
  t.expect(run({"decompose", cli_runner::fixture("C4-allT.graft"), "--root", "b1"}).code == 1, "decompose C4");
  t.expect(run({"verify", f2, dir.write("broken.json", "[")}).code == 2, "verify broken json");
  t.expect(run({"solve", dir.write("loop.graft", "vertex a A\nedge e a a\n")}).code == 2, "loop edge");

  // Mutation fuzz on generated certificates, verified against their joins.
  std::size_t mutations = 0;
  Rng rng(10);
  for (std::uint64_t seed = 0; mutations < 100; ++seed) {
    GenConfig cfg = quasicomb_config(10'000'000 + seed, 14);
    cfg.ears = 6;
    auto built = random_critical_quasicomb(cfg);
    const std::string graft = dir.write("g.graft", emit_graft(make_graft_file(built.graft, "r")));
    const std::string join = dir.write("g.join", emit_join(built.join));
    t.expect(run({"decompose", graft, "--join", join, "-o", dir.file("c.json")}).code == 0, "decompose generated");
    t.expect(run({"verify", graft, dir.file("c.json"), "--join", join}).code == 0, "verify generated");
    const auto original = nlohmann::json::parse(dir.read("c.json"));
    for (int k = 0; k < 25; ++k) {
      nlohmann::json m = mutate(original, built.graft, rng);
      if (m == original) {
        --k;
        continue;
      }
      ++mutations;
      dir.write("m.json", m.dump());
      const int code = run({"verify", graft, dir.file("m.json"), "--join", join}).code;
      t.expect(code != 0, "mutation accepted: " + m.dump());
    }
  }
  return std::to_string(files) + " fixture files, " + std::to_string(mutations) + " mutations";
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria = {
      {1, "solver oracle equivalence", solver_equivalence},
      {2, "distance identity", distance_identity},
      {3, "minimum join iff no negative circuit", negative_circuits},
      {4, "ear-grown grafts are critical", critical_from_ears},
      {5, "critical grafts decompose into balanced effective ears", decompose_balanced},
      {6, "critical implies quasicomb", critical_implies_quasicomb},
      {7, "straight ear joins", straight_ears},
      {8, "distance bounds, balanced paths and ear witnesses", witness_suite},
      {9, "factor-critical suite", factor_critical_suite},
      {10, "cli round trip", cli_round_trip},
  };
  std::set<int> selected;
  for (int i = 1; i < argc; ++i) selected.insert(std::atoi(argv[i]));

  bool all = true;
  for (const auto& c : criteria) {
    if (!selected.empty() && !selected.contains(c.id)) continue;
    Tally t;
    const auto start = std::chrono::steady_clock::now();
    std::string summary;
    try {
      summary = c.run(t);
    } catch (const std::exception& e) {
      t.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool ok = t.failures == 0;
    all = all && ok;
    std::printf("[%s] %2d %s: %s; %zu checks, %zu failures (%.1f s)\n", ok ? "PASS" : "FAIL", c.id, c.title,
                summary.c_str(), t.cases, t.failures, secs);
    for (const auto& note : t.notes) std::printf("       %s\n", note.c_str());
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
