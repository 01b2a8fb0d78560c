#include "grafts/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "grafts/factor_critical.hpp"
#include "grafts/generators.hpp"
#include "grafts/io.hpp"
#include "grafts/quasicomb.hpp"

namespace grafts {

namespace {

constexpr int kOk = 0;
constexpr int kFalse = 1;
constexpr int kError = 2;

GraftFile load_graft(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  return parse_graft(in, path);
}

Join load_join(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  return parse_join(in, path);
}

EarDecomposition load_certificate(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(path + ": " + e.what());
  }
  return certificate_from_json(j);
}

void write_to(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path);
  if (!file) throw InputError("cannot write " + path);
  file << text;
}

std::string join_line(const IdSet& ids) {
  std::string s;
  for (const auto& id : ids) s += (s.empty() ? "" : " ") + id;
  return s;
}

template <typename Seq>
std::string seq_line(const Seq& ids) {
  std::string s;
  for (const auto& id : ids) s += (s.empty() ? "" : " ") + id;
  return s;
}

// Provided join after a minimality check, or a fresh minimum join.
Join join_for(const Graft& g, const std::string& join_path, const SolverLimits& limits) {
  if (join_path.empty()) return solve(g, limits).join;
  Join f = load_join(join_path);
  if (!verify_minimum(g, f, limits)) throw InputError(join_path + ": join is not minimum");
  return f;
}

VertexId root_for(const GraftFile& f, const std::string& given) {
  if (!given.empty()) return given;
  if (f.root) return *f.root;
  throw InputError("no root given and the file has no root line");
}

struct Options {
  SolverLimits limits;
  std::uint64_t seed = 0;

  std::string file;
  std::string second;  // CERT for verify, SCRIPT for build
  std::string u, v;
  std::string join;
  std::string root;
  std::string output;
  std::string cert_out;
  std::string join_out;
  bool oracle = false;

  bool quasicomb = false;
  bool comb = false;
  std::string critical;
  std::optional<std::string> factor_critical;

  std::string kind = "graft";
  std::size_t size = 8;
  std::size_t ears = 3;
};

int cmd_solve(const Options& o, std::ostream& out) {
  GraftFile f = load_graft(o.file);
  SolveResult r = o.oracle ? min_join_oracle(f.graft, o.limits) : solve(f.graft, o.limits);
  out << "nu " << r.size << "\n";
  out << "method " << (r.method == SolveMethod::Oracle ? "oracle" : "matching") << "\n";
  out << "join " << join_line(r.join) << "\n";
  return kOk;
}

int cmd_dist(const Options& o, std::ostream& out) {
  GraftFile f = load_graft(o.file);
  Join j = join_for(f.graft, o.join, o.limits);
  DistanceResult d = distance(f.graft, j, o.u, o.v, o.limits);
  out << "distance " << d.distance << "\n";
  out << "path " << seq_line(d.witness.vertices) << "\n";
  out << "edges " << seq_line(d.witness.edges) << "\n";
  return kOk;
}

int cmd_check(const Options& o, std::ostream& out) {
  const int chosen = int(o.quasicomb) + int(o.comb) + int(!o.critical.empty()) + int(o.factor_critical.has_value());
  if (chosen != 1) throw InputError("check needs exactly one of --quasicomb, --comb, --critical, --factor-critical");
  GraftFile f = load_graft(o.file);

  if (o.factor_critical) {
    bool yes = false;
    if (o.factor_critical->empty()) {
      yes = is_factor_critical_graph(f.graft.graph());
      out << "factor-critical graph: " << (yes ? "true" : "false") << "\n";
    } else {
      yes = is_factor_critical_graft(f.graft, *o.factor_critical);
      out << "factor-critical graft with root " << *o.factor_critical << ": " << (yes ? "true" : "false") << "\n";
    }
    if (yes) {
      const VertexId r = o.factor_critical->empty() ? *f.graft.graph().vertices().begin() : *o.factor_critical;
      for (const auto& ear : odd_ear_decomposition(f.graft.graph(), r).ears) {
        out << "ear " << seq_line(ear.walk.vertices) << "\n";
      }
    }
    return yes ? kOk : kFalse;
  }

  const BipartiteGraft& bg = f.require_bipartite();
  if (o.quasicomb || o.comb) {
    const bool yes = o.comb ? is_comb(bg, o.limits) : is_quasicomb(bg, o.limits);
    out << (o.comb ? "comb: " : "quasicomb: ") << (yes ? "true" : "false") << "\n";
    out << "nu " << nu(bg.graft(), o.limits) << "\n";
    out << "|B| " << bg.b().size() << "\n";
    out << "|B & T| " << intersection(bg.b(), bg.t()).size() << "\n";
    return yes ? kOk : kFalse;
  }

  CriticalityReport rep = is_critical(bg, o.critical, o.limits);
  out << "critical with root " << rep.root << ": " << (rep.verdict ? "true" : "false") << "\n";
  out << "nu " << rep.nu << "\n";
  for (const auto& [x, d] : rep.distances) {
    out << "dist " << x << ' ' << (bg.in_a(x) ? 'A' : 'B') << ' ' << d << "\n";
  }
  for (const auto& why : rep.violations) out << "violation " << why << "\n";
  return rep.verdict ? kOk : kFalse;
}

int cmd_decompose(const Options& o, std::ostream& out, std::ostream& err) {
  GraftFile f = load_graft(o.file);
  const BipartiteGraft& bg = f.require_bipartite();
  const VertexId r = root_for(f, o.root);
  Join j = join_for(bg.graft(), o.join, o.limits);
  CriticalityReport rep = is_critical(bg, r, o.limits);
  if (!rep.verdict) {
    err << "not critical with root " << r << "\n";
    for (const auto& why : rep.violations) err << "violation " << why << "\n";
    return kFalse;
  }
  EarDecomposition d = decompose(bg, r, j, o.limits);
  write_to(o.output, certificate_to_json(d).dump(2) + "\n", out);
  return kOk;
}

int cmd_build(const Options& o, std::ostream& out) {
  std::ifstream in(o.second);
  if (!in) throw InputError("cannot open " + o.second);
  BuildScript script = parse_build_script(in, o.second);
  BuildResult res = build(script.root, script.ears, o.limits);
  const std::string cert = certificate_to_json(res.certificate).dump(2) + "\n";
  write_to(o.output, emit_graft(make_graft_file(res.graft, script.root)), out);
  if (!o.cert_out.empty()) {
    write_to(o.cert_out, cert, out);
  } else if (!o.output.empty() && o.output != "-") {
    write_to(o.output + ".cert.json", cert, out);
  } else {
    out << cert;
  }
  if (!o.join_out.empty()) write_to(o.join_out, emit_join(res.join), out);
  return kOk;
}

int cmd_gen(const Options& o, std::ostream& out) {
  GenConfig cfg;
  cfg.seed = o.seed;
  cfg.max_vertices = o.size;
  cfg.ears = o.ears;
  if (o.kind == "graft") {
    cfg.kind = InstanceKind::RandomGraft;
    cfg.max_edges = o.size + o.size / 2;
    cfg.max_t = o.size;
    write_to(o.output, emit_graft(make_graft_file(random_graft(cfg))), out);
  } else if (o.kind == "critical") {
    cfg.kind = InstanceKind::CriticalQuasicomb;
    BuildResult res = random_critical_quasicomb(cfg);
    write_to(o.output, emit_graft(make_graft_file(res.graft, "r")), out);
    if (!o.cert_out.empty()) write_to(o.cert_out, certificate_to_json(res.certificate).dump(2) + "\n", out);
    if (!o.join_out.empty()) write_to(o.join_out, emit_join(res.join), out);
  } else if (o.kind == "factor-critical") {
    cfg.kind = InstanceKind::FactorCritical;
    Multigraph g = random_factor_critical(cfg);
    VertexSet t = difference(g.vertices(), {"r"});
    write_to(o.output, emit_graft(make_graft_file(Graft(std::move(g), std::move(t)), "r")), out);
  } else {
    throw InputError("unknown kind '" + o.kind + "' (graft, critical, factor-critical)");
  }
  return kOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  GraftFile f = load_graft(o.file);
  const BipartiteGraft& bg = f.require_bipartite();
  EarDecomposition d = load_certificate(o.second);
  const VertexId r = !o.root.empty() ? o.root : (f.root ? *f.root : d.root);
  std::optional<Join> j;
  if (!o.join.empty()) j = load_join(o.join);
  VerifyResult res = verify_decomposition(bg, r, d, j, o.limits);
  if (res) {
    out << "valid\n";
    return kOk;
  }
  out << "invalid";
  if (res.failed_step) out << " at step " << *res.failed_step;
  out << ": " << res.reason << "\n";
  return kFalse;
}

int cmd_dot(const Options& o, std::ostream& out) {
  GraftFile f = load_graft(o.file);
  if (o.join.empty()) {
    out << to_dot(f);
  } else {
    Join j = load_join(o.join);
    if (!is_join(f.graft, j)) throw InputError(o.join + ": not a join of the graft");
    out << to_dot(f, &j);
  }
  return kOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Joins in grafts: solvers, recognizers and ear decompositions", "graftool"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--limit-cyclomatic", o.limits.max_cyclomatic, "Oracle capacity (cyclomatic number)");
  app.add_option("--limit-tsize", o.limits.max_t_size, "Matching solver capacity (|T|)");
  app.add_option("--seed", o.seed, "Generator seed");

  auto* solve_cmd = app.add_subcommand("solve", "Minimum join and nu");
  solve_cmd->add_option("FILE", o.file)->required();
  solve_cmd->add_flag("--oracle", o.oracle, "Use the cycle-space oracle");

  auto* dist_cmd = app.add_subcommand("dist", "F-distance and a shortest path");
  dist_cmd->add_option("FILE", o.file)->required();
  dist_cmd->add_option("U", o.u)->required();
  dist_cmd->add_option("V", o.v)->required();
  dist_cmd->add_option("--join", o.join, "Minimum join file");

  auto* check_cmd = app.add_subcommand("check", "Recognizers");
  check_cmd->add_option("FILE", o.file)->required();
  check_cmd->add_flag("--quasicomb", o.quasicomb);
  check_cmd->add_flag("--comb", o.comb);
  check_cmd->add_option("--critical", o.critical, "Root in B");
  check_cmd->add_option("--factor-critical", o.factor_critical, "Optional root")->expected(0, 1);

  auto* decompose_cmd = app.add_subcommand("decompose", "Ear decomposition certificate of a critical graft");
  decompose_cmd->add_option("FILE", o.file)->required();
  decompose_cmd->add_option("--root", o.root);
  decompose_cmd->add_option("--join", o.join);
  decompose_cmd->add_option("-o,--output", o.output);

  auto* build_cmd = app.add_subcommand("build", "Fold an ear script into a graft and certificate");
  build_cmd->add_option("SCRIPT", o.second)->required();
  build_cmd->add_option("-o,--output", o.output);
  build_cmd->add_option("--cert", o.cert_out);
  build_cmd->add_option("--join-out", o.join_out);

  auto* gen_cmd = app.add_subcommand("gen", "Seeded random instance");
  gen_cmd->add_option("--kind", o.kind, "graft, critical or factor-critical");
  gen_cmd->add_option("--size", o.size, "Vertex bound")->check(CLI::PositiveNumber);
  gen_cmd->add_option("--ears", o.ears);
  gen_cmd->add_option("-o,--output", o.output);
  gen_cmd->add_option("--cert", o.cert_out);
  gen_cmd->add_option("--join-out", o.join_out);

  auto* verify_cmd = app.add_subcommand("verify", "Replay a certificate");
  verify_cmd->add_option("FILE", o.file)->required();
  verify_cmd->add_option("CERT", o.second)->required();
  verify_cmd->add_option("--join", o.join);
  verify_cmd->add_option("--root", o.root);

  auto* dot_cmd = app.add_subcommand("dot", "DOT rendering");
  dot_cmd->add_option("FILE", o.file)->required();
  dot_cmd->add_option("--join", o.join);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kError;
  }

  try {
    if (*solve_cmd) return cmd_solve(o, out);
    if (*dist_cmd) return cmd_dist(o, out);
    if (*check_cmd) return cmd_check(o, out);
    if (*decompose_cmd) return cmd_decompose(o, out, err);
    if (*build_cmd) return cmd_build(o, out);
    if (*gen_cmd) return cmd_gen(o, out);
    if (*verify_cmd) return cmd_verify(o, out);
    if (*dot_cmd) return cmd_dot(o, out);
  } catch (const CapacityError& e) {
    err << "capacity: " << e.what() << "\n";
    return kError;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kError;
  }
  return kError;
}

}  // namespace grafts
