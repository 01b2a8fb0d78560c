#include "grafts/io.hpp"

#include <istream>
#include <map>
#include <sstream>

namespace grafts {

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::istream& in) {
  std::vector<Line> out;
  std::string text;
  for (std::size_t n = 1; std::getline(in, text); ++n) {
    if (auto hash = text.find('#'); hash != std::string::npos) text.erase(hash);
    std::istringstream words(text);
    Line line{n, {}};
    for (std::string w; words >> w;) line.tokens.push_back(w);
    if (!line.tokens.empty()) out.push_back(std::move(line));
  }
  return out;
}

[[noreturn]] void fail_at(const std::string& source, std::size_t line, const std::string& why) {
  throw InputError(source + ":" + std::to_string(line) + ": " + why);
}

void expect_arity(const std::string& source, const Line& line, std::size_t n) {
  if (line.tokens.size() != n) {
    fail_at(source, line.number,
            "'" + line.tokens[0] + "' takes " + std::to_string(n - 1) + " argument(s), got " +
                std::to_string(line.tokens.size() - 1));
  }
}

// Vertex and edge declarations shared by graft files and build scripts.
struct Declarations {
  std::map<VertexId, std::pair<char, std::size_t>> vertices;  // class, line
  std::vector<std::pair<Line, EdgeId>> edges;
  VertexSet t;
  std::size_t t_line = 0;

  void vertex(const std::string& source, const Line& line, bool allow_dash) {
    expect_arity(source, line, 3);
    const std::string& cls = line.tokens[2];
    if (cls != "A" && cls != "B" && !(allow_dash && cls == "-")) {
      fail_at(source, line.number, "vertex " + line.tokens[1] + " has unknown class '" + cls + "'");
    }
    if (vertices.contains(line.tokens[1])) fail_at(source, line.number, "vertex " + line.tokens[1] + " declared twice");
    vertices[line.tokens[1]] = {cls[0], line.number};
  }

  void edge(const std::string& source, const Line& line) {
    expect_arity(source, line, 4);
    edges.emplace_back(line, line.tokens[1]);
  }

  void terminals(const Line& line) {
    if (t_line == 0) t_line = line.number;
    t.insert(line.tokens.begin() + 1, line.tokens.end());
  }

  Multigraph graph(const std::string& source) const {
    Multigraph g;
    for (const auto& [v, info] : vertices) g.add_vertex(v);
    for (const auto& [line, id] : edges) {
      const auto& u = line.tokens[2];
      const auto& v = line.tokens[3];
      for (const auto& end : {u, v}) {
        if (!vertices.contains(end)) fail_at(source, line.number, "edge " + id + " uses undeclared vertex " + end);
      }
      if (u == v) fail_at(source, line.number, "edge " + id + " is a loop at " + u);
      if (g.has_edge(id)) fail_at(source, line.number, "edge id " + id + " declared twice");
      g.add_edge(id, u, v);
    }
    for (const auto& v : t) {
      if (!vertices.contains(v)) fail_at(source, t_line, "T vertex " + v + " is not declared");
    }
    return g;
  }

  VertexSet of_class(char cls) const {
    VertexSet out;
    for (const auto& [v, info] : vertices) {
      if (info.first == cls) out.insert(v);
    }
    return out;
  }
};

Graft make_graft(const std::string& source, Multigraph g, VertexSet t) {
  try {
    return Graft(std::move(g), std::move(t));
  } catch (const InputError& e) {
    throw InputError(source + ": " + e.what());
  }
}

BipartiteGraft make_bipartite(const std::string& source, Graft g, VertexSet a, VertexSet b) {
  try {
    return BipartiteGraft(std::move(g), std::move(a), std::move(b));
  } catch (const InputError& e) {
    throw InputError(source + ": " + e.what());
  }
}

std::string joined(const IdSet& ids) {
  std::string out;
  for (const auto& id : ids) out += " " + id;
  return out;
}

}  // namespace

const BipartiteGraft& GraftFile::require_bipartite() const {
  if (!bipartite) throw InputError("graft has no A/B classes");
  return *bipartite;
}

GraftFile make_graft_file(const Graft& g, std::optional<VertexId> root) {
  return {g, std::nullopt, std::move(root)};
}

GraftFile make_graft_file(const BipartiteGraft& bg, std::optional<VertexId> root) {
  return {bg.graft(), bg, std::move(root)};
}

GraftFile parse_graft(std::istream& in, const std::string& source) {
  Declarations decl;
  std::optional<std::pair<VertexId, std::size_t>> root;
  for (const auto& line : tokenize(in)) {
    const std::string& kw = line.tokens[0];
    if (kw == "vertex") {
      decl.vertex(source, line, true);
    } else if (kw == "edge") {
      decl.edge(source, line);
    } else if (kw == "T") {
      decl.terminals(line);
    } else if (kw == "root") {
      expect_arity(source, line, 2);
      if (root) fail_at(source, line.number, "root given twice");
      root = {line.tokens[1], line.number};
    } else {
      fail_at(source, line.number, "unknown directive '" + kw + "'");
    }
  }

  const VertexSet dashes = decl.of_class('-');
  if (!dashes.empty() && dashes.size() != decl.vertices.size()) {
    const VertexId& v = *dashes.begin();
    fail_at(source, decl.vertices.at(v).second, "vertex " + v + " has class '-' but other vertices are classed");
  }
  if (root && !decl.vertices.contains(root->first)) {
    fail_at(source, root->second, "root " + root->first + " is not declared");
  }

  Graft g = make_graft(source, decl.graph(source), decl.t);
  std::optional<BipartiteGraft> bg;
  if (dashes.empty()) bg = make_bipartite(source, g, decl.of_class('A'), decl.of_class('B'));
  return {std::move(g), std::move(bg), root ? std::optional(root->first) : std::nullopt};
}

GraftFile parse_graft_text(const std::string& text, const std::string& source) {
  std::istringstream in(text);
  return parse_graft(in, source);
}

std::string emit_graft(const GraftFile& f) {
  std::ostringstream out;
  const Multigraph& g = f.graft.graph();
  for (const auto& v : g.vertices()) {
    const char* cls = !f.bipartite ? "-" : (f.bipartite->in_a(v) ? "A" : "B");
    out << "vertex " << v << ' ' << cls << '\n';
  }
  for (const auto& [id, e] : g.edges()) out << "edge " << id << ' ' << e.u << ' ' << e.v << '\n';
  if (!f.graft.t().empty()) out << "T" << joined(f.graft.t()) << '\n';
  if (f.root) out << "root " << *f.root << '\n';
  return out.str();
}

Join parse_join(std::istream& in, const std::string& source) {
  Join out;
  for (const auto& line : tokenize(in)) {
    if (line.tokens.size() != 1) fail_at(source, line.number, "expected one edge id per line");
    if (!out.insert(line.tokens[0]).second) fail_at(source, line.number, "edge " + line.tokens[0] + " listed twice");
  }
  return out;
}

std::string emit_join(const Join& f) {
  std::string out;
  for (const auto& e : f) out += e + "\n";
  return out;
}

nlohmann::json certificate_to_json(const EarDecomposition& d) {
  nlohmann::json steps = nlohmann::json::array();
  for (const auto& s : d.steps) {
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& e : s.edges) edges.push_back({e.id, e.u, e.v});
    steps.push_back({{"kind", to_string(s.kind)},
                     {"edges", edges},
                     {"T", s.t},
                     {"A", s.a},
                     {"B", s.b},
                     {"bonds", s.bonds},
                     {"join", s.join}});
  }
  return {{"format", kCertificateFormat},
          {"root", d.root},
          {"steps", steps},
          {"summary",
           {{"vertices", d.summary.vertices},
            {"edges", d.summary.edges},
            {"T", d.summary.t_size},
            {"nu", d.summary.nu}}}};
}

namespace {

const nlohmann::json& field(const nlohmann::json& j, const char* key, nlohmann::json::value_t type,
                            const std::string& where) {
  if (!j.is_object() || !j.contains(key)) throw InputError(where + ": missing field '" + key + "'");
  const auto& v = j.at(key);
  const bool ok = type == nlohmann::json::value_t::number_unsigned ? v.is_number_unsigned() : v.type() == type;
  if (!ok) throw InputError(where + ": field '" + key + "' has the wrong type");
  return v;
}

IdSet id_set(const nlohmann::json& arr, const std::string& where) {
  IdSet out;
  for (const auto& x : arr) {
    if (!x.is_string()) throw InputError(where + ": expected a string id");
    if (!out.insert(x.get<std::string>()).second) throw InputError(where + ": duplicate id " + x.get<std::string>());
  }
  return out;
}

}  // namespace

EarDecomposition certificate_from_json(const nlohmann::json& j) {
  using T = nlohmann::json::value_t;
  if (field(j, "format", T::string, "certificate").get<std::string>() != kCertificateFormat) {
    throw InputError("certificate: unsupported format tag");
  }
  EarDecomposition d;
  d.root = field(j, "root", T::string, "certificate").get<std::string>();
  const auto& steps = field(j, "steps", T::array, "certificate");
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const std::string where = "certificate step " + std::to_string(i);
    const auto& s = steps[i];
    CertificateStep step;
    const auto kind = field(s, "kind", T::string, where).get<std::string>();
    if (kind == to_string(EarKind::Round)) {
      step.kind = EarKind::Round;
    } else if (kind == to_string(EarKind::Straight)) {
      step.kind = EarKind::Straight;
    } else {
      throw InputError(where + ": unknown kind '" + kind + "'");
    }
    for (const auto& e : field(s, "edges", T::array, where)) {
      if (!e.is_array() || e.size() != 3 || !e[0].is_string() || !e[1].is_string() || !e[2].is_string()) {
        throw InputError(where + ": edges must be [id, u, v] triples");
      }
      step.edges.push_back({e[0].get<std::string>(), e[1].get<std::string>(), e[2].get<std::string>()});
    }
    step.t = id_set(field(s, "T", T::array, where), where);
    step.a = id_set(field(s, "A", T::array, where), where);
    step.b = id_set(field(s, "B", T::array, where), where);
    for (const auto& x : field(s, "bonds", T::array, where)) {
      if (!x.is_string()) throw InputError(where + ": bonds must be strings");
      step.bonds.push_back(x.get<std::string>());
    }
    step.join = id_set(field(s, "join", T::array, where), where);
    d.steps.push_back(std::move(step));
  }
  const auto& sum = field(j, "summary", T::object, "certificate");
  d.summary.vertices = field(sum, "vertices", T::number_unsigned, "summary").get<std::size_t>();
  d.summary.edges = field(sum, "edges", T::number_unsigned, "summary").get<std::size_t>();
  d.summary.t_size = field(sum, "T", T::number_unsigned, "summary").get<std::size_t>();
  d.summary.nu = field(sum, "nu", T::number_unsigned, "summary").get<std::size_t>();
  return d;
}

std::string to_dot(const GraftFile& f, const Join* join) {
  auto quote = [](const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
      if (c == '"' || c == '\\') out += '\\';
      out += c;
    }
    return out + "\"";
  };
  std::ostringstream out;
  out << "graph graft {\n";
  for (const auto& v : f.graft.graph().vertices()) {
    const char* shape = !f.bipartite ? "circle" : (f.bipartite->in_a(v) ? "box" : "ellipse");
    out << "  " << quote(v) << " [shape=" << shape;
    if (f.graft.t().contains(v)) out << ", peripheries=2";
    if (f.root && *f.root == v) out << ", style=filled, fillcolor=lightgrey";
    out << "];\n";
  }
  for (const auto& [id, e] : f.graft.graph().edges()) {
    out << "  " << quote(e.u) << " -- " << quote(e.v) << " [label=" << quote(id);
    if (join && join->contains(id)) out << ", style=bold, penwidth=3";
    out << "];\n";
  }
  out << "}\n";
  return out.str();
}

BuildScript parse_build_script(std::istream& in, const std::string& source) {
  struct Block {
    std::size_t line;
    Declarations decl;
    std::optional<Join> join;
  };
  BuildScript out;
  std::optional<std::size_t> root_line;
  std::vector<Block> blocks;

  for (const auto& line : tokenize(in)) {
    const std::string& kw = line.tokens[0];
    if (kw == "root") {
      expect_arity(source, line, 2);
      if (root_line) fail_at(source, line.number, "root given twice");
      if (!blocks.empty()) fail_at(source, line.number, "root must precede the first ear");
      out.root = line.tokens[1];
      root_line = line.number;
      continue;
    }
    if (kw == "ear") {
      expect_arity(source, line, 1);
      blocks.push_back({line.number, {}, std::nullopt});
      continue;
    }
    if (blocks.empty()) fail_at(source, line.number, "'" + kw + "' outside an ear block");
    Block& b = blocks.back();
    if (kw == "vertex") {
      b.decl.vertex(source, line, false);
    } else if (kw == "edge") {
      b.decl.edge(source, line);
    } else if (kw == "T") {
      b.decl.terminals(line);
    } else if (kw == "join") {
      if (b.join) fail_at(source, line.number, "join given twice in one ear");
      b.join = Join(line.tokens.begin() + 1, line.tokens.end());
    } else {
      fail_at(source, line.number, "unknown directive '" + kw + "'");
    }
  }
  if (!root_line) throw InputError(source + ": missing root");

  for (auto& b : blocks) {
    const std::string where = source + ":" + std::to_string(b.line);
    Graft g = make_graft(where, b.decl.graph(where), b.decl.t);
    out.ears.push_back({make_bipartite(where, std::move(g), b.decl.of_class('A'), b.decl.of_class('B')), b.join});
  }
  return out;
}

}  // namespace grafts
