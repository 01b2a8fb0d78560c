#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "grafts/ear_graft.hpp"
#include "grafts/graft.hpp"

namespace grafts {

/// Parsed graft file. `bipartite` is set when every vertex carries A or B.
struct GraftFile {
  Graft graft;
  std::optional<BipartiteGraft> bipartite;
  std::optional<VertexId> root;

  /// Throws InputError when the file has '-' classes.
  const BipartiteGraft& require_bipartite() const;

  friend bool operator==(const GraftFile&, const GraftFile&) = default;
};

GraftFile make_graft_file(const Graft& g, std::optional<VertexId> root = std::nullopt);
GraftFile make_graft_file(const BipartiteGraft& bg, std::optional<VertexId> root = std::nullopt);

/// Line-based format:
///   vertex <id> <A|B|->
///   edge <edge-id> <u> <v>
///   T <id> [<id> ...]
///   root <id>
/// '#' starts a comment. Errors are InputError with "<source>:<line>: ".
GraftFile parse_graft(std::istream& in, const std::string& source = "<input>");
GraftFile parse_graft_text(const std::string& text, const std::string& source = "<input>");
/// Canonical: vertices, then edges, by id; one T line; root last.
std::string emit_graft(const GraftFile& f);

Join parse_join(std::istream& in, const std::string& source = "<input>");
std::string emit_join(const Join& f);

inline constexpr const char* kCertificateFormat = "graft-eardecomp/1";

nlohmann::json certificate_to_json(const EarDecomposition& d);
/// Strict: every field must be present with the right type.
EarDecomposition certificate_from_json(const nlohmann::json& j);

std::string to_dot(const GraftFile& f, const Join* join = nullptr);

/// Build script:
///   root <id>
///   ear                       # opens a block; repeat per ear
///   vertex <id> <A|B>
///   edge <edge-id> <u> <v>
///   T <id> ...
///   join [<edge-id> ...]      # optional; computed when absent
struct BuildScript {
  VertexId root;
  std::vector<EarInput> ears;
};

BuildScript parse_build_script(std::istream& in, const std::string& source = "<input>");

}  // namespace grafts
