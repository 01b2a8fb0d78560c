#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "grafts/errors.hpp"

namespace grafts {

using VertexId = std::string;
using EdgeId = std::string;
using VertexSet = std::set<VertexId>;
using EdgeSet = std::set<EdgeId>;

/// Unordered endpoint pair, stored with u < v.
struct Edge {
  VertexId u;
  VertexId v;

  const VertexId& other(const VertexId& x) const { return x == u ? v : u; }
  bool touches(const VertexId& x) const { return x == u || x == v; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Loop-free multigraph. Vertices and edges are addressed by opaque string
/// ids; parallel edges are distinguished by id.
class Multigraph {
 public:
  Multigraph() = default;

  void add_vertex(const VertexId& v);
  /// Adds the endpoints as vertices if missing. Rejects loops and duplicate ids.
  void add_edge(const EdgeId& id, const VertexId& u, const VertexId& v);

  bool has_vertex(const VertexId& v) const { return incidence_.contains(v); }
  bool has_edge(const EdgeId& e) const { return edges_.contains(e); }
  const Edge& edge(const EdgeId& e) const;

  /// Incident edge ids in ascending id order.
  const std::vector<EdgeId>& incident(const VertexId& v) const;
  std::size_t degree(const VertexId& v) const { return incident(v).size(); }

  VertexSet vertices() const;
  EdgeSet edge_ids() const;
  const std::map<EdgeId, Edge>& edges() const { return edges_; }
  std::size_t vertex_count() const { return incidence_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  /// Subgraph (V(G), F) when `keep_all_vertices`, otherwise the edges of F
  /// with their endpoints.
  Multigraph restrict_to(const EdgeSet& f, bool keep_all_vertices) const;
  /// G - X.
  Multigraph without(const VertexSet& x) const;

  friend bool operator==(const Multigraph&, const Multigraph&) = default;

 private:
  std::map<VertexId, std::vector<EdgeId>> incidence_;
  std::map<EdgeId, Edge> edges_;
};

/// Dense index over a multigraph for the inner loops of the solvers. Vertex
/// and edge indices follow ascending id order; adjacency is (edge, neighbour)
/// in ascending edge order.
struct GraphIndex {
  explicit GraphIndex(const Multigraph& g);

  int vertex(const VertexId& v) const;
  int edge(const EdgeId& e) const;

  std::vector<VertexId> vertex_ids;
  std::vector<EdgeId> edge_ids;
  std::vector<std::pair<int, int>> ends;
  std::vector<std::vector<std::pair<int, int>>> adjacency;

 private:
  std::map<VertexId, int> vertex_index_;
  std::map<EdgeId, int> edge_index_;
};

/// Ordered vertex/edge sequence. A path has distinct vertices and
/// vertices.size() == edges.size() + 1. A circuit repeats its first vertex at
/// the end. A single vertex with no edge is a path.
struct Walk {
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edges;

  bool closed() const { return !edges.empty() && vertices.front() == vertices.back(); }
  const VertexId& front() const { return vertices.front(); }
  const VertexId& back() const { return vertices.back(); }
  VertexSet vertex_set() const { return {vertices.begin(), vertices.end()}; }
  EdgeSet edge_set() const { return {edges.begin(), edges.end()}; }
  Walk reversed() const;

  friend bool operator==(const Walk&, const Walk&) = default;
};

enum class EarKind { Round, Straight };

struct EarShape {
  EarKind kind;
  /// One or two vertices shared with the base set.
  std::vector<VertexId> bonds;

  friend bool operator==(const EarShape&, const EarShape&) = default;
};

const char* to_string(EarKind kind);

void require_vertices(const Multigraph& g, const VertexSet& x);

/// ∂_G(X).
EdgeSet cut(const Multigraph& g, const VertexSet& x);
/// E_G[X, Y].
EdgeSet edges_between(const Multigraph& g, const VertexSet& x, const VertexSet& y);

std::vector<VertexSet> connected_components(const Multigraph& g);

/// Reads `f` as a path or circuit in `g`; nullopt when it is neither.
/// Paths start at their smaller end; circuits start at their smallest vertex.
std::optional<Walk> as_path_or_circuit(const Multigraph& g, const EdgeSet& f);
/// True when `w` is a well-formed path (or circuit, if allowed) in `g`.
bool is_path_in(const Multigraph& g, const Walk& w);
bool is_circuit_in(const Multigraph& g, const Walk& w);

/// Round/straight classification of the subgraph formed by `p` relative to X.
std::optional<EarShape> classify_ear(const Multigraph& g, const EdgeSet& p, const VertexSet& x);

/// xPy. Throws InputError when x or y is not on P.
Walk subpath(const Walk& p, const VertexId& x, const VertexId& y);

struct PathAndCircuits {
  Walk path;
  std::vector<Walk> circuits;
};

/// Splits J, whose odd-degree vertices are exactly u and v, into a simple u-v
/// path and edge-disjoint circuits. Branching follows the smallest unused
/// edge id.
PathAndCircuits decompose_into_path_and_circuits(const Multigraph& g, const EdgeSet& j,
                                                 const VertexId& u, const VertexId& v);

// VertexSet and EdgeSet share one representation; these cover both.
using IdSet = std::set<std::string>;
IdSet symmetric_difference(const IdSet& x, const IdSet& y);
IdSet set_union(const IdSet& x, const IdSet& y);
IdSet intersection(const IdSet& x, const IdSet& y);
IdSet difference(const IdSet& x, const IdSet& y);
bool is_subset(const IdSet& x, const IdSet& y);

}  // namespace grafts
