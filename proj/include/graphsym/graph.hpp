#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace graphsym {

using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;

/// Shortest-path length; std::nullopt marks an unreachable pair.
using Distance = std::optional<std::size_t>;

/// Finite simple undirected graph on the vertices 0..n-1.
///
/// Neighbor lists are kept sorted, so equality is edge-for-edge and
/// adjacency tests are logarithmic. Instances are immutable once built.
class Graph
{
public:
  Graph() = default;

  /// Edgeless graph.
  explicit Graph(std::size_t vertex_count);

  /// Rejects loops, duplicate edges (in either orientation) and
  /// out-of-range endpoints with InputError.
  Graph(std::size_t vertex_count, std::vector<Edge> const &edges);

  /// Builds from per-vertex neighbor sets after auditing symmetry, loops
  /// and index ranges.
  static Graph from_adjacency(std::vector<std::vector<Vertex>> adjacency);

  std::size_t vertex_count() const { return _adjacency.size(); }
  std::size_t edge_count() const { return _edge_count; }

  std::span<Vertex const> neighbors(Vertex v) const { return _adjacency[v]; }
  std::size_t degree(Vertex v) const { return _adjacency[v].size(); }
  bool adjacent(Vertex u, Vertex v) const;

  /// Every edge once as (u, v) with u < v, in lexicographic order.
  std::vector<Edge> edges() const;

  /// Common degree when every vertex has the same degree.
  std::optional<std::size_t> regular_degree() const;

  bool operator==(Graph const &) const = default;

private:
  void audit() const;

  std::vector<std::vector<Vertex>> _adjacency;
  std::size_t _edge_count = 0;
};

/// Per-radius vertex counts around a source vertex.
///
/// `complete` is false when the graph is a truncated surrogate of an
/// infinite construction; the counts are then only meaningful up to the
/// last listed radius.
struct DistanceSequence
{
  std::vector<std::size_t> counts;
  bool complete = true;

  bool operator==(DistanceSequence const &) const = default;
};

/// All-pairs shortest-path lengths, one BFS per vertex.
class DistanceMatrix
{
public:
  explicit DistanceMatrix(Graph const &g);

  std::size_t vertex_count() const { return _n; }
  Distance at(Vertex u, Vertex v) const;
  bool connected() const { return _connected; }

  /// Largest finite distance from v.
  std::size_t eccentricity(Vertex v) const;

  /// Throws DisconnectedError on a disconnected graph.
  std::size_t diameter() const;

  /// Vertices at exactly distance `radius` from v, ascending.
  std::vector<Vertex> layer(Vertex v, std::size_t radius) const;

private:
  static constexpr std::uint32_t unreachable = UINT32_MAX;

  std::size_t _n;
  std::vector<std::uint32_t> _dist;
  bool _connected = true;
};

std::vector<Distance> bfs_distances(Graph const &g, Vertex source);

/// counts[i] = number of vertices at distance i from `source`.
/// Throws DisconnectedError when some vertex is unreachable.
DistanceSequence distance_sequence(Graph const &g, Vertex source);

std::size_t diameter(Graph const &g);

bool is_connected(Graph const &g);

Graph complement(Graph const &g);

struct BipartiteResult
{
  bool bipartite = false;
  /// 0/1 per vertex when bipartite.
  std::vector<int> coloring;
  /// Closed walk of odd length (first vertex repeated at the end) when not.
  std::vector<Vertex> odd_walk;
};

BipartiteResult is_bipartite(Graph const &g);

/// Every vertex u: distinct members of {u} together with the vertices at
/// distance diameter(g) from u are pairwise at distance diameter(g).
/// Vacuously true for diameter 1.
bool is_antipodal(Graph const &g);

/// u ~ v iff dist(u, v) == m.
Graph distance_relation_graph(Graph const &g, std::size_t m);

/// u ~ v iff dist(u, v) > 1 and dist(u, v) = 1 (mod m).
Graph mod_distance_graph(Graph const &g, std::size_t m);

/// Classes of the path-connectivity relation, each ascending, ordered by
/// smallest element.
std::vector<std::vector<Vertex>> connected_components(Graph const &g);

/// Subgraph induced on `vertices`; vertex i of the result is vertices[i].
Graph induced_subgraph(Graph const &g, std::span<Vertex const> vertices);

} // namespace graphsym
