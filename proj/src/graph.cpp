#include "graphsym/graph.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "graphsym/errors.hpp"

namespace graphsym {

namespace {

void check_vertex(Graph const &g, Vertex v)
{
  if (v >= g.vertex_count())
    throw InputError("vertex " + std::to_string(v) + " out of range for " +
                     std::to_string(g.vertex_count()) + " vertices");
}

} // namespace

Graph::Graph(std::size_t vertex_count) : _adjacency(vertex_count) {}

Graph::Graph(std::size_t vertex_count, std::vector<Edge> const &edges)
  : _adjacency(vertex_count)
{
  for (auto [u, v] : edges) {
    if (u >= vertex_count || v >= vertex_count)
      throw InputError("edge {" + std::to_string(u) + "," + std::to_string(v) +
                       "} has an endpoint out of range");
    if (u == v)
      throw InputError("loop at vertex " + std::to_string(u));
    _adjacency[u].push_back(v);
    _adjacency[v].push_back(u);
  }

  for (auto &nbrs : _adjacency) {
    std::sort(nbrs.begin(), nbrs.end());
    auto dup = std::adjacent_find(nbrs.begin(), nbrs.end());
    if (dup != nbrs.end())
      throw InputError("duplicate edge touching vertex " + std::to_string(*dup));
  }
  _edge_count = edges.size();
}

Graph Graph::from_adjacency(std::vector<std::vector<Vertex>> adjacency)
{
  Graph g;
  g._adjacency = std::move(adjacency);
  std::size_t half_edges = 0;
  for (auto &nbrs : g._adjacency) {
    std::sort(nbrs.begin(), nbrs.end());
    nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
    half_edges += nbrs.size();
  }
  g._edge_count = half_edges / 2;
  g.audit();
  return g;
}

void Graph::audit() const
{
  std::size_t const n = _adjacency.size();
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex w : _adjacency[v]) {
      if (w >= n)
        throw InputError("neighbor index " + std::to_string(w) + " out of range");
      if (w == v)
        throw InputError("loop at vertex " + std::to_string(v));
      if (!std::binary_search(_adjacency[w].begin(), _adjacency[w].end(), v))
        throw InputError("asymmetric adjacency between " + std::to_string(v) +
                         " and " + std::to_string(w));
    }
  }
}

bool Graph::adjacent(Vertex u, Vertex v) const
{
  auto const &nbrs = _adjacency[u];
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<Edge> Graph::edges() const
{
  std::vector<Edge> result;
  result.reserve(_edge_count);
  for (Vertex u = 0; u < _adjacency.size(); ++u)
    for (Vertex v : _adjacency[u])
      if (u < v)
        result.emplace_back(u, v);
  return result;
}

std::optional<std::size_t> Graph::regular_degree() const
{
  if (_adjacency.empty())
    return std::nullopt;
  std::size_t const d = _adjacency.front().size();
  for (auto const &nbrs : _adjacency)
    if (nbrs.size() != d)
      return std::nullopt;
  return d;
}

std::vector<Distance> bfs_distances(Graph const &g, Vertex source)
{
  check_vertex(g, source);
  std::vector<Distance> dist(g.vertex_count());
  std::vector<Vertex> queue{source};
  queue.reserve(g.vertex_count());
  dist[source] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex v = queue[head];
    for (Vertex w : g.neighbors(v)) {
      if (!dist[w]) {
        dist[w] = *dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

DistanceMatrix::DistanceMatrix(Graph const &g)
  : _n(g.vertex_count()), _dist(_n * _n, unreachable)
{
  std::vector<Vertex> queue(_n);
  for (Vertex s = 0; s < _n; ++s) {
    std::uint32_t *row = &_dist[s * _n];
    std::size_t head = 0, tail = 0;
    queue[tail++] = s;
    row[s] = 0;
    while (head < tail) {
      Vertex v = queue[head++];
      for (Vertex w : g.neighbors(v)) {
        if (row[w] == unreachable) {
          row[w] = row[v] + 1;
          queue[tail++] = w;
        }
      }
    }
    if (tail != _n)
      _connected = false;
  }
}

Distance DistanceMatrix::at(Vertex u, Vertex v) const
{
  std::uint32_t d = _dist[u * _n + v];
  if (d == unreachable)
    return std::nullopt;
  return d;
}

std::size_t DistanceMatrix::eccentricity(Vertex v) const
{
  std::size_t ecc = 0;
  for (Vertex w = 0; w < _n; ++w) {
    std::uint32_t d = _dist[v * _n + w];
    if (d != unreachable)
      ecc = std::max<std::size_t>(ecc, d);
  }
  return ecc;
}

std::size_t DistanceMatrix::diameter() const
{
  if (!_connected)
    throw DisconnectedError();
  std::size_t diam = 0;
  for (Vertex v = 0; v < _n; ++v)
    diam = std::max(diam, eccentricity(v));
  return diam;
}

std::vector<Vertex> DistanceMatrix::layer(Vertex v, std::size_t radius) const
{
  std::vector<Vertex> result;
  for (Vertex w = 0; w < _n; ++w)
    if (_dist[v * _n + w] == radius)
      result.push_back(w);
  return result;
}

DistanceSequence distance_sequence(Graph const &g, Vertex source)
{
  DistanceSequence seq;
  for (Distance d : bfs_distances(g, source)) {
    if (!d)
      throw DisconnectedError();
    if (*d >= seq.counts.size())
      seq.counts.resize(*d + 1, 0);
    ++seq.counts[*d];
  }
  return seq;
}

std::size_t diameter(Graph const &g)
{
  return DistanceMatrix(g).diameter();
}

bool is_connected(Graph const &g)
{
  if (g.vertex_count() == 0)
    return true;
  auto dist = bfs_distances(g, 0);
  return std::all_of(dist.begin(), dist.end(), [](Distance d) { return d.has_value(); });
}

Graph complement(Graph const &g)
{
  std::size_t const n = g.vertex_count();
  std::vector<std::vector<Vertex>> adjacency(n);
  for (Vertex u = 0; u < n; ++u) {
    auto nbrs = g.neighbors(u);
    auto it = nbrs.begin();
    for (Vertex v = 0; v < n; ++v) {
      if (it != nbrs.end() && *it == v) {
        ++it;
        continue;
      }
      if (v != u)
        adjacency[u].push_back(v);
    }
  }
  return Graph::from_adjacency(std::move(adjacency));
}

BipartiteResult is_bipartite(Graph const &g)
{
  std::size_t const n = g.vertex_count();
  BipartiteResult result;
  std::vector<int> color(n, -1);
  std::vector<Vertex> parent(n);
  std::vector<std::size_t> depth(n, 0);

  for (Vertex root = 0; root < n; ++root) {
    if (color[root] != -1)
      continue;
    color[root] = 0;
    parent[root] = root;
    std::deque<Vertex> queue{root};
    while (!queue.empty()) {
      Vertex v = queue.front();
      queue.pop_front();
      for (Vertex w : g.neighbors(v)) {
        if (color[w] == -1) {
          color[w] = 1 - color[v];
          parent[w] = v;
          depth[w] = depth[v] + 1;
          queue.push_back(w);
        } else if (color[w] == color[v]) {
          // Both tree paths back to their lowest common ancestor plus the
          // edge v-w close an odd cycle.
          std::vector<Vertex> left{v}, right{w};
          Vertex a = v, b = w;
          while (depth[a] > depth[b]) left.push_back(a = parent[a]);
          while (depth[b] > depth[a]) right.push_back(b = parent[b]);
          while (a != b) {
            left.push_back(a = parent[a]);
            right.push_back(b = parent[b]);
          }
          right.pop_back();
          result.odd_walk = std::move(left);
          result.odd_walk.insert(result.odd_walk.end(), right.rbegin(), right.rend());
          result.odd_walk.push_back(result.odd_walk.front());
          return result;
        }
      }
    }
  }
  result.bipartite = true;
  result.coloring = std::move(color);
  return result;
}

bool is_antipodal(Graph const &g)
{
  DistanceMatrix dm(g);
  std::size_t const m = dm.diameter();
  if (m == 0)
    throw InputError("antipodality needs diameter at least 1");
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    std::vector<Vertex> group = dm.layer(u, m);
    group.push_back(u);
    for (std::size_t i = 0; i < group.size(); ++i)
      for (std::size_t j = i + 1; j < group.size(); ++j)
        if (dm.at(group[i], group[j]) != m)
          return false;
  }
  return true;
}

namespace {

template <class Keep>
Graph relation_graph(Graph const &g, Keep keep)
{
  DistanceMatrix dm(g);
  if (!dm.connected())
    throw DisconnectedError();
  std::size_t const n = g.vertex_count();
  std::vector<std::vector<Vertex>> adjacency(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v)
      if (u != v && keep(*dm.at(u, v)))
        adjacency[u].push_back(v);
  return Graph::from_adjacency(std::move(adjacency));
}

} // namespace

Graph distance_relation_graph(Graph const &g, std::size_t m)
{
  if (m == 0)
    throw InputError("distance relation needs m >= 1");
  return relation_graph(g, [m](std::size_t d) { return d == m; });
}

Graph mod_distance_graph(Graph const &g, std::size_t m)
{
  if (m == 0)
    throw InputError("mod-distance relation needs m >= 1");
  return relation_graph(g, [m](std::size_t d) { return d > 1 && d % m == 1 % m; });
}

std::vector<std::vector<Vertex>> connected_components(Graph const &g)
{
  std::size_t const n = g.vertex_count();
  std::vector<bool> seen(n, false);
  std::vector<std::vector<Vertex>> classes;
  for (Vertex root = 0; root < n; ++root) {
    if (seen[root])
      continue;
    std::vector<Vertex> cls{root};
    seen[root] = true;
    for (std::size_t i = 0; i < cls.size(); ++i)
      for (Vertex w : g.neighbors(cls[i]))
        if (!seen[w]) {
          seen[w] = true;
          cls.push_back(w);
        }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

Graph induced_subgraph(Graph const &g, std::span<Vertex const> vertices)
{
  std::vector<std::size_t> index(g.vertex_count(), SIZE_MAX);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    check_vertex(g, vertices[i]);
    if (index[vertices[i]] != SIZE_MAX)
      throw InputError("repeated vertex in induced subgraph selection");
    index[vertices[i]] = i;
  }
  std::vector<std::vector<Vertex>> adjacency(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (Vertex w : g.neighbors(vertices[i]))
      if (index[w] != SIZE_MAX)
        adjacency[i].push_back(index[w]);
  return Graph::from_adjacency(std::move(adjacency));
}

} // namespace graphsym
