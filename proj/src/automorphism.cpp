#include "graphsym/automorphism.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <optional>

#include "graphsym/errors.hpp"

namespace graphsym {

namespace {

// Ordered partition of the vertex set. Cells are contiguous runs of
// `elems`; a cell is identified by its first position.
struct Partition
{
  std::vector<Vertex> elems;
  std::vector<std::size_t> pos;   // vertex -> position in elems
  std::vector<std::size_t> start; // vertex -> first position of its cell
  std::vector<std::size_t> end;   // cell start -> one past its last position
  std::size_t cells = 0;

  bool discrete() const { return cells == elems.size(); }

  std::vector<Vertex> cell(std::size_t first) const
  {
    std::vector<Vertex> members(elems.begin() + first, elems.begin() + end[first]);
    std::sort(members.begin(), members.end());
    return members;
  }
};

using Trace = std::vector<std::size_t>;

// Equitable refinement. Everything recorded in the trace and every choice
// made depends only on cell positions and counts, so an automorphism that
// maps one ordered partition onto another also maps their refinements
// onto each other, with identical traces.
class Refiner
{
public:
  explicit Refiner(Graph const &g)
    : _g(g), _count(g.vertex_count(), 0), _queued(g.vertex_count(), false),
      _cell_marked(g.vertex_count(), false)
  {}

  void refine(Partition &p, std::deque<std::size_t> queue, Trace &trace)
  {
    for (std::size_t s : queue)
      _queued[s] = true;

    std::vector<Vertex> touched;
    std::vector<std::size_t> touched_cells;
    std::vector<std::pair<std::size_t, Vertex>> items;

    while (!queue.empty()) {
      std::size_t const s = queue.front();
      queue.pop_front();
      _queued[s] = false;

      for (std::size_t i = s; i < p.end[s]; ++i)
        for (Vertex w : _g.neighbors(p.elems[i]))
          if (_count[w]++ == 0)
            touched.push_back(w);

      for (Vertex w : touched) {
        std::size_t c = p.start[w];
        if (!_cell_marked[c]) {
          _cell_marked[c] = true;
          touched_cells.push_back(c);
        }
      }
      std::sort(touched_cells.begin(), touched_cells.end());

      for (std::size_t c : touched_cells) {
        std::size_t const ce = p.end[c];
        items.clear();
        for (std::size_t i = c; i < ce; ++i)
          items.emplace_back(_count[p.elems[i]], p.elems[i]);
        std::sort(items.begin(), items.end());
        if (items.front().first == items.back().first)
          continue;

        trace.push_back(c);
        std::size_t fragment_start = c;
        for (std::size_t i = 0; i < items.size(); ++i) {
          std::size_t const at = c + i;
          p.elems[at] = items[i].second;
          p.pos[items[i].second] = at;
          p.start[items[i].second] = fragment_start;
          bool const last = i + 1 == items.size() || items[i + 1].first != items[i].first;
          if (last) {
            p.end[fragment_start] = at + 1;
            trace.push_back(items[i].first);
            trace.push_back(at + 1 - fragment_start);
            if (fragment_start != c)
              ++p.cells;
            if (!_queued[fragment_start]) {
              _queued[fragment_start] = true;
              queue.push_back(fragment_start);
            }
            fragment_start = at + 1;
          }
        }
      }

      for (Vertex w : touched)
        _count[w] = 0;
      for (std::size_t c : touched_cells)
        _cell_marked[c] = false;
      touched.clear();
      touched_cells.clear();
    }
  }

  // Splits v off the front of its cell and refines.
  void individualize(Partition &p, Vertex v, Trace &trace)
  {
    std::size_t const s = p.start[v];
    std::size_t const e = p.end[s];
    trace.push_back(s);
    if (e - s == 1)
      return;
    Vertex const other = p.elems[s];
    std::swap(p.elems[s], p.elems[p.pos[v]]);
    p.pos[other] = p.pos[v];
    p.pos[v] = s;
    p.end[s] = s + 1;
    p.end[s + 1] = e;
    for (std::size_t i = s + 1; i < e; ++i)
      p.start[p.elems[i]] = s + 1;
    ++p.cells;
    refine(p, {s, s + 1}, trace);
  }

private:
  Graph const &_g;
  std::vector<std::size_t> _count;
  std::vector<bool> _queued;
  std::vector<bool> _cell_marked;
};

// Vertices grouped by their sequence of distance-layer sizes; cells are
// ordered by that sequence.
Partition initial_partition(Graph const &g)
{
  std::size_t const n = g.vertex_count();
  std::vector<std::vector<std::size_t>> profile(n);
  for (Vertex v = 0; v < n; ++v)
    for (Distance d : bfs_distances(g, v)) {
      std::size_t slot = d ? *d : 0;
      if (!d) {
        // Unreachable vertices are counted in a trailing slot.
        slot = n;
      }
      if (profile[v].size() <= slot)
        profile[v].resize(slot + 1, 0);
      ++profile[v][slot];
    }

  Partition p;
  p.elems.resize(n);
  std::iota(p.elems.begin(), p.elems.end(), Vertex{0});
  std::stable_sort(p.elems.begin(), p.elems.end(),
                   [&](Vertex a, Vertex b) { return profile[a] < profile[b]; });
  p.pos.resize(n);
  p.start.resize(n);
  p.end.resize(n);
  std::size_t cell_start = 0;
  for (std::size_t i = 0; i < n; ++i) {
    p.pos[p.elems[i]] = i;
    if (i > 0 && profile[p.elems[i]] != profile[p.elems[i - 1]]) {
      p.end[cell_start] = i;
      ++p.cells;
      cell_start = i;
    }
    p.start[p.elems[i]] = cell_start;
  }
  if (n > 0) {
    p.end[cell_start] = n;
    ++p.cells;
  }
  return p;
}

std::size_t target_cell(Partition const &p)
{
  std::size_t best = SIZE_MAX, best_size = SIZE_MAX;
  for (std::size_t s = 0; s < p.elems.size(); s = p.end[s]) {
    std::size_t size = p.end[s] - s;
    if (size > 1 && size < best_size) {
      best = s;
      best_size = size;
    }
  }
  return best;
}

class Search
{
public:
  Search(Graph const &g, SearchOptions const &options)
    : _g(g), _refiner(g), _deadline(std::chrono::steady_clock::now() + options.timeout),
      _timeout(options.timeout)
  {}

  AutomorphismGroup run()
  {
    std::size_t const n = _g.vertex_count();
    Partition node = initial_partition(_g);
    {
      std::deque<std::size_t> all;
      for (std::size_t s = 0; s < n; s = node.end[s])
        all.push_back(s);
      Trace ignored;
      _refiner.refine(node, std::move(all), ignored);
    }

    while (!node.discrete()) {
      Level level{node, target_cell(node), 0, {}};
      level.chosen = node.cell(level.target).front();
      _refiner.individualize(node, level.chosen, level.trace);
      _path.push_back(std::move(level));
    }
    _leaf = node.elems;

    GroupOrder order = 1;
    for (std::size_t i = _path.size(); i-- > 0;) {
      Level const &level = _path[i];
      std::vector<bool> in_orbit = orbit_mask(level.chosen);
      for (Vertex w : level.node.cell(level.target)) {
        if (in_orbit[w])
          continue;
        tick();
        Partition child = level.node;
        Trace trace;
        _refiner.individualize(child, w, trace);
        if (trace != level.trace)
          continue;
        if (auto gamma = descend(child, i + 1)) {
          _generators.push_back(std::move(*gamma));
          in_orbit = orbit_mask(level.chosen);
        }
      }
      order *= std::count(in_orbit.begin(), in_orbit.end(), true);
    }

    std::vector<Vertex> base;
    for (auto const &level : _path)
      base.push_back(level.chosen);
    return {PermGroup(n, _generators), std::move(base), order};
  }

private:
  struct Level
  {
    Partition node;
    std::size_t target;
    Vertex chosen;
    Trace trace; // produced by individualizing `chosen` in `node`
  };

  // Looks for a leaf below `node` (at depth `depth`) equivalent to the
  // first leaf; returns the automorphism mapping one onto the other.
  std::optional<Permutation> descend(Partition const &node, std::size_t depth)
  {
    if (depth == _path.size()) {
      std::vector<Vertex> images(_leaf.size());
      for (std::size_t i = 0; i < _leaf.size(); ++i)
        images[_leaf[i]] = node.elems[i];
      Permutation gamma(std::move(images));
      if (is_automorphism(_g, gamma))
        return gamma;
      return std::nullopt;
    }
    Level const &level = _path[depth];
    for (Vertex u : node.cell(level.target)) {
      tick();
      Partition child = node;
      Trace trace;
      _refiner.individualize(child, u, trace);
      if (trace != level.trace)
        continue;
      if (auto gamma = descend(child, depth + 1))
        return gamma;
    }
    return std::nullopt;
  }

  std::vector<bool> orbit_mask(Vertex seed) const
  {
    std::vector<bool> mask(_g.vertex_count(), false);
    std::vector<Vertex> queue{seed};
    mask[seed] = true;
    for (std::size_t i = 0; i < queue.size(); ++i)
      for (auto const &gen : _generators) {
        Vertex w = gen(queue[i]);
        if (!mask[w]) {
          mask[w] = true;
          queue.push_back(w);
        }
      }
    return mask;
  }

  void tick()
  {
    if (_ticks++ % 64 != 0)
      return;
    if (std::chrono::steady_clock::now() > _deadline)
      throw TimeoutError("automorphism search exceeded " + std::to_string(_timeout.count()) + " ms",
                         _generators);
  }

  Graph const &_g;
  Refiner _refiner;
  std::chrono::steady_clock::time_point _deadline;
  std::chrono::milliseconds _timeout;
  std::size_t _ticks = 0;
  std::vector<Level> _path;
  std::vector<Vertex> _leaf;
  std::vector<Permutation> _generators;
};

} // namespace

bool is_automorphism(Graph const &g, Permutation const &p)
{
  if (p.degree() != g.vertex_count())
    throw InputError("permutation degree " + std::to_string(p.degree()) + " does not match " +
                     std::to_string(g.vertex_count()) + " vertices");
  // A bijection that maps every edge to an edge maps non-edges to
  // non-edges, since the edge count is finite and preserved.
  for (Vertex u = 0; u < g.vertex_count(); ++u)
    for (Vertex v : g.neighbors(u))
      if (u < v && !g.adjacent(p(u), p(v)))
        return false;
  return true;
}

AutomorphismGroup automorphism_group(Graph const &g, SearchOptions const &options)
{
  if (g.vertex_count() > options.max_vertices)
    throw ResourceError("automorphism search limited to " + std::to_string(options.max_vertices) +
                        " vertices, graph has " + std::to_string(g.vertex_count()));
  return Search(g, options).run();
}

PermGroup automorphism_generators(Graph const &g, SearchOptions const &options)
{
  return automorphism_group(g, options).group;
}

bool is_vertex_transitive(PermGroup const &aut)
{
  return aut.is_transitive();
}

bool is_vertex_transitive(Graph const &g, SearchOptions const &options)
{
  return is_vertex_transitive(automorphism_generators(g, options));
}

bool is_distance_transitive(Graph const &g, PermGroup const &aut)
{
  if (aut.degree() != g.vertex_count())
    throw InputError("group degree does not match the graph");
  DistanceMatrix dm(g);
  if (!dm.connected())
    throw DisconnectedError();
  std::size_t const n = g.vertex_count();
  auto roots = pair_orbit_roots(aut);
  std::map<std::size_t, std::size_t> root_at_distance;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v) {
      auto [it, fresh] = root_at_distance.emplace(*dm.at(u, v), roots[u * n + v]);
      if (!fresh && it->second != roots[u * n + v])
        return false;
    }
  return true;
}

bool is_distance_transitive(Graph const &g, SearchOptions const &options)
{
  if (!is_connected(g))
    throw DisconnectedError();
  return is_distance_transitive(g, automorphism_generators(g, options));
}

} // namespace graphsym
