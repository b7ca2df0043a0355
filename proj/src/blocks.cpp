#include "graphsym/blocks.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <sstream>

#include "graphsym/errors.hpp"

namespace graphsym {

BlockSystem::BlockSystem(std::size_t degree, std::vector<std::vector<Vertex>> classes)
  : _degree(degree), _classes(std::move(classes)), _class_of(degree, SIZE_MAX)
{
  for (auto &cls : _classes) {
    if (cls.empty())
      throw InputError("block system has an empty class");
    std::sort(cls.begin(), cls.end());
  }
  std::sort(_classes.begin(), _classes.end(),
            [](auto const &x, auto const &y) { return x.front() < y.front(); });
  for (std::size_t i = 0; i < _classes.size(); ++i)
    for (Vertex v : _classes[i]) {
      if (v >= degree)
        throw InputError("block member " + std::to_string(v) + " out of range");
      if (_class_of[v] != SIZE_MAX)
        throw InputError("vertex " + std::to_string(v) + " appears in two classes");
      _class_of[v] = i;
    }
  for (Vertex v = 0; v < degree; ++v)
    if (_class_of[v] == SIZE_MAX)
      throw InputError("vertex " + std::to_string(v) + " is in no class");
}

BlockSystem BlockSystem::singletons(std::size_t degree)
{
  std::vector<std::vector<Vertex>> classes;
  for (Vertex v = 0; v < degree; ++v)
    classes.push_back({v});
  return BlockSystem(degree, std::move(classes));
}

BlockSystem BlockSystem::whole(std::size_t degree)
{
  std::vector<Vertex> all(degree);
  std::iota(all.begin(), all.end(), Vertex{0});
  if (all.empty())
    return BlockSystem(0, {});
  return BlockSystem(degree, {std::move(all)});
}

bool BlockSystem::nontrivial() const
{
  return std::any_of(_classes.begin(), _classes.end(), [this](auto const &cls) {
    return cls.size() > 1 && cls.size() < _degree;
  });
}

std::string BlockSystem::to_string() const
{
  std::string s;
  for (auto const &cls : _classes) {
    for (std::size_t i = 0; i < cls.size(); ++i) {
      if (i)
        s += ' ';
      s += std::to_string(cls[i]);
    }
    s += '\n';
  }
  return s;
}

BlockSystem BlockSystem::parse(std::istream &in)
{
  std::vector<std::vector<Vertex>> classes;
  std::size_t degree = 0;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line == "\r")
      continue;
    std::istringstream ss(line);
    std::vector<Vertex> cls;
    Vertex v;
    while (ss >> v)
      cls.push_back(v);
    if (!ss.eof())
      throw InputError("malformed block line '" + line + "'");
    degree += cls.size();
    classes.push_back(std::move(cls));
  }
  return BlockSystem(degree, std::move(classes));
}

bool verify_block_system(PermGroup const &grp, BlockSystem const &bs)
{
  if (grp.degree() != bs.degree())
    throw InputError("group degree " + std::to_string(grp.degree()) +
                     " does not match block system degree " + std::to_string(bs.degree()));
  auto const &classes = bs.classes();
  for (auto const &g : grp.generators())
    for (auto const &cls : classes) {
      std::size_t target = bs.class_of(g(cls.front()));
      if (classes[target].size() != cls.size())
        return false;
      for (Vertex v : cls)
        if (bs.class_of(g(v)) != target)
          return false;
    }
  return true;
}

BlockSystem finest_invariant_partition(PermGroup const &grp, Vertex a, Vertex b)
{
  std::size_t const n = grp.degree();
  if (a >= n || b >= n)
    throw InputError("block seed out of range");

  std::vector<Vertex> parent(n);
  std::iota(parent.begin(), parent.end(), Vertex{0});
  auto find = [&](Vertex x) {
    while (parent[x] != x)
      x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](Vertex x, Vertex y) {
    x = find(x);
    y = find(y);
    if (x == y)
      return false;
    parent[std::max(x, y)] = std::min(x, y);
    return true;
  };

  // Every recorded pair is an edge of the generating relation; the closure
  // is invariant once the image of every such edge is inside it.
  std::vector<Edge> pending;
  if (unite(a, b))
    pending.emplace_back(a, b);
  while (!pending.empty()) {
    auto [x, y] = pending.back();
    pending.pop_back();
    for (auto const &g : grp.generators())
      if (unite(g(x), g(y)))
        pending.emplace_back(g(x), g(y));
  }

  std::vector<std::vector<Vertex>> classes(n);
  for (Vertex v = 0; v < n; ++v)
    classes[find(v)].push_back(v);
  std::erase_if(classes, [](auto const &cls) { return cls.empty(); });
  return BlockSystem(n, std::move(classes));
}

BlockSystem minimal_block(PermGroup const &grp, Vertex a, Vertex b)
{
  if (a == b)
    throw InputError("minimal block needs two distinct points");
  if (!grp.is_transitive())
    throw InputError("minimal block needs a transitive group");
  return finest_invariant_partition(grp, a, b);
}

GroupPrimitivity is_primitive_group(PermGroup const &grp)
{
  if (!grp.is_transitive())
    throw InputError("primitivity is defined here for transitive groups only");
  for (Vertex b = 1; b < grp.degree(); ++b) {
    BlockSystem bs = finest_invariant_partition(grp, 0, b);
    if (bs.nontrivial())
      return {false, std::move(bs)};
  }
  return {true, std::nullopt};
}

std::vector<BlockSystem> minimal_block_systems(PermGroup const &grp)
{
  if (!grp.is_transitive())
    throw InputError("block systems are enumerated for transitive groups only");
  std::vector<BlockSystem> systems;
  for (Vertex b = 1; b < grp.degree(); ++b) {
    BlockSystem bs = finest_invariant_partition(grp, 0, b);
    if (bs.nontrivial() && std::find(systems.begin(), systems.end(), bs) == systems.end())
      systems.push_back(std::move(bs));
  }
  return systems;
}

char const *to_string(PrimitivityKind kind)
{
  switch (kind) {
  case PrimitivityKind::primitive: return "primitive";
  case PrimitivityKind::imprimitive: return "imprimitive";
  case PrimitivityKind::not_vertex_transitive: return "not_vertex_transitive";
  }
  return "?";
}

GraphPrimitivity is_primitive_graph(Graph const &g, PermGroup const &aut)
{
  if (aut.degree() != g.vertex_count())
    throw InputError("group degree does not match the graph");
  if (!aut.is_transitive())
    return {PrimitivityKind::not_vertex_transitive, BlockSystem(g.vertex_count(), aut.orbits())};

  BlockSystem components(g.vertex_count(), connected_components(g));
  if (components.nontrivial())
    return {PrimitivityKind::imprimitive, std::move(components)};

  auto verdict = is_primitive_group(aut);
  if (verdict.primitive)
    return {PrimitivityKind::primitive, std::nullopt};
  return {PrimitivityKind::imprimitive, std::move(verdict.witness)};
}

GraphPrimitivity is_primitive_graph(Graph const &g, SearchOptions const &options)
{
  return is_primitive_graph(g, automorphism_generators(g, options));
}

ComponentBlocks components_as_blocks(Graph const &g, Graph const &relation, PermGroup const &aut)
{
  if (relation.vertex_count() != g.vertex_count())
    throw InputError("relation graph has " + std::to_string(relation.vertex_count()) +
                     " vertices, expected " + std::to_string(g.vertex_count()));
  BlockSystem blocks(g.vertex_count(), connected_components(relation));
  bool verified = verify_block_system(aut, blocks);
  return {std::move(blocks), verified};
}

ComponentBlocks components_as_blocks(Graph const &g, Graph const &relation,
                                     SearchOptions const &options)
{
  if (relation.vertex_count() != g.vertex_count())
    throw InputError("relation graph has " + std::to_string(relation.vertex_count()) +
                     " vertices, expected " + std::to_string(g.vertex_count()));
  return components_as_blocks(g, relation, automorphism_generators(g, options));
}

} // namespace graphsym
