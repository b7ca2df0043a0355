#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "graphsym/automorphism.hpp"
#include "graphsym/graph.hpp"
#include "graphsym/permgroup.hpp"

namespace graphsym {

/// Partition of {0..n-1}. Classes are kept sorted internally and ordered
/// by their smallest element, so equal partitions compare equal.
class BlockSystem
{
public:
  /// InputError unless `classes` cover [0, degree) exactly once with no
  /// empty class.
  BlockSystem(std::size_t degree, std::vector<std::vector<Vertex>> classes);

  static BlockSystem singletons(std::size_t degree);
  static BlockSystem whole(std::size_t degree);

  std::size_t degree() const { return _degree; }
  std::vector<std::vector<Vertex>> const &classes() const { return _classes; }
  std::size_t class_of(Vertex v) const { return _class_of[v]; }

  /// Some class has size strictly between 1 and n.
  bool nontrivial() const;

  /// One class per line, members separated by single spaces.
  std::string to_string() const;
  static BlockSystem parse(std::istream &in);

  bool operator==(BlockSystem const &other) const { return _classes == other._classes; }

private:
  std::size_t _degree;
  std::vector<std::vector<Vertex>> _classes;
  std::vector<std::size_t> _class_of;
};

/// Every generator maps every class onto a class.
bool verify_block_system(PermGroup const &grp, BlockSystem const &bs);

/// Finest grp-invariant partition in which a and b share a class, by
/// union-find closure. No transitivity requirement.
BlockSystem finest_invariant_partition(PermGroup const &grp, Vertex a, Vertex b);

/// finest_invariant_partition for a transitive group; InputError when a == b
/// or the group is intransitive.
BlockSystem minimal_block(PermGroup const &grp, Vertex a, Vertex b);

struct GroupPrimitivity
{
  bool primitive = true;
  /// Minimal block system joining 0 with the smallest b that gives a
  /// nontrivial one.
  std::optional<BlockSystem> witness;
};

/// InputError for intransitive groups.
GroupPrimitivity is_primitive_group(PermGroup const &grp);

/// Distinct nontrivial systems minimal_block(grp, 0, b) for b = 1..n-1, in
/// order of the first b producing each.
std::vector<BlockSystem> minimal_block_systems(PermGroup const &grp);

enum class PrimitivityKind { primitive, imprimitive, not_vertex_transitive };

char const *to_string(PrimitivityKind kind);

struct GraphPrimitivity
{
  PrimitivityKind kind = PrimitivityKind::primitive;
  /// Nontrivial block system when imprimitive, orbit partition when not
  /// vertex-transitive.
  std::optional<BlockSystem> witness;
};

/// Disconnected vertex-transitive graphs with edges come back imprimitive
/// with their components as witness. Edgeless graphs fall through to the
/// group scan (their group is the full symmetric group).
GraphPrimitivity is_primitive_graph(Graph const &g, PermGroup const &aut);
GraphPrimitivity is_primitive_graph(Graph const &g, SearchOptions const &options = {});

struct ComponentBlocks
{
  BlockSystem blocks;
  bool verified = false;
};

/// Connected components of `relation` as a partition of V(g), checked
/// against Aut(g). InputError when the vertex counts differ.
ComponentBlocks components_as_blocks(Graph const &g, Graph const &relation, PermGroup const &aut);
ComponentBlocks components_as_blocks(Graph const &g, Graph const &relation,
                                     SearchOptions const &options = {});

} // namespace graphsym
