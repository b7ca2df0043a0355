#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "graphsym/automorphism.hpp"
#include "graphsym/blocks.hpp"
#include "graphsym/generators.hpp"
#include "graphsym/graph.hpp"

namespace graphsym {

/// Smith's criterion evaluated on one graph: a distance-transitive graph
/// of valency > 2 and diameter > 2 is imprimitive iff it is bipartite or
/// antipodal.
struct SmithVerdict
{
  bool applicable = false;
  /// Set only for regular graphs.
  std::optional<std::size_t> valency;
  std::size_t diameter = 0;
  bool distance_transitive = false;
  bool bipartite = false;
  bool antipodal = false;
  bool primitive = false;
  /// Set only when applicable.
  std::optional<bool> consistent;

  /// Why the criterion does not apply; empty when it does.
  std::string reason() const;
};

/// DisconnectedError on disconnected input.
SmithVerdict smith_check(Graph const &g, PermGroup const &aut);
SmithVerdict smith_check(Graph const &g, SearchOptions const &options = {});

/// Ball of radius `radius` around `root`, with the stabilizer of the root
/// in the ball's automorphism group checked to be transitive on every
/// distance layer. This is the part of distance-transitivity a truncated
/// tree construction can still witness.
bool rooted_layer_transitive(Graph const &g, Vertex root, std::size_t radius,
                             SearchOptions const &options = {});

// Finite counterparts of the block arguments, each evaluated on one graph
// with its automorphism group. std::nullopt means the hypothesis does not
// hold for this graph and nothing was checked.

/// With m the diameter of a connected vertex-transitive g: the components
/// of the distance-m relation form an Aut(g)-block system and every vertex
/// has relation-degree equal to the last distance-sequence entry.
std::optional<bool> check_diameter_relation_blocks(Graph const &g, PermGroup const &aut);

/// For distance-transitive g, over every nontrivial minimal block B and
/// u in B: B meeting a distance layer of u swallows it, and B contains no
/// edge.
std::optional<bool> check_block_propagation(Graph const &g, PermGroup const &aut);

/// For vertex-transitive g with connected complement: g and its complement
/// agree on primitivity. The complement's group is searched afresh.
std::optional<bool> check_complement_primitivity(Graph const &g, PermGroup const &aut,
                                                 SearchOptions const &options = {});

/// For connected g: every generator of aut is an automorphism of
/// mod_distance_graph(g, m).
std::optional<bool> check_mod_distance_automorphisms(Graph const &g, PermGroup const &aut,
                                                     std::size_t m);

/// One corpus line: a display name and the construction behind it.
struct CorpusEntry
{
  std::string name;
  GeneratorConfig config;
};

/// Manifest: one construction per line, `#` starts a comment.
///
///   johnson n=5 k=2
///   clique-tree a=2 b=3 depth=1
///   triangle-tree a=2 depth=1
///   classic name=q d=3
///
/// An optional `label=...` overrides the display name. InputError on
/// unknown families or keys and on malformed values.
std::vector<CorpusEntry> parse_manifest(std::istream &in);
CorpusEntry parse_manifest_line(std::string const &line);

struct CorpusRow
{
  std::string name;
  std::size_t vertex_count = 0;
  std::optional<SmithVerdict> verdict;
  DistanceSequence distance_sequence;
  /// Only for truncated constructions, see rooted_layer_transitive.
  std::optional<bool> ball_layer_transitive;

  /// Set when the row failed; `error_kind` is one of "input", "resource",
  /// "disconnected", "timeout".
  std::string error_kind;
  std::string error;

  bool failed() const { return !error_kind.empty(); }
  bool inconsistent() const { return verdict && verdict->consistent == false; }
};

struct CorpusReport
{
  std::vector<CorpusRow> rows;

  /// No failed rows and no inconsistent applicable rows.
  bool ok() const;
};

/// Rows in manifest order. Per-row failures are recorded, never thrown.
CorpusReport corpus_report(std::vector<CorpusEntry> const &corpus, Budget const &budget = {},
                           SearchOptions const &options = {});

/// JSON array, one object per row with keys in the order name, n,
/// valency, diameter, distance_transitive, bipartite, antipodal,
/// primitive, applicable, consistent, distance_sequence.
std::string report_json(CorpusReport const &report);

/// Aligned plain-text table.
std::string report_table(CorpusReport const &report);

} // namespace graphsym
