#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "graphsym/graph.hpp"

namespace graphsym {

/// Size limits checked before any construction starts.
struct Budget
{
  std::size_t max_vertices = 100'000;
  std::size_t max_edges = 20'000'000;

  /// Default budget with max_vertices taken from GRAPHSYM_BUDGET when set.
  static Budget from_environment();
};

/// A generated graph together with human-readable vertex labels.
struct Generated
{
  Graph graph;
  std::vector<std::string> labels;
  /// For truncated surrogates of infinite constructions: distance counts
  /// from vertex 0 are exact up to this radius only.
  std::optional<std::size_t> trusted_radius;
};

struct JohnsonConfig
{
  std::size_t ground_size = 0; ///< n
  std::size_t subset_size = 0; ///< k, 1 <= k <= n
};

struct CliqueTreeConfig
{
  std::size_t cliques_per_vertex = 2; ///< a >= 2
  std::size_t clique_size = 3;        ///< b >= 3
  std::size_t depth = 0;
};

enum class ClassicFamily { complete, cycle, path, hypercube, kneser, petersen, empty };

struct ClassicConfig
{
  ClassicFamily family = ClassicFamily::complete;
  std::size_t n = 0; ///< vertices, or ground size for Kneser
  std::size_t k = 0; ///< Kneser subset size
  std::size_t d = 0; ///< hypercube dimension
};

using GeneratorConfig = std::variant<JohnsonConfig, CliqueTreeConfig, ClassicConfig>;

/// Number of k-subsets of an n-set, saturating at SIZE_MAX.
std::size_t binomial(std::size_t n, std::size_t k);

/// Vertices are the k-subsets of {0..n-1} in lexicographic order, adjacent
/// when their symmetric difference has two elements. Labels are "{a,b,..}".
Generated johnson_graph(JohnsonConfig const &cfg, Budget const &budget = {});

/// Clique tree with `cfg.depth` growth steps.
///
/// Starts from one b-clique (step 0). At every later step each vertex
/// created in the previous step receives a-1 fresh b-cliques through it,
/// so every vertex not created in the last step lies in exactly a
/// cliques and has degree a(b-1). Labels are tree addresses: root clique
/// vertices are "r0".."r{b-1}", and member t of the j-th clique hung at a
/// vertex labelled L is "L/j.t".
struct CliqueTree
{
  Generated generated;
  std::vector<std::size_t> creation_step;
};

CliqueTree clique_tree(CliqueTreeConfig const &cfg, Budget const &budget = {});

/// Triangle tree with `a` triangles at each fully grown vertex; the b = 3
/// clique tree.
CliqueTree triangle_tree(std::size_t a, std::size_t depth, Budget const &budget = {});

Graph complete_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph path_graph(std::size_t n);
Graph hypercube_graph(std::size_t d);
Generated kneser_graph(std::size_t n, std::size_t k, Budget const &budget = {});
Graph petersen_graph();

Generated classic(ClassicConfig const &cfg, Budget const &budget = {});

/// Parses "complete", "cycle", "path", "q"/"hypercube", "kneser",
/// "petersen", "empty".
ClassicFamily parse_classic_family(std::string_view name);

/// Builds any configured family.
Generated generate(GeneratorConfig const &cfg, Budget const &budget = {});

/// Short display name, e.g. "J(5,2)", "Q3", "T(2,3;1)".
std::string describe(GeneratorConfig const &cfg);

} // namespace graphsym
