#pragma once

// Brute-force reference computations used by the test suites. Nothing in
// here calls into the library algorithms it is used to check.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "graphsym/graph.hpp"
#include "graphsym/permgroup.hpp"

namespace oracle {

using graphsym::Graph;
using graphsym::Permutation;
using graphsym::Vertex;

/// Floyd-Warshall over the adjacency predicate.
std::vector<std::vector<std::optional<std::size_t>>> all_pairs_distances(Graph const &g);

/// Number of vertices at each distance from `source`, from all_pairs_distances.
std::vector<std::size_t> layer_counts(Graph const &g, Vertex source);

/// Every permutation of V(g) preserving adjacency, by trying all n!.
std::vector<Permutation> automorphisms(Graph const &g);

/// Closure of a generator list under composition, as raw image vectors.
std::vector<std::vector<Vertex>> group_elements(std::size_t degree,
                                                std::vector<Permutation> const &gens);

/// All set partitions of {0..n-1} as restricted growth strings.
std::vector<std::vector<std::size_t>> set_partitions(std::size_t n);

bool is_invariant(std::vector<std::size_t> const &rgs, std::vector<Permutation> const &gens);

/// Finest invariant partition with a ~ b, as the meet of every invariant
/// partition joining them. Returned as sorted classes sorted by minimum.
std::vector<std::vector<Vertex>> finest_invariant_partition(std::size_t n,
                                                            std::vector<Permutation> const &gens,
                                                            Vertex a, Vertex b);

/// Every nontrivial invariant partition, each as sorted classes.
std::vector<std::vector<std::vector<Vertex>>> nontrivial_invariant_partitions(
  std::size_t n, std::vector<Permutation> const &gens);

/// Johnson layer sizes around the first k-subset, by enumerating every
/// k-subset of {0..n-1} and bucketing by intersection size.
std::vector<std::size_t> johnson_layers_by_enumeration(std::size_t n, std::size_t k);

/// C(k,i) * C(n-k,i) for i = 0..min(k, n-k).
std::vector<std::size_t> johnson_layers_by_formula(std::size_t n, std::size_t k);

/// Bron-Kerbosch with pivoting; each clique sorted, list sorted.
std::vector<std::vector<Vertex>> maximal_cliques(Graph const &g);

/// G(n, p) drawn from raw engine output, so a seed pins the graph.
Graph random_graph(std::size_t n, double p, std::mt19937 &rng);

/// Validates `doc` against the subset of JSON Schema used by the files in
/// schema/: type, enum, required, properties, additionalProperties,
/// items, minItems, minimum, oneOf and local $ref. Returns one message
/// per violation.
std::vector<std::string> schema_errors(nlohmann::json const &schema, nlohmann::json const &doc);

} // namespace oracle
