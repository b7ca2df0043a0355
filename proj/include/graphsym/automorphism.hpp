#pragma once

#include <chrono>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "graphsym/graph.hpp"
#include "graphsym/permgroup.hpp"

namespace graphsym {

struct SearchOptions
{
  std::size_t max_vertices = 2'000;
  std::chrono::milliseconds timeout{30'000};
};

/// The search hit its time limit. The generators found so far come along
/// for diagnostics; they do not generate the full automorphism group.
class TimeoutError : public std::runtime_error
{
public:
  TimeoutError(std::string const &what, std::vector<Permutation> partial)
    : std::runtime_error(what), _partial(std::move(partial))
  {}

  std::vector<Permutation> const &partial_generators() const { return _partial; }

private:
  std::vector<Permutation> _partial;
};

struct AutomorphismGroup
{
  PermGroup group;
  /// Points individualized along the first branch of the search tree.
  std::vector<Vertex> base;
  /// Product of the basic orbit lengths along `base`.
  GroupOrder order;
};

/// u ~ v iff p(u) ~ p(v). InputError on a degree mismatch.
bool is_automorphism(Graph const &g, Permutation const &p);

/// Generators of Aut(g) via individualization and equitable refinement.
///
/// Vertices start partitioned by their distance profile. The search walks
/// a first branch to a discrete partition, then, from the deepest level
/// up, looks under every branch point outside the known orbit for a leaf
/// equivalent to the first one. Each hit is a generator fixing the
/// branch prefix, so the basic orbits found are exact and the product of
/// their lengths is |Aut(g)|.
///
/// Throws ResourceError above options.max_vertices and TimeoutError when
/// options.timeout elapses.
AutomorphismGroup automorphism_group(Graph const &g, SearchOptions const &options = {});

PermGroup automorphism_generators(Graph const &g, SearchOptions const &options = {});

bool is_vertex_transitive(PermGroup const &aut);
bool is_vertex_transitive(Graph const &g, SearchOptions const &options = {});

/// For every d up to the diameter, the ordered pairs at distance d form a
/// single orbit of `aut`. DisconnectedError on disconnected graphs.
bool is_distance_transitive(Graph const &g, PermGroup const &aut);
bool is_distance_transitive(Graph const &g, SearchOptions const &options = {});

} // namespace graphsym
