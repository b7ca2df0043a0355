#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "graphsym/automorphism.hpp"
#include "graphsym/errors.hpp"
#include "graphsym/generators.hpp"
#include "oracles.hpp"

using namespace graphsym;

namespace {

Graph k4_minus_edge() { return Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}}); }

std::vector<std::vector<Vertex>> as_vectors(std::vector<Permutation> const &perms)
{
  std::vector<std::vector<Vertex>> out;
  for (auto const &p : perms)
    out.emplace_back(p.images().begin(), p.images().end());
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace

TEST_CASE("is_automorphism")
{
  Graph c5 = cycle_graph(5);
  CHECK(is_automorphism(c5, Permutation::identity(5)));
  CHECK(is_automorphism(c5, Permutation({1, 2, 3, 4, 0})));
  CHECK_FALSE(is_automorphism(path_graph(3), Permutation({1, 0, 2})));
  CHECK(is_automorphism(path_graph(3), Permutation({2, 1, 0})));
  CHECK_THROWS_AS(is_automorphism(c5, Permutation::identity(4)), InputError);
}

TEST_CASE("automorphism group orders")
{
  auto k4 = automorphism_generators(complete_graph(4));
  CHECK(k4.order() == 24);
  CHECK(k4.orbit(0) == std::vector<Vertex>{0, 1, 2, 3});

  auto p3 = automorphism_generators(path_graph(3));
  CHECK(p3.order() == 2);
  CHECK(p3.generators() == std::vector<Permutation>{Permutation({2, 1, 0})});

  auto pet = automorphism_group(petersen_graph());
  CHECK(pet.order == 120);
  CHECK(pet.group.order() == 120);
  CHECK(pet.group.is_transitive());

  CHECK(automorphism_group(hypercube_graph(4)).order == 384);
  CHECK(automorphism_group(johnson_graph({7, 3}).graph).order == 5040);
  CHECK(automorphism_group(cycle_graph(8)).order == 16);
  CHECK(automorphism_group(Graph(6)).order == 720);
  CHECK(automorphism_group(Graph(0)).order == 1);
  CHECK(automorphism_group(complete_graph(10)).order == GroupOrder("3628800"));
}

TEST_CASE("generators are automorphisms and the two order routes agree")
{
  for (Graph const &g : {petersen_graph(), hypercube_graph(3), johnson_graph({6, 3}).graph,
                         clique_tree({2, 3, 2}).generated.graph, kneser_graph(6, 2).graph}) {
    auto aut = automorphism_group(g);
    for (auto const &p : aut.group.generators())
      CHECK(is_automorphism(g, p));
    CHECK(aut.group.order() == aut.order);
  }
}

TEST_CASE("search limits")
{
  CHECK_THROWS_AS(automorphism_group(cycle_graph(30), SearchOptions{20}), ResourceError);
  SearchOptions instant;
  instant.timeout = std::chrono::milliseconds(0);
  CHECK_THROWS_AS(automorphism_group(johnson_graph({9, 4}).graph, instant), TimeoutError);
}

TEST_CASE("vertex transitivity")
{
  CHECK(is_vertex_transitive(complete_graph(5)));
  CHECK(is_vertex_transitive(cycle_graph(7)));
  CHECK(is_vertex_transitive(hypercube_graph(3)));
  CHECK(is_vertex_transitive(johnson_graph({6, 2}).graph));
  CHECK(is_vertex_transitive(kneser_graph(6, 2).graph));
  CHECK_FALSE(is_vertex_transitive(path_graph(3)));
  CHECK(automorphism_generators(path_graph(3)).orbit(0) == std::vector<Vertex>{0, 2});
  CHECK_FALSE(is_vertex_transitive(clique_tree({2, 3, 1}).generated.graph));
  CHECK_FALSE(is_vertex_transitive(clique_tree({3, 3, 2}).generated.graph));
}

TEST_CASE("distance transitivity")
{
  CHECK(is_distance_transitive(johnson_graph({5, 2}).graph));
  CHECK(is_distance_transitive(hypercube_graph(3)));
  CHECK(is_distance_transitive(petersen_graph()));
  CHECK(is_distance_transitive(cycle_graph(9)));
  CHECK(is_distance_transitive(complete_graph(6)));
  CHECK_FALSE(is_distance_transitive(k4_minus_edge()));
  CHECK_FALSE(is_vertex_transitive(k4_minus_edge()));
  // Vertex-transitive, not distance-transitive: the 3-prism.
  Graph prism(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
  CHECK(is_vertex_transitive(prism));
  CHECK_FALSE(is_distance_transitive(prism));
  CHECK_THROWS_AS(is_distance_transitive(Graph(3)), DisconnectedError);
}

TEST_CASE("search output is deterministic")
{
  Graph g = johnson_graph({6, 3}).graph;
  auto a = automorphism_group(g);
  auto b = automorphism_group(g);
  CHECK(a.group.generators() == b.group.generators());
  CHECK(a.base == b.base);
}

TEST_CASE("generated group equals the brute-force group on random small graphs")
{
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 30; ++trial) {
    Graph g = oracle::random_graph(2 + trial % 6, 0.2 + 0.1 * (trial % 6), rng);
    auto aut = automorphism_generators(g);
    auto brute = as_vectors(oracle::automorphisms(g));
    CHECK(oracle::group_elements(g.vertex_count(), aut.generators()) == brute);
    CHECK(aut.order() == brute.size());
  }
}
