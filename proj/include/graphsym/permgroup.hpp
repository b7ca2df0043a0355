#pragma once

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "graphsym/graph.hpp"

namespace graphsym {

using GroupOrder = boost::multiprecision::cpp_int;

/// Bijection on {0..n-1}; images()[v] is the image of v.
class Permutation
{
public:
  Permutation() = default;

  /// Throws InputError unless `images` is a bijection on [0, size).
  explicit Permutation(std::vector<Vertex> images);

  static Permutation identity(std::size_t degree);

  /// e.g. from_cycles(4, {{0, 1, 2, 3}}) is the 4-cycle 0->1->2->3->0.
  static Permutation from_cycles(std::size_t degree, std::vector<std::vector<Vertex>> const &cycles);

  std::size_t degree() const { return _images.size(); }
  Vertex operator()(Vertex v) const { return _images[v]; }
  std::span<Vertex const> images() const { return _images; }
  bool is_identity() const;

  /// "p: 2 0 1 3"
  std::string to_string() const;
  /// "(0 1 2)(3 4)"; "()" for the identity.
  std::string cycle_string() const;

  /// Inverse of to_string().
  static Permutation parse(std::string_view line);

  auto operator<=>(Permutation const &) const = default;

private:
  std::vector<Vertex> _images;
};

/// v -> p(q(v)).
Permutation compose(Permutation const &p, Permutation const &q);
Permutation inverse(Permutation const &p);
Vertex apply(Permutation const &p, Vertex v);

/// Permutation group given by generators.
///
/// Identity generators and repeats are dropped on construction. Order and
/// membership use a stabilizer chain built on first use.
class PermGroup
{
public:
  explicit PermGroup(std::size_t degree, std::vector<Permutation> generators = {});

  std::size_t degree() const { return _degree; }
  std::vector<Permutation> const &generators() const { return _generators; }

  /// Sorted closure of `seed`.
  std::vector<Vertex> orbit(Vertex seed) const;
  /// Orbit partition, classes sorted by smallest element.
  std::vector<std::vector<Vertex>> orbits() const;
  bool is_transitive() const;

  /// Sorted closure of the ordered pair `seed` under the diagonal action.
  std::vector<Edge> pair_orbit(Edge seed) const;

  GroupOrder order() const;
  bool contains(Permutation const &p) const;

  /// Every element, sorted. Throws ResourceError past `limit` elements.
  std::vector<Permutation> elements(std::size_t limit = 1'000'000) const;

  /// "generators:" followed by one to_string() line per generator.
  std::string serialize() const;
  static PermGroup parse(std::istream &in);

private:
  std::size_t _degree;
  std::vector<Permutation> _generators;
};

/// Orbit partition of a group on ordered pairs, as a root index per pair
/// (u * degree + v). Two pairs share an orbit iff their roots agree.
std::vector<std::size_t> pair_orbit_roots(PermGroup const &grp);

} // namespace graphsym
