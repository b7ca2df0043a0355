#include "graphsym/permgroup.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "graphsym/errors.hpp"

namespace graphsym {

Permutation::Permutation(std::vector<Vertex> images) : _images(std::move(images))
{
  std::vector<bool> hit(_images.size(), false);
  for (Vertex img : _images) {
    if (img >= _images.size() || hit[img])
      throw InputError("image list is not a bijection on [0, " +
                       std::to_string(_images.size()) + ")");
    hit[img] = true;
  }
}

Permutation Permutation::identity(std::size_t degree)
{
  std::vector<Vertex> images(degree);
  std::iota(images.begin(), images.end(), Vertex{0});
  return Permutation(std::move(images));
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     std::vector<std::vector<Vertex>> const &cycles)
{
  std::vector<Vertex> images(degree);
  std::iota(images.begin(), images.end(), Vertex{0});
  std::vector<bool> used(degree, false);
  for (auto const &cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      Vertex v = cycle[i];
      if (v >= degree || used[v])
        throw InputError("invalid cycle notation");
      used[v] = true;
      images[v] = cycle[(i + 1) % cycle.size()];
    }
  }
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const
{
  for (Vertex v = 0; v < _images.size(); ++v)
    if (_images[v] != v)
      return false;
  return true;
}

std::string Permutation::to_string() const
{
  std::string s = "p:";
  for (Vertex img : _images) {
    s += ' ';
    s += std::to_string(img);
  }
  return s;
}

std::string Permutation::cycle_string() const
{
  std::string s;
  std::vector<bool> seen(_images.size(), false);
  for (Vertex v = 0; v < _images.size(); ++v) {
    if (seen[v] || _images[v] == v)
      continue;
    s += '(';
    for (Vertex w = v; !seen[w]; w = _images[w]) {
      seen[w] = true;
      if (w != v)
        s += ' ';
      s += std::to_string(w);
    }
    s += ')';
  }
  return s.empty() ? "()" : s;
}

Permutation Permutation::parse(std::string_view line)
{
  if (!line.empty() && line.back() == '\r')
    line.remove_suffix(1);
  if (line.substr(0, 2) != "p:")
    throw InputError("permutation line must start with 'p:'");
  std::vector<Vertex> images;
  std::size_t i = 2;
  while (i < line.size()) {
    if (line[i] != ' ')
      throw InputError("malformed permutation line");
    ++i;
    Vertex v = 0;
    auto [p, ec] = std::from_chars(line.data() + i, line.data() + line.size(), v);
    if (ec != std::errc() || p == line.data() + i)
      throw InputError("malformed permutation line");
    images.push_back(v);
    i = static_cast<std::size_t>(p - line.data());
  }
  return Permutation(std::move(images));
}

Permutation compose(Permutation const &p, Permutation const &q)
{
  if (p.degree() != q.degree())
    throw InputError("cannot compose permutations of degree " + std::to_string(p.degree()) +
                     " and " + std::to_string(q.degree()));
  std::vector<Vertex> images(p.degree());
  for (Vertex v = 0; v < images.size(); ++v)
    images[v] = p(q(v));
  return Permutation(std::move(images));
}

Permutation inverse(Permutation const &p)
{
  std::vector<Vertex> images(p.degree());
  for (Vertex v = 0; v < images.size(); ++v)
    images[p(v)] = v;
  return Permutation(std::move(images));
}

Vertex apply(Permutation const &p, Vertex v)
{
  if (v >= p.degree())
    throw InputError("point " + std::to_string(v) + " outside permutation domain");
  return p(v);
}

namespace {

// Stabilizer chain over the base 0, 1, ..., n-1 (Knuth's formulation of
// Schreier-Sims). Level k holds generators of the pointwise stabilizer of
// 0..k-1 and a transversal for the orbit of k under it.
class StabilizerChain
{
public:
  StabilizerChain(std::size_t degree, std::vector<Permutation> const &generators)
    : _degree(degree), _gens(degree), _transversal(degree)
  {
    for (auto const &g : generators)
      if (!sift(0, g))
        extend(0, g);
  }

  bool sift(std::size_t level, Permutation g) const
  {
    for (std::size_t k = level; k < _degree; ++k) {
      Vertex j = g(k);
      if (j == k)
        continue;
      auto it = _transversal[k].find(j);
      if (it == _transversal[k].end())
        return false;
      g = compose(inverse(it->second), g);
    }
    return true;
  }

  GroupOrder order() const
  {
    GroupOrder result = 1;
    for (auto const &t : _transversal)
      result *= t.size() + 1; // +1 for the point itself
    return result;
  }

private:
  // g lies in the level-k stabilizer but not in the group generated so far.
  void extend(std::size_t k, Permutation const &g)
  {
    _gens[k].push_back(g);
    std::vector<Permutation> work{g};
    for (auto const &[point, sigma] : _transversal[k])
      work.push_back(compose(g, sigma));
    close(k, std::move(work));
  }

  void close(std::size_t k, std::vector<Permutation> work)
  {
    while (!work.empty()) {
      Permutation tau = std::move(work.back());
      work.pop_back();
      Vertex j = tau(k);
      if (j == k) {
        if (!sift(k + 1, tau))
          extend(k + 1, tau);
        continue;
      }
      auto it = _transversal[k].find(j);
      if (it == _transversal[k].end()) {
        _transversal[k].emplace(j, tau);
        for (auto const &s : _gens[k])
          work.push_back(compose(s, tau));
      } else {
        Permutation rho = compose(inverse(it->second), tau);
        if (!sift(k + 1, rho))
          extend(k + 1, rho);
      }
    }
  }

  std::size_t _degree;
  std::vector<std::vector<Permutation>> _gens;
  std::vector<std::map<Vertex, Permutation>> _transversal;
};

} // namespace

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> generators) : _degree(degree)
{
  for (auto &g : generators) {
    if (g.degree() != degree)
      throw InputError("generator of degree " + std::to_string(g.degree()) +
                       " in group of degree " + std::to_string(degree));
    if (g.is_identity())
      continue;
    if (std::find(_generators.begin(), _generators.end(), g) != _generators.end())
      continue;
    _generators.push_back(std::move(g));
  }
}

std::vector<Vertex> PermGroup::orbit(Vertex seed) const
{
  if (seed >= _degree)
    throw InputError("orbit seed " + std::to_string(seed) + " out of range");
  std::vector<bool> seen(_degree, false);
  std::vector<Vertex> result{seed};
  seen[seed] = true;
  for (std::size_t i = 0; i < result.size(); ++i)
    for (auto const &g : _generators) {
      Vertex w = g(result[i]);
      if (!seen[w]) {
        seen[w] = true;
        result.push_back(w);
      }
    }
  std::sort(result.begin(), result.end());
  return result;
}

std::vector<std::vector<Vertex>> PermGroup::orbits() const
{
  std::vector<bool> seen(_degree, false);
  std::vector<std::vector<Vertex>> result;
  for (Vertex v = 0; v < _degree; ++v) {
    if (seen[v])
      continue;
    auto orb = orbit(v);
    for (Vertex w : orb)
      seen[w] = true;
    result.push_back(std::move(orb));
  }
  return result;
}

bool PermGroup::is_transitive() const
{
  return _degree <= 1 || orbit(0).size() == _degree;
}

std::vector<Edge> PermGroup::pair_orbit(Edge seed) const
{
  if (seed.first >= _degree || seed.second >= _degree)
    throw InputError("pair seed out of range");
  std::set<Edge> seen{seed};
  std::vector<Edge> queue{seed};
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (auto const &g : _generators) {
      Edge image{g(queue[i].first), g(queue[i].second)};
      if (seen.insert(image).second)
        queue.push_back(image);
    }
  return {seen.begin(), seen.end()};
}

GroupOrder PermGroup::order() const
{
  return StabilizerChain(_degree, _generators).order();
}

bool PermGroup::contains(Permutation const &p) const
{
  if (p.degree() != _degree)
    throw InputError("membership test with mismatched degree");
  return StabilizerChain(_degree, _generators).sift(0, p);
}

std::vector<Permutation> PermGroup::elements(std::size_t limit) const
{
  std::set<Permutation> seen{Permutation::identity(_degree)};
  std::vector<Permutation> queue{*seen.begin()};
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (auto const &g : _generators) {
      Permutation next = compose(g, queue[i]);
      if (seen.insert(next).second) {
        if (seen.size() > limit)
          throw ResourceError("group has more than " + std::to_string(limit) + " elements");
        queue.push_back(std::move(next));
      }
    }
  return {seen.begin(), seen.end()};
}

std::string PermGroup::serialize() const
{
  std::string s = "generators:\n";
  for (auto const &g : _generators)
    s += g.to_string() + "\n";
  return s;
}

PermGroup PermGroup::parse(std::istream &in)
{
  std::string line;
  if (!std::getline(in, line) || (line != "generators:" && line != "generators:\r"))
    throw InputError("expected 'generators:' header");
  std::vector<Permutation> gens;
  std::optional<std::size_t> degree;
  while (std::getline(in, line)) {
    if (line.empty() || line == "\r")
      continue;
    gens.push_back(Permutation::parse(line));
    if (degree && *degree != gens.back().degree())
      throw InputError("generators of differing degree");
    degree = gens.back().degree();
  }
  // Without generators the degree is unknown; the trivial group on 0 points.
  return PermGroup(degree.value_or(0), std::move(gens));
}

std::vector<std::size_t> pair_orbit_roots(PermGroup const &grp)
{
  std::size_t const n = grp.degree();
  std::vector<std::size_t> parent(n * n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x)
      x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto const &g : grp.generators())
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = 0; v < n; ++v) {
        std::size_t a = find(u * n + v), b = find(g(u) * n + g(v));
        if (a != b)
          parent[std::max(a, b)] = std::min(a, b);
      }
  for (std::size_t x = 0; x < parent.size(); ++x)
    parent[x] = find(x);
  return parent;
}

} // namespace graphsym
