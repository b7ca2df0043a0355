#include "graphsym/generators.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <numeric>
#include <string>

#include "graphsym/errors.hpp"

namespace graphsym {

namespace {

using Subset = std::vector<std::size_t>;

std::size_t saturating_mul(std::size_t a, std::size_t b)
{
  if (a != 0 && b > SIZE_MAX / a)
    return SIZE_MAX;
  return a * b;
}

std::size_t saturating_add(std::size_t a, std::size_t b)
{
  return a > SIZE_MAX - b ? SIZE_MAX : a + b;
}

void check_budget(std::string const &what, std::size_t vertices, std::size_t edges,
                  Budget const &budget)
{
  if (vertices > budget.max_vertices)
    throw ResourceError(what + " would have " +
                        (vertices == SIZE_MAX ? std::string("too many") : std::to_string(vertices)) +
                        " vertices (budget " + std::to_string(budget.max_vertices) + ")");
  if (edges > budget.max_edges)
    throw ResourceError(what + " would have " +
                        (edges == SIZE_MAX ? std::string("too many") : std::to_string(edges)) +
                        " edges (budget " + std::to_string(budget.max_edges) + ")");
}

std::vector<Subset> all_subsets(std::size_t n, std::size_t k)
{
  std::vector<Subset> result;
  Subset s(k);
  for (std::size_t i = 0; i < k; ++i)
    s[i] = i;
  for (;;) {
    result.push_back(s);
    // Advance to the lexicographic successor.
    std::size_t i = k;
    while (i > 0 && s[i - 1] == n - k + i - 1)
      --i;
    if (i == 0)
      break;
    ++s[i - 1];
    for (std::size_t j = i; j < k; ++j)
      s[j] = s[j - 1] + 1;
  }
  return result;
}

std::string subset_label(Subset const &s)
{
  std::string label = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i)
      label += ',';
    label += std::to_string(s[i]);
  }
  return label + "}";
}

std::vector<std::string> index_labels(std::size_t n)
{
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t v = 0; v < n; ++v)
    labels.push_back(std::to_string(v));
  return labels;
}

} // namespace

Budget Budget::from_environment()
{
  Budget budget;
  if (char const *env = std::getenv("GRAPHSYM_BUDGET")) {
    char *end = nullptr;
    unsigned long long value = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0')
      throw InputError(std::string("GRAPHSYM_BUDGET is not a non-negative integer: ") + env);
    budget.max_vertices = static_cast<std::size_t>(value);
  }
  return budget;
}

std::size_t binomial(std::size_t n, std::size_t k)
{
  if (k > n)
    return 0;
  k = std::min(k, n - k);
  std::size_t result = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    // result * (n - k + i) / i is exact at every step.
    std::size_t const num = n - k + i;
    std::size_t const g = std::gcd(result, i);
    std::size_t const scaled = saturating_mul(result / g, num / (i / g));
    if (scaled == SIZE_MAX)
      return SIZE_MAX;
    result = scaled;
  }
  return result;
}

Generated johnson_graph(JohnsonConfig const &cfg, Budget const &budget)
{
  std::size_t const n = cfg.ground_size, k = cfg.subset_size;
  if (n == 0 || k == 0 || k > n)
    throw InputError("Johnson graph needs 1 <= k <= n, got n=" + std::to_string(n) +
                     " k=" + std::to_string(k));
  std::size_t const vertices = binomial(n, k);
  std::string const name = "J(" + std::to_string(n) + "," + std::to_string(k) + ")";
  check_budget(name, vertices, saturating_mul(vertices, k * (n - k)) / 2, budget);

  // Taking complements maps J(n,k) onto J(n,n-k) and reverses lexicographic
  // order, so the adjacency is built on the smaller side and mirrored.
  std::size_t const m = std::min(k, n - k);
  bool const mirrored = m != k;
  auto subsets = all_subsets(n, m);

  // Lexicographic rank of a sorted k-subset. Position i contributes the
  // subsets that agree before it and hold some x in [next, t[i]) there,
  // i.e. sum of C(n-1-x, k-1-i), which telescopes to a difference of two
  // binomials. Entries that saturate are never reached: every term used is
  // at most C(n, k).
  std::vector<std::vector<std::size_t>> choose(n + 1, std::vector<std::size_t>(m + 1, 0));
  for (std::size_t r = 0; r <= n; ++r) {
    choose[r][0] = 1;
    for (std::size_t c = 1; c <= std::min(r, m); ++c)
      choose[r][c] = saturating_add(choose[r - 1][c - 1], choose[r - 1][c]);
  }
  auto rank = [&](Subset const &t) {
    std::size_t r = 0, next = 0;
    for (std::size_t i = 0; i < m; ++i) {
      r += choose[n - next][m - i] - choose[n - t[i]][m - i];
      next = t[i] + 1;
    }
    return r;
  };

  std::vector<std::vector<Vertex>> adjacency(subsets.size());
  std::vector<std::size_t> outside;
  outside.reserve(n - m);
  Subset t(m);
  for (Vertex v = 0; v < subsets.size(); ++v) {
    Subset const &s = subsets[v];
    outside.clear();
    for (std::size_t x = 0, j = 0; x < n; ++x) {
      if (j < m && s[j] == x)
        ++j;
      else
        outside.push_back(x);
    }
    adjacency[v].reserve(m * (n - m));
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t y : outside) {
        // s with s[i] replaced by y, kept sorted.
        std::size_t out = 0;
        bool placed = false;
        for (std::size_t j = 0; j < m; ++j) {
          if (j == i)
            continue;
          if (!placed && y < s[j]) {
            t[out++] = y;
            placed = true;
          }
          t[out++] = s[j];
        }
        if (!placed)
          t[out] = y;
        adjacency[v].push_back(rank(t));
      }
    }
  }

  if (mirrored) {
    std::size_t const last = adjacency.size() - 1;
    std::reverse(adjacency.begin(), adjacency.end());
    for (auto &row : adjacency)
      for (Vertex &w : row)
        w = last - w;
    subsets = all_subsets(n, k);
  }

  Generated out;
  out.graph = Graph::from_adjacency(std::move(adjacency));
  out.labels.reserve(subsets.size());
  for (auto const &s : subsets)
    out.labels.push_back(subset_label(s));
  return out;
}

Generated kneser_graph(std::size_t n, std::size_t k, Budget const &budget)
{
  if (n == 0 || k == 0 || k > n)
    throw InputError("Kneser graph needs 1 <= k <= n, got n=" + std::to_string(n) +
                     " k=" + std::to_string(k));
  std::size_t const vertices = binomial(n, k);
  std::string const name = "Kneser(" + std::to_string(n) + "," + std::to_string(k) + ")";
  check_budget(name, vertices, saturating_mul(vertices, binomial(n - k, k)) / 2, budget);

  auto subsets = all_subsets(n, k);
  std::map<Subset, Vertex> index;
  for (Vertex v = 0; v < subsets.size(); ++v)
    index.emplace(subsets[v], v);

  std::vector<std::vector<Vertex>> adjacency(subsets.size());
  for (Vertex v = 0; v < subsets.size(); ++v) {
    Subset rest;
    std::size_t j = 0;
    for (std::size_t x = 0; x < n; ++x) {
      if (j < k && subsets[v][j] == x)
        ++j;
      else
        rest.push_back(x);
    }
    if (rest.size() < k)
      continue;
    for (auto const &choice : all_subsets(rest.size(), k)) {
      Subset t;
      for (std::size_t i : choice)
        t.push_back(rest[i]);
      adjacency[v].push_back(index.at(t));
    }
  }

  Generated out;
  out.graph = Graph::from_adjacency(std::move(adjacency));
  for (auto const &s : subsets)
    out.labels.push_back(subset_label(s));
  return out;
}

CliqueTree clique_tree(CliqueTreeConfig const &cfg, Budget const &budget)
{
  std::size_t const a = cfg.cliques_per_vertex, b = cfg.clique_size;
  if (a < 2 || b < 3)
    throw InputError("clique tree needs a >= 2 and b >= 3, got a=" + std::to_string(a) +
                     " b=" + std::to_string(b));

  std::string const name = "T(" + std::to_string(a) + "," + std::to_string(b) + ";" +
                           std::to_string(cfg.depth) + ")";
  // Every step multiplies the newest generation by (a-1)(b-1).
  std::size_t const growth = (a - 1) * (b - 1);
  std::size_t generation = b, vertices = b;
  for (std::size_t s = 1; s <= cfg.depth && vertices != SIZE_MAX; ++s) {
    generation = saturating_mul(generation, growth);
    vertices = saturating_add(vertices, generation);
  }
  std::size_t const cliques = vertices == SIZE_MAX ? SIZE_MAX : 1 + (vertices - b) / (b - 1);
  check_budget(name, vertices, saturating_mul(cliques, b * (b - 1) / 2), budget);

  CliqueTree tree;
  auto &labels = tree.generated.labels;
  std::vector<std::vector<Vertex>> adjacency;
  auto add_clique = [&](std::vector<Vertex> const &members) {
    for (Vertex u : members)
      for (Vertex v : members)
        if (u != v)
          adjacency[u].push_back(v);
  };

  std::vector<Vertex> frontier;
  for (std::size_t t = 0; t < b; ++t) {
    frontier.push_back(t);
    labels.push_back("r" + std::to_string(t));
    tree.creation_step.push_back(0);
  }
  adjacency.resize(b);
  add_clique(frontier);

  for (std::size_t step = 1; step <= cfg.depth; ++step) {
    std::vector<Vertex> next;
    for (Vertex anchor : frontier) {
      for (std::size_t j = 1; j < a; ++j) {
        std::vector<Vertex> members{anchor};
        for (std::size_t t = 0; t + 1 < b; ++t) {
          Vertex v = labels.size();
          labels.push_back(labels[anchor] + "/" + std::to_string(j) + "." + std::to_string(t));
          tree.creation_step.push_back(step);
          members.push_back(v);
          next.push_back(v);
        }
        adjacency.resize(labels.size());
        add_clique(members);
      }
    }
    frontier = std::move(next);
  }

  tree.generated.graph = Graph::from_adjacency(std::move(adjacency));
  tree.generated.trusted_radius = cfg.depth;
  return tree;
}

CliqueTree triangle_tree(std::size_t a, std::size_t depth, Budget const &budget)
{
  return clique_tree({a, 3, depth}, budget);
}

Graph complete_graph(std::size_t n)
{
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      edges.emplace_back(u, v);
  return Graph(n, edges);
}

Graph cycle_graph(std::size_t n)
{
  if (n < 3)
    throw InputError("cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v)
    edges.emplace_back(v, (v + 1) % n);
  return Graph(n, edges);
}

Graph path_graph(std::size_t n)
{
  if (n == 0)
    throw InputError("path needs at least 1 vertex");
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v)
    edges.emplace_back(v, v + 1);
  return Graph(n, edges);
}

Graph hypercube_graph(std::size_t d)
{
  if (d >= 32)
    throw ResourceError("hypercube dimension " + std::to_string(d) + " is too large");
  std::size_t const n = std::size_t{1} << d;
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v)
    for (std::size_t bit = 0; bit < d; ++bit) {
      Vertex w = v ^ (std::size_t{1} << bit);
      if (v < w)
        edges.emplace_back(v, w);
    }
  return Graph(n, edges);
}

Graph petersen_graph()
{
  return kneser_graph(5, 2).graph;
}

Generated classic(ClassicConfig const &cfg, Budget const &budget)
{
  Generated out;
  switch (cfg.family) {
  case ClassicFamily::complete:
    if (cfg.n == 0)
      throw InputError("complete graph needs at least 1 vertex");
    check_budget("K" + std::to_string(cfg.n), cfg.n, saturating_mul(cfg.n, cfg.n - 1) / 2, budget);
    out.graph = complete_graph(cfg.n);
    break;
  case ClassicFamily::cycle:
    check_budget("C" + std::to_string(cfg.n), cfg.n, cfg.n, budget);
    out.graph = cycle_graph(cfg.n);
    break;
  case ClassicFamily::path:
    check_budget("P" + std::to_string(cfg.n), cfg.n, cfg.n, budget);
    out.graph = path_graph(cfg.n);
    break;
  case ClassicFamily::empty:
    check_budget("empty graph", cfg.n, 0, budget);
    out.graph = Graph(cfg.n);
    break;
  case ClassicFamily::hypercube: {
    std::size_t const n = cfg.d >= 64 ? SIZE_MAX : std::size_t{1} << cfg.d;
    check_budget("Q" + std::to_string(cfg.d), n, saturating_mul(n, cfg.d) / 2, budget);
    out.graph = hypercube_graph(cfg.d);
    out.labels.reserve(n);
    for (Vertex v = 0; v < n; ++v) {
      std::string bits(cfg.d, '0');
      for (std::size_t i = 0; i < cfg.d; ++i)
        if (v >> i & 1)
          bits[cfg.d - 1 - i] = '1';
      out.labels.push_back(bits);
    }
    return out;
  }
  case ClassicFamily::kneser:
    return kneser_graph(cfg.n, cfg.k, budget);
  case ClassicFamily::petersen:
    return kneser_graph(5, 2, budget);
  }
  out.labels = index_labels(out.graph.vertex_count());
  return out;
}

ClassicFamily parse_classic_family(std::string_view name)
{
  if (name == "complete" || name == "k")
    return ClassicFamily::complete;
  if (name == "cycle" || name == "c")
    return ClassicFamily::cycle;
  if (name == "path" || name == "p")
    return ClassicFamily::path;
  if (name == "hypercube" || name == "q")
    return ClassicFamily::hypercube;
  if (name == "kneser")
    return ClassicFamily::kneser;
  if (name == "petersen")
    return ClassicFamily::petersen;
  if (name == "empty")
    return ClassicFamily::empty;
  throw InputError("unknown classic family '" + std::string(name) + "'");
}

Generated generate(GeneratorConfig const &cfg, Budget const &budget)
{
  struct Visitor
  {
    Budget const &budget;
    Generated operator()(JohnsonConfig const &c) const { return johnson_graph(c, budget); }
    Generated operator()(CliqueTreeConfig const &c) const { return clique_tree(c, budget).generated; }
    Generated operator()(ClassicConfig const &c) const { return classic(c, budget); }
  };
  return std::visit(Visitor{budget}, cfg);
}

std::string describe(GeneratorConfig const &cfg)
{
  auto str = [](std::size_t x) { return std::to_string(x); };
  if (auto const *j = std::get_if<JohnsonConfig>(&cfg))
    return "J(" + str(j->ground_size) + "," + str(j->subset_size) + ")";
  if (auto const *t = std::get_if<CliqueTreeConfig>(&cfg))
    return "T(" + str(t->cliques_per_vertex) + "," + str(t->clique_size) + ";" + str(t->depth) + ")";
  auto const &c = std::get<ClassicConfig>(cfg);
  switch (c.family) {
  case ClassicFamily::complete: return "K" + str(c.n);
  case ClassicFamily::cycle: return "C" + str(c.n);
  case ClassicFamily::path: return "P" + str(c.n);
  case ClassicFamily::hypercube: return "Q" + str(c.d);
  case ClassicFamily::kneser: return "Kneser(" + str(c.n) + "," + str(c.k) + ")";
  case ClassicFamily::petersen: return "Petersen";
  case ClassicFamily::empty: return "E" + str(c.n);
  }
  return "?";
}

} // namespace graphsym
