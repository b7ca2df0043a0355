#include "oracles.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace oracle {

namespace {

std::vector<std::vector<bool>> adjacency_matrix(Graph const &g)
{
  std::size_t const n = g.vertex_count();
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v : g.neighbors(u))
      adj[u][v] = true;
  return adj;
}

std::vector<std::vector<Vertex>> classes_of(std::vector<std::size_t> const &rgs)
{
  std::map<std::size_t, std::vector<Vertex>> by_label;
  for (Vertex v = 0; v < rgs.size(); ++v)
    by_label[rgs[v]].push_back(v);
  std::vector<std::vector<Vertex>> classes;
  for (auto &[label, cls] : by_label)
    classes.push_back(std::move(cls));
  std::sort(classes.begin(), classes.end());
  return classes;
}

} // namespace

std::vector<std::vector<std::optional<std::size_t>>> all_pairs_distances(Graph const &g)
{
  std::size_t const n = g.vertex_count();
  constexpr std::size_t inf = SIZE_MAX / 4;
  std::vector<std::vector<std::size_t>> d(n, std::vector<std::size_t>(n, inf));
  auto adj = adjacency_matrix(g);
  for (Vertex u = 0; u < n; ++u) {
    d[u][u] = 0;
    for (Vertex v = 0; v < n; ++v)
      if (adj[u][v])
        d[u][v] = 1;
  }
  for (Vertex k = 0; k < n; ++k)
    for (Vertex i = 0; i < n; ++i)
      for (Vertex j = 0; j < n; ++j)
        d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);

  std::vector<std::vector<std::optional<std::size_t>>> result(
    n, std::vector<std::optional<std::size_t>>(n));
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = 0; j < n; ++j)
      if (d[i][j] < inf)
        result[i][j] = d[i][j];
  return result;
}

std::vector<std::size_t> layer_counts(Graph const &g, Vertex source)
{
  std::vector<std::size_t> counts;
  auto const all = all_pairs_distances(g);
  for (auto const &d : all[source]) {
    if (!d)
      continue;
    if (counts.size() <= *d)
      counts.resize(*d + 1, 0);
    ++counts[*d];
  }
  return counts;
}

std::vector<Permutation> automorphisms(Graph const &g)
{
  std::size_t const n = g.vertex_count();
  auto adj = adjacency_matrix(g);
  std::vector<Vertex> p(n);
  std::iota(p.begin(), p.end(), Vertex{0});
  std::vector<Permutation> result;
  do {
    bool ok = true;
    for (Vertex u = 0; u < n && ok; ++u)
      for (Vertex v = u + 1; v < n && ok; ++v)
        ok = adj[u][v] == adj[p[u]][p[v]];
    if (ok)
      result.emplace_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return result;
}

std::vector<std::vector<Vertex>> group_elements(std::size_t degree,
                                                std::vector<Permutation> const &gens)
{
  std::vector<Vertex> id(degree);
  std::iota(id.begin(), id.end(), Vertex{0});
  std::set<std::vector<Vertex>> seen{id};
  std::vector<std::vector<Vertex>> queue{id};
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (auto const &g : gens) {
      std::vector<Vertex> next(degree);
      for (Vertex v = 0; v < degree; ++v)
        next[v] = g.images()[queue[i][v]];
      if (seen.insert(next).second)
        queue.push_back(std::move(next));
    }
  return {seen.begin(), seen.end()};
}

std::vector<std::vector<std::size_t>> set_partitions(std::size_t n)
{
  std::vector<std::vector<std::size_t>> result;
  std::vector<std::size_t> rgs(n, 0);
  auto rec = [&](auto &&self, std::size_t i, std::size_t max_label) -> void {
    if (i == n) {
      result.push_back(rgs);
      return;
    }
    for (std::size_t label = 0; label <= max_label + 1; ++label) {
      rgs[i] = label;
      self(self, i + 1, std::max(max_label, label));
    }
  };
  if (n == 0)
    return {{}};
  rgs[0] = 0;
  rec(rec, 1, 0);
  return result;
}

bool is_invariant(std::vector<std::size_t> const &rgs, std::vector<Permutation> const &gens)
{
  std::size_t const n = rgs.size();
  for (auto const &g : gens)
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v)
        if (rgs[u] == rgs[v] && rgs[g.images()[u]] != rgs[g.images()[v]])
          return false;
  return true;
}

std::vector<std::vector<Vertex>> finest_invariant_partition(std::size_t n,
                                                            std::vector<Permutation> const &gens,
                                                            Vertex a, Vertex b)
{
  std::vector<std::size_t> meet(n, 0);
  for (auto const &rgs : set_partitions(n)) {
    if (rgs[a] != rgs[b] || !is_invariant(rgs, gens))
      continue;
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> relabel;
    std::vector<std::size_t> next(n);
    for (Vertex v = 0; v < n; ++v)
      next[v] = relabel.emplace(std::pair{meet[v], rgs[v]}, relabel.size()).first->second;
    meet = std::move(next);
  }
  return classes_of(meet);
}

std::vector<std::vector<std::vector<Vertex>>> nontrivial_invariant_partitions(
  std::size_t n, std::vector<Permutation> const &gens)
{
  std::vector<std::vector<std::vector<Vertex>>> result;
  for (auto const &rgs : set_partitions(n)) {
    auto classes = classes_of(rgs);
    if (classes.size() == 1 || classes.size() == n)
      continue;
    if (is_invariant(rgs, gens))
      result.push_back(std::move(classes));
  }
  return result;
}

std::vector<std::size_t> johnson_layers_by_enumeration(std::size_t n, std::size_t k)
{
  // chosen[i] marks membership; the source subset is {0..k-1}, which is
  // also the first arrangement visited by prev_permutation.
  std::vector<bool> chosen(n, false);
  std::fill(chosen.begin(), chosen.begin() + static_cast<std::ptrdiff_t>(k), true);
  std::vector<std::size_t> counts(k + 1, 0);
  do {
    std::size_t shared = 0;
    for (std::size_t i = 0; i < k; ++i)
      shared += chosen[i];
    ++counts[k - shared];
  } while (std::prev_permutation(chosen.begin(), chosen.end()));
  while (counts.size() > 1 && counts.back() == 0)
    counts.pop_back();
  return counts;
}

std::vector<std::size_t> johnson_layers_by_formula(std::size_t n, std::size_t k)
{
  std::vector<std::vector<std::size_t>> pascal(n + 1);
  for (std::size_t r = 0; r <= n; ++r) {
    pascal[r].assign(r + 1, 1);
    for (std::size_t c = 1; c < r; ++c)
      pascal[r][c] = pascal[r - 1][c - 1] + pascal[r - 1][c];
  }
  std::vector<std::size_t> counts;
  for (std::size_t i = 0; i <= std::min(k, n - k); ++i)
    counts.push_back(pascal[k][i] * pascal[n - k][i]);
  return counts;
}

std::vector<std::vector<Vertex>> maximal_cliques(Graph const &g)
{
  std::vector<std::vector<Vertex>> result;
  auto rec = [&](auto &&self, std::vector<Vertex> r, std::vector<Vertex> p,
                 std::vector<Vertex> x) -> void {
    if (p.empty() && x.empty()) {
      std::sort(r.begin(), r.end());
      result.push_back(std::move(r));
      return;
    }
    Vertex pivot = !p.empty() ? p.front() : x.front();
    std::vector<Vertex> candidates;
    for (Vertex v : p)
      if (!g.adjacent(pivot, v))
        candidates.push_back(v);
    for (Vertex v : candidates) {
      std::vector<Vertex> r2 = r, p2, x2;
      r2.push_back(v);
      for (Vertex w : p)
        if (g.adjacent(v, w))
          p2.push_back(w);
      for (Vertex w : x)
        if (g.adjacent(v, w))
          x2.push_back(w);
      self(self, std::move(r2), std::move(p2), std::move(x2));
      p.erase(std::find(p.begin(), p.end(), v));
      x.push_back(v);
    }
  };
  std::vector<Vertex> all(g.vertex_count());
  std::iota(all.begin(), all.end(), Vertex{0});
  rec(rec, {}, all, {});
  std::sort(result.begin(), result.end());
  return result;
}

Graph random_graph(std::size_t n, double p, std::mt19937 &rng)
{
  // Raw engine output rather than a distribution object, so the same seed
  // gives the same graph with every standard library.
  auto const threshold = static_cast<std::uint64_t>(p * 4294967296.0);
  std::vector<graphsym::Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (rng() < threshold)
        edges.emplace_back(u, v);
  return Graph(n, edges);
}

namespace {

void validate(nlohmann::json const &root, nlohmann::json const &schema, nlohmann::json const &doc,
              std::string const &path, std::vector<std::string> &errors)
{
  if (schema.contains("$ref")) {
    std::string ref = schema["$ref"];
    std::string const prefix = "#/definitions/";
    if (ref.rfind(prefix, 0) != 0) {
      errors.push_back(path + ": unsupported $ref " + ref);
      return;
    }
    validate(root, root["definitions"][ref.substr(prefix.size())], doc, path, errors);
    return;
  }

  if (schema.contains("type")) {
    auto matches = [&](std::string const &t) {
      if (t == "object") return doc.is_object();
      if (t == "array") return doc.is_array();
      if (t == "string") return doc.is_string();
      if (t == "boolean") return doc.is_boolean();
      if (t == "null") return doc.is_null();
      if (t == "integer") return doc.is_number_integer();
      if (t == "number") return doc.is_number();
      return false;
    };
    bool ok = false;
    if (schema["type"].is_array()) {
      for (auto const &t : schema["type"])
        ok |= matches(t.get<std::string>());
    } else {
      ok = matches(schema["type"].get<std::string>());
    }
    if (!ok) {
      errors.push_back(path + ": type mismatch, expected " + schema["type"].dump());
      return;
    }
  }

  if (schema.contains("enum")) {
    auto const &options = schema["enum"];
    if (std::find(options.begin(), options.end(), doc) == options.end())
      errors.push_back(path + ": value " + doc.dump() + " not in enum");
  }

  if (schema.contains("minimum") && doc.is_number() && doc.get<double>() < schema["minimum"].get<double>())
    errors.push_back(path + ": below minimum");

  if (schema.contains("oneOf")) {
    std::size_t matched = 0;
    for (auto const &option : schema["oneOf"]) {
      std::vector<std::string> sub;
      validate(root, option, doc, path, sub);
      matched += sub.empty();
    }
    if (matched != 1)
      errors.push_back(path + ": matched " + std::to_string(matched) + " oneOf branches");
  }

  if (doc.is_object()) {
    if (schema.contains("required"))
      for (auto const &key : schema["required"])
        if (!doc.contains(key.get<std::string>()))
          errors.push_back(path + ": missing required key " + key.get<std::string>());
    nlohmann::json const empty = nlohmann::json::object();
    auto const &props = schema.contains("properties") ? schema["properties"] : empty;
    for (auto const &[key, value] : doc.items()) {
      if (props.contains(key))
        validate(root, props[key], value, path + "." + key, errors);
      else if (schema.contains("additionalProperties") && schema["additionalProperties"] == false)
        errors.push_back(path + ": unexpected key " + key);
    }
  }

  if (doc.is_array()) {
    if (schema.contains("minItems") && doc.size() < schema["minItems"].get<std::size_t>())
      errors.push_back(path + ": fewer than minItems");
    if (schema.contains("items"))
      for (std::size_t i = 0; i < doc.size(); ++i)
        validate(root, schema["items"], doc[i], path + "[" + std::to_string(i) + "]", errors);
  }
}

} // namespace

std::vector<std::string> schema_errors(nlohmann::json const &schema, nlohmann::json const &doc)
{
  std::vector<std::string> errors;
  validate(schema, schema, doc, "$", errors);
  return errors;
}

} // namespace oracle
