#include "graphsym/smith.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "graphsym/errors.hpp"

namespace graphsym {

std::string SmithVerdict::reason() const
{
  if (applicable)
    return "";
  if (!valency)
    return "not regular";
  if (!distance_transitive)
    return "not distance-transitive";
  if (*valency <= 2)
    return "valency <= 2";
  return "diameter <= 2";
}

SmithVerdict smith_check(Graph const &g, PermGroup const &aut)
{
  DistanceMatrix dm(g);
  if (!dm.connected())
    throw DisconnectedError();

  SmithVerdict v;
  v.valency = g.regular_degree();
  v.diameter = dm.diameter();
  v.distance_transitive = is_distance_transitive(g, aut);
  v.bipartite = is_bipartite(g).bipartite;
  v.antipodal = v.diameter >= 1 && is_antipodal(g);
  v.primitive = is_primitive_graph(g, aut).kind == PrimitivityKind::primitive;
  v.applicable = v.valency && v.distance_transitive && *v.valency > 2 && v.diameter > 2;
  if (v.applicable)
    v.consistent = !v.primitive == (v.bipartite || v.antipodal);
  return v;
}

SmithVerdict smith_check(Graph const &g, SearchOptions const &options)
{
  if (!is_connected(g))
    throw DisconnectedError();
  return smith_check(g, automorphism_generators(g, options));
}

bool rooted_layer_transitive(Graph const &g, Vertex root, std::size_t radius,
                             SearchOptions const &options)
{
  auto dist = bfs_distances(g, root);
  std::vector<Vertex> ball;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (dist[v] && *dist[v] <= radius)
      ball.push_back(v);
  Graph sub = induced_subgraph(g, ball);
  Vertex const center = static_cast<Vertex>(std::find(ball.begin(), ball.end(), root) - ball.begin());

  PermGroup aut = automorphism_generators(sub, options);
  auto roots = pair_orbit_roots(aut);
  std::size_t const n = sub.vertex_count();
  std::map<std::size_t, std::size_t> root_at_layer;
  auto sub_dist = bfs_distances(sub, center);
  for (Vertex x = 0; x < n; ++x) {
    auto [it, fresh] = root_at_layer.emplace(*sub_dist[x], roots[center * n + x]);
    if (!fresh && it->second != roots[center * n + x])
      return false;
  }
  return true;
}

std::optional<bool> check_diameter_relation_blocks(Graph const &g, PermGroup const &aut)
{
  if (!aut.is_transitive() || !is_connected(g) || g.vertex_count() < 2)
    return std::nullopt;
  std::size_t const m = diameter(g);
  Graph relation = distance_relation_graph(g, m);
  if (!components_as_blocks(g, relation, aut).verified)
    return false;
  std::size_t const last = distance_sequence(g, 0).counts.back();
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (relation.degree(v) != last)
      return false;
  return true;
}

std::optional<bool> check_block_propagation(Graph const &g, PermGroup const &aut)
{
  if (!is_connected(g) || !is_distance_transitive(g, aut))
    return std::nullopt;
  DistanceMatrix dm(g);
  std::size_t const diam = dm.diameter();
  for (auto const &bs : minimal_block_systems(aut)) {
    for (auto const &block : bs.classes()) {
      if (block.size() <= 1 || block.size() >= g.vertex_count())
        continue;
      for (Vertex u : block) {
        for (std::size_t i = 0; i <= diam; ++i) {
          auto layer = dm.layer(u, i);
          bool meets = false, inside = true;
          for (Vertex w : layer) {
            bool member = std::binary_search(block.begin(), block.end(), w);
            meets |= member;
            inside &= member;
          }
          if (meets && !inside)
            return false;
        }
        for (Vertex w : block)
          if (g.adjacent(u, w))
            return false;
      }
    }
  }
  return true;
}

std::optional<bool> check_complement_primitivity(Graph const &g, PermGroup const &aut,
                                                 SearchOptions const &options)
{
  if (!aut.is_transitive())
    return std::nullopt;
  Graph comp = complement(g);
  if (!is_connected(comp))
    return std::nullopt;
  bool const here = is_primitive_graph(g, aut).kind == PrimitivityKind::primitive;
  bool const there = is_primitive_graph(comp, options).kind == PrimitivityKind::primitive;
  return here == there;
}

std::optional<bool> check_mod_distance_automorphisms(Graph const &g, PermGroup const &aut,
                                                     std::size_t m)
{
  if (!is_connected(g))
    return std::nullopt;
  Graph relation = mod_distance_graph(g, m);
  for (auto const &gen : aut.generators())
    if (!is_automorphism(relation, gen))
      return false;
  return true;
}

namespace {

std::string trim(std::string const &s)
{
  auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos)
    return "";
  auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::size_t parse_count(std::string const &key, std::string const &value)
{
  std::size_t result = 0;
  auto [p, ec] = std::from_chars(value.data(), value.data() + value.size(), result);
  if (ec != std::errc() || p != value.data() + value.size() || value.empty())
    throw InputError("value of '" + key + "' is not a non-negative integer: '" + value + "'");
  return result;
}

} // namespace

CorpusEntry parse_manifest_line(std::string const &line)
{
  std::istringstream ss(line);
  std::string family;
  ss >> family;
  std::map<std::string, std::string> params;
  std::string token;
  while (ss >> token) {
    auto eq = token.find('=');
    if (eq == std::string::npos || eq == 0)
      throw InputError("expected key=value, got '" + token + "'");
    if (!params.emplace(token.substr(0, eq), token.substr(eq + 1)).second)
      throw InputError("repeated key '" + token.substr(0, eq) + "'");
  }

  std::optional<std::string> label;
  if (auto it = params.find("label"); it != params.end()) {
    label = it->second;
    params.erase(it);
  }
  auto take = [&](std::string const &key) -> std::size_t {
    auto it = params.find(key);
    if (it == params.end())
      throw InputError(family + " needs '" + key + "='");
    std::size_t v = parse_count(key, it->second);
    params.erase(it);
    return v;
  };
  auto take_or = [&](std::string const &key, std::size_t fallback) {
    return params.count(key) ? take(key) : fallback;
  };

  GeneratorConfig config;
  if (family == "johnson") {
    JohnsonConfig c;
    c.ground_size = take("n");
    c.subset_size = take("k");
    config = c;
  } else if (family == "clique-tree") {
    CliqueTreeConfig c;
    c.cliques_per_vertex = take("a");
    c.clique_size = take("b");
    c.depth = take("depth");
    config = c;
  } else if (family == "triangle-tree") {
    CliqueTreeConfig c;
    c.cliques_per_vertex = take("a");
    c.clique_size = 3;
    c.depth = take("depth");
    config = c;
  } else if (family == "classic") {
    auto it = params.find("name");
    if (it == params.end())
      throw InputError("classic needs 'name='");
    ClassicConfig c;
    c.family = parse_classic_family(it->second);
    params.erase(it);
    c.n = take_or("n", 0);
    c.k = take_or("k", 0);
    c.d = take_or("d", 0);
    config = c;
  } else {
    throw InputError("unknown family '" + family + "'");
  }
  if (!params.empty())
    throw InputError("unknown key '" + params.begin()->first + "' for " + family);

  return {label.value_or(describe(config)), config};
}

std::vector<CorpusEntry> parse_manifest(std::istream &in)
{
  std::vector<CorpusEntry> entries;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    line = trim(line.substr(0, line.find('#')));
    if (line.empty())
      continue;
    try {
      entries.push_back(parse_manifest_line(line));
    } catch (InputError const &e) {
      throw InputError("manifest line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return entries;
}

bool CorpusReport::ok() const
{
  return std::none_of(rows.begin(), rows.end(),
                      [](CorpusRow const &r) { return r.failed() || r.inconsistent(); });
}

CorpusReport corpus_report(std::vector<CorpusEntry> const &corpus, Budget const &budget,
                           SearchOptions const &options)
{
  CorpusReport report;
  for (auto const &entry : corpus) {
    CorpusRow row;
    row.name = entry.name;
    try {
      Generated gen = generate(entry.config, budget);
      Graph const &g = gen.graph;
      row.vertex_count = g.vertex_count();
      if (!is_connected(g))
        throw DisconnectedError();
      PermGroup aut = automorphism_generators(g, options);
      row.verdict = smith_check(g, aut);
      row.distance_sequence = distance_sequence(g, 0);
      if (gen.trusted_radius) {
        auto &counts = row.distance_sequence.counts;
        counts.resize(std::min(counts.size(), *gen.trusted_radius + 1));
        row.distance_sequence.complete = false;
        row.ball_layer_transitive = rooted_layer_transitive(g, 0, *gen.trusted_radius, options);
      }
    } catch (InputError const &e) {
      row.error_kind = "input";
      row.error = e.what();
    } catch (ResourceError const &e) {
      row.error_kind = "resource";
      row.error = e.what();
    } catch (DisconnectedError const &e) {
      row.error_kind = "disconnected";
      row.error = e.what();
    } catch (TimeoutError const &e) {
      row.error_kind = "timeout";
      row.error = e.what();
    }
    if (row.failed())
      row.verdict.reset();
    report.rows.push_back(std::move(row));
  }
  return report;
}

std::string report_json(CorpusReport const &report)
{
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (auto const &r : report.rows) {
    nlohmann::ordered_json row;
    row["name"] = r.name;
    if (r.failed()) {
      row["error"] = r.error_kind;
      row["message"] = r.error;
      rows.push_back(std::move(row));
      continue;
    }
    auto const &v = *r.verdict;
    row["n"] = r.vertex_count;
    row["valency"] = v.valency ? nlohmann::ordered_json(*v.valency) : nlohmann::ordered_json(nullptr);
    row["diameter"] = v.diameter;
    row["distance_transitive"] = v.distance_transitive;
    row["bipartite"] = v.bipartite;
    row["antipodal"] = v.antipodal;
    row["primitive"] = v.primitive;
    row["applicable"] = v.applicable;
    row["consistent"] = v.consistent ? nlohmann::ordered_json(*v.consistent)
                                     : nlohmann::ordered_json(nullptr);
    row["distance_sequence"] = {{"counts", r.distance_sequence.counts},
                                {"complete", r.distance_sequence.complete}};
    if (r.ball_layer_transitive)
      row["ball_layer_transitive"] = *r.ball_layer_transitive;
    rows.push_back(std::move(row));
  }
  return rows.dump(2) + "\n";
}

std::string report_table(CorpusReport const &report)
{
  std::vector<std::vector<std::string>> cells{{"name", "n", "valency", "diam", "DT", "bip",
                                               "antip", "prim", "smith", "distance_sequence"}};
  auto yn = [](bool b) { return std::string(b ? "yes" : "no"); };
  for (auto const &r : report.rows) {
    if (r.failed()) {
      cells.push_back({r.name, "-", "-", "-", "-", "-", "-", "-", "ERROR", r.error_kind + ": " + r.error});
      continue;
    }
    auto const &v = *r.verdict;
    std::string seq;
    for (std::size_t i = 0; i < r.distance_sequence.counts.size(); ++i)
      seq += (i ? "," : "") + std::to_string(r.distance_sequence.counts[i]);
    if (!r.distance_sequence.complete)
      seq += ",...";
    std::string smith = v.applicable ? (*v.consistent ? "consistent" : "INCONSISTENT")
                                     : "n/a (" + v.reason() + ")";
    if (r.ball_layer_transitive)
      seq += *r.ball_layer_transitive ? "  [ball layers transitive]" : "  [ball layers NOT transitive]";
    cells.push_back({r.name, std::to_string(r.vertex_count),
                     v.valency ? std::to_string(*v.valency) : "-", std::to_string(v.diameter),
                     yn(v.distance_transitive), yn(v.bipartite), yn(v.antipodal), yn(v.primitive),
                     smith, seq});
  }

  std::vector<std::size_t> width(cells.front().size(), 0);
  for (auto const &row : cells)
    for (std::size_t c = 0; c < row.size(); ++c)
      width[c] = std::max(width[c], row[c].size());
  std::string out;
  for (auto const &row : cells) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      line += row[c];
      if (c + 1 < row.size())
        line += std::string(width[c] - row[c].size() + 2, ' ');
    }
    out += line + "\n";
  }
  return out;
}

} // namespace graphsym
