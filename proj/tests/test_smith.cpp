#include <doctest.h>

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "graphsym/errors.hpp"
#include "graphsym/smith.hpp"
#include "oracles.hpp"

using namespace graphsym;

namespace {

std::vector<CorpusEntry> manifest(std::string const &text)
{
  std::istringstream in(text);
  return parse_manifest(in);
}

nlohmann::json load_schema(char const *name)
{
  std::ifstream in(std::string(GRAPHSYM_SOURCE_DIR) + "/schema/" + name);
  return nlohmann::json::parse(in);
}

} // namespace

TEST_CASE("smith_check on J(5,2): diameter too small")
{
  auto v = smith_check(johnson_graph({5, 2}).graph);
  CHECK_FALSE(v.applicable);
  CHECK(v.diameter == 2);
  CHECK(v.valency == 6);
  CHECK(v.distance_transitive);
  CHECK(v.primitive);
  CHECK_FALSE(v.consistent);
  CHECK(v.reason() == "diameter <= 2");
}

TEST_CASE("smith_check on J(7,3)")
{
  auto v = smith_check(johnson_graph({7, 3}).graph);
  CHECK(v.applicable);
  CHECK(v.primitive);
  CHECK_FALSE(v.bipartite);
  CHECK_FALSE(v.antipodal);
  CHECK(v.consistent == true);
  CHECK(v.reason().empty());
}

TEST_CASE("smith_check on Q4")
{
  auto v = smith_check(hypercube_graph(4));
  CHECK(v.applicable);
  CHECK(v.valency == 4);
  CHECK(v.diameter == 4);
  CHECK(v.bipartite);
  CHECK(v.antipodal);
  CHECK_FALSE(v.primitive);
  CHECK(v.consistent == true);
}

TEST_CASE("smith_check reasons")
{
  CHECK(smith_check(path_graph(4)).reason() == "not regular");
  CHECK(smith_check(cycle_graph(8)).reason() == "valency <= 2");
  Graph prism(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
  CHECK(smith_check(prism).reason() == "not distance-transitive");
  CHECK_FALSE(smith_check(path_graph(4)).valency);
  CHECK_THROWS_AS(smith_check(Graph(3)), DisconnectedError);
}

TEST_CASE("mirror checks report hypotheses")
{
  Graph q3 = hypercube_graph(3);
  auto aut = automorphism_generators(q3);
  CHECK(check_diameter_relation_blocks(q3, aut) == true);
  CHECK(check_block_propagation(q3, aut) == true);
  // The complement of Q3 is connected.
  CHECK(check_complement_primitivity(q3, aut) == true);
  for (std::size_t m : {1, 2, 3})
    CHECK(check_mod_distance_automorphisms(q3, aut, m) == true);

  Graph p4 = path_graph(4);
  auto paut = automorphism_generators(p4);
  CHECK_FALSE(check_diameter_relation_blocks(p4, paut).has_value());
  CHECK_FALSE(check_block_propagation(p4, paut).has_value());
  CHECK_FALSE(check_complement_primitivity(p4, paut).has_value());
  CHECK(check_mod_distance_automorphisms(p4, paut, 2) == true);

  // K4: complement is edgeless, so disconnected.
  Graph k4 = complete_graph(4);
  CHECK_FALSE(check_complement_primitivity(k4, automorphism_generators(k4)).has_value());
  CHECK_FALSE(check_mod_distance_automorphisms(Graph(3), PermGroup(3), 1).has_value());
}

TEST_CASE("rooted layer transitivity on clique trees")
{
  for (std::size_t depth : {1, 2}) {
    Graph t = clique_tree({2, 3, depth}).generated.graph;
    CHECK(rooted_layer_transitive(t, 0, depth));
  }
  // Path from an end: every layer is a single vertex.
  CHECK(rooted_layer_transitive(path_graph(5), 0, 4));
  // Star with one subdivided ray: the first layer splits.
  Graph lopsided(5, {{0, 1}, {0, 2}, {0, 3}, {3, 4}});
  CHECK_FALSE(rooted_layer_transitive(lopsided, 0, 2));
}

TEST_CASE("manifest parsing")
{
  auto entries = manifest("# comment\n\njohnson n=5 k=2\nclique-tree a=2 b=3 depth=1 label=tiny\n"
                          "triangle-tree a=3 depth=1\nclassic name=q d=3   # trailing\n"
                          "classic name=kneser n=5 k=2\n");
  REQUIRE(entries.size() == 5);
  CHECK(entries[0].name == "J(5,2)");
  CHECK(entries[1].name == "tiny");
  CHECK(std::get<CliqueTreeConfig>(entries[2].config).clique_size == 3);
  CHECK(entries[3].name == "Q3");
  CHECK(entries[4].name == "Kneser(5,2)");

  CHECK(manifest("").empty());
  CHECK_THROWS_AS(manifest("johnson n=5\n"), InputError);
  CHECK_THROWS_AS(manifest("johnson n=5 k=x\n"), InputError);
  CHECK_THROWS_AS(manifest("johnson n=5 k=2 k=3\n"), InputError);
  CHECK_THROWS_AS(manifest("dodecahedron\n"), InputError);
  CHECK_THROWS_AS(manifest("johnson n=5 k=2 colour=red\n"), InputError);
  try {
    manifest("johnson n=5 k=2\n\nbogus\n");
    FAIL("expected InputError");
  } catch (InputError const &e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
}

TEST_CASE("corpus report rows and errors")
{
  CHECK(corpus_report({}).rows.empty());
  CHECK(corpus_report({}).ok());
  CHECK(report_json(corpus_report({})) == "[]\n");

  auto report = corpus_report(manifest("classic name=empty n=3\njohnson n=7 k=3\njohnson n=30 k=15\n"));
  REQUIRE(report.rows.size() == 3);
  CHECK(report.rows[0].error_kind == "disconnected");
  CHECK_FALSE(report.rows[1].failed());
  CHECK(report.rows[1].verdict->consistent == true);
  CHECK(report.rows[2].error_kind == "resource");
  CHECK_FALSE(report.ok());

  auto json = nlohmann::ordered_json::parse(report_json(report));
  CHECK(oracle::schema_errors(load_schema("corpus_report.schema.json"), nlohmann::json::parse(json.dump())).empty());
  std::vector<std::string> keys;
  for (auto const &item : json[1].items())
    keys.push_back(item.key());
  CHECK(keys == std::vector<std::string>{"name", "n", "valency", "diameter", "distance_transitive",
                                         "bipartite", "antipodal", "primitive", "applicable",
                                         "consistent", "distance_sequence"});
  CHECK(json[1]["distance_sequence"]["counts"] == nlohmann::json{1, 12, 18, 4});
}

TEST_CASE("corpus report on clique trees flags truncation")
{
  auto report = corpus_report(manifest("clique-tree a=2 b=3 depth=2\n"));
  auto const &row = report.rows.at(0);
  CHECK_FALSE(row.distance_sequence.complete);
  CHECK(row.ball_layer_transitive == true);
  CHECK(report.ok());
  std::string table = report_table(report);
  CHECK(table.find("T(2,3;2)") != std::string::npos);
}

TEST_CASE("schema validator rejects bad reports")
{
  auto schema = load_schema("corpus_report.schema.json");
  CHECK_FALSE(oracle::schema_errors(schema, nlohmann::json::object()).empty());
  CHECK_FALSE(oracle::schema_errors(schema, nlohmann::json::parse(R"([{"name": "x"}])")).empty());
  CHECK_FALSE(oracle::schema_errors(
                schema, nlohmann::json::parse(R"([{"name": "x", "error": "weird", "message": ""}])"))
                .empty());
  CHECK(oracle::schema_errors(
          schema, nlohmann::json::parse(R"([{"name": "x", "error": "timeout", "message": ""}])"))
          .empty());
}
