#include "graphsym/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "graphsym/automorphism.hpp"
#include "graphsym/blocks.hpp"
#include "graphsym/errors.hpp"
#include "graphsym/generators.hpp"
#include "graphsym/graph.hpp"
#include "graphsym/io.hpp"
#include "graphsym/smith.hpp"

namespace graphsym::cli {

namespace {

using json = nlohmann::ordered_json;

struct GenerateArgs
{
  std::string family;
  std::size_t n = 0, k = 0, a = 0, b = 0, depth = 0, d = 0;
  std::string name;
  std::string out_path, labels_path;
};

struct TransformArgs
{
  std::string op;
  std::size_t m = 0;
  std::string in_path, out_path;
};

struct AnalyzeArgs
{
  std::string in_path, name;
  bool json = false, table = false, dump_aut = false, blocks = false, smith = false;
  bool timing = false;
  double timeout_seconds = 30;
  std::size_t max_aut_vertices = SearchOptions{}.max_vertices;
  std::optional<std::size_t> trusted_radius;
};

struct BlocksArgs
{
  std::string in_path;
  std::vector<std::size_t> pair;
  bool all = false;
  double timeout_seconds = 30;
  std::size_t max_aut_vertices = SearchOptions{}.max_vertices;
};

struct CorpusArgs
{
  std::string manifest;
  bool json = false, table = false;
  std::string json_out, table_out;
  double timeout_seconds = 30;
};

SearchOptions search_options(double timeout_seconds, std::size_t max_vertices)
{
  SearchOptions options;
  options.max_vertices = max_vertices;
  options.timeout = std::chrono::milliseconds(static_cast<long long>(timeout_seconds * 1000));
  return options;
}

Graph load_graph(std::string const &path, std::istream &in)
{
  if (path.empty() || path == "-")
    return read_edge_list(in);
  return read_edge_list(std::filesystem::path(path));
}

void emit(std::string const &path, std::string const &content, std::ostream &out)
{
  if (path.empty() || path == "-") {
    out << content;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file)
    throw InputError("cannot open " + path + " for writing");
  file << content;
}

json classes_json(BlockSystem const &bs)
{
  json classes = json::array();
  for (auto const &cls : bs.classes())
    classes.push_back(cls);
  return classes;
}

int cmd_generate(GenerateArgs const &args, std::ostream &out)
{
  GeneratorConfig config;
  if (args.family == "johnson") {
    config = JohnsonConfig{args.n, args.k};
  } else if (args.family == "clique-tree") {
    config = CliqueTreeConfig{args.a, args.b, args.depth};
  } else if (args.family == "triangle-tree") {
    config = CliqueTreeConfig{args.a, 3, args.depth};
  } else if (args.family == "classic") {
    if (args.name.empty())
      throw InputError("classic needs --name");
    config = ClassicConfig{parse_classic_family(args.name), args.n, args.k, args.d};
  } else {
    throw InputError("unknown family '" + args.family + "'");
  }

  Generated gen = generate(config, Budget::from_environment());
  emit(args.out_path, to_edge_list(gen.graph), out);
  if (!args.labels_path.empty()) {
    std::ostringstream labels;
    write_labels(labels, gen.labels);
    emit(args.labels_path, labels.str(), out);
  }
  return ExitCode::ok;
}

int cmd_transform(TransformArgs const &args, std::istream &in, std::ostream &out)
{
  Graph g = load_graph(args.in_path, in);
  Graph result;
  if (args.op == "complement") {
    result = complement(g);
  } else if (args.op == "distance-relation" || args.op == "mod-distance") {
    if (args.m == 0)
      throw InputError(args.op + " needs --m >= 1");
    result = args.op == "distance-relation" ? distance_relation_graph(g, args.m)
                                            : mod_distance_graph(g, args.m);
  } else {
    throw InputError("unknown transform '" + args.op + "'");
  }
  emit(args.out_path, to_edge_list(result), out);
  return ExitCode::ok;
}

std::string display_name(std::string const &explicit_name, std::string const &path)
{
  if (!explicit_name.empty())
    return explicit_name;
  if (path.empty() || path == "-")
    return "stdin";
  return std::filesystem::path(path).stem().string();
}

int cmd_analyze(AnalyzeArgs const &args, std::istream &in, std::ostream &out)
{
  auto const started = std::chrono::steady_clock::now();
  Graph g = load_graph(args.in_path, in);
  if (!is_connected(g))
    throw DisconnectedError("analysis needs a connected graph");

  AutomorphismGroup aut =
    automorphism_group(g, search_options(args.timeout_seconds, args.max_aut_vertices));
  DistanceSequence seq = distance_sequence(g, 0);
  if (args.trusted_radius) {
    seq.counts.resize(std::min(seq.counts.size(), *args.trusted_radius + 1));
    seq.complete = false;
  }
  std::size_t const diam = diameter(g);
  bool const vt = is_vertex_transitive(aut.group);
  bool const dt = is_distance_transitive(g, aut.group);
  bool const bip = is_bipartite(g).bipartite;
  bool const antipodal = diam >= 1 && is_antipodal(g);
  GraphPrimitivity prim = is_primitive_graph(g, aut.group);

  json report;
  report["name"] = display_name(args.name, args.in_path);
  report["n"] = g.vertex_count();
  report["edges"] = g.edge_count();
  report["distance_sequence"] = {{"counts", seq.counts}, {"complete", seq.complete}};
  report["diameter"] = diam;
  report["vertex_transitive"] = vt;
  report["distance_transitive"] = dt;
  report["bipartite"] = bip;
  report["antipodal"] = antipodal;
  report["primitivity"] = {
    {"verdict", to_string(prim.kind)},
    {"witness", prim.witness ? classes_json(*prim.witness) : json(nullptr)}};
  if (args.dump_aut) {
    json gens = json::array();
    for (auto const &p : aut.group.generators())
      gens.push_back(p.to_string());
    report["automorphism_group"] = {{"order", aut.order.str()}, {"generators", gens}};
  }
  if (args.blocks) {
    json systems = json::array();
    if (vt)
      for (auto const &bs : minimal_block_systems(aut.group))
        systems.push_back(classes_json(bs));
    report["block_systems"] = systems;
  }
  if (args.smith) {
    SmithVerdict v = smith_check(g, aut.group);
    report["smith"] = {{"valency", v.valency ? json(*v.valency) : json(nullptr)},
                       {"diameter", v.diameter},
                       {"distance_transitive", v.distance_transitive},
                       {"bipartite", v.bipartite},
                       {"antipodal", v.antipodal},
                       {"primitive", v.primitive},
                       {"applicable", v.applicable},
                       {"consistent", v.consistent ? json(*v.consistent) : json(nullptr)}};
  }
  if (args.timing)
    report["timing_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - started)
                            .count();

  if (!args.table) {
    out << report.dump(2) << "\n";
    return ExitCode::ok;
  }

  // Plain-text rendering of the same report.
  auto yn = [](bool b) { return b ? "yes" : "no"; };
  std::ostringstream t;
  std::string counts;
  for (std::size_t i = 0; i < seq.counts.size(); ++i)
    counts += (i ? "," : "") + std::to_string(seq.counts[i]);
  if (!seq.complete)
    counts += ",...";
  t << "name                 " << report["name"].get<std::string>() << "\n"
    << "vertices             " << g.vertex_count() << "\n"
    << "edges                " << g.edge_count() << "\n"
    << "distance_sequence    " << counts << "\n"
    << "diameter             " << diam << "\n"
    << "vertex_transitive    " << yn(vt) << "\n"
    << "distance_transitive  " << yn(dt) << "\n"
    << "bipartite            " << yn(bip) << "\n"
    << "antipodal            " << yn(antipodal) << "\n"
    << "primitivity          " << to_string(prim.kind) << "\n";
  if (prim.witness)
    t << "witness:\n" << prim.witness->to_string();
  if (args.dump_aut)
    t << "order                " << aut.order.str() << "\n" << aut.group.serialize();
  if (args.blocks && vt)
    for (auto const &bs : minimal_block_systems(aut.group))
      t << "block system:\n" << bs.to_string();
  if (args.smith) {
    SmithVerdict v = smith_check(g, aut.group);
    t << "smith                "
      << (v.applicable ? (*v.consistent ? "consistent" : "INCONSISTENT")
                       : "not applicable (" + v.reason() + ")")
      << "\n";
  }
  if (args.timing)
    t << "timing_ms            " << report["timing_ms"].get<long long>() << "\n";
  out << t.str();
  return ExitCode::ok;
}

int cmd_blocks(BlocksArgs const &args, std::istream &in, std::ostream &out)
{
  Graph g = load_graph(args.in_path, in);
  PermGroup aut =
    automorphism_generators(g, search_options(args.timeout_seconds, args.max_aut_vertices));
  if (!args.pair.empty()) {
    if (args.pair.size() != 2)
      throw InputError("--pair takes two vertices");
    out << minimal_block(aut, args.pair[0], args.pair[1]).to_string();
    return ExitCode::ok;
  }
  if (args.all) {
    bool first = true;
    for (auto const &bs : minimal_block_systems(aut)) {
      if (!first)
        out << "\n";
      out << bs.to_string();
      first = false;
    }
    return ExitCode::ok;
  }
  GraphPrimitivity verdict = is_primitive_graph(g, aut);
  out << (verdict.witness ? *verdict.witness : BlockSystem::whole(g.vertex_count())).to_string();
  return ExitCode::ok;
}

int cmd_corpus(CorpusArgs const &args, std::ostream &out, std::ostream &err)
{
  std::ifstream manifest(args.manifest);
  if (!manifest)
    throw InputError("cannot open manifest " + args.manifest);
  auto entries = parse_manifest(manifest);

  SearchOptions options = search_options(args.timeout_seconds, SearchOptions{}.max_vertices);
  CorpusReport report = corpus_report(entries, Budget::from_environment(), options);
  std::string const json_text = report_json(report);
  std::string const table_text = report_table(report);

  if (!args.json_out.empty())
    emit(args.json_out, json_text, out);
  if (!args.table_out.empty())
    emit(args.table_out, table_text, out);
  out << (args.table ? table_text : json_text);

  for (auto const &row : report.rows) {
    if (row.failed())
      err << row.name << ": " << row.error_kind << " error: " << row.error << "\n";
    else if (row.inconsistent())
      err << row.name << ": inconsistent with the imprimitivity criterion\n";
  }
  return report.ok() ? ExitCode::ok : ExitCode::corpus_failure;
}

} // namespace

int run(std::vector<std::string> const &args, std::istream &in, std::ostream &out,
        std::ostream &err)
{
  CLI::App app{"Distance sequences, automorphisms and block systems of finite graphs", "graphsym"};
  app.require_subcommand(1);

  GenerateArgs gen;
  auto *generate = app.add_subcommand("generate", "Write a graph family member as an edge list");
  generate->add_option("family", gen.family, "johnson | clique-tree | triangle-tree | classic")
    ->required();
  generate->add_option("--n", gen.n, "ground set size / vertex count");
  generate->add_option("--k", gen.k, "subset size");
  generate->add_option("--a", gen.a, "cliques per vertex");
  generate->add_option("--b", gen.b, "clique size");
  generate->add_option("--depth", gen.depth, "growth steps");
  generate->add_option("--name", gen.name,
                       "classic family: complete | cycle | path | q | kneser | petersen | empty");
  generate->add_option("--d", gen.d, "hypercube dimension");
  generate->add_option("--out", gen.out_path, "edge-list path (default stdout)");
  generate->add_option("--labels", gen.labels_path, "label sidecar path");

  TransformArgs tr;
  auto *transform = app.add_subcommand("transform", "Apply a graph transform");
  transform->add_option("op", tr.op, "complement | distance-relation | mod-distance")->required();
  transform->add_option("--m", tr.m, "distance or modulus");
  transform->add_option("--in", tr.in_path, "input edge list (default stdin)");
  transform->add_option("--out", tr.out_path, "output edge list (default stdout)");

  AnalyzeArgs an;
  auto *analyze = app.add_subcommand("analyze", "Report distance, symmetry and primitivity data");
  analyze->add_option("--in", an.in_path, "input edge list (default stdin)");
  analyze->add_option("--name", an.name, "name shown in the report");
  auto *json_flag = analyze->add_flag("--json", an.json, "JSON output (default)");
  analyze->add_flag("--table", an.table, "plain-text output")->excludes(json_flag);
  analyze->add_flag("--dump-aut", an.dump_aut, "include automorphism group generators");
  analyze->add_flag("--blocks", an.blocks, "include all minimal block systems");
  analyze->add_flag("--smith", an.smith, "include the Smith criterion verdict");
  analyze->add_flag("--timing", an.timing, "include wall-clock time");
  analyze->add_option("--timeout", an.timeout_seconds, "automorphism search limit in seconds");
  analyze->add_option("--max-aut-vertices", an.max_aut_vertices, "automorphism search size limit");
  analyze->add_option("--trusted-radius", an.trusted_radius,
                      "distance counts are exact only up to this radius");

  BlocksArgs bl;
  auto *blocks = app.add_subcommand("blocks", "Print a block system, one class per line");
  blocks->add_option("--in", bl.in_path, "input edge list (default stdin)");
  blocks->add_option("--pair", bl.pair, "minimal block joining two vertices")->expected(2);
  blocks->add_flag("--all", bl.all, "every distinct minimal block system through vertex 0");
  blocks->add_option("--timeout", bl.timeout_seconds, "automorphism search limit in seconds");
  blocks->add_option("--max-aut-vertices", bl.max_aut_vertices, "automorphism search size limit");

  CorpusArgs co;
  auto *corpus = app.add_subcommand("corpus", "Run the Smith consistency harness over a manifest");
  corpus->add_option("manifest", co.manifest, "manifest path")->required();
  auto *corpus_json = corpus->add_flag("--json", co.json, "JSON on stdout (default)");
  corpus->add_flag("--table", co.table, "table on stdout")->excludes(corpus_json);
  corpus->add_option("--json-out", co.json_out, "also write JSON here");
  corpus->add_option("--table-out", co.table_out, "also write the table here");
  corpus->add_option("--timeout", co.timeout_seconds, "per-graph automorphism search limit");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (CLI::CallForHelp const &) {
    out << app.help();
    return ExitCode::ok;
  } catch (CLI::CallForAllHelp const &) {
    out << app.help("", CLI::AppFormatMode::All);
    return ExitCode::ok;
  } catch (CLI::ParseError const &e) {
    err << "graphsym: " << e.what() << "\n";
    return ExitCode::usage;
  }

  try {
    if (generate->parsed())
      return cmd_generate(gen, out);
    if (transform->parsed())
      return cmd_transform(tr, in, out);
    if (analyze->parsed())
      return cmd_analyze(an, in, out);
    if (blocks->parsed())
      return cmd_blocks(bl, in, out);
    return cmd_corpus(co, out, err);
  } catch (InputError const &e) {
    err << "graphsym: " << e.what() << "\n";
    return ExitCode::usage;
  } catch (ResourceError const &e) {
    err << "graphsym: " << e.what() << "\n";
    return ExitCode::resource;
  } catch (DisconnectedError const &e) {
    err << "graphsym: " << e.what() << "\n";
    return ExitCode::precondition;
  } catch (TimeoutError const &e) {
    err << "graphsym: " << e.what() << " (" << e.partial_generators().size()
        << " partial generators discarded)\n";
    return ExitCode::timeout;
  }
}

} // namespace graphsym::cli
