#include "graphsym/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "graphsym/errors.hpp"

namespace graphsym {

namespace {

// Splits "a b" strictly: two non-negative decimals and a single space.
std::pair<std::size_t, std::size_t> parse_pair(std::string const &line, std::size_t line_no)
{
  auto fail = [&](char const *why) {
    return InputError("line " + std::to_string(line_no) + ": " + why + ": '" + line + "'");
  };

  char const *first = line.data();
  char const *last = first + line.size();
  if (!line.empty() && line.back() == '\r')
    --last;

  std::size_t a = 0, b = 0;
  auto [p, ec] = std::from_chars(first, last, a);
  if (ec != std::errc() || p == first)
    throw fail("expected a non-negative integer");
  if (p == last || *p != ' ')
    throw fail("expected two space-separated integers");
  char const *second = p + 1;
  auto [q, ec2] = std::from_chars(second, last, b);
  if (ec2 != std::errc() || q == second)
    throw fail("expected a non-negative integer");
  if (q != last)
    throw fail("unexpected trailing characters");
  return {a, b};
}

} // namespace

void write_edge_list(std::ostream &out, Graph const &g)
{
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges())
    out << u << ' ' << v << '\n';
}

std::string to_edge_list(Graph const &g)
{
  std::ostringstream ss;
  write_edge_list(ss, g);
  return ss.str();
}

Graph read_edge_list(std::istream &in)
{
  std::string line;
  if (!std::getline(in, line))
    throw InputError("empty edge-list input");
  auto [n, m] = parse_pair(line, 1);

  std::vector<Edge> edges;
  edges.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    if (!std::getline(in, line))
      throw InputError("expected " + std::to_string(m) + " edges, found " + std::to_string(i));
    auto [u, v] = parse_pair(line, i + 2);
    edges.emplace_back(u, v);
  }
  while (std::getline(in, line)) {
    if (!line.empty() && line != "\r")
      throw InputError("trailing content after " + std::to_string(m) + " edges");
  }
  return Graph(n, edges);
}

void write_edge_list(std::filesystem::path const &path, Graph const &g)
{
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw InputError("cannot open " + path.string() + " for writing");
  write_edge_list(out, g);
  if (!out)
    throw InputError("failed writing " + path.string());
}

Graph read_edge_list(std::filesystem::path const &path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw InputError("cannot open " + path.string());
  return read_edge_list(in);
}

void write_labels(std::ostream &out, std::vector<std::string> const &labels)
{
  for (auto const &label : labels)
    out << label << '\n';
}

std::vector<std::string> read_labels(std::istream &in)
{
  std::vector<std::string> labels;
  std::string line;
  while (std::getline(in, line))
    labels.push_back(line);
  return labels;
}

} // namespace graphsym
