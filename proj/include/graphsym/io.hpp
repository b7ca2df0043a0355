#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "graphsym/graph.hpp"

namespace graphsym {

/// Edge-list text format:
///
///   n m
///   u v      (m lines, 0 <= u < v < n, sorted lexicographically)
///
/// Writing is canonical. Reading accepts edges in any order and either
/// orientation, and rejects duplicates, loops, out-of-range indices, a
/// wrong edge count and trailing content with InputError.
void write_edge_list(std::ostream &out, Graph const &g);
Graph read_edge_list(std::istream &in);

void write_edge_list(std::filesystem::path const &path, Graph const &g);
Graph read_edge_list(std::filesystem::path const &path);

std::string to_edge_list(Graph const &g);

/// Label sidecar: one label per line, line i naming vertex i.
void write_labels(std::ostream &out, std::vector<std::string> const &labels);
std::vector<std::string> read_labels(std::istream &in);

} // namespace graphsym
