#pragma once

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "kdcc/graph.hpp"

namespace kdcc {

/// Malformed graph file. The message carries the line number.
class ParseError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/**
 * Edge-list format: one "u v" pair of nonnegative integers per line, '#'
 * starts a comment, blank lines are skipped. The vertex count is max id + 1
 * unless an "n=<count>" line says otherwise (this is how isolated vertices
 * are kept).
 */
Graph read_edge_list(std::istream& in);

/// Writes the edge list in canonical order. An "n=<count>" header is emitted
/// only when the edges alone would not reproduce the vertex count.
void write_edge_list(std::ostream& out, const Graph& g);

/**
 * Undirected DOT subset: `graph [name] { ... }` containing node statements
 * (`a;`) and edge chains (`a -- b -- c;`). Node names become labels and are
 * numbered in order of first appearance. Attributes, subgraphs, `strict`,
 * and digraphs are rejected.
 */
Graph read_dot(std::istream& in);

/// Picks DOT when the extension is .dot/.gv or the text opens with "graph".
Graph load_graph_file(const std::filesystem::path& path);

}  // namespace kdcc
