#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "kdcc/families.hpp"
#include "kdcc/graph.hpp"

namespace kdcc {

/**
 * A vertex set and an edge set whose removal, vertices first, is meant to
 * leave the graph in a failure state for `k`.
 *
 * Ids always refer to the original graph. Edges must avoid the deleted
 * vertices. Both lists are kept sorted.
 */
struct Witness {
    std::vector<VertexId> vertices;
    std::vector<Edge> edges;
    unsigned k = 2;

    std::size_t size() const { return vertices.size() + edges.size(); }

    friend bool operator==(const Witness&, const Witness&) = default;
};

/// Raised when a witness breaks the vertices-first contract or names unknown ids.
class WitnessError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

// Vertex-only constructions.
Witness path_vertex_witness(std::uint64_t n, unsigned k);
Witness cycle_vertex_witness(std::uint64_t n, unsigned k);
Witness complete_vertex_witness(std::uint64_t n, unsigned k);
Witness bipartite_vertex_witness(std::uint64_t a, std::uint64_t b, unsigned k);
Witness tree_vertex_witness(std::uint64_t r, std::uint64_t l, unsigned k);

// Mixed constructions: exactly p vertices, then the edges the formula counts.
Witness path_mixed_witness(std::uint64_t n, unsigned k, std::uint64_t p);
Witness cycle_mixed_witness(std::uint64_t n, unsigned k, std::uint64_t p);
Witness bipartite_mixed_witness(std::uint64_t a, std::uint64_t b, unsigned k, std::uint64_t p);

/// Dispatches to the family's vertex construction.
Witness vertex_witness(const FamilySpec& spec, unsigned k);

/// Dispatches to the family's mixed construction. PerfectTree has none.
Witness mixed_witness(const FamilySpec& spec, unsigned k, std::uint64_t p);

/// Removes the vertices, then the edges, and tests the failure state.
bool verify_witness(const Graph& g, const Witness& w);

}  // namespace kdcc
