#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "kdcc/graph.hpp"
#include "kdcc/witnesses.hpp"

namespace kdcc {

/// Size guards for the exhaustive searches. Hard ceiling is 64 for both.
struct OracleLimits {
    std::size_t max_vertices = 20;
    std::size_t max_edges = 24;
};

/// The oracle refuses instances above its limits instead of approximating.
class LimitExceeded : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct OracleResult {
    std::uint64_t minimum = 0;
    /// Lexicographically least among the minimum-size solutions.
    Witness witness;
    /// Candidate sets that reached the failure-state test.
    std::uint64_t explored = 0;
};

/// Pairwise vertex-disjoint geodesic k-paths, each listed as k+1 vertices.
struct PathPacking {
    std::vector<std::vector<VertexId>> paths;
    /// True when produced by the exact search (a maximum packing).
    bool certified = false;

    std::size_t size() const { return paths.size(); }
};

enum class PackingMode { exact, greedy };

/// CV_k(g) by ascending-size subset sweep. k >= 1.
OracleResult min_vertex_disconnecting(const Graph& g, unsigned k, const OracleLimits& limits = {});

/// CE_k(g) by ascending-size sweep over edge subsets. k >= 1.
OracleResult min_edge_disconnecting(const Graph& g, unsigned k, const OracleLimits& limits = {});

/// CM_k(g,p): best over all p-vertex sets of the edge search on g - V'.
/// Throws PRangeError when p exceeds CV_k(g).
OracleResult min_mixed(const Graph& g, unsigned k, std::uint64_t p, const OracleLimits& limits = {});

/// Maximum (exact) or maximal (greedy) packing of vertex-disjoint geodesic k-paths.
PathPacking max_disjoint_k_paths(const Graph& g, unsigned k, PackingMode mode = PackingMode::exact,
                                 const OracleLimits& limits = {});

/// Checks the packing invariants: paths of k+1 distinct adjacent vertices,
/// endpoints at distance exactly k in g, pairwise disjoint.
bool is_valid_packing(const Graph& g, unsigned k, const PathPacking& packing);

}  // namespace kdcc
