#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace kdcc {

using VertexId = std::uint32_t;

/// Raised for malformed graph input: out-of-range ids, self-loops, absent edges.
class GraphError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Undirected edge stored with u < v.
struct Edge {
    VertexId u = 0;
    VertexId v = 0;

    /// Orders the endpoints. Throws GraphError on a self-loop.
    static Edge make(VertexId a, VertexId b);

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

std::ostream& operator<<(std::ostream& os, const Edge& e);

/// Hop count, or Unreachable when the endpoints lie in different components.
class Distance {
  public:
    constexpr Distance() = default;
    constexpr explicit Distance(std::uint32_t hops) : hops_(hops) {}

    static constexpr Distance unreachable() { return Distance(); }

    constexpr bool reachable() const { return hops_.has_value(); }
    /// Precondition: reachable().
    constexpr std::uint32_t hops() const { return *hops_; }

    /// Unreachable compares greater than every finite distance.
    friend constexpr std::strong_ordering operator<=>(const Distance& a, const Distance& b) {
        if (a.reachable() != b.reachable())
            return a.reachable() ? std::strong_ordering::less : std::strong_ordering::greater;
        if (!a.reachable())
            return std::strong_ordering::equal;
        return a.hops() <=> b.hops();
    }
    friend constexpr bool operator==(const Distance&, const Distance&) = default;

    std::string to_string() const;

  private:
    std::optional<std::uint32_t> hops_;
};

std::ostream& operator<<(std::ostream& os, const Distance& d);

/**
 * Immutable simple undirected graph on vertices 0..n-1.
 *
 * Adjacency lists are sorted and symmetric. Construction deduplicates
 * repeated edges (in either orientation) and rejects self-loops and
 * out-of-range endpoints.
 */
class Graph {
  public:
    Graph() = default;

    static Graph from_edges(std::size_t n, std::span<const Edge> edges);
    static Graph from_edges(std::size_t n, std::initializer_list<Edge> edges) {
        return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
    }

    std::size_t order() const { return adjacency_.size(); }
    std::size_t size() const { return edge_count_; }

    std::span<const VertexId> neighbors(VertexId v) const;
    std::size_t degree(VertexId v) const { return neighbors(v).size(); }
    bool has_edge(VertexId a, VertexId b) const;

    /// All edges, sorted lexicographically by (u, v).
    std::vector<Edge> edges() const;

    /// Optional external names, one per vertex. Empty when unlabeled.
    const std::vector<std::string>& labels() const { return labels_; }
    Graph with_labels(std::vector<std::string> labels) const;

    void check_vertex(VertexId v) const;

    friend bool operator==(const Graph& a, const Graph& b) { return a.adjacency_ == b.adjacency_; }

  private:
    std::vector<std::vector<VertexId>> adjacency_;
    std::size_t edge_count_ = 0;
    std::vector<std::string> labels_;
};

/// Hop distances from `source` to every vertex.
std::vector<Distance> bfs_distances(const Graph& g, VertexId source);

Distance distance(const Graph& g, VertexId u, VertexId v);

/// Maximal connected vertex sets, each sorted, ordered by smallest member.
std::vector<std::vector<VertexId>> components(const Graph& g);

/// Maximum pairwise distance; Unreachable when disconnected or empty.
Distance diameter(const Graph& g);

/// True iff some pair of vertices sits at distance exactly k.
bool has_k_pair(const Graph& g, unsigned k);

/// True iff every component has diameter strictly below k.
bool is_failure_state(const Graph& g, unsigned k);

/// G - H together with the id mapping back to the original graph.
struct InducedSubgraph {
    Graph graph;
    /// original_id[new id] = id in the source graph.
    std::vector<VertexId> original_id;
    /// new_id[original id] = id in `graph`, or nullopt for deleted vertices.
    std::vector<std::optional<VertexId>> new_id;
};

InducedSubgraph delete_vertices(const Graph& g, std::span<const VertexId> removed);

/// G - D. Every edge of `removed` must be present in g.
Graph delete_edges(const Graph& g, std::span<const Edge> removed);

}  // namespace kdcc
