#include "kdcc/graph.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace kdcc {

namespace {

void require_positive_k(unsigned k) {
    if (k == 0)
        throw std::invalid_argument("k must be at least 1");
}

}  // namespace

Edge Edge::make(VertexId a, VertexId b) {
    if (a == b)
        throw GraphError("self-loop at vertex " + std::to_string(a));
    return a < b ? Edge{a, b} : Edge{b, a};
}

std::ostream& operator<<(std::ostream& os, const Edge& e) {
    return os << '(' << e.u << ',' << e.v << ')';
}

std::string Distance::to_string() const {
    return reachable() ? std::to_string(hops()) : std::string("unreachable");
}

std::ostream& operator<<(std::ostream& os, const Distance& d) {
    return os << d.to_string();
}

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
    Graph g;
    g.adjacency_.resize(n);
    for (const Edge& raw : edges) {
        if (raw.u >= n || raw.v >= n) {
            std::ostringstream msg;
            msg << "edge " << raw << " has an endpoint out of range for " << n << " vertices";
            throw GraphError(msg.str());
        }
        const Edge e = Edge::make(raw.u, raw.v);
        g.adjacency_[e.u].push_back(e.v);
        g.adjacency_[e.v].push_back(e.u);
    }
    for (auto& adj : g.adjacency_) {
        std::sort(adj.begin(), adj.end());
        adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
        g.edge_count_ += adj.size();
    }
    g.edge_count_ /= 2;
    return g;
}

void Graph::check_vertex(VertexId v) const {
    if (v >= order())
        throw GraphError("vertex id " + std::to_string(v) + " out of range for graph on " +
                         std::to_string(order()) + " vertices");
}

std::span<const VertexId> Graph::neighbors(VertexId v) const {
    check_vertex(v);
    return adjacency_[v];
}

bool Graph::has_edge(VertexId a, VertexId b) const {
    check_vertex(a);
    check_vertex(b);
    const auto& adj = adjacency_[a];
    return std::binary_search(adj.begin(), adj.end(), b);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (VertexId u = 0; u < order(); ++u)
        for (VertexId v : adjacency_[u])
            if (u < v)
                out.push_back({u, v});
    return out;
}

Graph Graph::with_labels(std::vector<std::string> labels) const {
    if (!labels.empty() && labels.size() != order())
        throw GraphError("label table size does not match vertex count");
    Graph copy = *this;
    copy.labels_ = std::move(labels);
    return copy;
}

std::vector<Distance> bfs_distances(const Graph& g, VertexId source) {
    g.check_vertex(source);
    std::vector<Distance> dist(g.order());
    std::deque<VertexId> queue{source};
    dist[source] = Distance(0);
    while (!queue.empty()) {
        const VertexId u = queue.front();
        queue.pop_front();
        for (VertexId w : g.neighbors(u)) {
            if (!dist[w].reachable()) {
                dist[w] = Distance(dist[u].hops() + 1);
                queue.push_back(w);
            }
        }
    }
    return dist;
}

Distance distance(const Graph& g, VertexId u, VertexId v) {
    g.check_vertex(v);
    return bfs_distances(g, u)[v];
}

std::vector<std::vector<VertexId>> components(const Graph& g) {
    std::vector<std::vector<VertexId>> blocks;
    std::vector<bool> seen(g.order(), false);
    for (VertexId start = 0; start < g.order(); ++start) {
        if (seen[start])
            continue;
        std::vector<VertexId> block;
        std::vector<VertexId> stack{start};
        seen[start] = true;
        while (!stack.empty()) {
            const VertexId u = stack.back();
            stack.pop_back();
            block.push_back(u);
            for (VertexId w : g.neighbors(u)) {
                if (!seen[w]) {
                    seen[w] = true;
                    stack.push_back(w);
                }
            }
        }
        std::sort(block.begin(), block.end());
        blocks.push_back(std::move(block));
    }
    return blocks;
}

Distance diameter(const Graph& g) {
    if (g.order() == 0)
        return Distance::unreachable();
    Distance best(0);
    for (VertexId s = 0; s < g.order(); ++s) {
        for (const Distance& d : bfs_distances(g, s)) {
            if (!d.reachable())
                return Distance::unreachable();
            best = std::max(best, d);
        }
    }
    return best;
}

bool has_k_pair(const Graph& g, unsigned k) {
    require_positive_k(k);
    for (VertexId s = 0; s < g.order(); ++s)
        for (const Distance& d : bfs_distances(g, s))
            if (d == Distance(k))
                return true;
    return false;
}

// Works component by component so that it stays independent of has_k_pair;
// the two are equal by the k-pair characterisation of failure states.
bool is_failure_state(const Graph& g, unsigned k) {
    require_positive_k(k);
    for (const auto& block : components(g)) {
        const InducedSubgraph piece = [&] {
            std::vector<bool> keep(g.order(), false);
            for (VertexId v : block)
                keep[v] = true;
            std::vector<VertexId> removed;
            for (VertexId v = 0; v < g.order(); ++v)
                if (!keep[v])
                    removed.push_back(v);
            return delete_vertices(g, removed);
        }();
        const Distance d = diameter(piece.graph);
        if (d >= Distance(k))
            return false;
    }
    return true;
}

InducedSubgraph delete_vertices(const Graph& g, std::span<const VertexId> removed) {
    std::vector<bool> gone(g.order(), false);
    for (VertexId v : removed) {
        g.check_vertex(v);
        gone[v] = true;
    }
    InducedSubgraph out;
    out.new_id.assign(g.order(), std::nullopt);
    for (VertexId v = 0; v < g.order(); ++v) {
        if (!gone[v]) {
            out.new_id[v] = static_cast<VertexId>(out.original_id.size());
            out.original_id.push_back(v);
        }
    }
    std::vector<Edge> kept;
    for (const Edge& e : g.edges())
        if (!gone[e.u] && !gone[e.v])
            kept.push_back({*out.new_id[e.u], *out.new_id[e.v]});
    out.graph = Graph::from_edges(out.original_id.size(), kept);
    return out;
}

Graph delete_edges(const Graph& g, std::span<const Edge> removed) {
    std::vector<Edge> drop;
    drop.reserve(removed.size());
    for (const Edge& raw : removed) {
        const Edge e = Edge::make(raw.u, raw.v);
        if (!g.has_edge(e.u, e.v)) {
            std::ostringstream msg;
            msg << "edge " << e << " is not present in the graph";
            throw GraphError(msg.str());
        }
        drop.push_back(e);
    }
    std::sort(drop.begin(), drop.end());
    std::vector<Edge> kept;
    for (const Edge& e : g.edges())
        if (!std::binary_search(drop.begin(), drop.end(), e))
            kept.push_back(e);
    return Graph::from_edges(g.order(), kept);
}

}  // namespace kdcc
