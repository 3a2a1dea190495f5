#pragma once

// Naive reference searches for tests. They go through the public Graph API
// only (delete_vertices / delete_edges / is_failure_state), so they share no
// code with the bitmask oracle they are compared against.

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "kdcc/graph.hpp"
#include "kdcc/witnesses.hpp"

namespace kdcc::testing {

/// Visits the s-subsets of {0..m-1} in lexicographic order until `visit` returns true.
inline bool for_each_combination(std::size_t m, std::size_t s,
                                 const std::function<bool(const std::vector<std::size_t>&)>& visit) {
    std::vector<std::size_t> idx(s);
    for (std::size_t i = 0; i < s; ++i)
        idx[i] = i;
    if (s > m)
        return false;
    while (true) {
        if (visit(idx))
            return true;
        std::size_t i = s;
        while (i > 0 && idx[i - 1] == m - s + (i - 1))
            --i;
        if (i == 0)
            return false;
        ++idx[i - 1];
        for (std::size_t j = i; j < s; ++j)
            idx[j] = idx[j - 1] + 1;
    }
}

struct NaiveResult {
    std::uint64_t minimum = 0;
    Witness witness;
};

inline bool fails_after(const Graph& g, const std::vector<VertexId>& vs, const std::vector<Edge>& es, unsigned k) {
    const InducedSubgraph rest = delete_vertices(g, vs);
    std::vector<Edge> mapped;
    for (const Edge& e : es)
        mapped.push_back(Edge::make(*rest.new_id[e.u], *rest.new_id[e.v]));
    return is_failure_state(delete_edges(rest.graph, mapped), k);
}

inline std::optional<std::vector<Edge>> naive_edges(const Graph& g, const std::vector<VertexId>& removed, unsigned k,
                                                    std::size_t max_size) {
    std::vector<bool> gone(g.order(), false);
    for (VertexId v : removed)
        gone[v] = true;
    std::vector<Edge> pool;
    for (const Edge& e : g.edges())
        if (!gone[e.u] && !gone[e.v])
            pool.push_back(e);
    for (std::size_t s = 0; s <= std::min(max_size, pool.size()); ++s) {
        std::vector<Edge> hit;
        const bool found = for_each_combination(pool.size(), s, [&](const std::vector<std::size_t>& idx) {
            std::vector<Edge> chosen;
            for (std::size_t i : idx)
                chosen.push_back(pool[i]);
            if (!fails_after(g, removed, chosen, k))
                return false;
            hit = chosen;
            return true;
        });
        if (found)
            return hit;
    }
    return std::nullopt;
}

inline NaiveResult naive_min_vertex(const Graph& g, unsigned k) {
    for (std::size_t s = 0;; ++s) {
        NaiveResult out;
        out.witness.k = k;
        const bool found = for_each_combination(g.order(), s, [&](const std::vector<std::size_t>& idx) {
            std::vector<VertexId> vs(idx.begin(), idx.end());
            if (!fails_after(g, vs, {}, k))
                return false;
            out.minimum = s;
            out.witness.vertices = vs;
            return true;
        });
        if (found)
            return out;
    }
}

inline NaiveResult naive_min_edge(const Graph& g, unsigned k) {
    NaiveResult out;
    out.witness.k = k;
    out.witness.edges = *naive_edges(g, {}, k, g.size());
    out.minimum = out.witness.edges.size();
    return out;
}

inline NaiveResult naive_min_mixed(const Graph& g, unsigned k, std::size_t p) {
    std::optional<NaiveResult> best;
    for_each_combination(g.order(), p, [&](const std::vector<std::size_t>& idx) {
        std::vector<VertexId> vs(idx.begin(), idx.end());
        const std::size_t cap = best ? best->minimum - (best->minimum > 0 ? 1 : 0) : g.size();
        if (best && best->minimum == 0)
            return true;
        const auto es = naive_edges(g, vs, k, cap);
        if (es && (!best || es->size() < best->minimum)) {
            NaiveResult r;
            r.minimum = es->size();
            r.witness = Witness{vs, *es, k};
            best = r;
        }
        return false;
    });
    return *best;
}

}  // namespace kdcc::testing
