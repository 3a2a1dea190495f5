#include "kdcc/witnesses.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "kdcc/closed_forms.hpp"

namespace kdcc {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void require_k(unsigned k) {
    if (k < 2)
        throw std::invalid_argument("witness constructions require k >= 2");
}

void require_p(const FamilySpec& spec, unsigned k, std::uint64_t p) {
    const BigInt limit = cv(spec, k).value;
    if (BigInt(p) > limit)
        throw PRangeError("p = " + std::to_string(p) + " exceeds CV_" + std::to_string(k) + " = " +
                          limit.str() + " for " + describe(spec));
}

// Cut a path (given as its vertex sequence) after every k-th vertex so all pieces have <= k vertices.
void cut_path(std::span<const VertexId> along, unsigned k, std::vector<Edge>& out) {
    for (std::size_t at = k; at < along.size(); at += k)
        out.push_back(Edge::make(along[at - 1], along[at]));
}

std::vector<VertexId> id_range(VertexId first, std::uint64_t count) {
    std::vector<VertexId> ids(count);
    std::iota(ids.begin(), ids.end(), first);
    return ids;
}

Witness normalized(Witness w) {
    std::sort(w.vertices.begin(), w.vertices.end());
    std::sort(w.edges.begin(), w.edges.end());
    return w;
}

}  // namespace

Witness path_vertex_witness(std::uint64_t n, unsigned k) {
    require_k(k);
    Witness w{{}, {}, k};
    // 1-based label j(k+1) is id j(k+1)-1.
    for (std::uint64_t label = k + 1; label <= n; label += k + 1)
        w.vertices.push_back(static_cast<VertexId>(label - 1));
    return w;
}

Witness cycle_vertex_witness(std::uint64_t n, unsigned k) {
    require_k(k);
    validate(CycleSpec{n});
    Witness w{{}, {}, k};
    if (k > n / 2)
        return w;
    // Dropping id 0 leaves the path 1..n-1, whose label m is id m.
    w.vertices.push_back(0);
    for (std::uint64_t label = k + 1; label <= n - 1; label += k + 1)
        w.vertices.push_back(static_cast<VertexId>(label));
    return w;
}

Witness complete_vertex_witness(std::uint64_t n, unsigned k) {
    require_k(k);
    validate(CompleteSpec{n});
    return Witness{{}, {}, k};
}

Witness bipartite_vertex_witness(std::uint64_t a, std::uint64_t b, unsigned k) {
    require_k(k);
    validate(CompleteBipartiteSpec{a, b});
    Witness w{{}, {}, k};
    if (k > 2 || (a == 1 && b == 1))
        return w;
    w.vertices = a <= b ? id_range(0, a) : id_range(static_cast<VertexId>(a), b);
    return w;
}

Witness tree_vertex_witness(std::uint64_t r, std::uint64_t l, unsigned k) {
    require_k(k);
    if (r < 2)
        throw std::invalid_argument("tree_vertex_witness requires r >= 2");
    const PerfectTreeSpec tree{r, l};
    validate(tree);
    Witness w{{}, {}, k};
    const std::uint64_t step = tree_level_step(k);
    for (std::uint64_t level = step; level <= l + 1; level += step) {
        const std::uint64_t width = tree_level_width(tree, level);
        for (std::uint64_t j = 1; j <= width; ++j)
            w.vertices.push_back(tree_vertex_id(tree, {level, j}));
    }
    return normalized(std::move(w));
}

Witness path_mixed_witness(std::uint64_t n, unsigned k, std::uint64_t p) {
    require_k(k);
    require_p(PathSpec{n}, k, p);
    Witness w{{}, {}, k};
    for (std::uint64_t j = 1; j <= p; ++j)
        w.vertices.push_back(static_cast<VertexId>(j * (k + 1) - 1));
    if (p == n / (k + 1))
        return w;
    // The trailing path starts right after the last deleted vertex.
    const std::uint64_t base = p * (k + 1);
    const std::vector<VertexId> trailing = id_range(static_cast<VertexId>(base), n - base);
    cut_path(trailing, k, w.edges);
    return normalized(std::move(w));
}

Witness cycle_mixed_witness(std::uint64_t n, unsigned k, std::uint64_t p) {
    require_k(k);
    require_p(CycleSpec{n}, k, p);
    Witness w{{}, {}, k};
    if (k > n / 2)
        return w;
    if (p == 0) {
        // One cut opens the cycle into the path 0..n-1.
        w.edges.push_back(Edge::make(0, static_cast<VertexId>(n - 1)));
        const std::vector<VertexId> along = id_range(0, n);
        cut_path(along, k, w.edges);
        return normalized(std::move(w));
    }
    const Witness rest = path_mixed_witness(n - 1, k, p - 1);
    w.vertices.push_back(0);
    for (VertexId v : rest.vertices)
        w.vertices.push_back(v + 1);
    for (const Edge& e : rest.edges)
        w.edges.push_back({e.u + 1, e.v + 1});
    return normalized(std::move(w));
}

Witness bipartite_mixed_witness(std::uint64_t a, std::uint64_t b, unsigned k, std::uint64_t p) {
    require_k(k);
    require_p(CompleteBipartiteSpec{a, b}, k, p);
    Witness w{{}, {}, k};
    if (k > 2 || (a == 1 && b == 1))
        return w;
    const bool a_smaller = a <= b;
    const std::vector<VertexId> small =
        a_smaller ? id_range(0, a) : id_range(static_cast<VertexId>(a), b);
    const std::vector<VertexId> large =
        a_smaller ? id_range(static_cast<VertexId>(a), b) : id_range(0, a);
    for (std::uint64_t i = 0; i < p; ++i)
        w.vertices.push_back(small[i]);
    // Surviving small-part vertex i keeps only its edge to large-part vertex i,
    // so what remains is a matching plus isolated vertices.
    for (std::uint64_t i = p; i < small.size(); ++i)
        for (std::uint64_t j = 0; j < large.size(); ++j)
            if (j != i)
                w.edges.push_back(Edge::make(small[i], large[j]));
    return normalized(std::move(w));
}

Witness vertex_witness(const FamilySpec& spec, unsigned k) {
    validate(spec);
    return std::visit(overloaded{
                          [&](const PathSpec& s) { return path_vertex_witness(s.n, k); },
                          [&](const CycleSpec& s) { return cycle_vertex_witness(s.n, k); },
                          [&](const CompleteSpec& s) { return complete_vertex_witness(s.n, k); },
                          [&](const CompleteBipartiteSpec& s) { return bipartite_vertex_witness(s.a, s.b, k); },
                          [&](const PerfectTreeSpec& s) {
                              // With r = 1 the level-major ids already run along the path.
                              return s.r == 1 ? path_vertex_witness(s.l + 1, k)
                                              : tree_vertex_witness(s.r, s.l, k);
                          },
                      },
                      spec);
}

Witness mixed_witness(const FamilySpec& spec, unsigned k, std::uint64_t p) {
    validate(spec);
    return std::visit(overloaded{
                          [&](const PathSpec& s) { return path_mixed_witness(s.n, k, p); },
                          [&](const CycleSpec& s) { return cycle_mixed_witness(s.n, k, p); },
                          [&](const CompleteSpec& s) {
                              require_p(s, k, p);
                              return complete_vertex_witness(s.n, k);
                          },
                          [&](const CompleteBipartiteSpec& s) {
                              return bipartite_mixed_witness(s.a, s.b, k, p);
                          },
                          [&](const PerfectTreeSpec&) -> Witness {
                              throw NoClosedForm("no mixed construction for " + describe(spec) +
                                                 "; use the oracle");
                          },
                      },
                      spec);
}

bool verify_witness(const Graph& g, const Witness& w) {
    if (w.k == 0)
        throw std::invalid_argument("k must be at least 1");
    std::vector<bool> removed(g.order(), false);
    for (VertexId v : w.vertices) {
        if (v >= g.order())
            throw WitnessError("witness vertex " + std::to_string(v) + " is not in the graph");
        removed[v] = true;
    }
    const InducedSubgraph rest = delete_vertices(g, w.vertices);
    std::vector<Edge> mapped;
    mapped.reserve(w.edges.size());
    for (const Edge& e : w.edges) {
        std::ostringstream where;
        where << e;
        if (e.u >= g.order() || e.v >= g.order() || e.u == e.v || !g.has_edge(e.u, e.v))
            throw WitnessError("witness edge " + where.str() + " is not in the graph");
        if (removed[e.u] || removed[e.v])
            throw WitnessError("witness edge " + where.str() +
                               " touches a deleted vertex; vertices are removed before edges");
        mapped.push_back(Edge::make(*rest.new_id[e.u], *rest.new_id[e.v]));
    }
    return is_failure_state(delete_edges(rest.graph, mapped), w.k);
}

}  // namespace kdcc
