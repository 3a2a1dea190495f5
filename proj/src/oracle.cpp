#include "kdcc/oracle.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <optional>

#include "kdcc/closed_forms.hpp"

namespace kdcc {

namespace {

using Mask = std::uint64_t;
constexpr std::size_t hard_ceiling = 64;

constexpr Mask bit(unsigned i) { return Mask{1} << i; }

Mask low_bits(std::size_t count) {
    return count >= 64 ? ~Mask{0} : bit(static_cast<unsigned>(count)) - 1;
}

template <class F>
void for_each_bit(Mask m, F&& f) {
    while (m != 0) {
        const unsigned i = static_cast<unsigned>(std::countr_zero(m));
        f(i);
        m &= m - 1;
    }
}

void require_k(unsigned k) {
    if (k == 0)
        throw std::invalid_argument("k must be at least 1");
}

void check_vertex_limit(const Graph& g, const OracleLimits& limits) {
    const std::size_t cap = std::min(limits.max_vertices, hard_ceiling);
    if (g.order() > cap)
        throw LimitExceeded("graph has " + std::to_string(g.order()) + " vertices; oracle limit is " +
                            std::to_string(cap));
}

void check_edge_limit(const Graph& g, const OracleLimits& limits) {
    const std::size_t cap = std::min(limits.max_edges, hard_ceiling);
    if (g.size() > cap)
        throw LimitExceeded("graph has " + std::to_string(g.size()) + " edges; oracle limit is " +
                            std::to_string(cap));
}

/// Bitmask view of a graph with at most 64 vertices. `alive` marks the
/// vertices still present; adjacency rows may have edges masked out.
struct BitGraph {
    std::size_t n = 0;
    std::vector<Mask> adj;
    Mask alive = 0;
    std::vector<Edge> edges;

    explicit BitGraph(const Graph& g) : n(g.order()), adj(g.order(), 0), alive(low_bits(g.order())) {
        edges = g.edges();
        for (const Edge& e : edges) {
            adj[e.u] |= bit(e.v);
            adj[e.v] |= bit(e.u);
        }
    }
};

/// BFS layers from `source` inside `alive`, stopping after depth `limit`.
std::vector<Mask> bfs_layers(std::span<const Mask> adj, Mask alive, unsigned source, unsigned limit) {
    std::vector<Mask> layers{bit(source)};
    Mask seen = bit(source);
    for (unsigned depth = 1; depth <= limit; ++depth) {
        Mask next = 0;
        for_each_bit(layers.back(), [&](unsigned v) { next |= adj[v]; });
        next &= alive & ~seen;
        if (next == 0)
            break;
        seen |= next;
        layers.push_back(next);
    }
    return layers;
}

bool has_k_pair_bits(std::span<const Mask> adj, Mask alive, unsigned k) {
    bool found = false;
    for_each_bit(alive, [&](unsigned s) {
        if (found)
            return;
        Mask seen = bit(s);
        Mask frontier = bit(s);
        for (unsigned depth = 1; depth <= k && frontier != 0; ++depth) {
            Mask next = 0;
            for_each_bit(frontier, [&](unsigned v) { next |= adj[v]; });
            next &= alive & ~seen;
            seen |= next;
            frontier = next;
        }
        found = frontier != 0;
    });
    return found;
}

/// Walks the BFS layers backward from `target` and reports every geodesic
/// from `source`, in ascending vertex order at each step.
void enumerate_geodesics(std::span<const Mask> adj, const std::vector<Mask>& layers, unsigned target,
                         std::vector<VertexId>& stack,
                         const std::function<void(const std::vector<VertexId>&)>& emit) {
    stack.push_back(target);
    if (stack.size() == layers.size()) {
        std::vector<VertexId> forward(stack.rbegin(), stack.rend());
        emit(forward);
    } else {
        const std::size_t depth = layers.size() - 1 - stack.size();
        for_each_bit(adj[target] & layers[depth], [&](unsigned prev) {
            enumerate_geodesics(adj, layers, prev, stack, emit);
        });
    }
    stack.pop_back();
}

struct CandidatePath {
    std::vector<VertexId> vertices;
    Mask vertex_mask = 0;
};

/// All geodesic k-paths, one representative per vertex set.
std::vector<CandidatePath> all_k_paths(std::span<const Mask> adj, Mask alive, unsigned k) {
    std::map<Mask, std::vector<VertexId>> by_set;
    for_each_bit(alive, [&](unsigned s) {
        const std::vector<Mask> layers = bfs_layers(adj, alive, s, k);
        if (layers.size() != k + 1)
            return;
        for_each_bit(layers[k] & ~low_bits(s + 1), [&](unsigned t) {
            std::vector<VertexId> stack;
            enumerate_geodesics(adj, layers, t, stack, [&](const std::vector<VertexId>& path) {
                Mask m = 0;
                for (VertexId v : path)
                    m |= bit(v);
                by_set.try_emplace(m, path);
            });
        });
    });
    std::vector<CandidatePath> out;
    out.reserve(by_set.size());
    for (auto& [m, path] : by_set)
        out.push_back({std::move(path), m});
    std::sort(out.begin(), out.end(),
              [](const CandidatePath& a, const CandidatePath& b) { return a.vertices < b.vertices; });
    return out;
}

/// Greedy packing: each vertex in turn tries to start a geodesic k-path
/// through still-unused vertices. Always a valid packing, not always maximum.
std::vector<CandidatePath> greedy_k_paths(std::span<const Mask> adj, Mask alive, unsigned k) {
    std::vector<CandidatePath> out;
    Mask free = alive;
    for_each_bit(alive, [&](unsigned s) {
        if (!(free & bit(s)))
            return;
        const std::vector<Mask> full = bfs_layers(adj, alive, s, k);
        if (full.size() != k + 1)
            return;
        const std::vector<Mask> restricted = bfs_layers(adj, free, s, k);
        if (restricted.size() != k + 1)
            return;
        const Mask targets = full[k] & restricted[k];
        if (targets == 0)
            return;
        // Walk back through the restricted layers; each step stays geodesic in the full graph.
        std::vector<VertexId> path(k + 1);
        unsigned cur = static_cast<unsigned>(std::countr_zero(targets));
        path[k] = cur;
        for (unsigned depth = k; depth-- > 0;) {
            cur = static_cast<unsigned>(std::countr_zero(adj[cur] & restricted[depth]));
            path[depth] = cur;
        }
        Mask m = 0;
        for (VertexId v : path)
            m |= bit(v);
        free &= ~m;
        out.push_back({std::move(path), m});
    });
    return out;
}

class ExactPacker {
  public:
    ExactPacker(std::vector<CandidatePath> paths, Mask alive, unsigned k)
        : paths_(std::move(paths)), k_(k), through_(hard_ceiling) {
        Mask useful = 0;
        for (std::size_t i = 0; i < paths_.size(); ++i) {
            useful |= paths_[i].vertex_mask;
            for_each_bit(paths_[i].vertex_mask, [&](unsigned v) { through_[v].push_back(i); });
        }
        start_ = alive & useful;
    }

    std::vector<std::size_t> solve() {
        std::vector<std::size_t> chosen;
        search(start_, chosen);
        return best_;
    }

  private:
    void search(Mask available, std::vector<std::size_t>& chosen) {
        if (chosen.size() > best_.size())
            best_ = chosen;
        if (available == 0)
            return;
        const std::size_t bound =
            chosen.size() + static_cast<std::size_t>(std::popcount(available)) / (k_ + 1);
        if (bound <= best_.size())
            return;
        const unsigned v = static_cast<unsigned>(std::countr_zero(available));
        for (std::size_t idx : through_[v]) {
            const Mask m = paths_[idx].vertex_mask;
            if ((m & available) != m)
                continue;
            chosen.push_back(idx);
            search(available & ~m, chosen);
            chosen.pop_back();
        }
        search(available & ~bit(v), chosen);
    }

    std::vector<CandidatePath> paths_;
    unsigned k_;
    std::vector<std::vector<std::size_t>> through_;
    Mask start_ = 0;
    std::vector<std::size_t> best_;

  public:
    const std::vector<CandidatePath>& paths() const { return paths_; }
};

/// Calls `leaf` with every s-subset of {0..m-1} in lexicographic order,
/// skipping branches that can no longer touch every hit set. Returns the
/// first subset accepted by `leaf`.
template <class Leaf>
std::optional<Mask> first_subset(std::size_t m, std::size_t s, std::span<const Mask> hit_sets,
                                 std::uint64_t& explored, Leaf&& leaf) {
    std::optional<Mask> found;
    auto recurse = [&](auto&& self, std::size_t start, std::size_t taken, Mask chosen) -> void {
        for (Mask h : hit_sets)
            if ((h & chosen) == 0 && (h & ~low_bits(start)) == 0)
                return;
        if (taken == s) {
            ++explored;
            if (leaf(chosen))
                found = chosen;
            return;
        }
        for (std::size_t i = start; i + (s - taken) <= m && !found; ++i)
            self(self, i + 1, taken + 1, chosen | bit(static_cast<unsigned>(i)));
    };
    recurse(recurse, 0, 0, 0);
    return found;
}

struct EdgeSearchOutcome {
    std::optional<std::uint64_t> size;
    std::vector<Edge> edges;
};

/// Smallest edge set, among those of size lower..upper, that leaves
/// (adj restricted to alive) in a failure state.
EdgeSearchOutcome edge_search(const BitGraph& bg, Mask alive, unsigned k, std::uint64_t lower,
                              std::uint64_t upper, std::uint64_t& explored) {
    std::vector<Edge> local;
    for (const Edge& e : bg.edges)
        if ((alive & bit(e.u)) && (alive & bit(e.v)))
            local.push_back(e);
    std::vector<Mask> adj(bg.n, 0);
    for (const Edge& e : local) {
        adj[e.u] |= bit(e.v);
        adj[e.v] |= bit(e.u);
    }

    std::vector<Mask> hit_sets;
    const auto packing = greedy_k_paths(adj, alive, k);
    for (const auto& path : packing) {
        Mask edge_mask = 0;
        for (unsigned i = 0; i < k; ++i) {
            const Edge e = Edge::make(path.vertices[i], path.vertices[i + 1]);
            const auto at = std::lower_bound(local.begin(), local.end(), e);
            edge_mask |= bit(static_cast<unsigned>(at - local.begin()));
        }
        hit_sets.push_back(edge_mask);
    }
    lower = std::max<std::uint64_t>(lower, packing.size());
    upper = std::min<std::uint64_t>(upper, local.size());

    std::vector<Mask> work(bg.n);
    for (std::uint64_t s = lower; s <= upper; ++s) {
        const auto hit = first_subset(local.size(), s, hit_sets, explored, [&](Mask chosen) {
            std::copy(adj.begin(), adj.end(), work.begin());
            for_each_bit(chosen, [&](unsigned i) {
                work[local[i].u] &= ~bit(local[i].v);
                work[local[i].v] &= ~bit(local[i].u);
            });
            return !has_k_pair_bits(work, alive, k);
        });
        if (hit) {
            EdgeSearchOutcome out{s, {}};
            for_each_bit(*hit, [&](unsigned i) { out.edges.push_back(local[i]); });
            return out;
        }
    }
    return {};
}

std::vector<Mask> vertex_masks(const std::vector<CandidatePath>& paths) {
    std::vector<Mask> out;
    for (const auto& p : paths)
        out.push_back(p.vertex_mask);
    return out;
}

std::vector<VertexId> mask_to_ids(Mask m) {
    std::vector<VertexId> ids;
    for_each_bit(m, [&](unsigned v) { ids.push_back(v); });
    return ids;
}

}  // namespace

OracleResult min_vertex_disconnecting(const Graph& g, unsigned k, const OracleLimits& limits) {
    require_k(k);
    check_vertex_limit(g, limits);
    const BitGraph bg(g);
    const auto packing = greedy_k_paths(bg.adj, bg.alive, k);
    const std::vector<Mask> hit_sets = vertex_masks(packing);

    OracleResult result;
    result.witness.k = k;
    for (std::size_t s = packing.size(); s <= bg.n; ++s) {
        const auto hit = first_subset(bg.n, s, hit_sets, result.explored, [&](Mask chosen) {
            return !has_k_pair_bits(bg.adj, bg.alive & ~chosen, k);
        });
        if (hit) {
            result.minimum = s;
            result.witness.vertices = mask_to_ids(*hit);
            return result;
        }
    }
    throw std::logic_error("vertex sweep exhausted without reaching a failure state");
}

OracleResult min_edge_disconnecting(const Graph& g, unsigned k, const OracleLimits& limits) {
    require_k(k);
    check_vertex_limit(g, limits);
    check_edge_limit(g, limits);
    const BitGraph bg(g);
    OracleResult result;
    result.witness.k = k;
    const EdgeSearchOutcome found = edge_search(bg, bg.alive, k, 0, bg.edges.size(), result.explored);
    if (!found.size)
        throw std::logic_error("edge sweep exhausted without reaching a failure state");
    result.minimum = *found.size;
    result.witness.edges = found.edges;
    return result;
}

OracleResult min_mixed(const Graph& g, unsigned k, std::uint64_t p, const OracleLimits& limits) {
    require_k(k);
    check_vertex_limit(g, limits);
    check_edge_limit(g, limits);
    const OracleResult vertex = min_vertex_disconnecting(g, k, limits);
    if (p > vertex.minimum)
        throw PRangeError("p = " + std::to_string(p) + " exceeds CV_" + std::to_string(k) + " = " +
                          std::to_string(vertex.minimum));

    const BitGraph bg(g);
    // p + q is at least the size of any packing of g.
    const std::uint64_t packed = greedy_k_paths(bg.adj, bg.alive, k).size();
    const std::uint64_t floor_q = packed > p ? packed - p : 0;

    OracleResult result;
    result.witness.k = k;
    std::optional<std::uint64_t> best;
    std::uint64_t vertex_sets = 0;
    first_subset(bg.n, p, {}, vertex_sets, [&](Mask removed) {
        const std::uint64_t upper = best ? *best - 1 : bg.edges.size();
        const EdgeSearchOutcome found =
            edge_search(bg, bg.alive & ~removed, k, floor_q, upper, result.explored);
        if (found.size) {
            best = *found.size;
            result.witness.vertices = mask_to_ids(removed);
            result.witness.edges = found.edges;
        }
        return best && *best == floor_q;
    });
    if (!best)
        throw std::logic_error("mixed sweep found no failure state");
    result.minimum = *best;
    result.explored += vertex_sets;
    return result;
}

PathPacking max_disjoint_k_paths(const Graph& g, unsigned k, PackingMode mode, const OracleLimits& limits) {
    require_k(k);
    PathPacking out;
    if (mode == PackingMode::greedy) {
        if (g.order() > hard_ceiling)
            throw LimitExceeded("greedy packing supports at most 64 vertices");
        const BitGraph bg(g);
        for (auto& path : greedy_k_paths(bg.adj, bg.alive, k))
            out.paths.push_back(std::move(path.vertices));
        return out;
    }
    check_vertex_limit(g, limits);
    const BitGraph bg(g);
    ExactPacker packer(all_k_paths(bg.adj, bg.alive, k), bg.alive, k);
    for (std::size_t idx : packer.solve())
        out.paths.push_back(packer.paths()[idx].vertices);
    std::sort(out.paths.begin(), out.paths.end());
    out.certified = true;
    return out;
}

bool is_valid_packing(const Graph& g, unsigned k, const PathPacking& packing) {
    require_k(k);
    std::vector<bool> used(g.order(), false);
    for (const auto& path : packing.paths) {
        if (path.size() != k + 1)
            return false;
        for (VertexId v : path) {
            if (v >= g.order() || used[v])
                return false;
            used[v] = true;
        }
        for (std::size_t i = 0; i + 1 < path.size(); ++i)
            if (!g.has_edge(path[i], path[i + 1]))
                return false;
        if (distance(g, path.front(), path.back()) != Distance(k))
            return false;
    }
    return true;
}

}  // namespace kdcc
