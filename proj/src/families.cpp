#include "kdcc/families.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <stdexcept>
#include <vector>

namespace kdcc {

namespace {

// Generated graphs must index with VertexId.
constexpr std::uint64_t max_vertices = std::numeric_limits<VertexId>::max();

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > max_vertices / a)
        throw std::invalid_argument("family instance is too large to generate");
    return a * b;
}

std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp) {
    std::uint64_t out = 1;
    for (std::uint64_t i = 0; i < exp; ++i)
        out = checked_mul(out, base);
    return out;
}

std::uint64_t tree_vertex_count(const PerfectTreeSpec& t) {
    std::uint64_t total = 0;
    for (std::uint64_t level = 1; level <= t.l + 1; ++level) {
        total += checked_pow(t.r, t.l + 1 - level);
        if (total > max_vertices)
            throw std::invalid_argument("family instance is too large to generate");
    }
    return total;
}

// Id of v_{level,1}.
std::uint64_t tree_level_offset(const PerfectTreeSpec& t, std::uint64_t level) {
    std::uint64_t offset = 0;
    for (std::uint64_t above = t.l + 1; above > level; --above)
        offset += checked_pow(t.r, t.l + 1 - above);
    return offset;
}

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

}  // namespace

void validate(const FamilySpec& spec) {
    std::visit(overloaded{
                   [](const PathSpec& s) {
                       if (s.n < 1)
                           throw std::invalid_argument("Path requires n >= 1");
                   },
                   [](const CycleSpec& s) {
                       if (s.n < 3)
                           throw std::invalid_argument("Cycle requires n >= 3");
                   },
                   [](const CompleteSpec& s) {
                       if (s.n < 1)
                           throw std::invalid_argument("Complete requires n >= 1");
                   },
                   [](const CompleteBipartiteSpec& s) {
                       if (s.a < 1 || s.b < 1)
                           throw std::invalid_argument("CompleteBipartite requires a, b >= 1");
                   },
                   [](const PerfectTreeSpec& s) {
                       if (s.r < 1 || s.l < 1)
                           throw std::invalid_argument("PerfectTree requires r, l >= 1");
                   },
               },
               spec);
}

std::string family_name(const FamilySpec& spec) {
    return std::visit(overloaded{
                          [](const PathSpec&) { return std::string("Path"); },
                          [](const CycleSpec&) { return std::string("Cycle"); },
                          [](const CompleteSpec&) { return std::string("Complete"); },
                          [](const CompleteBipartiteSpec&) { return std::string("CompleteBipartite"); },
                          [](const PerfectTreeSpec&) { return std::string("PerfectTree"); },
                      },
                      spec);
}

std::string describe(const FamilySpec& spec) {
    const std::string args = std::visit(
        overloaded{
            [](const PathSpec& s) { return std::to_string(s.n); },
            [](const CycleSpec& s) { return std::to_string(s.n); },
            [](const CompleteSpec& s) { return std::to_string(s.n); },
            [](const CompleteBipartiteSpec& s) { return std::to_string(s.a) + "," + std::to_string(s.b); },
            [](const PerfectTreeSpec& s) { return std::to_string(s.r) + "," + std::to_string(s.l); },
        },
        spec);
    return family_name(spec) + "(" + args + ")";
}

FamilySpec parse_family(const std::string& name, std::span<const std::uint64_t> params) {
    const std::string key = lower(name);
    auto expect = [&](std::size_t count) {
        if (params.size() != count)
            throw std::invalid_argument(name + " takes " + std::to_string(count) + " parameter(s), got " +
                                        std::to_string(params.size()));
    };
    FamilySpec spec;
    if (key == "path" || key == "p") {
        expect(1);
        spec = PathSpec{params[0]};
    } else if (key == "cycle" || key == "c") {
        expect(1);
        spec = CycleSpec{params[0]};
    } else if (key == "complete" || key == "k") {
        expect(1);
        spec = CompleteSpec{params[0]};
    } else if (key == "completebipartite" || key == "bipartite" || key == "kab") {
        expect(2);
        spec = CompleteBipartiteSpec{params[0], params[1]};
    } else if (key == "perfecttree" || key == "tree") {
        expect(2);
        spec = PerfectTreeSpec{params[0], params[1]};
    } else {
        throw std::invalid_argument("unknown family '" + name +
                                    "' (expected Path, Cycle, Complete, CompleteBipartite, PerfectTree)");
    }
    validate(spec);
    return spec;
}

std::uint64_t vertex_count(const FamilySpec& spec) {
    validate(spec);
    return std::visit(overloaded{
                          [](const PathSpec& s) { return s.n; },
                          [](const CycleSpec& s) { return s.n; },
                          [](const CompleteSpec& s) { return s.n; },
                          [](const CompleteBipartiteSpec& s) { return s.a + s.b; },
                          [](const PerfectTreeSpec& s) { return tree_vertex_count(s); },
                      },
                      spec);
}

Graph build(const FamilySpec& spec) {
    const std::uint64_t n = vertex_count(spec);
    if (n > max_vertices)
        throw std::invalid_argument("family instance is too large to generate");
    std::vector<Edge> edges;
    std::visit(overloaded{
                   [&](const PathSpec& s) {
                       for (VertexId i = 0; i + 1 < s.n; ++i)
                           edges.push_back({i, i + 1});
                   },
                   [&](const CycleSpec& s) {
                       for (VertexId i = 0; i + 1 < s.n; ++i)
                           edges.push_back({i, i + 1});
                       edges.push_back({0, static_cast<VertexId>(s.n - 1)});
                   },
                   [&](const CompleteSpec& s) {
                       for (VertexId i = 0; i < s.n; ++i)
                           for (VertexId j = i + 1; j < s.n; ++j)
                               edges.push_back({i, j});
                   },
                   [&](const CompleteBipartiteSpec& s) {
                       for (VertexId i = 0; i < s.a; ++i)
                           for (VertexId j = 0; j < s.b; ++j)
                               edges.push_back({i, static_cast<VertexId>(s.a + j)});
                   },
                   [&](const PerfectTreeSpec& s) {
                       // v_{i,j} is joined to v_{i-1,m} for (j-1)r+1 <= m <= jr.
                       for (std::uint64_t level = s.l + 1; level >= 2; --level) {
                           const std::uint64_t width = tree_level_width(s, level);
                           for (std::uint64_t j = 1; j <= width; ++j) {
                               const VertexId parent = tree_vertex_id(s, {level, j});
                               for (std::uint64_t m = (j - 1) * s.r + 1; m <= j * s.r; ++m)
                                   edges.push_back({parent, tree_vertex_id(s, {level - 1, m})});
                           }
                       }
                   },
               },
               spec);
    return Graph::from_edges(n, edges);
}

std::uint64_t tree_level_width(const PerfectTreeSpec& spec, std::uint64_t level) {
    validate(spec);
    if (level < 1 || level > spec.l + 1)
        throw std::invalid_argument("tree level " + std::to_string(level) + " outside 1.." +
                                    std::to_string(spec.l + 1));
    return checked_pow(spec.r, spec.l + 1 - level);
}

VertexId tree_vertex_id(const PerfectTreeSpec& spec, TreeCoordinate coord) {
    const std::uint64_t width = tree_level_width(spec, coord.level);
    if (coord.index < 1 || coord.index > width)
        throw std::invalid_argument("tree index " + std::to_string(coord.index) + " outside 1.." +
                                    std::to_string(width) + " on level " + std::to_string(coord.level));
    return static_cast<VertexId>(tree_level_offset(spec, coord.level) + coord.index - 1);
}

TreeCoordinate tree_coordinate(const PerfectTreeSpec& spec, VertexId id) {
    validate(spec);
    std::uint64_t offset = 0;
    for (std::uint64_t level = spec.l + 1; level >= 1; --level) {
        const std::uint64_t width = checked_pow(spec.r, spec.l + 1 - level);
        if (id < offset + width)
            return {level, id - offset + 1};
        offset += width;
    }
    throw std::invalid_argument("vertex id " + std::to_string(id) + " is not in " + describe(spec));
}

}  // namespace kdcc
