#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <variant>

#include "kdcc/graph.hpp"

namespace kdcc {

/// P_n. Vertex ids 0..n-1 run along the path, so 1-based label m is id m-1.
struct PathSpec {
    std::uint64_t n = 1;
};

/// C_n, ids in cyclic order.
struct CycleSpec {
    std::uint64_t n = 3;
};

/// K_n.
struct CompleteSpec {
    std::uint64_t n = 1;
};

/// K_{a,b}: part A is ids 0..a-1, part B is ids a..a+b-1.
struct CompleteBipartiteSpec {
    std::uint64_t a = 1;
    std::uint64_t b = 1;
};

/// Perfect r-ary tree of height l. The root sits on level l+1, leaves on level 1.
struct PerfectTreeSpec {
    std::uint64_t r = 2;
    std::uint64_t l = 1;
};

using FamilySpec =
    std::variant<PathSpec, CycleSpec, CompleteSpec, CompleteBipartiteSpec, PerfectTreeSpec>;

/// Throws std::invalid_argument when parameters are out of range.
void validate(const FamilySpec& spec);

/// "Path(7)", "CompleteBipartite(3,4)", ...
std::string describe(const FamilySpec& spec);

/// Family name as used on the command line ("Path", "Cycle", ...).
std::string family_name(const FamilySpec& spec);

/// Builds a spec from a family name (case-insensitive) and its parameters.
FamilySpec parse_family(const std::string& name, std::span<const std::uint64_t> params);

std::uint64_t vertex_count(const FamilySpec& spec);

/// Canonically labeled graph of the family instance.
Graph build(const FamilySpec& spec);

/// Position v_{i,j} in a perfect tree: level i in 1..l+1, index j in 1..r^{l+1-i}.
struct TreeCoordinate {
    std::uint64_t level = 1;
    std::uint64_t index = 1;

    friend bool operator==(const TreeCoordinate&, const TreeCoordinate&) = default;
};

/// r^{l+1-level}
std::uint64_t tree_level_width(const PerfectTreeSpec& spec, std::uint64_t level);

/// Ids are level-major from the root downward, index-minor within a level.
VertexId tree_vertex_id(const PerfectTreeSpec& spec, TreeCoordinate coord);
TreeCoordinate tree_coordinate(const PerfectTreeSpec& spec, VertexId id);

}  // namespace kdcc
