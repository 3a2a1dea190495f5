#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "json.hpp"

#include "kdcc/closed_forms.hpp"
#include "kdcc/families.hpp"
#include "kdcc/oracle.hpp"
#include "kdcc/witnesses.hpp"

namespace kdcc {

using Json = nlohmann::ordered_json;

inline constexpr const char* report_schema = "kdcc-report/1";

enum ExitCode : int { exit_ok = 0, exit_usage = 1, exit_mismatch = 2, exit_limit = 3 };

/// Either a family instance (closed forms) or a graph file (oracle).
struct Instance {
    std::optional<FamilySpec> spec;
    std::optional<std::filesystem::path> file;
};

/// Inclusive integer range "lo:hi" or a single value.
struct Range {
    std::uint64_t lo = 0;
    std::uint64_t hi = 0;

    static Range parse(const std::string& text);
};

/// Numbers that do not fit in 64 bits are written as decimal strings.
Json big_to_json(const BigInt& value);

Json witness_to_json(const Witness& w, const std::optional<FamilySpec>& spec = std::nullopt);
Witness witness_from_json(const Json& j);

/// Canonical edge list for a family instance.
std::string cmd_gen(const FamilySpec& spec);

Json cmd_cv(const Instance& in, unsigned k, const OracleLimits& limits);
Json cmd_cm(const Instance& in, unsigned k, std::uint64_t p, const OracleLimits& limits);
Json cmd_curve(const Instance& in, unsigned k, const OracleLimits& limits);
/// Vertex, edge and (optionally) mixed oracle runs plus the exact packing.
Json cmd_oracle(const Instance& in, unsigned k, std::optional<std::uint64_t> p, const OracleLimits& limits);
Json cmd_packing(const Instance& in, unsigned k, bool greedy, const OracleLimits& limits);

struct VerifyRequest {
    std::string family;
    std::vector<Range> params;
    Range k{2, 6};
    bool mixed = false;
};

struct VerifyOutcome {
    Json report;
    bool mismatch = false;
};

/// Formula against oracle for every instance in the grid.
VerifyOutcome cmd_verify(const VerifyRequest& request, const OracleLimits& limits);

/// Property checks on seeded random graphs: failure state vs k-pairs,
/// packing drop under single deletions, and p + q >= packing.
VerifyOutcome cmd_verify_random(std::uint64_t count, std::uint64_t seed, std::size_t max_n, Range k,
                                const OracleLimits& limits);

/// G(n, q) with each edge present independently with probability q.
Graph random_graph(std::size_t n, double edge_probability, std::mt19937_64& rng);

}  // namespace kdcc
