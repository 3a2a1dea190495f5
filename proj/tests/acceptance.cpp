// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "kdcc/closed_forms.hpp"
#include "kdcc/commands.hpp"
#include "kdcc/oracle.hpp"
#include "kdcc/witnesses.hpp"

using namespace kdcc;

namespace {

// Wall-clock budgets in seconds. Equality checks are exact (zero tolerance).
constexpr double budget_vertex = 300.0;
constexpr double budget_mixed = 600.0;
constexpr double budget_default = 300.0;

constexpr std::size_t minimality_max_n = 12;

const OracleLimits limits{20, 24};

struct Tally {
    std::size_t checks = 0;
    std::vector<std::string> failures;

    void expect(bool ok, const std::string& what) {
        ++checks;
        if (!ok && failures.size() < 10)
            failures.push_back(what);
        else if (!ok)
            failures.push_back("");
    }
};

std::string str(const BigInt& v) { return v.str(); }

std::vector<FamilySpec> vertex_grid() {
    std::vector<FamilySpec> specs;
    for (std::uint64_t n = 1; n <= 12; ++n)
        specs.push_back(PathSpec{n});
    for (std::uint64_t n = 3; n <= 12; ++n)
        specs.push_back(CycleSpec{n});
    for (std::uint64_t n = 1; n <= 8; ++n)
        specs.push_back(CompleteSpec{n});
    for (std::uint64_t a = 1; a <= 5; ++a)
        for (std::uint64_t b = 1; b <= 5; ++b)
            specs.push_back(CompleteBipartiteSpec{a, b});
    for (auto [r, l] : {std::pair{2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}})
        specs.push_back(PerfectTreeSpec{static_cast<std::uint64_t>(r), static_cast<std::uint64_t>(l)});
    return specs;
}

std::vector<FamilySpec> mixed_grid() {
    std::vector<FamilySpec> specs;
    for (std::uint64_t n = 1; n <= 10; ++n)
        specs.push_back(PathSpec{n});
    for (std::uint64_t n = 3; n <= 10; ++n)
        specs.push_back(CycleSpec{n});
    for (std::uint64_t a = 1; a <= 4; ++a)
        for (std::uint64_t b = 1; b <= 4; ++b)
            specs.push_back(CompleteBipartiteSpec{a, b});
    return specs;
}

std::string at(const FamilySpec& spec, unsigned k, std::optional<std::uint64_t> p = std::nullopt) {
    std::ostringstream out;
    out << describe(spec) << " k=" << k;
    if (p)
        out << " p=" << *p;
    return out.str();
}

bool is_minimal(const Graph& g, const Witness& w) {
    for (std::size_t i = 0; i < w.vertices.size(); ++i) {
        Witness smaller = w;
        smaller.vertices.erase(smaller.vertices.begin() + static_cast<std::ptrdiff_t>(i));
        if (verify_witness(g, smaller))
            return false;
    }
    for (std::size_t i = 0; i < w.edges.size(); ++i) {
        Witness smaller = w;
        smaller.edges.erase(smaller.edges.begin() + static_cast<std::ptrdiff_t>(i));
        if (verify_witness(g, smaller))
            return false;
    }
    return true;
}

void vertex_equivalence(Tally& t) {
    for (const FamilySpec& spec : vertex_grid()) {
        const Graph g = build(spec);
        for (unsigned k = 2; k <= 6; ++k) {
            const BigInt formula = cv(spec, k).value;
            const std::uint64_t oracle = min_vertex_disconnecting(g, k, limits).minimum;
            t.expect(formula == oracle, at(spec, k) + ": formula " + str(formula) + " oracle " +
                                            std::to_string(oracle));
        }
    }
}

void mixed_equivalence(Tally& t) {
    for (const FamilySpec& spec : mixed_grid()) {
        const Graph g = build(spec);
        for (unsigned k = 2; k <= 5; ++k) {
            const std::uint64_t top = cv(spec, k).value.convert_to<std::uint64_t>();
            const std::size_t packed = max_disjoint_k_paths(g, k, PackingMode::exact, limits).size();
            for (std::uint64_t p = 0; p <= top; ++p) {
                const BigInt formula = cm(spec, k, p).value;
                const std::uint64_t oracle = min_mixed(g, k, p, limits).minimum;
                t.expect(formula == oracle, at(spec, k, p) + ": formula " + str(formula) + " oracle " +
                                                std::to_string(oracle));
                t.expect(p + oracle >= packed, at(spec, k, p) + ": below packing bound");
            }
        }
    }
}

void spot_values(Tally& t) {
    struct Spot {
        FamilySpec spec;
        unsigned k;
        std::optional<std::uint64_t> p;
        std::uint64_t expected;
    };
    const std::vector<Spot> spots = {
        {PathSpec{7}, 2, std::nullopt, 2},
        {CycleSpec{7}, 2, std::nullopt, 3},
        {CompleteBipartiteSpec{3, 4}, 2, std::nullopt, 3},
        {PerfectTreeSpec{2, 3}, 2, std::nullopt, 5},
        {PathSpec{7}, 2, 1, 1},
        {CycleSpec{8}, 2, 1, 3},
        {CompleteBipartiteSpec{3, 4}, 2, 1, 6},
        {CycleSpec{5}, 3, std::nullopt, 0},
    };
    for (const Spot& s : spots) {
        const Graph g = build(s.spec);
        const BigInt formula = s.p ? cm(s.spec, s.k, *s.p).value : cv(s.spec, s.k).value;
        const std::uint64_t oracle = s.p ? min_mixed(g, s.k, *s.p, limits).minimum
                                         : min_vertex_disconnecting(g, s.k, limits).minimum;
        t.expect(formula == s.expected, at(s.spec, s.k, s.p) + ": formula " + str(formula));
        t.expect(oracle == s.expected, at(s.spec, s.k, s.p) + ": oracle " + std::to_string(oracle));
    }
}

void witnesses(Tally& t) {
    auto check = [&](const Graph& g, const Witness& w, const BigInt& expected, const std::string& where) {
        t.expect(verify_witness(g, w), where + ": not a failure state");
        t.expect(BigInt(w.size()) == expected, where + ": size " + std::to_string(w.size()));
        if (g.order() <= minimality_max_n)
            t.expect(is_minimal(g, w), where + ": not minimal");
    };
    for (const FamilySpec& spec : vertex_grid()) {
        const Graph g = build(spec);
        for (unsigned k = 2; k <= 6; ++k)
            check(g, vertex_witness(spec, k), cv(spec, k).value, at(spec, k));
    }
    for (const FamilySpec& spec : mixed_grid()) {
        const Graph g = build(spec);
        for (unsigned k = 2; k <= 5; ++k) {
            const std::uint64_t top = cv(spec, k).value.convert_to<std::uint64_t>();
            for (std::uint64_t p = 0; p <= top; ++p) {
                const Witness w = mixed_witness(spec, k, p);
                t.expect(w.vertices.size() == p, at(spec, k, p) + ": wrong vertex count");
                check(g, w, cm(spec, k, p).value + p, at(spec, k, p));
            }
        }
    }
}

void random_properties(Tally& t) {
    std::mt19937_64 rng(20240607);
    for (int i = 0; i < 500; ++i) {
        const std::size_t n = 1 + rng() % 12;
        const Graph g = random_graph(n, 0.1 + 0.05 * static_cast<double>(rng() % 10), rng);
        const unsigned k = 1 + static_cast<unsigned>(rng() % 6);
        t.expect(is_failure_state(g, k) == !has_k_pair(g, k), "graph " + std::to_string(i) + ": failure state");

        if (g.size() <= limits.max_edges) {
            const std::size_t packed = max_disjoint_k_paths(g, k, PackingMode::exact, limits).size();
            const std::uint64_t top = min_vertex_disconnecting(g, k, limits).minimum;
            for (std::uint64_t p = 0; p <= top; ++p)
                t.expect(p + min_mixed(g, k, p, limits).minimum >= packed,
                         "graph " + std::to_string(i) + ": p + q below packing");
        }
    }
    for (int i = 0; i < 200; ++i) {
        const std::size_t n = 1 + rng() % 10;
        const Graph g = random_graph(n, 0.15 + 0.05 * static_cast<double>(rng() % 8), rng);
        const unsigned k = 1 + static_cast<unsigned>(rng() % 4);
        const std::size_t packed = max_disjoint_k_paths(g, k, PackingMode::exact, limits).size();
        for (VertexId v = 0; v < n; ++v) {
            const VertexId gone[] = {v};
            t.expect(max_disjoint_k_paths(delete_vertices(g, gone).graph, k, PackingMode::exact, limits).size() + 1 >=
                         packed,
                     "drop graph " + std::to_string(i) + ": vertex " + std::to_string(v));
        }
        for (const Edge& e : g.edges()) {
            const Edge gone[] = {e};
            t.expect(max_disjoint_k_paths(delete_edges(g, gone), k, PackingMode::exact, limits).size() + 1 >= packed,
                     "drop graph " + std::to_string(i) + ": edge");
        }
    }
}

void cardinality_identity(Tally& t) {
    for (std::uint64_t r = 2; r <= 5; ++r)
        for (std::uint64_t l = 1; l <= 8; ++l)
            for (unsigned k = 2; k <= 9; ++k) {
                const BigInt closed = tree_witness_cardinality(r, l, k);
                const BigInt summed = tree_witness_cardinality_sum(r, l, k);
                t.expect(closed == summed, "r=" + std::to_string(r) + " l=" + std::to_string(l) +
                                               " k=" + std::to_string(k) + ": " + str(closed) + " vs " + str(summed));
            }
}

void curve_endpoints(Tally& t) {
    for (const FamilySpec& spec : mixed_grid()) {
        const Graph g = build(spec);
        for (unsigned k = 2; k <= 5; ++k) {
            const ConnectivityCurve c = curve(spec, k);
            const std::uint64_t ce = min_edge_disconnecting(g, k, limits).minimum;
            t.expect(!c.pairs.empty(), at(spec, k) + ": empty curve");
            if (c.pairs.empty())
                continue;
            t.expect(c.pairs.front().p == 0 && c.pairs.front().q == ce,
                     at(spec, k) + ": starts at q=" + str(c.pairs.front().q) + ", CE=" + std::to_string(ce));
            t.expect(c.pairs.back().p == cv(spec, k).value && c.pairs.back().q == 0, at(spec, k) + ": bad end");
        }
    }
}

void cycle_extension(Tally& t) {
    for (std::uint64_t n = 3; n <= 12; ++n) {
        const Graph g = build(CycleSpec{n});
        for (unsigned k = 2; k <= n / 2; ++k) {
            const std::uint64_t expected = (n - 1) / k + 1;
            const BigInt formula = cm(CycleSpec{n}, k, 0).value;
            const std::uint64_t oracle = min_mixed(g, k, 0, limits).minimum;
            t.expect(formula == expected && oracle == expected,
                     at(CycleSpec{n}, k, 0) + ": formula " + str(formula) + " oracle " + std::to_string(oracle));
        }
    }
}

bool run(int id, const char* name, double budget, const std::function<void(Tally&)>& body) {
    Tally t;
    const auto start = std::chrono::steady_clock::now();
    std::string error;
    try {
        body(t);
    } catch (const std::exception& e) {
        error = e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = seconds < budget;
    const bool ok = error.empty() && t.failures.empty() && in_time;
    std::printf("%s criterion %d: %s (%zu checks, %.2fs of %.0fs)\n", ok ? "PASS" : "FAIL", id, name, t.checks,
                seconds, budget);
    if (!error.empty())
        std::printf("    error: %s\n", error.c_str());
    if (!t.failures.empty())
        std::printf("    %zu failed checks\n", t.failures.size());
    for (const std::string& f : t.failures)
        if (!f.empty())
            std::printf("    %s\n", f.c_str());
    if (!in_time)
        std::printf("    over time budget\n");
    return ok;
}

}  // namespace

int main() {
    bool ok = true;
    ok &= run(1, "vertex formulas match the oracle", budget_vertex, vertex_equivalence);
    ok &= run(2, "mixed formulas match the oracle", budget_mixed, mixed_equivalence);
    ok &= run(3, "named spot values", budget_default, spot_values);
    ok &= run(4, "witness validity and optimality", budget_default, witnesses);
    ok &= run(5, "properties on random graphs", budget_default, random_properties);
    ok &= run(6, "tree cardinality identity", budget_default, cardinality_identity);
    ok &= run(7, "curve endpoints", budget_default, curve_endpoints);
    ok &= run(8, "cycle p=0 extension", budget_default, cycle_extension);
    std::printf("%s\n", ok ? "ALL PASS" : "SOME CRITERIA FAILED");
    return ok ? 0 : 1;
}
