#include "kdcc/closed_forms.hpp"

#include <algorithm>
#include <limits>

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
        throw std::invalid_argument("closed forms require k >= 2, got k = " + std::to_string(k));
}

BigInt big_pow(std::uint64_t base, std::uint64_t exp) {
    if (exp > std::numeric_limits<unsigned>::max())
        throw std::invalid_argument("exponent too large");
    return boost::multiprecision::pow(BigInt(base), static_cast<unsigned>(exp));
}

// floor division for a possibly negative numerator and positive divisor
BigInt floor_div(const BigInt& num, const BigInt& den) {
    BigInt q = num / den;
    if (num % den != 0 && num < 0)
        --q;
    return q;
}

// floor((n - p(k+1) - 1) / k): edges needed on the leftover path after p spaced deletions.
BigInt path_remainder_edges(std::uint64_t n, unsigned k, std::uint64_t p) {
    return floor_div(BigInt(n) - BigInt(p) * (k + 1) - 1, BigInt(k));
}

FormulaResult cv_path(std::uint64_t n, unsigned k) {
    return {BigInt(n / (k + 1ULL)), "path: floor(n/(k+1))"};
}

FormulaResult cv_cycle(std::uint64_t n, unsigned k) {
    if (k > n / 2)
        return {0, "cycle: k > floor(n/2)"};
    return {BigInt((n + k) / (k + 1ULL)), "cycle: floor((n+k)/(k+1))"};
}

FormulaResult cv_bipartite(std::uint64_t a, std::uint64_t b, unsigned k) {
    if (a == 1 && b == 1)
        return {0, "bipartite: a=b=1"};
    if (k > 2)
        return {0, "bipartite: k>2"};
    return {BigInt(std::min(a, b)), "bipartite: k=2, min(a,b)"};
}

FormulaResult cv_tree(const PerfectTreeSpec& t, unsigned k) {
    if (t.r == 1) {
        FormulaResult res = cv_path(t.l + 1, k);
        res.case_tag = "tree r=1: path on l+1 vertices";
        return res;
    }
    return {tree_witness_cardinality(t.r, t.l, k), "tree: level deletion"};
}

}  // namespace

std::uint64_t tree_level_step(unsigned k) {
    return (k + 1ULL) / 2 + 1;
}

FormulaResult cv(const FamilySpec& spec, unsigned k) {
    require_k(k);
    validate(spec);
    return std::visit(overloaded{
                          [&](const PathSpec& s) { return cv_path(s.n, k); },
                          [&](const CycleSpec& s) { return cv_cycle(s.n, k); },
                          [&](const CompleteSpec&) { return FormulaResult{0, "complete: diameter 1"}; },
                          [&](const CompleteBipartiteSpec& s) { return cv_bipartite(s.a, s.b, k); },
                          [&](const PerfectTreeSpec& s) { return cv_tree(s, k); },
                      },
                      spec);
}

BigInt ce_path(std::uint64_t n, unsigned k) {
    require_k(k);
    if (n < 1)
        throw std::invalid_argument("ce_path requires n >= 1");
    return BigInt((n - 1) / k);
}

BigInt ce_bipartite(std::uint64_t a, std::uint64_t b, unsigned k) {
    require_k(k);
    if (a < 1 || b < 1)
        throw std::invalid_argument("ce_bipartite requires a, b >= 1");
    if (k > 2 || (a == 1 && b == 1))
        return 0;
    return BigInt(std::min(a, b)) * (std::max(a, b) - 1);
}

FormulaResult cm(const FamilySpec& spec, unsigned k, std::uint64_t p) {
    require_k(k);
    if (std::holds_alternative<PerfectTreeSpec>(spec))
        throw NoClosedForm("no closed form for the mixed parameter of " + describe(spec) +
                           "; use the oracle");
    const FormulaResult vertex = cv(spec, k);
    if (BigInt(p) > vertex.value)
        throw PRangeError("p = " + std::to_string(p) + " exceeds CV_" + std::to_string(k) + " = " +
                          vertex.value.str() + " for " + describe(spec));

    return std::visit(
        overloaded{
            [&](const PathSpec& s) -> FormulaResult {
                if (BigInt(p) == vertex.value)
                    return {0, "path: p = CV"};
                return {path_remainder_edges(s.n, k, p), "path: p < CV"};
            },
            [&](const CycleSpec& s) -> FormulaResult {
                if (k > s.n / 2)
                    return {0, "cycle: k > floor(n/2)"};
                if (BigInt(p) == vertex.value)
                    return {0, "cycle: p = CV"};
                if (p == 0)
                    return {ce_path(s.n, k) + 1, "extension: p=0"};
                return {path_remainder_edges(s.n, k, p) + 1, "cycle: 0 < p < CV"};
            },
            [&](const CompleteSpec&) -> FormulaResult { return {0, "complete: diameter 1"}; },
            [&](const CompleteBipartiteSpec& s) -> FormulaResult {
                if (s.a == 1 && s.b == 1)
                    return {0, "bipartite: a=b=1"};
                if (k > 2)
                    return {0, "bipartite: k>2"};
                const std::uint64_t lo = std::min(s.a, s.b);
                const std::uint64_t hi = std::max(s.a, s.b);
                return {BigInt(lo - p) * (hi - 1), "bipartite: k=2, (a-p)(b-1)"};
            },
            [&](const PerfectTreeSpec&) -> FormulaResult { throw NoClosedForm("unreachable"); },
        },
        spec);
}

BigInt tree_witness_cardinality_sum(std::uint64_t r, std::uint64_t l, unsigned k) {
    require_k(k);
    if (r < 2)
        throw std::invalid_argument("tree witness cardinality requires r >= 2");
    const std::uint64_t step = tree_level_step(k);
    const std::uint64_t levels = (l + 1) / step;
    BigInt total = 0;
    for (std::uint64_t m = 1; m <= levels; ++m)
        total += big_pow(r, l + 1 - m * step);
    return total;
}

BigInt tree_witness_cardinality(std::uint64_t r, std::uint64_t l, unsigned k) {
    require_k(k);
    if (r < 2)
        throw std::invalid_argument("tree witness cardinality requires r >= 2");
    const std::uint64_t step = tree_level_step(k);
    const std::uint64_t levels = (l + 1) / step;
    const BigInt numerator = big_pow(r, l + 1) - big_pow(r, l + 1 - levels * step);
    const BigInt denominator = big_pow(r, step) - 1;
    if (numerator % denominator != 0)
        throw std::logic_error("tree cardinality closed form is not integral");
    BigInt closed = numerator / denominator;
    if (closed != tree_witness_cardinality_sum(r, l, k))
        throw std::logic_error("tree cardinality closed form disagrees with its series");
    return closed;
}

ConnectivityCurve curve(const FamilySpec& spec, unsigned k) {
    const FormulaResult vertex = cv(spec, k);
    if (vertex.value > std::numeric_limits<std::uint64_t>::max())
        throw std::invalid_argument("CV_k too large to enumerate a curve");
    const auto last = vertex.value.convert_to<std::uint64_t>();
    ConnectivityCurve out{spec, k, {}};
    for (std::uint64_t p = 0; p <= last; ++p) {
        FormulaResult q = cm(spec, k, p);
        out.pairs.push_back({p, std::move(q.value), std::move(q.case_tag)});
    }
    return out;
}

}  // namespace kdcc
