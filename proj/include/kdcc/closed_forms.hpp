#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "kdcc/families.hpp"

namespace kdcc {

using BigInt = boost::multiprecision::cpp_int;

/// Raised when a closed form is requested outside the domain where one exists.
class NoClosedForm : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

/// Raised for p outside 0..CV_k.
class PRangeError : public std::out_of_range {
  public:
    using std::out_of_range::out_of_range;
};

/// Formula value plus the theorem branch that produced it.
struct FormulaResult {
    BigInt value;
    std::string case_tag;
};

/// CV_k for a family instance. k >= 2.
FormulaResult cv(const FamilySpec& spec, unsigned k);

/// CE_k(P_n) = floor((n-1)/k).
BigInt ce_path(std::uint64_t n, unsigned k);

/// CE_k(K_{a,b}): min(a,b) * (max(a,b) - 1) when k = 2 and max(a,b) >= 2, else 0.
BigInt ce_bipartite(std::uint64_t a, std::uint64_t b, unsigned k);

/// CM_k(G,p) for Path, Cycle, Complete and CompleteBipartite.
/// Throws PRangeError when p > CV_k, NoClosedForm for PerfectTree.
FormulaResult cm(const FamilySpec& spec, unsigned k, std::uint64_t p);

/// Size of the level-deletion set for T_{r,l}, closed form. r >= 2.
/// The geometric series is re-evaluated and compared on every call.
BigInt tree_witness_cardinality(std::uint64_t r, std::uint64_t l, unsigned k);

/// Same quantity as an explicit sum of per-level widths.
BigInt tree_witness_cardinality_sum(std::uint64_t r, std::uint64_t l, unsigned k);

/// ceil(k/2) + 1: spacing between deleted levels in the tree construction.
std::uint64_t tree_level_step(unsigned k);

struct ConnectivityPair {
    std::uint64_t p = 0;
    BigInt q;
    std::string case_tag;
};

struct ConnectivityCurve {
    FamilySpec spec;
    unsigned k = 2;
    std::vector<ConnectivityPair> pairs;
};

/// (p, CM_k(G,p)) for p = 0..CV_k.
ConnectivityCurve curve(const FamilySpec& spec, unsigned k);

}  // namespace kdcc
