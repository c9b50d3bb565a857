#pragma once

// Double-coset combinatorics for a standard parabolic against the
// quaternionic symmetric subgroup.
//
// The orbits are indexed by symmetric matrices with non-negative integer
// entries, even diagonal and row sums equal to the parabolic's block sizes.
// Each matrix carries an explicit permutation representative, a fixed-Levi
// shape (inner-form factors on the diagonal, one general-linear factor per
// unordered off-diagonal pair) and a modulus-character bookkeeping identity
// that this module verifies at the level of exponent vectors.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "mseg/error.hpp"

namespace mseg {

struct SMatrix {
    std::vector<std::int64_t> lambda;                // row sums (n_1, ..., n_r)
    std::vector<std::vector<std::int64_t>> entries;  // symmetric, even diagonal

    std::size_t rank() const { return lambda.size(); }
    std::int64_t total() const;
    void validate() const;  // throws invalid_s_matrix

    friend bool operator==(const SMatrix&, const SMatrix&) = default;
};

// The complete index set over the given row sums, in row-major lexicographic
// order on entries. throws odd_total_degree
std::vector<SMatrix> enumerate_s_matrices(const std::vector<std::int64_t>& lambda);

struct LeviShape {
    struct GLFactor {
        std::size_t i = 0;  // 0-based block pair, i < j
        std::size_t j = 0;
        std::int64_t size = 0;
        friend bool operator==(const GLFactor&, const GLFactor&) = default;
    };
    std::vector<std::int64_t> h_factors;  // t_i per block; zero entries are trivial factors
    std::vector<GLFactor> gl_factors;     // off-diagonal factors, zero cells dropped

    friend bool operator==(const LeviShape&, const LeviShape&) = default;
};

struct CosetDatum {
    SMatrix s;
    std::vector<std::int64_t> t;  // t_i = s_ii / 2
    std::vector<std::int64_t> d;  // d_i = t_i + sum_{j > i} s_ij; a partition of n/2
    std::vector<std::int64_t> w;  // representative in one-line notation, w[l-1] = w(l), 1-based values
    LeviShape levi;
    // how many positions each placement rule covered:
    // [0] first-half diagonal, [1] first-half upper cells,
    // [2] second-half diagonal, [3] second-half lower cells
    std::array<std::int64_t, 4> rule_counts{};
};

// Builds the explicit representative. Every position 1..n must match exactly
// one of the four placement rules and the result must be a bijection;
// anything else is surfaced as an internal failure (case_coverage_failure).
CosetDatum build_coset_datum(const SMatrix& s);

using ExponentVector = std::vector<std::int64_t>;

// Modulus character of a standard parabolic on its Levi blocks: block i
// carries the exponent (total size after i) - (total size before i).
ExponentVector standard_modulus_exponents(const std::vector<std::int64_t>& blocks);

struct ModulusCheck {
    bool ok = true;
    std::string detail;  // offending block when not ok
};

// Verifies, blockwise on the refined Levi, that the modulus exponents of the
// inner parabolic plus the outer parabolic equal those of the refined
// parabolic, and the parity certificate that makes the square root on the
// fixed Levi integral: even exponent on each diagonal cell and even exponent
// sum over each mirrored off-diagonal pair.
ModulusCheck check_modulus_identity(const SMatrix& s);

}  // namespace mseg
