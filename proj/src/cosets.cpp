#include "mseg/cosets.hpp"

#include <algorithm>
#include <numeric>

namespace mseg {

std::int64_t SMatrix::total() const {
    return std::accumulate(lambda.begin(), lambda.end(), std::int64_t{0});
}

void SMatrix::validate() const {
    const std::size_t r = rank();
    if (entries.size() != r) fail(errc::invalid_s_matrix, "matrix rank differs from row-sum count");
    for (std::size_t i = 0; i < r; ++i) {
        if (entries[i].size() != r) fail(errc::invalid_s_matrix, "matrix is not square");
        std::int64_t row = 0;
        for (std::size_t j = 0; j < r; ++j) {
            if (entries[i][j] < 0) fail(errc::invalid_s_matrix, "negative entry");
            if (entries[i][j] != entries[j][i]) fail(errc::invalid_s_matrix, "matrix is not symmetric");
            row += entries[i][j];
        }
        if (entries[i][i] % 2 != 0) fail(errc::invalid_s_matrix, "odd diagonal entry");
        if (row != lambda[i]) fail(errc::invalid_s_matrix, "row sum differs from prescribed value");
    }
}

namespace {

// DFS over the cells (i, j), i <= j, in row-major order; choosing ascending
// values at every cell yields the row-major lexicographic order on full
// matrices, because mirrored cells are fixed by earlier rows. cap[k] is what
// row k can still absorb.
void enumerate_rec(const std::vector<std::int64_t>& lambda,
                   std::vector<std::vector<std::int64_t>>& entries,
                   std::vector<std::int64_t>& cap, std::size_t i, std::size_t j,
                   std::vector<SMatrix>& out) {
    const std::size_t r = lambda.size();
    if (i == r) {
        out.push_back(SMatrix{lambda, entries});
        return;
    }
    if (j == r) {
        if (cap[i] == 0) enumerate_rec(lambda, entries, cap, i + 1, i + 1, out);
        return;
    }
    const bool diag = i == j;
    const bool last = j == r - 1;
    const std::int64_t max_v = diag ? cap[i] : std::min(cap[i], cap[j]);
    for (std::int64_t v = 0; v <= max_v; ++v) {
        if (diag && v % 2 != 0) continue;
        if (last && v != cap[i]) continue;  // the final cell must complete the row
        entries[i][j] = entries[j][i] = v;
        cap[i] -= v;
        if (!diag) cap[j] -= v;
        enumerate_rec(lambda, entries, cap, i, j + 1, out);
        cap[i] += v;
        if (!diag) cap[j] += v;
        entries[i][j] = entries[j][i] = 0;
    }
}

}  // namespace

std::vector<SMatrix> enumerate_s_matrices(const std::vector<std::int64_t>& lambda) {
    std::int64_t n = 0;
    for (std::int64_t part : lambda) {
        if (part < 1) fail(errc::partition_mismatch, "partition parts must be positive");
        n += part;
    }
    if (n % 2 != 0)
        fail(errc::odd_total_degree, "partition total " + std::to_string(n) + " is odd");
    const std::size_t r = lambda.size();
    std::vector<std::vector<std::int64_t>> entries(r, std::vector<std::int64_t>(r, 0));
    std::vector<std::int64_t> cap = lambda;
    std::vector<SMatrix> out;
    enumerate_rec(lambda, entries, cap, 0, 0, out);
    return out;
}

CosetDatum build_coset_datum(const SMatrix& s) {
    s.validate();
    const std::size_t r = s.rank();
    const std::int64_t n = s.total();
    const std::int64_t m = n / 2;

    CosetDatum out;
    out.s = s;
    out.t.resize(r);
    out.d.resize(r);
    for (std::size_t i = 0; i < r; ++i) {
        out.t[i] = s.entries[i][i] / 2;
        out.d[i] = out.t[i];
        for (std::size_t j = i + 1; j < r; ++j) out.d[i] += s.entries[i][j];
    }

    // prefix sums over d and lambda, suffix sums over d
    std::vector<std::int64_t> dpre(r + 1, 0), npre(r + 1, 0), dsuf(r + 1, 0);
    for (std::size_t i = 0; i < r; ++i) {
        dpre[i + 1] = dpre[i] + out.d[i];
        npre[i + 1] = npre[i] + s.lambda[i];
    }
    for (std::size_t i = r; i-- > 0;) dsuf[i] = dsuf[i + 1] + out.d[i];

    const auto row_prefix = [&](std::size_t i, std::size_t j) {
        std::int64_t acc = 0;
        for (std::size_t jj = 0; jj < j; ++jj) acc += s.entries[i][jj];
        return acc;
    };
    const auto col_below = [&](std::size_t i, std::size_t j) {
        // sum of s[i'][j] for i' > i
        std::int64_t acc = 0;
        for (std::size_t ii = i + 1; ii < r; ++ii) acc += s.entries[ii][j];
        return acc;
    };

    out.w.assign(static_cast<std::size_t>(n), 0);
    std::vector<int> hits(static_cast<std::size_t>(n), 0);
    const auto place = [&](std::int64_t l, std::int64_t image, int rule) {
        if (l < 1 || l > n || image < 1 || image > n)
            fail(errc::case_coverage_failure,
                 "placement rule " + std::to_string(rule + 1) + " left the index range");
        if (++hits[static_cast<std::size_t>(l - 1)] > 1)
            fail(errc::case_coverage_failure,
                 "position " + std::to_string(l) + " matched more than one placement rule");
        out.w[static_cast<std::size_t>(l - 1)] = image;
        out.rule_counts[static_cast<std::size_t>(rule)]++;
    };

    for (std::size_t i = 0; i < r; ++i) {
        // first-half diagonal slots
        for (std::int64_t k = 1; k <= out.t[i]; ++k)
            place(dpre[i] + k, npre[i] + row_prefix(i, i) + k, 0);
        // first-half upper cells
        for (std::size_t j = i + 1; j < r; ++j) {
            std::int64_t between = 0;  // s_{i,i+1} + ... + s_{i,j-1}
            for (std::size_t jj = i + 1; jj < j; ++jj) between += s.entries[i][jj];
            for (std::int64_t k = 1; k <= s.entries[i][j]; ++k)
                place(dpre[i] + out.t[i] + between + k, npre[i] + row_prefix(i, j) + k, 1);
        }
        // second-half diagonal slots
        for (std::int64_t k = 1; k <= out.t[i]; ++k)
            place(m + dsuf[i + 1] + col_below(i, i) + k,
                  npre[i] + row_prefix(i, i) + out.t[i] + k, 2);
        // second-half lower cells
        for (std::size_t j = 0; j < i; ++j)
            for (std::int64_t k = 1; k <= s.entries[i][j]; ++k)
                place(m + dsuf[j + 1] + col_below(i, j) + k, npre[i] + row_prefix(i, j) + k, 3);
    }

    for (std::int64_t l = 1; l <= n; ++l)
        if (hits[static_cast<std::size_t>(l - 1)] != 1)
            fail(errc::case_coverage_failure,
                 "position " + std::to_string(l) + " matched no placement rule");

    std::vector<int> seen(static_cast<std::size_t>(n), 0);
    for (std::int64_t image : out.w)
        if (++seen[static_cast<std::size_t>(image - 1)] > 1)
            fail(errc::case_coverage_failure, "representative is not a bijection");

    out.levi.h_factors = out.t;
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = i + 1; j < r; ++j)
            if (s.entries[i][j] > 0)
                out.levi.gl_factors.push_back(LeviShape::GLFactor{i, j, s.entries[i][j]});

    return out;
}

ExponentVector standard_modulus_exponents(const std::vector<std::int64_t>& blocks) {
    const std::int64_t total = std::accumulate(blocks.begin(), blocks.end(), std::int64_t{0});
    ExponentVector out;
    out.reserve(blocks.size());
    std::int64_t before = 0;
    for (std::int64_t b : blocks) {
        out.push_back((total - before - b) - before);
        before += b;
    }
    return out;
}

ModulusCheck check_modulus_identity(const SMatrix& s) {
    s.validate();
    const std::size_t r = s.rank();

    // refined Levi: nonzero cells in row-major order
    std::vector<std::int64_t> refined_sizes;
    std::vector<std::pair<std::size_t, std::size_t>> cells;
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
            if (s.entries[i][j] > 0) {
                refined_sizes.push_back(s.entries[i][j]);
                cells.emplace_back(i, j);
            }

    const ExponentVector refined = standard_modulus_exponents(refined_sizes);
    const ExponentVector outer = standard_modulus_exponents(s.lambda);

    // inner exponents, one standard parabolic per row
    std::vector<ExponentVector> inner(r);
    std::vector<std::vector<std::size_t>> inner_pos(r, std::vector<std::size_t>(r, 0));
    for (std::size_t i = 0; i < r; ++i) {
        std::vector<std::int64_t> row_blocks;
        for (std::size_t j = 0; j < r; ++j)
            if (s.entries[i][j] > 0) {
                inner_pos[i][j] = row_blocks.size();
                row_blocks.push_back(s.entries[i][j]);
            }
        inner[i] = standard_modulus_exponents(row_blocks);
    }

    const auto cell_name = [](std::size_t i, std::size_t j) {
        return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
    };

    std::vector<std::vector<std::int64_t>> refined_at(r, std::vector<std::int64_t>(r, 0));
    for (std::size_t idx = 0; idx < cells.size(); ++idx) {
        const auto [i, j] = cells[idx];
        refined_at[i][j] = refined[idx];
        const std::int64_t lhs = inner[i][inner_pos[i][j]] + outer[i];
        if (lhs != refined[idx])
            return {false, "additivity fails on block " + cell_name(i, j) + ": " +
                               std::to_string(lhs) + " != " + std::to_string(refined[idx])};
    }

    for (const auto& [i, j] : cells) {
        if (i == j && refined_at[i][i] % 2 != 0)
            return {false, "odd exponent on diagonal block " + cell_name(i, i)};
        if (i < j && (refined_at[i][j] + refined_at[j][i]) % 2 != 0)
            return {false, "odd exponent sum on block pair " + cell_name(i, j)};
    }

    return {true, ""};
}

}  // namespace mseg
