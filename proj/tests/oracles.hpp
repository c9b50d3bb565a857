#pragma once

// Independent oracles the production code is checked against. These
// deliberately take different routes: genericity by exhausting the witness
// range, Jacquet factors by repeated two-block splitting, matrix counts by
// coefficient extraction from a product of geometric series and by a raw
// odometer over all cells.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "mseg/core.hpp"
#include "mseg/generic.hpp"
#include "mseg/jacquet.hpp"

namespace oracle {

// Triple loop over (i, j, d): no solved-for d, just every candidate in range.
inline mseg::GenericityResult exhaustive_is_generic(const mseg::Multisegment& pi) {
    const auto& segs = pi.segments;
    for (std::size_t i = 0; i < segs.size(); ++i) {
        for (std::size_t j = 0; j < segs.size(); ++j) {
            if (i == j) continue;
            const auto& a = segs[i];
            const auto& b = segs[j];
            if (pi.table.at(a.line()).degree != pi.table.at(b.line()).degree) continue;
            if (a.line() != b.line()) continue;
            const std::int64_t lo = std::max<std::int64_t>(1, a.length - b.length + 1);
            for (std::int64_t d = lo; d <= a.length; ++d) {
                if (a.exponent() ==
                    b.exponent() + mseg::HalfInt(d) + mseg::HalfInt::halves(b.length - a.length))
                    return {false, mseg::LinkWitness{i, j, d}};
            }
        }
    }
    return {true, std::nullopt};
}

// Splits off the first block, with the second factor's exponent written in
// the dropped-by-k1/2 form, then recurses on the remainder.
inline mseg::JacquetFactors jacquet_iterated(const mseg::Segment& seg,
                                             const mseg::LineTable& table,
                                             const std::vector<std::int64_t>& lambda) {
    if (lambda.size() <= 1) {
        if (!lambda.empty() && lambda[0] % table.at(seg.line()).degree != 0)
            return {true, {}};
        return {false, {seg}};
    }
    const std::int64_t deg = table.at(seg.line()).degree;
    if (lambda[0] % deg != 0) return {true, {}};
    const std::int64_t k1 = lambda[0] / deg;
    const mseg::Segment head =
        mseg::st(k1, seg.line(), seg.exponent() + mseg::HalfInt::halves(seg.length - k1));
    const mseg::Segment rest =
        mseg::st(seg.length - k1, seg.line(), seg.exponent() - mseg::HalfInt::halves(k1));
    const std::vector<std::int64_t> tail(lambda.begin() + 1, lambda.end());
    mseg::JacquetFactors rec = jacquet_iterated(rest, table, tail);
    if (rec.zero) return rec;
    rec.factors.insert(rec.factors.begin(), head);
    return rec;
}

// Number of symmetric non-negative integer matrices with even diagonal and
// row sums lambda, as the coefficient of prod x_i^{lambda_i} in
// prod_i 1/(1 - x_i^2) * prod_{i<j} 1/(1 - x_i x_j). Exponent tuples are
// encoded in mixed radix with digit bounds lambda_i.
inline std::int64_t count_matrices_generating_function(const std::vector<std::int64_t>& lambda) {
    const std::size_t r = lambda.size();
    std::vector<std::int64_t> stride(r, 1);
    std::size_t size = 1;
    for (std::size_t i = 0; i < r; ++i) {
        stride[i] = static_cast<std::int64_t>(size);
        size *= static_cast<std::size_t>(lambda[i] + 1);
    }
    std::vector<std::int64_t> poly(size, 0);
    poly[0] = 1;

    const auto digit = [&](std::size_t t, std::size_t i) {
        return (static_cast<std::int64_t>(t) / stride[i]) % (lambda[i] + 1);
    };
    // multiplying by a geometric series in the monomial with exponent step
    // (a at i, b at j) is one ascending in-place pass
    const auto apply = [&](std::size_t i, std::int64_t a, std::size_t j, std::int64_t b) {
        const std::int64_t step = a * stride[i] + b * stride[j];
        for (std::size_t t = 0; t < size; ++t) {
            if (digit(t, i) < a || digit(t, j) < b) continue;
            poly[t] += poly[t - static_cast<std::size_t>(step)];
        }
    };
    for (std::size_t i = 0; i < r; ++i)
        if (lambda[i] >= 2) apply(i, 2, i, 0);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = i + 1; j < r; ++j) apply(i, 1, j, 1);
    return poly[size - 1];
}

// Raw odometer over every cell of the upper triangle; only workable when the
// state space is small, so callers should check feasibility first.
inline std::int64_t count_matrices_odometer(const std::vector<std::int64_t>& lambda,
                                            std::int64_t state_budget = 20'000'000) {
    const std::size_t r = lambda.size();
    std::vector<std::pair<std::size_t, std::size_t>> cells;
    std::vector<std::int64_t> bound;
    std::int64_t states = 1;
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = i; j < r; ++j) {
            cells.emplace_back(i, j);
            bound.push_back(std::min(lambda[i], lambda[j]));
            if (states <= state_budget) states *= bound.back() + 1;
        }
    if (states > state_budget) return -1;  // infeasible, caller skips

    std::vector<std::int64_t> value(cells.size(), 0);
    std::int64_t count = 0;
    for (;;) {
        std::vector<std::int64_t> row_sum(r, 0);
        bool even_diag = true;
        for (std::size_t c = 0; c < cells.size(); ++c) {
            const auto [i, j] = cells[c];
            row_sum[i] += value[c];
            if (i != j)
                row_sum[j] += value[c];
            else if (value[c] % 2 != 0)
                even_diag = false;
        }
        if (even_diag && row_sum == lambda) count++;

        std::size_t c = 0;
        while (c < cells.size() && value[c] == bound[c]) value[c++] = 0;
        if (c == cells.size()) break;
        value[c]++;
    }
    return count;
}

// All partitions of n in weakly decreasing part order.
inline std::vector<std::vector<std::int64_t>> partitions_of(std::int64_t n) {
    std::vector<std::vector<std::int64_t>> out;
    std::vector<std::int64_t> current;
    const std::function<void(std::int64_t, std::int64_t)> rec = [&](std::int64_t rest,
                                                                    std::int64_t cap) {
        if (rest == 0) {
            out.push_back(current);
            return;
        }
        for (std::int64_t part = std::min(rest, cap); part >= 1; --part) {
            current.push_back(part);
            rec(rest - part, part);
            current.pop_back();
        }
    };
    rec(n, n);
    return out;
}

}  // namespace oracle
