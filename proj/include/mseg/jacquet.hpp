#pragma once

// Jacquet module of a segment along a standard parabolic, in closed form.
//
// Splitting St(l, L, e) along a partition (n_1, ..., n_r) of its ambient
// degree is nonzero exactly when every n_i is a multiple of the line degree,
// in which case factor i is St(k_i, L, e + shift_i) with k_i = n_i / deg(L),
// shift_1 = (l - k_1)/2 and shift_i = -(k_1 + ... + k_{i-1}) + (l - k_i)/2.

#include <cstdint>
#include <vector>

#include "mseg/core.hpp"

namespace mseg {

struct JacquetFactors {
    bool zero = false;
    std::vector<Segment> factors;  // empty when zero
};

// throws partition_mismatch unless lambda has positive parts summing to the
// segment's ambient degree
JacquetFactors jacquet(const Segment& seg, const LineTable& table,
                       const std::vector<std::int64_t>& lambda);

// Cuspidal support of a segment: the multiset (L, e + (l-1)/2 - j) for
// 0 <= j < l, returned sorted.
std::vector<Cuspidal> segment_support(const Segment& seg);

}  // namespace mseg
