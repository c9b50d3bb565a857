#include "mseg/jacquet.hpp"

#include <algorithm>
#include <string>

namespace mseg {

JacquetFactors jacquet(const Segment& seg, const LineTable& table,
                       const std::vector<std::int64_t>& lambda) {
    const std::int64_t deg = table.at(seg.line()).degree;
    const std::int64_t n = seg.ambient_degree(table);
    std::int64_t sum = 0;
    for (std::int64_t part : lambda) {
        if (part < 1) fail(errc::partition_mismatch, "partition parts must be positive");
        sum += part;
    }
    if (sum != n)
        fail(errc::partition_mismatch, "partition sums to " + std::to_string(sum) +
                                           " but the segment lives on degree " + std::to_string(n));

    for (std::int64_t part : lambda)
        if (part % deg != 0) return {true, {}};

    JacquetFactors out;
    out.factors.reserve(lambda.size());
    std::int64_t consumed = 0;  // k_1 + ... + k_{i-1}
    for (std::int64_t part : lambda) {
        const std::int64_t k = part / deg;
        const HalfInt shift = HalfInt::halves(seg.length - k) - HalfInt(consumed);
        out.factors.push_back(st(k, seg.line(), seg.exponent() + shift));
        consumed += k;
    }
    return out;
}

std::vector<Cuspidal> segment_support(const Segment& seg) {
    std::vector<Cuspidal> out;
    out.reserve(static_cast<std::size_t>(seg.length));
    for (std::int64_t j = 0; j < seg.length; ++j)
        out.push_back(Cuspidal{seg.line(), seg.exponent() + HalfInt::halves(seg.length - 1) - HalfInt(j)});
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace mseg
