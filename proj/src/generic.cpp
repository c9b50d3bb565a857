#include "mseg/generic.hpp"

#include <algorithm>

namespace mseg {

GenericityResult is_generic(const Multisegment& pi) {
    const auto& segs = pi.segments;
    for (std::size_t i = 0; i < segs.size(); ++i) {
        for (std::size_t j = 0; j < segs.size(); ++j) {
            if (i == j) continue;
            const Segment& a = segs[i];
            const Segment& b = segs[j];
            // Lines are whole twist orbits, so a twist match across distinct
            // lines is impossible and equal lines make the degrees equal.
            if (a.line() != b.line()) continue;
            // The twist condition pins d = e_i - e_j - (l_j - l_i)/2 exactly;
            // it must come out a (positive) integer in the admissible range.
            const HalfInt required =
                a.exponent() - b.exponent() - HalfInt::halves(b.length - a.length);
            if (!required.is_integer()) continue;
            const std::int64_t d = required.integer_value();
            const std::int64_t lo = std::max<std::int64_t>(1, a.length - b.length + 1);
            if (d < lo || d > a.length) continue;
            return {false, LinkWitness{i, j, d}};
        }
    }
    return {true, std::nullopt};
}

}  // namespace mseg
