#pragma once

// Genericity of a multisegment via the linked-segment criterion.
//
// Two segments on the same line are linked when an integer d with
// max{1, l_i - l_j + 1} <= d <= l_i makes the twist condition
// e_i = e_j + d + (l_j - l_i)/2 hold; a multisegment is generic exactly when
// no ordered pair of its segments is linked.

#include <cstddef>
#include <cstdint>
#include <optional>

#include "mseg/core.hpp"

namespace mseg {

struct LinkWitness {
    std::size_t i = 0;   // segment indices into the multisegment
    std::size_t j = 0;
    std::int64_t d = 0;  // the witnessing twist offset
};

struct GenericityResult {
    bool generic = true;
    std::optional<LinkWitness> witness;  // present exactly when not generic
};

GenericityResult is_generic(const Multisegment& pi);

}  // namespace mseg
