#pragma once

// Distinction classifiers for generic multisegments.
//
// A generic multisegment is distinguished (for the split form, or for the
// quaternionic inner form) exactly when its segments can be partitioned into
// conjugate-dual pairs and singletons that are themselves distinguished. The
// fast decision reduces the matching to counting: the conjugate-dual relation
// is an involution on isomorphism classes, so a class either pairs against
// its image class (forcing equal counts), or is its own image, where a
// failing singleton predicate forces an even count and a passing one allows
// any count. A brute-force enumeration over all pair/singleton partitions
// serves as the independent oracle for that reduction.

#include <cstddef>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "mseg/core.hpp"

namespace mseg {

enum class DistinctionMode { gl, h };

inline constexpr std::size_t kDefaultOracleBound = 8;

// Square-integrable case: distinguished for the split form iff the invariant
// pairing has sign +1.
bool esq_gl_distinguished(const Segment& seg, const LineTable& table);

// Inner form case: additionally the ambient degree must be even.
bool esq_h_distinguished(const Segment& seg, const LineTable& table);

struct PairingWitness {
    struct Singleton {
        std::size_t index = 0;
        DistinctionMode certificate = DistinctionMode::gl;
        friend bool operator==(const Singleton&, const Singleton&) = default;
    };
    // sigma(first) is isomorphic to second for every pair
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    std::vector<Singleton> singletons;
};

struct ClassificationResult {
    bool distinguished = false;
    std::optional<PairingWitness> witness;  // present exactly when distinguished
};

// throws not_generic
ClassificationResult classify_gl(const Multisegment& pi);
// throws not_generic, odd_total_degree
ClassificationResult classify_h(const Multisegment& pi);

// Exhaustive enumeration of all partitions into unordered pairs plus
// singletons; true iff some partition has every pair conjugate-dual-matched
// and every singleton passing the predicate. throws instance_too_large
bool brute_force_classify(const Multisegment& pi,
                          const std::function<bool(const Segment&)>& singleton_pred,
                          std::size_t max_r = kDefaultOracleBound);
bool brute_force_classify(const Multisegment& pi, DistinctionMode mode,
                          std::size_t max_r = kDefaultOracleBound);

// Necessary condition for distinction: the segment multiset is stable under
// the conjugate-dual involution.
bool check_conjugate_self_dual(const Multisegment& pi);

// Re-validates a witness: pairs and singletons partition the index set, each
// pair is conjugate-dual-matched, each singleton passes its certificate's
// predicate (and the mode's predicate must not be weaker than the cert's).
bool validate_pairing_witness(const Multisegment& pi, const PairingWitness& witness,
                              DistinctionMode mode);

}  // namespace mseg
