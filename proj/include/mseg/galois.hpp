#pragma once

// Formal Weil-Deligne side: parameters as multisets of irreducible
// constituents with multiplicities, the conjugate self-dual decomposition,
// the component-group character eta, the base-change existence criterion and
// the implication harness tying all of it back to the distinction
// classifiers.

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "mseg/core.hpp"
#include "mseg/distinction.hpp"

namespace mseg {

struct WDConstituent {
    std::string line;
    std::int64_t sp_length = 1;  // dimension of the attached special representation
    HalfInt exponent;

    std::int64_t dimension(const LineTable& table) const {
        return sp_length * table.at(line).degree;
    }
    Segment as_segment() const { return Segment{Cuspidal{line, exponent}, sp_length}; }

    friend auto operator<=>(const WDConstituent&, const WDConstituent&) = default;
};

WDConstituent sigma(const WDConstituent& c, const LineTable& table);

struct WDParameter {
    LineTable table;
    // sorted by constituent; every multiplicity >= 1
    std::vector<std::pair<WDConstituent, std::int64_t>> constituents;

    std::int64_t total_dimension() const;
};

// Translation from the multisegment side; isomorphic segments aggregate into
// one constituent with a multiplicity.
WDParameter to_wd(const Multisegment& pi);

struct SelfDualDecomposition {
    using Entry = std::pair<WDConstituent, std::int64_t>;
    std::vector<Entry> i_plus;                  // conjugate-orthogonal constituents
    std::vector<Entry> i_minus;                 // conjugate-symplectic constituents
    std::vector<std::array<Entry, 2>> i_zero;   // non-self-dual orbits, recorded once
};

// throws not_conjugate_self_dual when the multiset is not stable under the
// involution (the decomposition presupposes a conjugate self-dual parameter)
SelfDualDecomposition decompose(const WDParameter& m);

struct EtaReport {
    bool trivial = true;
    std::size_t component_rank = 0;  // the component group is (Z/2Z)^component_rank
    // one entry per conjugate-orthogonal constituent: its dimension and the
    // character value (-1)^dimension
    std::vector<std::pair<WDConstituent, int>> values;
};

// eta is trivial iff every conjugate-orthogonal constituent has even
// dimension; multiplicities play no role. propagates not_conjugate_self_dual
EtaReport eta_trivial(const WDParameter& m);

// Stable under the involution and every conjugate-symplectic constituent has
// even multiplicity; never throws.
bool is_conjugate_orthogonal(const WDParameter& m);

// Existence of a base-change preimage; equivalent to conjugate-orthogonality.
// throws odd_dimension
bool bc_exists(const WDParameter& m);

// The parameter admits a base-change preimage that is generic for every
// non-degenerate character: preimage exists and eta is trivial.
// throws not_generic, odd_total_degree
bool condition_a(const Multisegment& pi);

struct MainTheoremCheck {
    bool a = false;
    bool b = false;
    bool consistent = true;  // !(a && !b)
};

// throws not_generic, odd_total_degree
MainTheoremCheck main_theorem_check(const Multisegment& pi);

struct ConditionAWitness {
    // non-self-dual segments matched against their conjugate-dual partners
    std::vector<std::pair<std::size_t, std::size_t>> sigma_pairs;
    // conjugate-symplectic segments paired with isomorphic copies
    std::vector<std::pair<std::size_t, std::size_t>> symplectic_pairs;
    // conjugate-orthogonal leftovers; even ambient degree is guaranteed
    std::vector<std::size_t> orthogonal_singletons;
};

// throws condition_a_fails (and whatever condition_a throws)
ConditionAWitness condition_a_witness(const Multisegment& pi);

}  // namespace mseg
