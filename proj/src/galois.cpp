#include "mseg/galois.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "mseg/generic.hpp"

namespace mseg {

WDConstituent sigma(const WDConstituent& c, const LineTable& table) {
    return WDConstituent{table.at(c.line).sigma_partner, c.sp_length, -c.exponent};
}

std::int64_t WDParameter::total_dimension() const {
    std::int64_t dim = 0;
    for (const auto& [c, mult] : constituents) dim += mult * c.dimension(table);
    return dim;
}

WDParameter to_wd(const Multisegment& pi) {
    std::map<WDConstituent, std::int64_t> counts;
    for (const Segment& seg : pi.segments)
        counts[WDConstituent{seg.line(), seg.length, seg.exponent()}]++;
    WDParameter out{pi.table, {}};
    out.constituents.assign(counts.begin(), counts.end());
    return out;
}

namespace {

// sign of the invariant pairing on a self-dual constituent; pre: self-dual
int constituent_sign(const WDConstituent& c, const LineTable& table) {
    return segment_sign(c.as_segment(), table).value();
}

std::map<WDConstituent, std::int64_t> count_map(const WDParameter& m) {
    std::map<WDConstituent, std::int64_t> counts;
    for (const auto& [c, mult] : m.constituents) counts[c] += mult;
    return counts;
}

}  // namespace

SelfDualDecomposition decompose(const WDParameter& m) {
    const auto counts = count_map(m);
    SelfDualDecomposition out;
    for (const auto& [c, mult] : counts) {
        const WDConstituent dual = sigma(c, m.table);
        if (dual == c) {
            (constituent_sign(c, m.table) == 1 ? out.i_plus : out.i_minus).emplace_back(c, mult);
        } else if (c < dual) {
            auto it = counts.find(dual);
            if (it == counts.end() || it->second != mult)
                fail(errc::not_conjugate_self_dual,
                     "constituent on line '" + c.line + "' has no matching conjugate-dual orbit");
            out.i_zero.push_back({SelfDualDecomposition::Entry{c, mult},
                                  SelfDualDecomposition::Entry{dual, mult}});
        } else if (counts.find(dual) == counts.end()) {
            fail(errc::not_conjugate_self_dual,
                 "constituent on line '" + c.line + "' has no matching conjugate-dual orbit");
        }
    }
    return out;
}

EtaReport eta_trivial(const WDParameter& m) {
    const SelfDualDecomposition dec = decompose(m);
    EtaReport out;
    out.component_rank = dec.i_plus.size();
    for (const auto& [c, mult] : dec.i_plus) {
        (void)mult;  // eta sees only the dimension, never the multiplicity
        const int value = c.dimension(m.table) % 2 == 0 ? 1 : -1;
        out.values.emplace_back(c, value);
        if (value == -1) out.trivial = false;
    }
    return out;
}

bool is_conjugate_orthogonal(const WDParameter& m) {
    const auto counts = count_map(m);
    for (const auto& [c, mult] : counts) {
        const WDConstituent dual = sigma(c, m.table);
        if (dual == c) {
            // a conjugate-symplectic constituent carries a symplectic
            // multiplicity form, which needs even multiplicity
            if (constituent_sign(c, m.table) == -1 && mult % 2 != 0) return false;
        } else {
            auto it = counts.find(dual);
            if (it == counts.end() || it->second != mult) return false;
        }
    }
    return true;
}

bool bc_exists(const WDParameter& m) {
    if (m.total_dimension() % 2 != 0)
        fail(errc::odd_dimension,
             "total dimension " + std::to_string(m.total_dimension()) + " is odd");
    return is_conjugate_orthogonal(m);
}

bool condition_a(const Multisegment& pi) {
    if (!is_generic(pi).generic)
        fail(errc::not_generic, "multisegment is not generic");
    if (pi.total_degree() % 2 != 0)
        fail(errc::odd_total_degree,
             "total degree " + std::to_string(pi.total_degree()) + " is odd");
    const WDParameter m = to_wd(pi);
    if (!bc_exists(m)) return false;
    return eta_trivial(m).trivial;
}

MainTheoremCheck main_theorem_check(const Multisegment& pi) {
    MainTheoremCheck out;
    out.a = condition_a(pi);
    out.b = classify_h(pi).distinguished;
    out.consistent = !(out.a && !out.b);
    return out;
}

ConditionAWitness condition_a_witness(const Multisegment& pi) {
    if (!condition_a(pi))
        fail(errc::condition_a_fails, "multisegment does not satisfy the base-change condition");

    std::map<Segment, std::vector<std::size_t>> classes;
    for (std::size_t idx = 0; idx < pi.segments.size(); ++idx)
        classes[pi.segments[idx]].push_back(idx);

    ConditionAWitness out;
    for (const auto& [seg, idxs] : classes) {
        const Segment dual = sigma(seg, pi.table);
        if (dual == seg) {
            if (segment_sign(seg, pi.table).value() == -1) {
                // even multiplicity is guaranteed by conjugate-orthogonality
                for (std::size_t k = 0; k + 1 < idxs.size(); k += 2)
                    out.symplectic_pairs.emplace_back(idxs[k], idxs[k + 1]);
            } else {
                // even ambient degree is guaranteed by trivial eta
                for (std::size_t idx : idxs) out.orthogonal_singletons.push_back(idx);
            }
        } else if (seg < dual) {
            const auto& partner = classes.at(dual);
            for (std::size_t k = 0; k < idxs.size(); ++k)
                out.sigma_pairs.emplace_back(idxs[k], partner[k]);
        }
    }
    std::sort(out.sigma_pairs.begin(), out.sigma_pairs.end());
    std::sort(out.symplectic_pairs.begin(), out.symplectic_pairs.end());
    std::sort(out.orthogonal_singletons.begin(), out.orthogonal_singletons.end());
    return out;
}

}  // namespace mseg
