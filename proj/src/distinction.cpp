#include "mseg/distinction.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "mseg/generic.hpp"

namespace mseg {

bool esq_gl_distinguished(const Segment& seg, const LineTable& table) {
    return segment_sign(seg, table) == 1;
}

bool esq_h_distinguished(const Segment& seg, const LineTable& table) {
    return seg.ambient_degree(table) % 2 == 0 && esq_gl_distinguished(seg, table);
}

namespace {

bool singleton_ok(const Segment& seg, const LineTable& table, DistinctionMode mode) {
    return mode == DistinctionMode::gl ? esq_gl_distinguished(seg, table)
                                       : esq_h_distinguished(seg, table);
}

ClassificationResult classify_impl(const Multisegment& pi, DistinctionMode mode) {
    const GenericityResult gen = is_generic(pi);
    if (!gen.generic)
        fail(errc::not_generic, "multisegment is not generic; the classification does not apply");
    if (mode == DistinctionMode::h && pi.total_degree() % 2 != 0)
        fail(errc::odd_total_degree,
             "total degree " + std::to_string(pi.total_degree()) + " is odd");

    std::map<Segment, std::vector<std::size_t>> classes;
    for (std::size_t idx = 0; idx < pi.segments.size(); ++idx)
        classes[pi.segments[idx]].push_back(idx);

    PairingWitness witness;
    for (const auto& [seg, idxs] : classes) {
        const Segment dual = sigma(seg, pi.table);
        if (dual == seg) {
            if (singleton_ok(seg, pi.table, mode)) {
                for (std::size_t idx : idxs)
                    witness.singletons.push_back(PairingWitness::Singleton{idx, mode});
            } else {
                // no distinguished singleton in this class, so all must pair
                // internally
                if (idxs.size() % 2 != 0) return {false, std::nullopt};
                for (std::size_t k = 0; k + 1 < idxs.size(); k += 2)
                    witness.pairs.emplace_back(idxs[k], idxs[k + 1]);
            }
        } else if (seg < dual) {
            // leftovers of a non-self-dual class can never be distinguished
            // singletons, so the class must pair off against its image class
            auto it = classes.find(dual);
            if (it == classes.end() || it->second.size() != idxs.size())
                return {false, std::nullopt};
            for (std::size_t k = 0; k < idxs.size(); ++k)
                witness.pairs.emplace_back(idxs[k], it->second[k]);
        } else {
            // orbit handled when visiting the smaller class, unless it is absent
            if (classes.find(dual) == classes.end()) return {false, std::nullopt};
        }
    }

    std::sort(witness.pairs.begin(), witness.pairs.end());
    std::sort(witness.singletons.begin(), witness.singletons.end(),
              [](const auto& a, const auto& b) { return a.index < b.index; });
    return {true, std::move(witness)};
}

}  // namespace

ClassificationResult classify_gl(const Multisegment& pi) {
    return classify_impl(pi, DistinctionMode::gl);
}

ClassificationResult classify_h(const Multisegment& pi) {
    return classify_impl(pi, DistinctionMode::h);
}

bool brute_force_classify(const Multisegment& pi,
                          const std::function<bool(const Segment&)>& singleton_pred,
                          std::size_t max_r) {
    const std::size_t r = pi.segments.size();
    if (r > max_r)
        fail(errc::instance_too_large, "brute-force oracle bound is " + std::to_string(max_r) +
                                           " but the instance has " + std::to_string(r) +
                                           " segments");
    std::vector<bool> used(r, false);
    const std::function<bool()> go = [&]() -> bool {
        std::size_t a = r;
        for (std::size_t k = 0; k < r; ++k)
            if (!used[k]) {
                a = k;
                break;
            }
        if (a == r) return true;
        used[a] = true;
        if (singleton_pred(pi.segments[a]) && go()) {
            used[a] = false;
            return true;
        }
        const Segment want = sigma(pi.segments[a], pi.table);
        for (std::size_t b = a + 1; b < r; ++b) {
            if (used[b] || pi.segments[b] != want) continue;
            used[b] = true;
            if (go()) {
                used[b] = false;
                used[a] = false;
                return true;
            }
            used[b] = false;
        }
        used[a] = false;
        return false;
    };
    return go();
}

bool brute_force_classify(const Multisegment& pi, DistinctionMode mode, std::size_t max_r) {
    return brute_force_classify(
        pi, [&](const Segment& seg) { return singleton_ok(seg, pi.table, mode); }, max_r);
}

bool check_conjugate_self_dual(const Multisegment& pi) {
    std::map<Segment, std::int64_t> counts;
    for (const Segment& seg : pi.segments) counts[seg]++;
    for (const auto& [seg, count] : counts) {
        auto it = counts.find(sigma(seg, pi.table));
        if (it == counts.end() || it->second != count) return false;
    }
    return true;
}

bool validate_pairing_witness(const Multisegment& pi, const PairingWitness& witness,
                              DistinctionMode mode) {
    const std::size_t r = pi.segments.size();
    std::vector<int> covered(r, 0);
    const auto touch = [&](std::size_t idx) {
        if (idx >= r) return false;
        return ++covered[idx] == 1;
    };
    for (const auto& [a, b] : witness.pairs) {
        if (!touch(a) || !touch(b)) return false;
        if (sigma(pi.segments[a], pi.table) != pi.segments[b]) return false;
    }
    for (const auto& single : witness.singletons) {
        if (!touch(single.index)) return false;
        // an h certificate is acceptable in gl mode, a gl certificate is not
        // acceptable in h mode
        if (mode == DistinctionMode::h && single.certificate != DistinctionMode::h) return false;
        if (!singleton_ok(pi.segments[single.index], pi.table, single.certificate)) return false;
    }
    for (std::size_t idx = 0; idx < r; ++idx)
        if (covered[idx] != 1) return false;
    return true;
}

}  // namespace mseg
