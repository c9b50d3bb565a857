#include "mseg/fuzz.hpp"

#include <algorithm>
#include <string>

#include "mseg/distinction.hpp"
#include "mseg/galois.hpp"
#include "mseg/generic.hpp"

namespace mseg::fuzz {

std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t trial_seed(std::uint64_t base, std::int64_t trial) {
    std::uint64_t state = base + 0x6a09e667f3bcc909ULL * static_cast<std::uint64_t>(trial + 1);
    return splitmix64(state);
}

LineTable random_line_table(Rng& rng) {
    LineTable table;
    static const char* kSelfNames[3] = {"a", "b", "c"};
    static const char* kPairNames[2][2] = {{"x", "xc"}, {"y", "yc"}};

    const std::int64_t self_count = rng.range(1, 3);
    for (std::int64_t k = 0; k < self_count; ++k) {
        CuspidalLine line;
        line.name = kSelfNames[k];
        line.degree = rng.range(1, 3);
        line.sigma_partner = line.name;
        line.self_sign = rng.coin() ? 1 : -1;
        table.add(std::move(line));
    }
    const std::int64_t pair_count = rng.range(0, 2);
    for (std::int64_t k = 0; k < pair_count; ++k) {
        const std::int64_t degree = rng.range(1, 3);
        table.add(CuspidalLine{kPairNames[k][0], degree, kPairNames[k][1], std::nullopt});
        table.add(CuspidalLine{kPairNames[k][1], degree, kPairNames[k][0], std::nullopt});
    }
    return table;
}

Segment random_segment(Rng& rng, const LineTable& table, std::int64_t max_l) {
    std::vector<std::string> names;
    names.reserve(table.lines().size());
    for (const auto& [name, line] : table.lines()) names.push_back(name);
    const std::string& line = names[static_cast<std::size_t>(rng.below(static_cast<std::int64_t>(names.size())))];
    return st(rng.range(1, max_l), line, HalfInt::halves(rng.range(-2, 2)));
}

Multisegment random_multisegment(Rng& rng, const GeneratorOptions& options) {
    for (int attempt = 0; attempt < 100000; ++attempt) {
        Multisegment pi{random_line_table(rng), {}};
        const std::int64_t r = rng.range(1, options.max_r);
        for (std::int64_t k = 0; k < r; ++k)
            pi.segments.push_back(random_segment(rng, pi.table, options.max_l));
        if (options.require_even_degree && pi.total_degree() % 2 != 0) continue;
        if (options.require_generic && !is_generic(pi).generic) continue;
        return pi;
    }
    fail(errc::cross_check_failure, "instance generator exhausted its rejection budget");
}

Multisegment random_multisegment_seeded(std::uint64_t seed, const GeneratorOptions& options) {
    Rng rng(seed);
    return random_multisegment(rng, options);
}

dsl::SourceFile random_source_file(Rng& rng) {
    dsl::SourceFile file;
    const std::int64_t line_count = rng.range(1, 5);
    std::vector<std::string> names;
    for (std::int64_t k = 0; k < line_count; ++k)
        names.push_back("l" + std::to_string(k) + std::string(static_cast<std::size_t>(rng.below(3)), '_'));

    std::vector<std::string> declared;
    for (std::int64_t k = 0; k < line_count; ++k) {
        if (rng.coin() || k + 1 == line_count) {
            CuspidalLine line{names[static_cast<std::size_t>(k)], rng.range(1, 9),
                              names[static_cast<std::size_t>(k)], rng.coin() ? 1 : -1};
            declared.push_back(line.name);
            file.lines.push_back(std::move(line));
        } else {
            const std::int64_t degree = rng.range(1, 9);
            const std::string& first = names[static_cast<std::size_t>(k)];
            const std::string& second = names[static_cast<std::size_t>(k + 1)];
            file.lines.push_back(CuspidalLine{first, degree, second, std::nullopt});
            file.lines.push_back(CuspidalLine{second, degree, first, std::nullopt});
            declared.push_back(first);
            declared.push_back(second);
            ++k;
        }
    }

    const std::int64_t binding_count = rng.range(0, 3);
    for (std::int64_t k = 0; k < binding_count; ++k) {
        dsl::Binding binding;
        binding.name = "p" + std::to_string(k);
        const std::int64_t r = rng.range(1, 5);
        for (std::int64_t s = 0; s < r; ++s) {
            const std::string& line =
                declared[static_cast<std::size_t>(rng.below(static_cast<std::int64_t>(declared.size())))];
            binding.segments.push_back(st(rng.range(1, 7), line, HalfInt::halves(rng.range(-9, 9))));
        }
        file.bindings.push_back(std::move(binding));
    }
    return file;
}

std::string to_dsl(const Multisegment& pi, std::string_view pi_name) {
    dsl::SourceFile file;
    for (const auto& [name, line] : pi.table.lines()) file.lines.push_back(line);
    file.bindings.push_back(dsl::Binding{std::string(pi_name), pi.segments});
    return dsl::print(file);
}

namespace {

Multisegment shuffled(const Multisegment& pi, Rng& rng) {
    Multisegment out = pi;
    for (std::size_t k = out.segments.size(); k > 1; --k)
        std::swap(out.segments[k - 1],
                  out.segments[static_cast<std::size_t>(rng.below(static_cast<std::int64_t>(k)))]);
    return out;
}

}  // namespace

FuzzReport run_battery(std::uint64_t seed, std::int64_t trials, const GeneratorOptions& options) {
    FuzzReport report;
    report.seed = seed;
    report.trials = trials;
    report.options = options;

    for (std::int64_t trial = 0; trial < trials; ++trial) {
        Rng rng(trial_seed(seed, trial));
        const Multisegment pi = random_multisegment(rng, options);
        const bool even = pi.total_degree() % 2 == 0;
        if (even) report.stats.even_degree++;

        const auto flag = [&](const std::string& check, const std::string& detail) {
            report.violations.push_back(Violation{trial, check, detail, to_dsl(pi, "p")});
        };

        const bool oracle_feasible = pi.segments.size() <= kDefaultOracleBound;
        const ClassificationResult gl = classify_gl(pi);
        if (gl.distinguished) report.stats.gl_distinguished++;

        if (oracle_feasible &&
            gl.distinguished != brute_force_classify(pi, DistinctionMode::gl))
            flag("oracle-gl", "fast classifier disagrees with exhaustive pairing search");
        if (gl.distinguished &&
            !validate_pairing_witness(pi, *gl.witness, DistinctionMode::gl))
            flag("witness-gl", "returned witness fails re-validation");

        // the translation bridge: split-form distinction matches
        // conjugate-orthogonality of the parameter
        if (gl.distinguished != is_conjugate_orthogonal(to_wd(pi)))
            flag("bridge", "split-form verdict differs from conjugate-orthogonality");

        if (even) {
            const ClassificationResult h = classify_h(pi);
            if (h.distinguished) report.stats.h_distinguished++;
            if (oracle_feasible &&
                h.distinguished != brute_force_classify(pi, DistinctionMode::h))
                flag("oracle-h", "fast classifier disagrees with exhaustive pairing search");
            if (h.distinguished && !validate_pairing_witness(pi, *h.witness, DistinctionMode::h))
                flag("witness-h", "returned witness fails re-validation");
            if (h.distinguished && !gl.distinguished)
                flag("corollary", "inner-form distinguished but not split-form distinguished");
            if (h.distinguished && !check_conjugate_self_dual(pi))
                flag("self-dual", "distinguished multisegment is not conjugate self-dual");

            const bool a = condition_a(pi);
            if (a) report.stats.condition_a++;
            if (a && !h.distinguished)
                flag("main-theorem", "base-change condition holds but not distinguished");
            if (gl.distinguished != bc_exists(to_wd(pi)))
                flag("bridge-bc", "split-form verdict differs from base-change existence");

            const MainTheoremCheck check = main_theorem_check(pi);
            if (!check.consistent) flag("main-theorem", "consistency flag tripped");
        }

        // verdicts are properties of the multiset, not of the listing order
        const Multisegment reordered = shuffled(pi, rng);
        if (classify_gl(reordered).distinguished != gl.distinguished)
            flag("permutation", "split-form verdict changed under reordering");
        if (is_generic(reordered).generic != is_generic(pi).generic)
            flag("permutation", "genericity changed under reordering");

        const Multisegment conjugate_dual = sigma(pi);
        if (is_generic(conjugate_dual).generic != is_generic(pi).generic)
            flag("involution", "genericity changed under the involution");
        if (classify_gl(conjugate_dual).distinguished != gl.distinguished)
            flag("involution", "split-form verdict changed under the involution");
        if (even && classify_h(conjugate_dual).distinguished != classify_h(pi).distinguished)
            flag("involution", "inner-form verdict changed under the involution");
    }
    return report;
}

}  // namespace mseg::fuzz
