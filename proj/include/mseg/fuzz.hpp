#pragma once

// Deterministic instance generation and the randomized cross-check battery.
//
// All draws go through mt19937_64, which the standard pins down bit for bit,
// so a (seed, trial) pair reproduces the same instance on any platform. Each
// trial draws its own engine, which keeps trials independent and makes the
// report a pure function of seed and flags.

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "mseg/core.hpp"
#include "mseg/parser.hpp"

namespace mseg::fuzz {

std::uint64_t splitmix64(std::uint64_t& state);
std::uint64_t trial_seed(std::uint64_t base, std::int64_t trial);

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }
    // uniform in [0, k); modulo bias is irrelevant at these ranges
    std::int64_t below(std::int64_t k) {
        return k <= 1 ? 0 : static_cast<std::int64_t>(next() % static_cast<std::uint64_t>(k));
    }
    std::int64_t range(std::int64_t lo, std::int64_t hi) { return lo + below(hi - lo + 1); }
    bool coin() { return (next() & 1) != 0; }

private:
    std::mt19937_64 engine_;
};

struct GeneratorOptions {
    std::int64_t max_r = 6;
    std::int64_t max_l = 4;
    bool require_even_degree = false;
    bool require_generic = true;
};

// 1-3 self-dual lines (degree 1-3, random sign) plus 0-2 partnered pairs.
LineTable random_line_table(Rng& rng);

// Random segment on any declared line, length 1..max_l, exponent in
// {-1, -1/2, 0, 1/2, 1}.
Segment random_segment(Rng& rng, const LineTable& table, std::int64_t max_l);

// Rejection-samples until the options are met.
Multisegment random_multisegment(Rng& rng, const GeneratorOptions& options);
Multisegment random_multisegment_seeded(std::uint64_t seed, const GeneratorOptions& options);

// Random valid syntax tree, for parser round-trip testing.
dsl::SourceFile random_source_file(Rng& rng);

// DSL text reproducing the instance under the given binding name.
std::string to_dsl(const Multisegment& pi, std::string_view pi_name);

struct Violation {
    std::int64_t trial = 0;
    std::string check;
    std::string detail;
    std::string instance;  // DSL echo for reproduction
};

struct BatteryStats {
    std::int64_t even_degree = 0;
    std::int64_t gl_distinguished = 0;
    std::int64_t h_distinguished = 0;
    std::int64_t condition_a = 0;
};

struct FuzzReport {
    std::uint64_t seed = 0;
    std::int64_t trials = 0;
    GeneratorOptions options;
    BatteryStats stats;
    std::vector<Violation> violations;
};

// One generic instance per trial, run through the cross-check battery:
// classifier vs oracle, corollary and implication checks, the translation
// bridge, witness soundness and invariance under permutation and the
// involution. Any violation is a bug in the build, never in the input.
FuzzReport run_battery(std::uint64_t seed, std::int64_t trials, const GeneratorOptions& options);

}  // namespace mseg::fuzz
