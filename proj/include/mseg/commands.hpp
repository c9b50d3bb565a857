#pragma once

// Command layer shared by the CLI binary and the test suite: every command is
// a pure function of its options and the input text, producing a JSON report
// and an exit code (0 success, 2 input error, 3 internal invariant failure).

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "mseg/distinction.hpp"

namespace mseg::cli {

inline constexpr std::string_view kVersion = "0.1.0";

struct Options {
    std::string command;  // classify|generic|jacquet|cosets|bc|eta|check-main|fuzz
    std::string pi_name;  // empty selects the sole binding
    DistinctionMode mode = DistinctionMode::gl;
    std::vector<std::int64_t> partition;
    std::int64_t trials = 1000;
    std::uint64_t seed = 1;
    std::int64_t max_r = 6;
    std::int64_t max_l = 4;
};

struct Outcome {
    int exit_code = 0;
    nlohmann::json report;
};

// input_text is the DSL source for the commands that consume one; ignored by
// `cosets` and `fuzz`.
Outcome run(const Options& options, std::string_view input_text);

}  // namespace mseg::cli
