#pragma once

#include <stdexcept>
#include <string>

namespace mseg {

// Error codes cover rejected input, violated operation preconditions and
// internal cross-check failures. The CLI maps the first two kinds to exit
// code 2 and the internal kind to exit code 3; exit 3 must never happen in
// a correct build.
enum class errc {
    // line table validation
    dangling_partner,
    asymmetric_partner,
    sign_on_paired_line,
    missing_sign_on_self_dual_line,
    degree_mismatch,

    // structural preconditions
    invalid_s_matrix,
    partition_mismatch,
    odd_total_degree,
    odd_dimension,
    not_generic,
    not_conjugate_self_dual,
    condition_a_fails,
    instance_too_large,

    // input handling
    syntax_error,
    duplicate_name,
    dangling_line,
    unknown_binding,
    invalid_argument,
    io_error,

    // internal invariant failures
    case_coverage_failure,
    cross_check_failure,
};

const char* errc_name(errc code);
bool errc_is_internal(errc code);

class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    errc code() const { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& message) {
    throw Error(code, message);
}

}  // namespace mseg
