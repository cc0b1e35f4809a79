// Error taxonomy shared across the library.
#pragma once

#include <stdexcept>
#include <string>

namespace markdiv {

enum class errc {
    non_square,
    not_hermitian,
    dimension_mismatch,
    k_out_of_range,
    c_out_of_range,
    length_not_square,
    not_hermiticity_preserving,
    trace_not_preserved,
    precondition_violation,
    dim_too_small,
    bisection_failure,
    no_violation_found,
    degenerate_spectrum,
    not_in_class,
    zero_singular_value,
    parse_error,
    not_a_channel,
    numerical_failure,
    unknown_example,
};

const char* errc_name(errc code) noexcept;

class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw Error(code, what); }

} // namespace markdiv
