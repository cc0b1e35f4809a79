#include "markdiv/errors.hpp"

namespace markdiv {

const char* errc_name(errc code) noexcept {
    switch (code) {
        case errc::non_square: return "NonSquare";
        case errc::not_hermitian: return "NotHermitian";
        case errc::dimension_mismatch: return "DimensionMismatch";
        case errc::k_out_of_range: return "KOutOfRange";
        case errc::c_out_of_range: return "COutOfRange";
        case errc::length_not_square: return "LengthNotSquare";
        case errc::not_hermiticity_preserving: return "NotHermiticityPreserving";
        case errc::trace_not_preserved: return "TraceNotPreserved";
        case errc::precondition_violation: return "PreconditionViolation";
        case errc::dim_too_small: return "DimTooSmall";
        case errc::bisection_failure: return "BisectionFailure";
        case errc::no_violation_found: return "NoViolationFound";
        case errc::degenerate_spectrum: return "DegenerateSpectrum";
        case errc::not_in_class: return "NotInClass";
        case errc::zero_singular_value: return "ZeroSingularValue";
        case errc::parse_error: return "ParseError";
        case errc::not_a_channel: return "NotAChannel";
        case errc::numerical_failure: return "NumericalFailure";
        case errc::unknown_example: return "UnknownExample";
    }
    return "UnknownError";
}

} // namespace markdiv
