#pragma once

#include <stdexcept>
#include <string>

namespace dgv {

enum class errc {
    parse_error,
    duplicate_id,
    degree_mismatch,
    weight_mismatch,
    truncation_violation,
    differential_not_square_zero,
    nonpositive_weight,
    odd_generator,
    not_in_minus_part,
    weight_overflow,
    window_exceeded,
    form_invariant_violation,
    casimir_not_scalar,
    degenerate_form,
    critical_level,
    missing_level,
    unknown_generator,
    unknown_central,
    bad_argument,
};

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::parse_error: return "ParseError";
        case errc::duplicate_id: return "DuplicateId";
        case errc::degree_mismatch: return "DegreeMismatch";
        case errc::weight_mismatch: return "WeightMismatch";
        case errc::truncation_violation: return "TruncationViolation";
        case errc::differential_not_square_zero: return "DifferentialNotSquareZero";
        case errc::nonpositive_weight: return "NonPositiveWeight";
        case errc::odd_generator: return "OddGenerator";
        case errc::not_in_minus_part: return "NotInMinusPart";
        case errc::weight_overflow: return "WeightOverflow";
        case errc::window_exceeded: return "WindowExceeded";
        case errc::form_invariant_violation: return "FormInvariantViolation";
        case errc::casimir_not_scalar: return "NotScalar";
        case errc::degenerate_form: return "Degenerate";
        case errc::critical_level: return "CriticalLevel";
        case errc::missing_level: return "MissingLevel";
        case errc::unknown_generator: return "UnknownGenerator";
        case errc::unknown_central: return "UnknownCentral";
        case errc::bad_argument: return "BadArgument";
    }
    return "UnknownError";
}

class error : public std::runtime_error {
public:
    error(errc code, const std::string& message)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message),
          code_(code) {}

    errc code() const { return code_; }

private:
    errc code_;
};

}  // namespace dgv
