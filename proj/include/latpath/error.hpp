#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace latpath {

enum class Errc {
    // series kernel
    NonUnitConstantTerm,
    NonzeroInnerConstant,
    BadConstantTerm,
    InexactDivision,
    SingularWithinPrecision,
    IncompatibleFields,
    // boundaries and enumerators
    InvalidBoundary,
    UnsupportedShape,
    SlopeConditionViolated,
    TooLarge,
    PreconditionViolated,
    ResidualNonzero,
    // converter
    NonRationalOutput,
    BranchResidualNonzero,
    PrecisionFault,
    OracleMismatch,
    // certifier
    InsufficientOrder,
    // front end
    ParseError,
};

constexpr std::string_view errc_name(Errc c) noexcept {
    switch (c) {
        case Errc::NonUnitConstantTerm: return "NonUnitConstantTerm";
        case Errc::NonzeroInnerConstant: return "NonzeroInnerConstant";
        case Errc::BadConstantTerm: return "BadConstantTerm";
        case Errc::InexactDivision: return "InexactDivision";
        case Errc::SingularWithinPrecision: return "SingularWithinPrecision";
        case Errc::IncompatibleFields: return "IncompatibleFields";
        case Errc::InvalidBoundary: return "InvalidBoundary";
        case Errc::UnsupportedShape: return "UnsupportedShape";
        case Errc::SlopeConditionViolated: return "SlopeConditionViolated";
        case Errc::TooLarge: return "TooLarge";
        case Errc::PreconditionViolated: return "PreconditionViolated";
        case Errc::ResidualNonzero: return "ResidualNonzero";
        case Errc::NonRationalOutput: return "NonRationalOutput";
        case Errc::BranchResidualNonzero: return "BranchResidualNonzero";
        case Errc::PrecisionFault: return "PrecisionFault";
        case Errc::OracleMismatch: return "OracleMismatch";
        case Errc::InsufficientOrder: return "InsufficientOrder";
        case Errc::ParseError: return "ParseError";
    }
    return "Unknown";
}

/// Every failure raised by the library. `index()` carries the offending
/// position when one exists (first failing order, counterexample index).
class Error : public std::runtime_error {
   public:
    Error(Errc code, const std::string& what, std::optional<std::int64_t> index = std::nullopt)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code), index_(index) {}

    Errc code() const noexcept { return code_; }
    std::optional<std::int64_t> index() const noexcept { return index_; }

   private:
    Errc code_;
    std::optional<std::int64_t> index_;
};

}  // namespace latpath
