/**
 * @file error.hpp
 * @brief Error codes and the exception type raised throughout the library.
 */
#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace kup {

/// Every failure raised by the library carries one of these codes.
enum class Errc {
    DivisionByZero,
    ConductorOverflow,
    NotADivisor,
    ParseError,
    ArityMismatch,
    DimensionMismatch,
    IndexOverflow,
    NotAGroup,
    NotPrimitive,
    DegenerateIntegralSpace,
    NormalizationFailure,
    IntegralFailure,
    NotGaugeTransform,
    NotInverse,
    CocycleIdentityFails,
    AxiomFailure,
    SyntaxError,
    DuplicatePoint,
    OrphanPoint,
    BadRotationGrain,
    NotAdmissible,
    BadParity,
    NotCoprime,
    BadParameters,
};

constexpr std::string_view errc_name(Errc c) noexcept {
    switch (c) {
        case Errc::DivisionByZero: return "DivisionByZero";
        case Errc::ConductorOverflow: return "ConductorOverflow";
        case Errc::NotADivisor: return "NotADivisor";
        case Errc::ParseError: return "ParseError";
        case Errc::ArityMismatch: return "ArityMismatch";
        case Errc::DimensionMismatch: return "DimensionMismatch";
        case Errc::IndexOverflow: return "IndexOverflow";
        case Errc::NotAGroup: return "NotAGroup";
        case Errc::NotPrimitive: return "NotPrimitive";
        case Errc::DegenerateIntegralSpace: return "DegenerateIntegralSpace";
        case Errc::NormalizationFailure: return "NormalizationFailure";
        case Errc::IntegralFailure: return "IntegralFailure";
        case Errc::NotGaugeTransform: return "NotGaugeTransform";
        case Errc::NotInverse: return "NotInverse";
        case Errc::CocycleIdentityFails: return "CocycleIdentityFails";
        case Errc::AxiomFailure: return "AxiomFailure";
        case Errc::SyntaxError: return "SyntaxError";
        case Errc::DuplicatePoint: return "DuplicatePoint";
        case Errc::OrphanPoint: return "OrphanPoint";
        case Errc::BadRotationGrain: return "BadRotationGrain";
        case Errc::NotAdmissible: return "NotAdmissible";
        case Errc::BadParity: return "BadParity";
        case Errc::NotCoprime: return "NotCoprime";
        case Errc::BadParameters: return "BadParameters";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& detail)
        : std::runtime_error(std::string(errc_name(code)) + ": " + detail), code_(code) {}

    [[nodiscard]] Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& detail) { throw Error(code, detail); }

}  // namespace kup
