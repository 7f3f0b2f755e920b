#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace spair {

/// Failure categories raised by the toolkit. The CLI maps these onto exit codes.
enum class Errc {
    NotPrime,
    DivisionByZero,
    FieldMismatch,
    NoSuchRoots,
    NoCubeRoot,
    NotCoprime,
    ZeroPolynomial,
    NotDivisor,
    NotUnionOfCosets,
    LengthMismatch,
    LengthTooShort,
    BudgetExceeded,
    StrategyInapplicable,
    DegenerateCode,
    OutOfScope,
    NotRepeatedRoot,
    ZeroCode,
    BadParameter,
    FieldTooLarge,
    MalformedSpec,
    VerificationFailed,
};

constexpr std::string_view to_string(Errc e) {
    switch (e) {
        case Errc::NotPrime: return "NotPrime";
        case Errc::DivisionByZero: return "DivisionByZero";
        case Errc::FieldMismatch: return "FieldMismatch";
        case Errc::NoSuchRoots: return "NoSuchRoots";
        case Errc::NoCubeRoot: return "NoCubeRoot";
        case Errc::NotCoprime: return "NotCoprime";
        case Errc::ZeroPolynomial: return "ZeroPolynomial";
        case Errc::NotDivisor: return "NotDivisor";
        case Errc::NotUnionOfCosets: return "NotUnionOfCosets";
        case Errc::LengthMismatch: return "LengthMismatch";
        case Errc::LengthTooShort: return "LengthTooShort";
        case Errc::BudgetExceeded: return "BudgetExceeded";
        case Errc::StrategyInapplicable: return "StrategyInapplicable";
        case Errc::DegenerateCode: return "DegenerateCode";
        case Errc::OutOfScope: return "OutOfScope";
        case Errc::NotRepeatedRoot: return "NotRepeatedRoot";
        case Errc::ZeroCode: return "ZeroCode";
        case Errc::BadParameter: return "BadParameter";
        case Errc::FieldTooLarge: return "FieldTooLarge";
        case Errc::MalformedSpec: return "MalformedSpec";
        case Errc::VerificationFailed: return "VerificationFailed";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
   public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

   private:
    Errc code_;
};

}  // namespace spair
