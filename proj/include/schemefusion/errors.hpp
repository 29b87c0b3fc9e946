#pragma once

#include <stdexcept>
#include <string>

namespace schemefusion {

// Every domain failure carries a stable machine-readable code plus a
// human-readable message.  The CLI maps the code straight into its JSON
// error object; library callers can switch on code() without parsing text.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}

    const std::string& code() const { return code_; }

private:
    std::string code_;
};

namespace errc {
inline constexpr const char* AxiomViolation = "AxiomViolation";
inline constexpr const char* NonConstantCoefficient = "NonConstantCoefficient";
inline constexpr const char* OrderLimitExceeded = "OrderLimitExceeded";
inline constexpr const char* UnknownName = "UnknownName";
inline constexpr const char* BadParameter = "BadParameter";
inline constexpr const char* MalformedGraph6 = "MalformedGraph6";
inline constexpr const char* MalformedInput = "MalformedInput";
inline constexpr const char* IrreducibleCubicOrHigher = "IrreducibleCubicOrHigher";
inline constexpr const char* MixedRadicands = "MixedRadicands";
inline constexpr const char* ComplexUnordered = "ComplexUnordered";
inline constexpr const char* DivisionByZero = "DivisionByZero";
inline constexpr const char* RankTooLarge = "RankTooLarge";
inline constexpr const char* InternalDisagreement = "InternalDisagreement";
inline constexpr const char* PartitionMismatch = "PartitionMismatch";
inline constexpr const char* NotAFusion = "NotAFusion";
inline constexpr const char* CountingIdentityViolated = "CountingIdentityViolated";
inline constexpr const char* DegenerateSpectrum = "DegenerateSpectrum";
}  // namespace errc

}  // namespace schemefusion
