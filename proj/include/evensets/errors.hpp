#ifndef EVENSETS_ERRORS_HPP
#define EVENSETS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace evensets {

/// Domain error with a stable machine-readable code.
///
/// Codes in use: NotMinus4, NotDisjoint, NotTwoDivisible, DuplicateCurve,
/// IdentityViolation, NonBasisContraction, RegimeViolation,
/// DegenerateDenominator, NotAFiber, NotContractible, UnrecognizedType,
/// BudgetExceeded, NotInTable, OddDegree, ParseError, BoundsTooLarge,
/// UnknownEntry, BadInput.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(code + ": " + message), code_(std::move(code)) {}

    const std::string& code() const { return code_; }

private:
    std::string code_;
};

[[noreturn]] inline void fail(std::string code, const std::string& message) {
    throw Error(std::move(code), message);
}

} // namespace evensets

#endif
