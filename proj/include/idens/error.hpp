#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace idens {

enum class Errc {
    NotPrime,
    EvenCharacteristic,
    TooLarge,
    DivisionByZero,
    MixedFields,
    SingularMatrix,
    NoSuchInvolution,
    NotS3,
    NotCoreFree,
    WrongCharacteristic,
    WrongCongruence,
    UnexpectedDegree,
    BudgetExceeded,
    SeedNotClique,
    UnsupportedCase,
    InvalidArgument,
    InvariantViolation,
};

std::string_view to_string(Errc code) noexcept;

/// Every failure raised by the library carries one of the codes above so that
/// batch drivers can report it per q without string matching.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& message);

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

[[noreturn]] void fail(Errc code, const std::string& message);

inline void require(bool condition, Errc code, const std::string& message) {
    if (!condition) fail(code, message);
}

}  // namespace idens
