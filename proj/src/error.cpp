#include "idens/error.hpp"
#include "idens/rational.hpp"

#include <numeric>

namespace idens {

std::string_view to_string(Errc code) noexcept {
    switch (code) {
        case Errc::NotPrime: return "NotPrime";
        case Errc::EvenCharacteristic: return "EvenCharacteristic";
        case Errc::TooLarge: return "TooLarge";
        case Errc::DivisionByZero: return "DivisionByZero";
        case Errc::MixedFields: return "MixedFields";
        case Errc::SingularMatrix: return "SingularMatrix";
        case Errc::NoSuchInvolution: return "NoSuchInvolution";
        case Errc::NotS3: return "NotS3";
        case Errc::NotCoreFree: return "NotCoreFree";
        case Errc::WrongCharacteristic: return "WrongCharacteristic";
        case Errc::WrongCongruence: return "WrongCongruence";
        case Errc::UnexpectedDegree: return "UnexpectedDegree";
        case Errc::BudgetExceeded: return "BudgetExceeded";
        case Errc::SeedNotClique: return "SeedNotClique";
        case Errc::UnsupportedCase: return "UnsupportedCase";
        case Errc::InvalidArgument: return "InvalidArgument";
        case Errc::InvariantViolation: return "InvariantViolation";
    }
    return "Unknown";
}

Error::Error(Errc code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

void fail(Errc code, const std::string& message) { throw Error(code, message); }

Rational::Rational(std::int64_t num, std::int64_t den) {
    require(den != 0, Errc::DivisionByZero, "rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const std::int64_t g = std::gcd(num, den);
    num_ = num / g;
    den_ = den / g;
}

std::string Rational::str() const { return std::to_string(num_) + "/" + std::to_string(den_); }

Rational Rational::parse(std::string_view text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string_view::npos) return Rational(std::stoll(std::string(text)));
        return Rational(std::stoll(std::string(text.substr(0, slash))),
                        std::stoll(std::string(text.substr(slash + 1))));
    } catch (const std::logic_error&) {
        fail(Errc::InvalidArgument, "not a rational: " + std::string(text));
    }
}

Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_, a.den_ * b.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return a.num_ * b.den_ <=> b.num_ * a.den_;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace idens
