#pragma once

// Arithmetic in F_{p^k} for odd p.
//
// Elements are addressed by their canonical code sum(c_i * p^i) in [0, q),
// where c_i are the coefficients in the polynomial basis 1, x, ..., x^{k-1}
// modulo the field's defining polynomial. All file output uses these codes.

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace idens::gfq {

using Code = std::uint32_t;

inline constexpr std::uint64_t kDefaultMaxOrder = std::uint64_t{1} << 20;

/// Exhaustive square-root search is used below this order, Tonelli-Shanks above.
inline constexpr std::uint32_t kExhaustiveSqrtLimit = 10000;

struct FieldSpec {
    std::uint32_t p = 0;
    std::uint32_t k = 0;
    /// Monic defining polynomial, little-endian, k+1 coefficients.
    std::vector<std::uint32_t> modulus;

    std::uint32_t order() const;

    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

bool is_prime(std::uint64_t n);

/// (p, k) with q = p^k, or nullopt when q is not a prime power.
std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power(std::uint64_t q);

/// Irreducibility of a monic polynomial over F_p by trial division with every
/// monic polynomial of degree at most deg/2.
bool is_irreducible(std::span<const std::uint32_t> monic, std::uint32_t p);

/// Deterministic field description: the defining polynomial is the first monic
/// irreducible of degree k when the non-leading coefficients are read as a
/// base-p integer (c_0 least significant) and counted upward from zero.
FieldSpec field_new(std::uint64_t p, std::uint32_t k,
                    std::uint64_t max_order = kDefaultMaxOrder);

class FieldElement;

/// Immutable arithmetic context. Multiplication runs through discrete-log
/// tables built from a schoolbook reference product (poly_mul).
class Field : public std::enable_shared_from_this<Field> {
public:
    static std::shared_ptr<const Field> create(FieldSpec spec);
    static std::shared_ptr<const Field> create(std::uint64_t p, std::uint32_t k);

    const FieldSpec& spec() const noexcept { return spec_; }
    std::uint32_t p() const noexcept { return spec_.p; }
    std::uint32_t k() const noexcept { return spec_.k; }
    std::uint32_t q() const noexcept { return q_; }

    /// Image of an integer in the prime subfield.
    Code from_int(std::int64_t v) const;
    std::vector<std::uint32_t> coeffs(Code a) const;
    Code from_coeffs(std::span<const std::uint32_t> coeffs) const;

    Code add(Code a, Code b) const;
    Code sub(Code a, Code b) const { return add(a, neg(b)); }
    Code neg(Code a) const { return neg_[a]; }
    Code mul(Code a, Code b) const {
        if (a == 0 || b == 0) return 0;
        std::uint32_t e = log_[a] + log_[b];
        if (e >= q_ - 1) e -= q_ - 1;
        return exp_[e];
    }
    Code inv(Code a) const;
    Code div(Code a, Code b) const { return mul(a, inv(b)); }
    Code pow(Code a, std::uint64_t e) const;

    /// Reference product by polynomial multiplication and reduction.
    Code poly_mul(Code a, Code b) const;

    /// The smallest-code primitive element.
    Code generator() const noexcept { return exp_.size() > 1 ? exp_[1] : 1; }

    /// Euler's criterion: a^((q-1)/2) is 0 or 1. Zero counts as a square.
    bool is_square(Code a) const;
    /// Root with the smaller code, or nullopt for a nonsquare.
    std::optional<Code> sqrt(Code a) const;
    std::optional<Code> sqrt_exhaustive(Code a) const;
    std::optional<Code> sqrt_tonelli_shanks(Code a) const;

    FieldElement element(Code a) const;
    FieldElement element_from_int(std::int64_t v) const;

    explicit Field(FieldSpec spec);

private:
    FieldSpec spec_;
    std::uint32_t q_ = 0;
    std::vector<Code> exp_;
    std::vector<std::uint32_t> log_;
    std::vector<Code> neg_;
    std::vector<Code> add_table_;
};

/// Value type bound to its field; arithmetic between different fields throws
/// MixedFields.
class FieldElement {
public:
    FieldElement(std::shared_ptr<const Field> field, Code code);

    Code code() const noexcept { return code_; }
    const Field& field() const noexcept { return *field_; }
    const std::shared_ptr<const Field>& field_ptr() const noexcept { return field_; }
    std::vector<std::uint32_t> coeffs() const { return field_->coeffs(code_); }
    bool is_zero() const noexcept { return code_ == 0; }

    FieldElement inverse() const;
    FieldElement pow(std::uint64_t e) const;

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
    FieldElement operator-() const;
    friend bool operator==(const FieldElement& a, const FieldElement& b);

private:
    std::shared_ptr<const Field> field_;
    Code code_;
};

bool same_field(const Field& a, const Field& b) noexcept;

bool is_square(const FieldElement& a);
std::optional<FieldElement> sqrt(const FieldElement& a);

/// Legendre symbol (a/p) for an odd prime p.
int legendre(std::int64_t a, std::uint64_t p);

}  // namespace idens::gfq
