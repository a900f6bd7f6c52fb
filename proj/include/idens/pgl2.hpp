#pragma once

#include "idens/gfq.hpp"

#include <array>
#include <cstdint>
#include <memory>
#include <string>

namespace idens::pgl2 {

using gfq::Code;

/// Raw 2x2 matrix [[a, b], [c, d]] of field codes.
struct Matrix2 {
    Code a = 0, b = 0, c = 0, d = 0;
    friend bool operator==(const Matrix2&, const Matrix2&) = default;
};

/// Element of PGL(2,q): the scalar class of an invertible matrix, stored as the
/// representative whose first nonzero entry (in order a, b, c, d) is 1.
class ProjectiveElement {
public:
    const Matrix2& matrix() const noexcept { return m_; }
    Code a() const noexcept { return m_.a; }
    Code b() const noexcept { return m_.b; }
    Code c() const noexcept { return m_.c; }
    Code d() const noexcept { return m_.d; }

    friend bool operator==(const ProjectiveElement&, const ProjectiveElement&) = default;

private:
    friend class Pgl2;
    explicit ProjectiveElement(const Matrix2& m) : m_(m) {}
    Matrix2 m_;
};

enum class ElementKind { Identity, Order3, InvolutionInPsl, InvolutionOutsidePsl, Other };

std::string to_string(ElementKind kind);

struct Classification {
    ElementKind kind = ElementKind::Identity;
    std::uint32_t order = 1;
    /// Tr(A)^2 / det(A) for any representative A.
    Code tau = 0;
};

/// Group operations of PGL(2,q) over one field.
class Pgl2 {
public:
    explicit Pgl2(std::shared_ptr<const gfq::Field> field);

    const gfq::Field& field() const noexcept { return *field_; }
    const std::shared_ptr<const gfq::Field>& field_ptr() const noexcept { return field_; }
    std::uint32_t q() const noexcept { return field_->q(); }

    /// Throws SingularMatrix when det = 0.
    ProjectiveElement normalize(const Matrix2& m) const;
    /// Entries given as integers mapped into the prime subfield.
    ProjectiveElement from_ints(std::int64_t a, std::int64_t b, std::int64_t c,
                                std::int64_t d) const;
    ProjectiveElement identity() const;

    ProjectiveElement mul(const ProjectiveElement& g, const ProjectiveElement& h) const;
    /// Adjugate, then normalization.
    ProjectiveElement inv(const ProjectiveElement& g) const;
    ProjectiveElement pow(const ProjectiveElement& g, std::uint64_t n) const;
    /// g x g^{-1}
    ProjectiveElement conj(const ProjectiveElement& g, const ProjectiveElement& x) const;

    Code det(const Matrix2& m) const;
    Code trace(const Matrix2& m) const;
    Code tau(const ProjectiveElement& g) const;

    /// Least n >= 1 with g^n = 1, found by repeated multiplication up to q+1.
    std::uint32_t order(const ProjectiveElement& g) const;
    /// det of the normalized representative is a square.
    bool in_psl(const ProjectiveElement& g) const;
    /// Classification by order and PSL membership. Throws InvariantViolation if
    /// an order-3 element has tau != 1 or an involution has tau != 0.
    Classification classify(const ProjectiveElement& g) const;

    /// Base-q integer of (a, b, c, d); monotone in the lexicographic order of
    /// the normalized entries.
    std::uint64_t encode(const ProjectiveElement& g) const;
    ProjectiveElement decode(std::uint64_t code) const;
    /// "a,b,c,d" in field codes.
    std::string serialize(const ProjectiveElement& g) const;

private:
    // Scaling step of normalize for matrices already known to be invertible.
    ProjectiveElement canon(const Matrix2& m) const;

    std::shared_ptr<const gfq::Field> field_;
};

/// Normalization from field elements; all four must share one field.
ProjectiveElement pnormalize(const Pgl2& group, const std::array<gfq::FieldElement, 4>& entries);

/// The order-3 matrix [[0, -1], [1, -1]].
Matrix2 canonical_h_matrix(const gfq::Field& field);

}  // namespace idens::pgl2
