#include "idens/pgl2.hpp"

#include "idens/error.hpp"

namespace idens::pgl2 {

std::string to_string(ElementKind kind) {
    switch (kind) {
        case ElementKind::Identity: return "Identity";
        case ElementKind::Order3: return "Order3";
        case ElementKind::InvolutionInPsl: return "InvolutionInPsl";
        case ElementKind::InvolutionOutsidePsl: return "InvolutionOutsidePsl";
        case ElementKind::Other: return "Other";
    }
    return "Unknown";
}

Pgl2::Pgl2(std::shared_ptr<const gfq::Field> field) : field_(std::move(field)) {
    require(field_ != nullptr, Errc::InvalidArgument, "null field");
}

ProjectiveElement Pgl2::normalize(const Matrix2& m) const {
    const auto& f = *field_;
    const Code q = f.q();
    require(m.a < q && m.b < q && m.c < q && m.d < q, Errc::InvalidArgument,
            "matrix entry outside the field");
    require(det(m) != 0, Errc::SingularMatrix, "determinant is zero");
    return canon(m);
}

ProjectiveElement Pgl2::canon(const Matrix2& m) const {
    const auto& f = *field_;
    const Code lead = m.a != 0 ? m.a : m.b;  // a nonsingular matrix has a or b nonzero
    if (lead == 1) return ProjectiveElement(m);
    const Code s = f.inv(lead);
    return ProjectiveElement({f.mul(m.a, s), f.mul(m.b, s), f.mul(m.c, s), f.mul(m.d, s)});
}

ProjectiveElement Pgl2::from_ints(std::int64_t a, std::int64_t b, std::int64_t c,
                                  std::int64_t d) const {
    const auto& f = *field_;
    return normalize({f.from_int(a), f.from_int(b), f.from_int(c), f.from_int(d)});
}

ProjectiveElement Pgl2::identity() const { return ProjectiveElement({1, 0, 0, 1}); }

ProjectiveElement Pgl2::mul(const ProjectiveElement& g, const ProjectiveElement& h) const {
    const auto& f = *field_;
    const Matrix2& x = g.m_;
    const Matrix2& y = h.m_;
    return canon({f.add(f.mul(x.a, y.a), f.mul(x.b, y.c)),
                      f.add(f.mul(x.a, y.b), f.mul(x.b, y.d)),
                      f.add(f.mul(x.c, y.a), f.mul(x.d, y.c)),
                      f.add(f.mul(x.c, y.b), f.mul(x.d, y.d))});
}

ProjectiveElement Pgl2::inv(const ProjectiveElement& g) const {
    const auto& f = *field_;
    const Matrix2& x = g.m_;
    return canon({x.d, f.neg(x.b), f.neg(x.c), x.a});
}

ProjectiveElement Pgl2::pow(const ProjectiveElement& g, std::uint64_t n) const {
    ProjectiveElement result = identity();
    ProjectiveElement base = g;
    while (n) {
        if (n & 1) result = mul(result, base);
        base = mul(base, base);
        n >>= 1;
    }
    return result;
}

ProjectiveElement Pgl2::conj(const ProjectiveElement& g, const ProjectiveElement& x) const {
    return mul(mul(g, x), inv(g));
}

Code Pgl2::det(const Matrix2& m) const {
    const auto& f = *field_;
    return f.sub(f.mul(m.a, m.d), f.mul(m.b, m.c));
}

Code Pgl2::trace(const Matrix2& m) const { return field_->add(m.a, m.d); }

Code Pgl2::tau(const ProjectiveElement& g) const {
    const auto& f = *field_;
    const Code t = trace(g.m_);
    return f.div(f.mul(t, t), det(g.m_));
}

std::uint32_t Pgl2::order(const ProjectiveElement& g) const {
    const ProjectiveElement one = identity();
    ProjectiveElement x = g;
    for (std::uint32_t n = 1; n <= q() + 1; ++n) {
        if (x == one) return n;
        x = mul(x, g);
    }
    fail(Errc::InvariantViolation, "element order exceeds q+1");
}

bool Pgl2::in_psl(const ProjectiveElement& g) const { return field_->is_square(det(g.m_)); }

Classification Pgl2::classify(const ProjectiveElement& g) const {
    Classification c;
    c.order = order(g);
    c.tau = tau(g);
    switch (c.order) {
        case 1: c.kind = ElementKind::Identity; break;
        case 2:
            c.kind = in_psl(g) ? ElementKind::InvolutionInPsl : ElementKind::InvolutionOutsidePsl;
            require(c.tau == 0, Errc::InvariantViolation, "involution with nonzero trace");
            break;
        case 3:
            c.kind = ElementKind::Order3;
            require(c.tau == 1, Errc::InvariantViolation, "order-3 element with tau != 1");
            break;
        default: c.kind = ElementKind::Other; break;
    }
    return c;
}

std::uint64_t Pgl2::encode(const ProjectiveElement& g) const {
    const std::uint64_t q = this->q();
    return ((g.m_.a * q + g.m_.b) * q + g.m_.c) * q + g.m_.d;
}

ProjectiveElement Pgl2::decode(std::uint64_t code) const {
    const std::uint64_t q = this->q();
    Matrix2 m;
    m.d = static_cast<Code>(code % q);
    code /= q;
    m.c = static_cast<Code>(code % q);
    code /= q;
    m.b = static_cast<Code>(code % q);
    code /= q;
    require(code < q, Errc::InvalidArgument, "element code out of range");
    m.a = static_cast<Code>(code);
    const ProjectiveElement g = normalize(m);
    require(g.m_ == m, Errc::InvalidArgument, "element code is not normalized");
    return g;
}

std::string Pgl2::serialize(const ProjectiveElement& g) const {
    return std::to_string(g.m_.a) + "," + std::to_string(g.m_.b) + "," + std::to_string(g.m_.c) +
           "," + std::to_string(g.m_.d);
}

ProjectiveElement pnormalize(const Pgl2& group, const std::array<gfq::FieldElement, 4>& entries) {
    for (const auto& e : entries)
        require(gfq::same_field(e.field(), group.field()), Errc::MixedFields,
                "matrix entries from a different field");
    return group.normalize({entries[0].code(), entries[1].code(), entries[2].code(),
                            entries[3].code()});
}

Matrix2 canonical_h_matrix(const gfq::Field& field) {
    return {0, field.from_int(-1), 1, field.from_int(-1)};
}

}  // namespace idens::pgl2
