#include "idens/gfq.hpp"

#include "idens/error.hpp"

#include <algorithm>
#include <string>

namespace idens::gfq {

namespace {

using Poly = std::vector<std::uint32_t>;

void trim(Poly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
    std::int64_t t = 0, new_t = 1, r = p, new_r = a;
    while (new_r != 0) {
        const std::int64_t quot = r / new_r;
        t = std::exchange(new_t, t - quot * new_t);
        r = std::exchange(new_r, r - quot * new_r);
    }
    return static_cast<std::uint32_t>(t < 0 ? t + p : t);
}

// Remainder of f modulo a nonzero g over F_p.
Poly poly_rem(Poly f, const Poly& g, std::uint32_t p) {
    trim(f);
    const std::size_t dg = g.size() - 1;
    const std::uint64_t lead_inv = inv_mod(g.back(), p);
    while (f.size() >= g.size()) {
        const std::uint64_t factor = f.back() * lead_inv % p;
        const std::size_t shift = f.size() - g.size();
        for (std::size_t i = 0; i <= dg; ++i) {
            const std::uint64_t sub = factor * g[i] % p;
            f[shift + i] = static_cast<std::uint32_t>((f[shift + i] + p - sub) % p);
        }
        trim(f);
    }
    return f;
}

std::uint64_t checked_power(std::uint64_t p, std::uint32_t k, std::uint64_t limit) {
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < k; ++i) {
        q *= p;
        if (q > limit) return limit + 1;
    }
    return q;
}

}  // namespace

std::uint32_t FieldSpec::order() const {
    std::uint32_t q = 1;
    for (std::uint32_t i = 0; i < k; ++i) q *= p;
    return q;
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power(std::uint64_t q) {
    if (q < 2) return std::nullopt;
    std::uint64_t p = 2;
    while (q % p != 0) ++p;
    std::uint32_t k = 0;
    while (q % p == 0) {
        q /= p;
        ++k;
    }
    if (q != 1) return std::nullopt;
    return std::make_pair(static_cast<std::uint32_t>(p), k);
}

bool is_irreducible(std::span<const std::uint32_t> monic, std::uint32_t p) {
    const Poly f(monic.begin(), monic.end());
    const std::size_t deg = f.size() - 1;
    if (deg <= 1) return deg == 1;
    // Every monic divisor candidate of degree d <= deg/2, enumerated by the
    // base-p integer of its lower coefficients.
    for (std::size_t d = 1; d <= deg / 2; ++d) {
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < d; ++i) count *= p;
        Poly g(d + 1, 0);
        g[d] = 1;
        for (std::uint64_t n = 0; n < count; ++n) {
            std::uint64_t m = n;
            for (std::size_t i = 0; i < d; ++i) {
                g[i] = static_cast<std::uint32_t>(m % p);
                m /= p;
            }
            if (poly_rem(f, g, p).empty()) return false;
        }
    }
    return true;
}

FieldSpec field_new(std::uint64_t p, std::uint32_t k, std::uint64_t max_order) {
    require(k >= 1, Errc::InvalidArgument, "extension degree must be at least 1");
    require(is_prime(p), Errc::NotPrime, std::to_string(p) + " is not prime");
    require(p != 2, Errc::EvenCharacteristic, "characteristic 2 is not supported");
    const std::uint64_t q = checked_power(p, k, max_order);
    require(q <= max_order, Errc::TooLarge,
            std::to_string(p) + "^" + std::to_string(k) + " exceeds the field size bound");

    FieldSpec spec{static_cast<std::uint32_t>(p), k, {}};
    if (k == 1) {
        spec.modulus = {0, 1};
        return spec;
    }
    const std::uint64_t candidates = q;  // p^k choices of the lower coefficients
    Poly f(k + 1, 0);
    f[k] = 1;
    for (std::uint64_t n = 0; n < candidates; ++n) {
        std::uint64_t m = n;
        for (std::uint32_t i = 0; i < k; ++i) {
            f[i] = static_cast<std::uint32_t>(m % p);
            m /= p;
        }
        if (f[0] != 0 && is_irreducible(f, spec.p)) {
            spec.modulus = f;
            return spec;
        }
    }
    fail(Errc::InvariantViolation, "no irreducible polynomial found");
}

Field::Field(FieldSpec spec) : spec_(std::move(spec)), q_(spec_.order()) {
    const std::uint32_t p = spec_.p;
    neg_.resize(q_);
    for (Code a = 0; a < q_; ++a) {
        auto c = coeffs(a);
        for (auto& x : c) x = (p - x) % p;
        neg_[a] = from_coeffs(c);
    }
    if (spec_.k > 1 && q_ <= 1024) {
        add_table_.resize(static_cast<std::size_t>(q_) * q_);
        for (Code a = 0; a < q_; ++a)
            for (Code b = 0; b < q_; ++b) {
                Code r = 0, scale = 1, x = a, y = b;
                for (std::uint32_t i = 0; i < spec_.k; ++i) {
                    r += ((x % p + y % p) % p) * scale;
                    x /= p;
                    y /= p;
                    scale *= p;
                }
                add_table_[static_cast<std::size_t>(a) * q_ + b] = r;
            }
    }

    // Smallest primitive element, found with the reference product.
    log_.assign(q_, 0);
    for (Code g = 1; g < q_; ++g) {
        exp_.assign(1, 1);
        Code x = g;
        while (x != 1) {
            exp_.push_back(x);
            x = poly_mul(x, g);
        }
        if (exp_.size() == q_ - 1) break;
    }
    require(exp_.size() == q_ - 1, Errc::InvariantViolation, "no primitive element found");
    for (std::uint32_t e = 0; e < exp_.size(); ++e) log_[exp_[e]] = e;
}

std::shared_ptr<const Field> Field::create(FieldSpec spec) {
    return std::make_shared<const Field>(std::move(spec));
}

std::shared_ptr<const Field> Field::create(std::uint64_t p, std::uint32_t k) {
    return create(field_new(p, k));
}

Code Field::from_int(std::int64_t v) const {
    const std::int64_t p = spec_.p;
    return static_cast<Code>(((v % p) + p) % p);
}

std::vector<std::uint32_t> Field::coeffs(Code a) const {
    std::vector<std::uint32_t> c(spec_.k);
    for (auto& x : c) {
        x = a % spec_.p;
        a /= spec_.p;
    }
    return c;
}

Code Field::from_coeffs(std::span<const std::uint32_t> c) const {
    Code r = 0;
    for (std::size_t i = c.size(); i-- > 0;) r = r * spec_.p + c[i] % spec_.p;
    return r;
}

Code Field::add(Code a, Code b) const {
    if (spec_.k == 1) {
        const Code s = a + b;
        return s >= q_ ? s - q_ : s;
    }
    if (!add_table_.empty()) return add_table_[static_cast<std::size_t>(a) * q_ + b];
    const std::uint32_t p = spec_.p;
    Code r = 0, scale = 1;
    for (std::uint32_t i = 0; i < spec_.k; ++i) {
        r += ((a % p + b % p) % p) * scale;
        a /= p;
        b /= p;
        scale *= p;
    }
    return r;
}

Code Field::inv(Code a) const {
    require(a != 0, Errc::DivisionByZero, "inverse of zero");
    const std::uint32_t e = log_[a];
    return exp_[e == 0 ? 0 : (q_ - 1) - e];
}

Code Field::pow(Code a, std::uint64_t e) const {
    if (e == 0) return 1;
    if (a == 0) return 0;
    return exp_[(static_cast<std::uint64_t>(log_[a]) * (e % (q_ - 1))) % (q_ - 1)];
}

Code Field::poly_mul(Code a, Code b) const {
    const std::uint32_t p = spec_.p;
    if (spec_.k == 1) return static_cast<Code>(static_cast<std::uint64_t>(a) * b % p);
    const auto x = coeffs(a);
    const auto y = coeffs(b);
    Poly prod(2 * spec_.k, 0);
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < y.size(); ++j)
            prod[i + j] = static_cast<std::uint32_t>(
                (prod[i + j] + static_cast<std::uint64_t>(x[i]) * y[j]) % p);
    return from_coeffs(poly_rem(prod, spec_.modulus, p));
}

bool Field::is_square(Code a) const {
    const Code e = pow(a, (q_ - 1) / 2);
    return e == 0 || e == 1;
}

std::optional<Code> Field::sqrt(Code a) const {
    return q_ < kExhaustiveSqrtLimit ? sqrt_exhaustive(a) : sqrt_tonelli_shanks(a);
}

std::optional<Code> Field::sqrt_exhaustive(Code a) const {
    for (Code r = 0; r < q_; ++r)
        if (mul(r, r) == a) return r;
    return std::nullopt;
}

std::optional<Code> Field::sqrt_tonelli_shanks(Code a) const {
    if (a == 0) return Code{0};
    if (!is_square(a)) return std::nullopt;
    // q - 1 = 2^s * t with t odd.
    std::uint64_t t = q_ - 1;
    std::uint32_t s = 0;
    while (t % 2 == 0) {
        t /= 2;
        ++s;
    }
    Code z = 2;
    while (is_square(z)) ++z;
    Code c = pow(z, t);
    Code x = pow(a, (t + 1) / 2);
    Code b = pow(a, t);
    std::uint32_t m = s;
    while (b != 1) {
        std::uint32_t i = 0;
        for (Code b2 = b; b2 != 1; b2 = mul(b2, b2)) ++i;
        Code w = c;
        for (std::uint32_t j = 0; j + i + 1 < m; ++j) w = mul(w, w);
        x = mul(x, w);
        c = mul(w, w);
        b = mul(b, c);
        m = i;
    }
    return std::min(x, neg(x));
}

FieldElement Field::element(Code a) const {
    require(a < q_, Errc::InvalidArgument, "code out of range");
    return FieldElement(shared_from_this(), a);
}

FieldElement Field::element_from_int(std::int64_t v) const { return element(from_int(v)); }

bool same_field(const Field& a, const Field& b) noexcept {
    return &a == &b || a.spec() == b.spec();
}

FieldElement::FieldElement(std::shared_ptr<const Field> field, Code code)
    : field_(std::move(field)), code_(code) {
    require(field_ != nullptr && code_ < field_->q(), Errc::InvalidArgument,
            "field element code out of range");
}

namespace {
const Field& common(const FieldElement& a, const FieldElement& b) {
    require(same_field(a.field(), b.field()), Errc::MixedFields,
            "operands belong to different fields");
    return a.field();
}
}  // namespace

FieldElement FieldElement::inverse() const { return {field_, field_->inv(code_)}; }
FieldElement FieldElement::pow(std::uint64_t e) const { return {field_, field_->pow(code_, e)}; }
FieldElement FieldElement::operator-() const { return {field_, field_->neg(code_)}; }

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    return {a.field_, common(a, b).add(a.code_, b.code_)};
}
FieldElement operator-(const FieldElement& a, const FieldElement& b) {
    return {a.field_, common(a, b).sub(a.code_, b.code_)};
}
FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    return {a.field_, common(a, b).mul(a.code_, b.code_)};
}
FieldElement operator/(const FieldElement& a, const FieldElement& b) {
    return {a.field_, common(a, b).div(a.code_, b.code_)};
}
bool operator==(const FieldElement& a, const FieldElement& b) {
    return same_field(*a.field_, *b.field_) && a.code_ == b.code_;
}

bool is_square(const FieldElement& a) { return a.field().is_square(a.code()); }

std::optional<FieldElement> sqrt(const FieldElement& a) {
    const auto r = a.field().sqrt(a.code());
    if (!r) return std::nullopt;
    return FieldElement(a.field_ptr(), *r);
}

int legendre(std::int64_t a, std::uint64_t p) {
    require(p > 2 && is_prime(p), Errc::NotPrime, "legendre needs an odd prime");
    const auto m = static_cast<std::int64_t>(p);
    std::uint64_t base = static_cast<std::uint64_t>(((a % m) + m) % m);
    if (base == 0) return 0;
    std::uint64_t e = (p - 1) / 2, r = 1;
    while (e) {
        if (e & 1) r = r * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return r == 1 ? 1 : -1;
}

}  // namespace idens::gfq
