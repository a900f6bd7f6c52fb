#include "idens/conics.hpp"

#include "idens/error.hpp"

#include <algorithm>

namespace idens::conics {

std::uint64_t count_conic(const gfq::Field& f, Code a, Code b) {
    require(a != 0 && a < f.q() && b < f.q(), Errc::InvalidArgument, "conic needs a != 0");
    std::uint64_t count = 0;
    for (Code y = 0; y < f.q(); ++y) {
        const Code x2 = f.neg(f.add(f.mul(a, f.mul(y, y)), b));
        if (x2 == 0) count += 1;
        else if (f.is_square(x2)) count += 2;
    }
    return count;
}

Code gamma_constant(const gfq::Field& f) {
    const Code third = f.inv(f.from_int(3));
    return f.sub(1, f.mul(third, third));
}

std::vector<std::pair<Code, Code>> trace_equation_solutions(const gfq::Field& f, int sign) {
    require(f.p() != 3, Errc::WrongCharacteristic, "trace equation needs p != 3");
    require(f.q() % 3 == 2, Errc::WrongCongruence, "trace equation needs q = 2 mod 3");
    require(sign == 1 || sign == -1, Errc::InvalidArgument, "sign must be +1 or -1");

    const Code two = f.from_int(2), three = f.from_int(3);
    const Code half = f.inv(two), third = f.inv(three);
    const Code gamma = gamma_constant(f);
    std::vector<std::pair<Code, Code>> out;
    for (Code a = 0; a < f.q(); ++a) {
        const Code a_part = f.add(f.add(f.mul(a, a), a), 1);
        for (Code b = 1; b < f.q(); ++b) {
            const Code lhs = f.add(f.sub(f.mul(b, b), f.mul(a, b)), a_part);
            const Code rhs = sign > 0 ? b : f.neg(b);
            if (lhs != rhs) continue;
            out.emplace_back(a, b);

            Code x, y, constant;
            if (sign < 0) {
                x = f.mul(two, f.add(b, f.mul(f.sub(1, a), half)));
                y = f.add(a, 1);
                constant = 0;
            } else {
                x = f.mul(two, f.sub(b, f.mul(f.add(a, 1), half)));
                y = f.add(a, third);
                constant = f.mul(three, gamma);
            }
            const Code conic = f.add(f.add(f.mul(x, x), f.mul(three, f.mul(y, y))), constant);
            require(conic == 0, Errc::InvariantViolation, "substituted pair is off its conic");
        }
    }

    if (sign < 0) {
        const Code m = f.neg(1);
        require(out.size() == 1 && out[0] == std::make_pair(m, m), Errc::InvariantViolation,
                "minus branch is not exactly (-1, -1)");
    } else {
        require(out.size() == f.q() + 1, Errc::InvariantViolation,
                "plus branch has " + std::to_string(out.size()) + " pairs, expected q+1");
    }
    return out;
}

pgl2::ProjectiveElement conjugate_of_h(const pgl2::Pgl2& group, Code a, Code b) {
    const auto& f = group.field();
    const Code top = f.neg(f.mul(f.inv(b), f.add(f.add(f.mul(a, a), a), 1)));
    return group.normalize({a, top, b, f.sub(f.neg(1), a)});
}

namespace {

std::vector<Rational> increasing(std::vector<Rational> values) {
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    return values;
}

std::int64_t ipow(std::int64_t base, std::uint32_t e) {
    std::int64_t r = 1;
    while (e--) r *= base;
    return r;
}

}  // namespace

DensityPrediction predicted_density(std::uint32_t q, atlas::Which group) {
    const auto pk = gfq::prime_power(q);
    require(pk.has_value(), Errc::InvalidArgument, std::to_string(q) + " is not a prime power");
    const auto [p, k] = *pk;
    require(p != 2, Errc::UnsupportedCase, "even q: PSL and PGL coincide");

    DensityPrediction d;
    d.q = q;
    d.group = group;
    const bool psl = group == atlas::Which::PSL;
    Rational rho_psl, rho_pgl{1};

    if (p == 3) {
        require(k % 2 == 1, Errc::UnsupportedCase,
                "q = 3^k with k even admits no inverting involution outside PSL");
        rho_psl = rho_pgl = Rational(ipow(3, k - 1));
        d.source = "q = 3^k, k odd";
    } else if (q % 3 == 1) {
        rho_psl = p == 5 ? Rational(2) : Rational(4, 3);
        d.source = p == 5 ? "q ≡ 1 (mod 3), p = 5" : "q ≡ 1 (mod 3), p ≠ 5";
    } else {
        const std::uint32_t r = q % 5;
        if (r == 0) {
            // q = 2 mod 3 forces an odd exponent when p = 5.
            require(p == 5 && k % 2 == 1, Errc::InvariantViolation,
                    "q ≡ 2 (mod 3), q ≡ 0 (mod 5) but q is not an odd power of 5");
            rho_psl = Rational(4, 3);
            d.source = "q ≡ 2 (mod 3), q = 5^(2k+1)";
        } else if (r == 2 || r == 3) {
            rho_psl = Rational(1);
            d.source = "q ≡ 2 (mod 3), q ≡ ±2 (mod 5)";
        } else {
            rho_psl = Rational(4, 3);
            d.source = "q ≡ 2 (mod 3), q ≡ ±1 (mod 5)";
        }
    }
    if (!psl && p != 3) d.source += "; PGL";
    d.rho = psl ? rho_psl : rho_pgl;
    d.weak_array = increasing({rho_pgl, rho_psl});
    require(d.rho >= Rational(1), Errc::InvariantViolation, "predicted density below 1");
    return d;
}

DensityPrediction weak_density_array(std::uint32_t q) {
    return predicted_density(q, atlas::Which::PSL);
}

}  // namespace idens::conics
