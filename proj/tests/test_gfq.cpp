#include "oracles.hpp"

#include "idens/error.hpp"
#include "idens/gfq.hpp"

#include <doctest.h>

#include <random>

using namespace idens;
using gfq::Field;

TEST_CASE("field_new: prime field and errors") {
    const auto f5 = gfq::field_new(5, 1);
    CHECK(f5.order() == 5);
    CHECK(f5.k == 1);
    CHECK_THROWS_AS(gfq::field_new(4, 1), Error);
    try {
        gfq::field_new(4, 1);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::NotPrime);
    }
    try {
        gfq::field_new(2, 3);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::EvenCharacteristic);
    }
    try {
        gfq::field_new(3, 20);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::TooLarge);
    }
}

TEST_CASE("field_new: F_25 modulus is the first rootless monic quadratic") {
    const auto spec = gfq::field_new(5, 2);
    const auto oracle = oracle::first_irreducible_quadratic(5);
    REQUIRE(spec.modulus.size() == 3);
    CHECK(spec.modulus[0] == oracle.m0);
    CHECK(spec.modulus[1] == oracle.m1);
    CHECK(spec.modulus[2] == 1);
    CHECK(gfq::field_new(5, 2) == spec);
}

TEST_CASE("field_new: moduli are irreducible and deterministic") {
    for (auto [p, k] : {std::pair{3U, 2U}, {3U, 3U}, {3U, 4U}, {5U, 3U}, {7U, 2U}, {11U, 2U}}) {
        const auto spec = gfq::field_new(p, k);
        CHECK(gfq::is_irreducible(spec.modulus, p));
        if (k <= 3) {
            // Irreducible of degree <= 3 means no roots.
            for (std::int64_t x = 0; x < p; ++x) {
                std::int64_t v = 0;
                for (std::size_t i = spec.modulus.size(); i-- > 0;) v = (v * x + spec.modulus[i]) % p;
                CHECK(v != 0);
            }
        }
    }
    const std::vector<std::uint32_t> reducible = {1, 0, 1};  // x^2 + 1 = (x-2)(x-3) over F_5
    CHECK_FALSE(gfq::is_irreducible(reducible, 5));
}

TEST_CASE("prime field arithmetic") {
    const auto f = Field::create(5, 1);
    CHECK(f->mul(2, 3) == 1);
    CHECK(f->inv(2) == 3);
    CHECK(f->add(4, 3) == 2);
    CHECK(f->sub(1, 3) == 3);
    CHECK_THROWS_AS(f->inv(0), Error);
}

TEST_CASE("F_25: x * x reduces by the modulus") {
    const auto f = Field::create(5, 2);
    const auto oracle = oracle::first_irreducible_quadratic(5);
    const gfq::Code x = 5;  // coefficients (0, 1)
    CHECK(f->mul(x, x) == oracle.mul(x, x));
    CHECK(f->mul(x, x) == 3);
}

TEST_CASE("extension field arithmetic matches the polynomial oracle") {
    for (std::uint32_t p : {3U, 5U, 7U, 11U}) {
        const auto f = Field::create(p, 2);
        const auto oracle = oracle::first_irreducible_quadratic(p);
        for (gfq::Code a = 0; a < f->q(); ++a)
            for (gfq::Code b = 0; b < f->q(); ++b) {
                CHECK(f->mul(a, b) == oracle.mul(a, b));
                CHECK(f->add(a, b) == oracle.add(a, b));
                CHECK(f->poly_mul(a, b) == f->mul(a, b));
            }
    }
}

TEST_CASE("field axioms on random triples") {
    std::mt19937_64 rng(17);
    for (auto [p, k] : {std::pair{5U, 1U}, {3U, 3U}, {5U, 2U}, {7U, 2U}, {3U, 5U}, {101U, 1U}}) {
        const auto f = Field::create(p, k);
        std::uniform_int_distribution<gfq::Code> pick(0, f->q() - 1);
        for (int i = 0; i < 300; ++i) {
            const gfq::Code a = pick(rng), b = pick(rng), c = pick(rng);
            CHECK(f->mul(a, f->mul(b, c)) == f->mul(f->mul(a, b), c));
            CHECK(f->add(a, f->add(b, c)) == f->add(f->add(a, b), c));
            CHECK(f->mul(a, f->add(b, c)) == f->add(f->mul(a, b), f->mul(a, c)));
            CHECK(f->add(a, f->neg(a)) == 0);
            if (a != 0) CHECK(f->mul(a, f->inv(a)) == 1);
        }
        CHECK(f->pow(f->generator(), f->q() - 1) == 1);
    }
}

TEST_CASE("encode and decode of coefficient vectors are inverse") {
    const auto f = Field::create(3, 3);
    for (gfq::Code a = 0; a < f->q(); ++a) {
        const auto c = f->coeffs(a);
        for (auto x : c) CHECK(x < 3);
        CHECK(f->from_coeffs(c) == a);
    }
}

TEST_CASE("is_square") {
    const auto f11 = Field::create(11, 1);
    CHECK_FALSE(f11->is_square(f11->from_int(-3)));
    CHECK(f11->is_square(0));
    CHECK(f11->is_square(5));
    for (std::int64_t a = 0; a < 11; ++a) CHECK(f11->is_square(a) == oracle::is_square_mod(a, 11));
    for (auto [p, k] : {std::pair{5U, 2U}, {3U, 3U}, {7U, 2U}}) {
        const auto f = Field::create(p, k);
        std::size_t squares = 0;
        for (gfq::Code a = 1; a < f->q(); ++a) squares += f->is_square(a);
        CHECK(squares == (f->q() - 1) / 2);
    }
}

TEST_CASE("sqrt returns the smaller root") {
    const auto f11 = Field::create(11, 1);
    CHECK(f11->sqrt(5) == gfq::Code{4});
    CHECK(f11->sqrt(0) == gfq::Code{0});
    CHECK_FALSE(f11->sqrt(8).has_value());
}

TEST_CASE("Tonelli-Shanks agrees with exhaustive search") {
    for (auto [p, k] : {std::pair{13U, 1U}, {17U, 1U}, {41U, 1U}, {5U, 2U}, {3U, 3U}, {97U, 1U}, {7U, 3U}}) {
        const auto f = Field::create(p, k);
        for (gfq::Code a = 0; a < f->q(); ++a) {
            const auto ts = f->sqrt_tonelli_shanks(a);
            CHECK(ts == f->sqrt_exhaustive(a));
            if (ts) CHECK(f->mul(*ts, *ts) == a);
        }
    }
    const auto big = Field::create(10007, 1);
    for (gfq::Code a : {2U, 3U, 5U, 1234U, 10006U}) {
        const auto r = big->sqrt(a);
        CHECK(r.has_value() == oracle::is_square_mod(a, 10007));
        if (r) CHECK(big->mul(*r, *r) == a);
    }
}

TEST_CASE("legendre") {
    CHECK(gfq::legendre(5, 11) == 1);
    CHECK(gfq::legendre(5, 17) == -1);
    CHECK(gfq::legendre(0, 7) == 0);
    for (std::int64_t p : {3, 5, 7, 13, 29, 31})
        for (std::int64_t a = -10; a < 20; ++a) {
            const std::int64_t e = oracle::power_mod(a, (p - 1) / 2, p);
            CHECK(gfq::legendre(a, p) == (e == 0 ? 0 : e == 1 ? 1 : -1));
        }
}

TEST_CASE("FieldElement operators and mixed fields") {
    const auto f = Field::create(7, 1);
    const auto g = Field::create(11, 1);
    const auto a = f->element(3), b = f->element(5);
    CHECK((a + b).code() == 1);
    CHECK((a - b).code() == 5);
    CHECK((a * b).code() == 1);
    CHECK((a / b * b) == a);
    CHECK((-a).code() == 4);
    CHECK_THROWS_AS(a + g->element(1), Error);
    try {
        (void)(a * g->element(1));
    } catch (const Error& e) {
        CHECK(e.code() == Errc::MixedFields);
    }
    CHECK_THROWS_AS(f->element(0).inverse(), Error);
    CHECK(gfq::sqrt(f->element(2)).has_value());
    CHECK(gfq::is_square(f->element(4)));
}

TEST_CASE("prime_power") {
    CHECK(gfq::prime_power(27) == std::pair{3U, 3U});
    CHECK(gfq::prime_power(25) == std::pair{5U, 2U});
    CHECK_FALSE(gfq::prime_power(15).has_value());
    CHECK_FALSE(gfq::prime_power(1).has_value());
}
