#include <doctest.h>

#include <random>
#include <stdexcept>

#include "duadic/gf2poly.hpp"
#include "oracles.hpp"

using namespace duadic;
using P = BinaryPolynomial;

TEST_CASE("products") {
    const auto xp1 = P::from_exponents({1, 0});
    CHECK(xp1 * xp1 == P::from_exponents({2, 0}));
    const auto p = P::from_mask(0b1011011);
    CHECK(p * P::one() == p);
    CHECK((P::from_mask(0b1011) * P::from_mask(0b1101)).to_string() == "x^6+x^5+x^4+x^3+x^2+x+1");
    CHECK((p * P{}).is_zero());
    CHECK((p * P{}).degree() == kZeroDegree);
    CHECK(P{}.degree() + p.degree() < 0);
    CHECK(P{}.degree() < P::one().degree());
}

TEST_CASE("division") {
    const auto d = poly_divmod(P::cyclic_modulus(7), P::from_mask(0b1011));
    CHECK(d.quotient == P::from_exponents({4, 2, 1, 0}));
    CHECK(d.remainder.is_zero());

    const auto a = P::from_mask(0x1234567);
    const auto by_one = poly_divmod(a, P::one());
    CHECK(by_one.quotient == a);
    CHECK(by_one.remainder.is_zero());

    const auto small = poly_divmod(P::from_mask(0b11), P::from_mask(0b101));
    CHECK(small.quotient.is_zero());
    CHECK(small.remainder == P::from_mask(0b11));

    CHECK_THROWS_AS(poly_divmod(a, P{}), std::domain_error);
}

TEST_CASE("ring laws on random inputs match the schoolbook oracle") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 2000; ++t) {
        const std::uint64_t a = rng() >> 34, b = rng() >> 35, c = rng() >> 40;
        const auto pa = P::from_mask(a), pb = P::from_mask(b), pc = P::from_mask(c);
        CHECK((pa * pb).to_mask() == oracle::clmul(a, b));
        CHECK(pa * pb == pb * pa);
        CHECK((pa * pb) * pc == pa * (pb * pc));
        CHECK(pa * (pb + pc) == pa * pb + pa * pc);
        if (b) {
            const auto d = poly_divmod(pa, pb);
            CHECK(d.quotient * pb + d.remainder == pa);
            CHECK(d.remainder.degree() < pb.degree());
            CHECK(d.remainder.to_mask() == oracle::mod(a, b));
        }
    }
}

TEST_CASE("multi-word polynomials") {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 50; ++t) {
        std::vector<std::uint64_t> wa(4), wb(3);
        for (auto& w : wa) w = rng();
        for (auto& w : wb) w = rng();
        wa[0] |= 1;
        const auto a = P::from_words(wa), b = P::from_words(wb);
        const auto d = poly_divmod(a * b + P::from_mask(5), b);
        CHECK(d.quotient == a);
        CHECK(d.remainder == P::from_mask(5));
        CHECK(P::from_hex(a.to_hex()) == a);
        CHECK(a.reciprocal().reciprocal() == a);
    }
}

TEST_CASE("reciprocal, shift, text") {
    const auto p = P::from_mask(0b1011);
    CHECK(p.reciprocal() == P::from_mask(0b1101));
    CHECK(p.shifted(2) == P::from_mask(0b101100));
    CHECK(P::from_mask(0b1000011).to_string() == "x^6+x+1");
    CHECK(P{}.to_string() == "0");
    CHECK(P::one().to_string() == "1");
    CHECK_THROWS_AS(P::monomial(64).to_mask(), std::overflow_error);
    const auto bits = p.to_bits(7);
    CHECK(bits.get(0));
    CHECK(bits.get(1));
    CHECK_FALSE(bits.get(2));
    CHECK(bits.get(3));
    CHECK(P::from_bits(bits) == p);
}

TEST_CASE("primitivity") {
    CHECK(is_primitive(P::from_exponents({7, 1, 0}), 7));
    CHECK_FALSE(is_primitive(P::from_exponents({2, 0}), 2));
    CHECK_FALSE(is_primitive(P::from_exponents({4, 3, 2, 1, 0}), 4));
    CHECK(default_primitive_poly(7) == P::from_exponents({7, 1, 0}));
    CHECK(default_primitive_poly(3) == P::from_exponents({3, 1, 0}));
    CHECK(default_primitive_poly(5) == P::from_exponents({5, 2, 0}));
    CHECK_THROWS_AS(default_primitive_poly(1), std::invalid_argument);
    CHECK_THROWS_AS(default_primitive_poly(33), std::invalid_argument);
    for (int m = 2; m <= 32; ++m) CHECK(is_primitive(default_primitive_poly(m), m));
}

TEST_CASE("primitivity agrees with order-of-x oracle for m <= 10") {
    for (int m = 2; m <= 10; ++m) {
        const std::uint64_t n = (1ULL << m) - 1;
        std::uint64_t smallest = 0;
        for (std::uint64_t mask = 1ULL << m; mask < (2ULL << m); ++mask) {
            const bool want = oracle::irreducible(mask) && oracle::order_of_x(mask, n) == n;
            CHECK(is_primitive(P::from_mask(mask), m) == want);
            if (want && !smallest) smallest = mask;
        }
        CHECK(default_primitive_poly(m).to_mask() == smallest);
    }
}

TEST_CASE("field arithmetic") {
    for (int m : {3, 7, 10, 17}) {
        const FieldContext ctx(m);
        const std::uint64_t mod = ctx.modulus().to_mask();
        CHECK(ctx.alpha_pow(0) == 1);
        CHECK(ctx.alpha_pow(ctx.n()) == 1);
        CHECK(ctx.alpha_pow(1) == 2);
        std::mt19937_64 rng(m);
        for (int t = 0; t < 500; ++t) {
            const auto a = static_cast<FieldContext::Element>(rng() % (ctx.n() + 1));
            const auto b = static_cast<FieldContext::Element>(rng() % (ctx.n() + 1));
            CHECK(ctx.mul(a, b) == oracle::mod(oracle::clmul(a, b), mod));
            const auto e = rng() % ctx.n(), f = rng() % ctx.n();
            CHECK(ctx.mul(ctx.alpha_pow(e), ctx.alpha_pow(f)) == ctx.alpha_pow(e + f));
        }
    }
    CHECK_THROWS_AS(FieldContext(4, P::from_exponents({4, 3, 2, 1, 0})), std::invalid_argument);
}

TEST_CASE("minimal polynomials") {
    const FieldContext gf8(3);
    CHECK(minimal_polynomial(gf8, cyclotomic_coset(1, 7)) == P::from_exponents({3, 1, 0}));
    CHECK(minimal_polynomial(gf8, cyclotomic_coset(0, 7)) == P::from_exponents({1, 0}));
    CHECK(minimal_polynomial(gf8, cyclotomic_coset(3, 7)) == P::from_exponents({3, 2, 0}));
    CHECK_THROWS_AS(minimal_polynomial(gf8, CyclotomicCoset{1, {1, 2}}), std::logic_error);

    // For m > 12 the divisibility of each factor follows from the product.
    for (int m = 2; m <= 16; ++m) {
        const FieldContext ctx(m);
        const auto n = static_cast<std::uint32_t>(ctx.n());
        const auto xn = P::cyclic_modulus(n);
        P product = P::one();
        for (const auto& c : all_cosets(n)) {
            const auto mp = minimal_polynomial(ctx, c);
            CHECK(mp.degree() == static_cast<int>(c.size()));
            if (m <= 12) CHECK(poly_mod(xn, mp).is_zero());
            product = product * mp;
        }
        CHECK(product == xn);
    }
}

TEST_CASE("minimal polynomials at m = 16 divide x^n - 1") {
    const FieldContext ctx(16);
    const auto n = static_cast<std::uint32_t>(ctx.n());
    const auto xn = P::cyclic_modulus(n);
    for (std::uint32_t s : {1U, 3U, 5U, 255U, 257U, 1023U}) {
        const auto c = cyclotomic_coset(s, n);
        const auto mp = minimal_polynomial(ctx, c);
        CHECK(mp.degree() == static_cast<int>(c.size()));
        CHECK(poly_mod(xn, mp).is_zero());
    }
}
