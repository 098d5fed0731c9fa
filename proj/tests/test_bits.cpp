#include <doctest.h>

#include <random>
#include <stdexcept>

#include "duadic/bitmatrix.hpp"
#include "duadic/bits.hpp"

using namespace duadic;

TEST_CASE("hex round trip") {
    CHECK(words_to_hex(std::vector<std::uint64_t>{}) == "0x0");
    CHECK(words_to_hex(std::vector<std::uint64_t>{0x83}) == "0x83");
    CHECK(words_to_hex(std::vector<std::uint64_t>{1, 0xf}) == "0xf0000000000000001");
    CHECK(hex_to_words("0xf0000000000000001") == std::vector<std::uint64_t>{1, 0xf});
    CHECK(hex_to_words("83") == std::vector<std::uint64_t>{0x83});
    CHECK_THROWS_AS(hex_to_words("0xzz"), std::invalid_argument);
}

TEST_CASE("BitVector basics") {
    BitVector v(130);
    CHECK(v.is_zero());
    v.set(0);
    v.set(129);
    v.flip(64);
    CHECK(v.weight() == 3);
    CHECK(v.get(129));
    CHECK_FALSE(v.get(128));
    const auto back = BitVector::from_hex(v.to_hex(), 130);
    CHECK(back == v);
    CHECK_THROWS_AS(BitVector::from_hex("0x8", 3), std::invalid_argument);

    const auto bits = v.to_bits();
    CHECK(BitVector::from_bits(bits) == v);

    BitVector w(130);
    w.set(0);
    CHECK((v ^ w).weight() == 2);
    CHECK(dot(v, w));
    w.set(64);
    CHECK_FALSE(dot(v, w));
}

TEST_CASE("row echelon and rank") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        BinaryMatrix m(6, 70);
        for (std::size_t r = 0; r < 5; ++r)
            for (std::size_t c = 0; c < 70; ++c) m.set(r, c, rng() & 1U);
        // last row is the sum of the first two
        for (std::size_t c = 0; c < 70; ++c) m.set(5, c, m.get(0, c) ^ m.get(1, c));
        const auto e = reduced_row_echelon(m);
        CHECK(e.rank() <= 5);
        for (std::size_t i = 0; i < e.rank(); ++i)
            for (std::size_t j = 0; j < e.rank(); ++j) CHECK(e.matrix.get(j, e.pivots[i]) == (i == j));
        CHECK(rank(m) == e.rank());
    }
}

TEST_CASE("left multiply and transpose product") {
    BinaryMatrix a(2, 3);
    a.set(0, 0);
    a.set(0, 1);
    a.set(1, 1);
    a.set(1, 2);
    BitVector x(2);
    x.set(0);
    x.set(1);
    const auto y = a.left_multiply(x);
    CHECK(y.get(0));
    CHECK_FALSE(y.get(1));
    CHECK(y.get(2));
    const auto p = multiply_transpose(a, a);
    CHECK_FALSE(p.get(0, 0));
    CHECK(p.get(0, 1));
    CHECK(p.get(1, 0));
    CHECK_FALSE(p.get(1, 1));
    CHECK_FALSE(is_zero(p));
}
