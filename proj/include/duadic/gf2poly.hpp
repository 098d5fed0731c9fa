#pragma once

// Polynomials over GF(2) and the extension field GF(2^m).

#include <cstdint>
#include <initializer_list>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "duadic/bits.hpp"
#include "duadic/cosets.hpp"

namespace duadic {

// Degree of the zero polynomial. Below every real degree, and far enough from
// INT_MIN that sums of two degrees stay negative without overflowing.
inline constexpr int kZeroDegree = std::numeric_limits<int>::min() / 4;

/// Polynomial over GF(2); bit i of the packed words is the coefficient of x^i.
class BinaryPolynomial {
   public:
    BinaryPolynomial() = default;

    static BinaryPolynomial from_mask(std::uint64_t mask);
    static BinaryPolynomial from_exponents(std::initializer_list<std::size_t> exponents);
    static BinaryPolynomial from_exponents(std::span<const std::size_t> exponents);
    static BinaryPolynomial from_words(std::vector<std::uint64_t> words);
    static BinaryPolynomial from_hex(std::string_view hex);
    static BinaryPolynomial from_bits(const BitVector& bits);
    static BinaryPolynomial monomial(std::size_t exponent);
    static BinaryPolynomial one() { return from_mask(1); }
    // x^n - 1 (= x^n + 1 over GF(2)).
    static BinaryPolynomial cyclic_modulus(std::size_t n);

    int degree() const noexcept;
    bool is_zero() const noexcept { return words_.empty(); }
    bool coefficient(std::size_t i) const noexcept {
        return i / kWordBits < words_.size() && ((words_[i / kWordBits] >> (i % kWordBits)) & 1U);
    }
    void set_coefficient(std::size_t i, bool value);
    std::size_t weight() const noexcept;

    // x^deg p(1/x).
    BinaryPolynomial reciprocal() const;
    BinaryPolynomial shifted(std::size_t k) const;

    // Coefficient mask; throws std::overflow_error if degree >= 64.
    std::uint64_t to_mask() const;
    std::string to_hex() const { return words_to_hex(words_); }
    // Human-readable form, e.g. "x^7+x+1".
    std::string to_string() const;
    // Coefficient vector of length n. Throws if degree >= n.
    BitVector to_bits(std::size_t n) const;

    std::span<const std::uint64_t> words() const noexcept { return words_; }

    BinaryPolynomial& operator+=(const BinaryPolynomial& rhs);
    friend BinaryPolynomial operator+(BinaryPolynomial lhs, const BinaryPolynomial& rhs) { return lhs += rhs; }
    friend BinaryPolynomial operator*(const BinaryPolynomial& a, const BinaryPolynomial& b);

    friend bool operator==(const BinaryPolynomial&, const BinaryPolynomial&) = default;

   private:
    void normalize() noexcept;
    std::vector<std::uint64_t> words_;
};

struct PolyDivision {
    BinaryPolynomial quotient;
    BinaryPolynomial remainder;
};

BinaryPolynomial poly_mul(const BinaryPolynomial& a, const BinaryPolynomial& b);

// Throws std::domain_error when the divisor is zero.
PolyDivision poly_divmod(const BinaryPolynomial& a, const BinaryPolynomial& b);

inline BinaryPolynomial poly_mod(const BinaryPolynomial& a, const BinaryPolynomial& b) {
    return poly_divmod(a, b).remainder;
}

// Distinct prime factors of x, ascending.
std::vector<std::uint64_t> prime_factors(std::uint64_t x);

inline constexpr int kMinFieldDegree = 2;
inline constexpr int kMaxFieldDegree = 32;

/// True iff p has degree m, is irreducible and x has multiplicative order
/// 2^m - 1 modulo p. Requires 1 <= m <= kMaxFieldDegree.
bool is_primitive(const BinaryPolynomial& p, int m);

/// Smallest primitive polynomial of degree m, comparing coefficient masks
/// as integers. Throws std::invalid_argument for m outside [2, 32].
BinaryPolynomial default_primitive_poly(int m);

/// GF(2^m) built on a primitive modulus; alpha is the residue class of x.
///
/// Elements are coefficient masks of degree < m. Immutable after
/// construction. Uses log/antilog tables for m <= kTableFieldDegree and
/// shift-and-add multiplication above that.
class FieldContext {
   public:
    using Element = std::uint32_t;
    static constexpr int kTableFieldDegree = 16;

    explicit FieldContext(int m);
    // Throws std::invalid_argument unless modulus is primitive of degree m.
    FieldContext(int m, const BinaryPolynomial& modulus);

    int m() const noexcept { return m_; }
    std::uint64_t n() const noexcept { return n_; }
    const BinaryPolynomial& modulus() const noexcept { return modulus_; }

    static Element add(Element a, Element b) noexcept { return a ^ b; }
    Element mul(Element a, Element b) const noexcept;
    // alpha^e, e taken mod n.
    Element alpha_pow(std::uint64_t e) const noexcept;

   private:
    void build_tables();

    int m_ = 0;
    std::uint64_t n_ = 0;
    BinaryPolynomial modulus_;
    std::uint64_t modulus_mask_ = 0;
    std::vector<Element> exp_;
    std::vector<std::uint32_t> log_;
};

/// prod_{j in coset} (x - alpha^j), computed in GF(2^m)[x].
///
/// Throws std::logic_error if a coefficient falls outside GF(2), which
/// means the coset is not closed under doubling mod n.
BinaryPolynomial minimal_polynomial(const FieldContext& ctx, const CyclotomicCoset& coset);

}  // namespace duadic
