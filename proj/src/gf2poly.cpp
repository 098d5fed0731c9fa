#include "duadic/gf2poly.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace duadic {

namespace {

// out ^= src * x^shift; out must be large enough.
void xor_shifted(std::vector<std::uint64_t>& out, std::span<const std::uint64_t> src, std::size_t shift) {
    const std::size_t word_shift = shift / kWordBits;
    const unsigned bit_shift = shift % kWordBits;
    if (bit_shift == 0) {
        for (std::size_t i = 0; i < src.size(); ++i) out[i + word_shift] ^= src[i];
        return;
    }
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < src.size(); ++i) {
        out[i + word_shift] ^= (src[i] << bit_shift) | carry;
        carry = src[i] >> (kWordBits - bit_shift);
    }
    if (carry) out[src.size() + word_shift] ^= carry;
}

int top_bit(std::span<const std::uint64_t> words, std::size_t upto_word) noexcept {
    for (std::size_t w = upto_word + 1; w-- > 0;)
        if (words[w]) return static_cast<int>(w * kWordBits) + 63 - std::countl_zero(words[w]);
    return kZeroDegree;
}

// Carry-less product of two values below 2^32.
std::uint64_t clmul32(std::uint64_t a, std::uint64_t b) noexcept {
    std::uint64_t r = 0;
    while (b) {
        if (b & 1U) r ^= a;
        a <<= 1;
        b >>= 1;
    }
    return r;
}

std::uint64_t reduce(std::uint64_t x, std::uint64_t modulus, int m) noexcept {
    for (int bit = 63; bit >= m; --bit)
        if ((x >> bit) & 1U) x ^= modulus << (bit - m);
    return x;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t modulus, int m) noexcept {
    return reduce(clmul32(a, b), modulus, m);
}

std::uint64_t powmod_x(std::uint64_t e, std::uint64_t modulus, int m) noexcept {
    std::uint64_t result = reduce(1, modulus, m);
    std::uint64_t base = reduce(2, modulus, m);
    while (e) {
        if (e & 1U) result = mulmod(result, base, modulus, m);
        base = mulmod(base, base, modulus, m);
        e >>= 1;
    }
    return result;
}

}  // namespace

BinaryPolynomial BinaryPolynomial::from_mask(std::uint64_t mask) {
    BinaryPolynomial p;
    if (mask) p.words_.push_back(mask);
    return p;
}

BinaryPolynomial BinaryPolynomial::from_exponents(std::initializer_list<std::size_t> exponents) {
    return from_exponents(std::span<const std::size_t>(exponents.begin(), exponents.size()));
}

BinaryPolynomial BinaryPolynomial::from_exponents(std::span<const std::size_t> exponents) {
    BinaryPolynomial p;
    for (auto e : exponents) {
        if (e / kWordBits >= p.words_.size()) p.words_.resize(e / kWordBits + 1, 0);
        p.words_[e / kWordBits] ^= std::uint64_t{1} << (e % kWordBits);
    }
    p.normalize();
    return p;
}

BinaryPolynomial BinaryPolynomial::from_words(std::vector<std::uint64_t> words) {
    BinaryPolynomial p;
    p.words_ = std::move(words);
    p.normalize();
    return p;
}

BinaryPolynomial BinaryPolynomial::from_hex(std::string_view hex) { return from_words(hex_to_words(hex)); }

BinaryPolynomial BinaryPolynomial::from_bits(const BitVector& bits) {
    return from_words(std::vector<std::uint64_t>(bits.words().begin(), bits.words().end()));
}

BinaryPolynomial BinaryPolynomial::monomial(std::size_t exponent) { return from_exponents({exponent}); }

BinaryPolynomial BinaryPolynomial::cyclic_modulus(std::size_t n) { return from_exponents({0, n}); }

void BinaryPolynomial::normalize() noexcept {
    while (!words_.empty() && words_.back() == 0) words_.pop_back();
}

int BinaryPolynomial::degree() const noexcept {
    if (words_.empty()) return kZeroDegree;
    return static_cast<int>((words_.size() - 1) * kWordBits) + 63 - std::countl_zero(words_.back());
}

void BinaryPolynomial::set_coefficient(std::size_t i, bool value) {
    if (i / kWordBits >= words_.size()) {
        if (!value) return;
        words_.resize(i / kWordBits + 1, 0);
    }
    const std::uint64_t mask = std::uint64_t{1} << (i % kWordBits);
    if (value)
        words_[i / kWordBits] |= mask;
    else
        words_[i / kWordBits] &= ~mask;
    normalize();
}

std::size_t BinaryPolynomial::weight() const noexcept {
    std::size_t w = 0;
    for (auto word : words_) w += static_cast<std::size_t>(std::popcount(word));
    return w;
}

BinaryPolynomial BinaryPolynomial::reciprocal() const {
    if (is_zero()) return {};
    const auto d = static_cast<std::size_t>(degree());
    BinaryPolynomial out;
    out.words_.assign(words_.size(), 0);
    for (std::size_t i = 0; i <= d; ++i)
        if (coefficient(i)) out.words_[(d - i) / kWordBits] |= std::uint64_t{1} << ((d - i) % kWordBits);
    out.normalize();
    return out;
}

BinaryPolynomial BinaryPolynomial::shifted(std::size_t k) const {
    if (is_zero()) return {};
    std::vector<std::uint64_t> out(words_for_bits(static_cast<std::size_t>(degree()) + k + 1), 0);
    xor_shifted(out, words_, k);
    return from_words(std::move(out));
}

std::uint64_t BinaryPolynomial::to_mask() const {
    if (words_.size() > 1) throw std::overflow_error("polynomial of degree " + std::to_string(degree()) + " does not fit a 64-bit mask");
    return words_.empty() ? 0 : words_[0];
}

std::string BinaryPolynomial::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        if (!coefficient(static_cast<std::size_t>(i))) continue;
        if (!out.empty()) out += '+';
        if (i == 0)
            out += '1';
        else if (i == 1)
            out += 'x';
        else
            out += "x^" + std::to_string(i);
    }
    return out;
}

BitVector BinaryPolynomial::to_bits(std::size_t n) const {
    if (degree() >= static_cast<int>(n)) throw std::invalid_argument("polynomial degree exceeds vector length");
    return BitVector::from_words(words_, n);
}

BinaryPolynomial& BinaryPolynomial::operator+=(const BinaryPolynomial& rhs) {
    if (rhs.words_.size() > words_.size()) words_.resize(rhs.words_.size(), 0);
    for (std::size_t i = 0; i < rhs.words_.size(); ++i) words_[i] ^= rhs.words_[i];
    normalize();
    return *this;
}

BinaryPolynomial operator*(const BinaryPolynomial& a, const BinaryPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    // Iterate over the sparser operand.
    const BinaryPolynomial& sparse = a.weight() <= b.weight() ? a : b;
    const BinaryPolynomial& dense = &sparse == &a ? b : a;
    std::vector<std::uint64_t> out(words_for_bits(static_cast<std::size_t>(a.degree() + b.degree()) + 1) + 1, 0);
    for (std::size_t w = 0; w < sparse.words_.size(); ++w) {
        std::uint64_t word = sparse.words_[w];
        while (word) {
            const auto bit = static_cast<std::size_t>(std::countr_zero(word));
            word &= word - 1;
            xor_shifted(out, dense.words_, w * kWordBits + bit);
        }
    }
    return BinaryPolynomial::from_words(std::move(out));
}

BinaryPolynomial poly_mul(const BinaryPolynomial& a, const BinaryPolynomial& b) { return a * b; }

PolyDivision poly_divmod(const BinaryPolynomial& a, const BinaryPolynomial& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    const int db = b.degree();
    int dr = a.degree();
    if (dr < db) return {BinaryPolynomial{}, a};

    std::vector<std::uint64_t> rem(a.words().begin(), a.words().end());
    rem.resize(rem.size() + 1, 0);
    std::vector<std::uint64_t> quot(words_for_bits(static_cast<std::size_t>(dr - db) + 1), 0);
    while (dr >= db) {
        const auto shift = static_cast<std::size_t>(dr - db);
        quot[shift / kWordBits] |= std::uint64_t{1} << (shift % kWordBits);
        xor_shifted(rem, b.words(), shift);
        dr = top_bit(rem, static_cast<std::size_t>(dr) / kWordBits);
    }
    return {BinaryPolynomial::from_words(std::move(quot)), BinaryPolynomial::from_words(std::move(rem))};
}

std::vector<std::uint64_t> prime_factors(std::uint64_t x) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t p = 2; p * p <= x; ++p) {
        if (x % p != 0) continue;
        out.push_back(p);
        while (x % p == 0) x /= p;
    }
    if (x > 1) out.push_back(x);
    return out;
}

bool is_primitive(const BinaryPolynomial& p, int m) {
    if (m < 1 || m > kMaxFieldDegree || p.degree() != m) return false;
    const std::uint64_t mask = p.to_mask();
    if ((mask & 1U) == 0) return false;  // x divides p
    const std::uint64_t n = (std::uint64_t{1} << m) - 1;
    // Order n forces irreducibility: a reducible modulus has fewer than n units.
    if (powmod_x(n, mask, m) != 1) return false;
    for (auto l : prime_factors(n))
        if (powmod_x(n / l, mask, m) == 1) return false;
    return true;
}

BinaryPolynomial default_primitive_poly(int m) {
    if (m < kMinFieldDegree || m > kMaxFieldDegree)
        throw std::invalid_argument("field degree must lie in [2, 32], got " + std::to_string(m));
    const std::uint64_t top = std::uint64_t{1} << m;
    for (std::uint64_t low = 1; low < top; low += 2) {
        auto p = BinaryPolynomial::from_mask(top | low);
        if (is_primitive(p, m)) return p;
    }
    throw std::logic_error("no primitive polynomial found for m = " + std::to_string(m));
}

FieldContext::FieldContext(int m) : FieldContext(m, default_primitive_poly(m)) {}

FieldContext::FieldContext(int m, const BinaryPolynomial& modulus)
    : m_(m), n_((std::uint64_t{1} << m) - 1), modulus_(modulus) {
    if (m < kMinFieldDegree || m > kMaxFieldDegree)
        throw std::invalid_argument("field degree must lie in [2, 32], got " + std::to_string(m));
    if (!is_primitive(modulus, m))
        throw std::invalid_argument("modulus " + modulus.to_string() + " is not primitive of degree " + std::to_string(m));
    modulus_mask_ = modulus.to_mask();
    if (m_ <= kTableFieldDegree) build_tables();
}

void FieldContext::build_tables() {
    exp_.resize(n_);
    log_.assign(n_ + 1, 0);
    std::uint64_t x = 1;
    for (std::uint64_t i = 0; i < n_; ++i) {
        exp_[i] = static_cast<Element>(x);
        log_[x] = static_cast<std::uint32_t>(i);
        x <<= 1;
        if (x >> m_) x ^= modulus_mask_;
    }
}

FieldContext::Element FieldContext::mul(Element a, Element b) const noexcept {
    if (a == 0 || b == 0) return 0;
    if (!exp_.empty()) {
        std::uint64_t e = std::uint64_t{log_[a]} + log_[b];
        if (e >= n_) e -= n_;
        return exp_[e];
    }
    return static_cast<Element>(mulmod(a, b, modulus_mask_, m_));
}

FieldContext::Element FieldContext::alpha_pow(std::uint64_t e) const noexcept {
    e %= n_;
    if (!exp_.empty()) return exp_[e];
    return static_cast<Element>(powmod_x(e, modulus_mask_, m_));
}

BinaryPolynomial minimal_polynomial(const FieldContext& ctx, const CyclotomicCoset& coset) {
    using Element = FieldContext::Element;
    std::vector<Element> coeffs{1};
    for (auto j : coset.members) {
        const Element root = ctx.alpha_pow(j);
        std::vector<Element> next(coeffs.size() + 1, 0);
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            next[i + 1] ^= coeffs[i];
            next[i] ^= ctx.mul(root, coeffs[i]);
        }
        coeffs = std::move(next);
    }
    BinaryPolynomial out;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] > 1)
            throw std::logic_error("minimal polynomial of coset " + std::to_string(coset.representative) +
                                   " has a coefficient outside GF(2)");
        if (coeffs[i]) out.set_coefficient(i, true);
    }
    return out;
}

}  // namespace duadic
