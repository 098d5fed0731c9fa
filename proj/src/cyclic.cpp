#include "duadic/cyclic.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace duadic {

namespace {

// Parity of sum_i g_i g_{i+lag}, i.e. of the inner product of g and x^lag g.
bool shifted_self_product(const BinaryPolynomial& g, std::size_t lag) {
    const auto words = g.words();
    const std::size_t ws = lag / kWordBits;
    const unsigned bs = lag % kWordBits;
    unsigned parity = 0;
    for (std::size_t i = ws; i < words.size(); ++i) {
        std::uint64_t shifted = words[i - ws] << bs;
        if (bs != 0 && i - ws >= 1) shifted |= words[i - ws - 1] >> (kWordBits - bs);
        parity ^= static_cast<unsigned>(std::popcount(shifted & words[i]));
    }
    return parity & 1U;
}

}  // namespace

CyclicCode::CyclicCode(DefiningSet defining_set, BinaryPolynomial generator)
    : defining_set_(std::move(defining_set)), generator_(std::move(generator)) {
    const auto n = defining_set_.n();
    if (n == 0 || n % 2 == 0) throw std::invalid_argument("cyclic code length must be odd, got " + std::to_string(n));
    if (!defining_set_.is_conjugate_closed()) throw std::invalid_argument("defining set is not closed under doubling mod n");
    if (generator_.degree() != static_cast<int>(defining_set_.size()))
        throw std::invalid_argument("generator degree " + std::to_string(generator_.degree()) + " does not match |T| = " +
                                    std::to_string(defining_set_.size()));
    if (!poly_mod(BinaryPolynomial::cyclic_modulus(n), generator_).is_zero())
        throw std::invalid_argument("generator does not divide x^n - 1");
}

BinaryPolynomial CyclicCode::check_polynomial() const {
    return poly_divmod(BinaryPolynomial::cyclic_modulus(n()), generator_).quotient;
}

CyclicCode from_defining_set(const FieldContext& ctx, const DefiningSet& set) {
    if (set.n() != ctx.n())
        throw std::invalid_argument("defining set modulus " + std::to_string(set.n()) + " does not match field order " +
                                    std::to_string(ctx.n()));
    if (!set.is_conjugate_closed()) throw std::invalid_argument("defining set is not closed under doubling mod n");
    std::vector<bool> seen(set.n(), false);
    BinaryPolynomial g = BinaryPolynomial::one();
    for (auto t : set.members()) {
        if (seen[t]) continue;
        const auto coset = cyclotomic_coset(t, set.n());
        for (auto r : coset.members) seen[r] = true;
        g = g * minimal_polynomial(ctx, coset);
    }
    return CyclicCode(set, std::move(g));
}

CyclicCode weight_class_code(const FieldContext& ctx, int r, std::span<const int> subset) {
    return from_defining_set(ctx, weight_defining_set(r, ctx.m(), subset));
}

BitVector encode(const CyclicCode& code, const BitVector& message) {
    if (message.size() != code.dimension())
        throw std::invalid_argument("message length " + std::to_string(message.size()) + " differs from dimension " +
                                    std::to_string(code.dimension()));
    return (BinaryPolynomial::from_bits(message) * code.generator()).to_bits(code.n());
}

bool contains(const CyclicCode& code, const BitVector& word) {
    if (word.size() != code.n()) throw std::invalid_argument("word length differs from code length");
    return poly_mod(BinaryPolynomial::from_bits(word), code.generator()).is_zero();
}

BinaryMatrix generator_matrix(const CyclicCode& code, MatrixForm form) {
    const std::size_t k = code.dimension();
    BinaryMatrix g(k, code.n());
    for (std::size_t j = 0; j < k; ++j) g.set_row(j, code.generator().shifted(j).to_bits(code.n()));
    if (form == MatrixForm::kCyclic) return g;
    return reduced_row_echelon(std::move(g)).matrix;
}

CyclicCode dual(const CyclicCode& code) {
    auto set = negate_set(code.defining_set().complement());
    return CyclicCode(std::move(set), code.check_polynomial().reciprocal());
}

CyclicCode even_weight_subcode(const CyclicCode& code) {
    if (code.defining_set().contains(0)) throw std::invalid_argument("0 is already in the defining set; the code is its own even-weight subcode");
    return CyclicCode(code.defining_set().with(0), code.generator() * BinaryPolynomial::from_mask(0b11));
}

ExtendedCodeView extend(const CyclicCode& code) {
    const std::size_t k = code.dimension();
    const std::size_t n = code.n();
    BinaryMatrix g(k, n + 1);
    const bool parity = code.generator().weight() % 2 == 1;
    for (std::size_t j = 0; j < k; ++j) {
        auto row = code.generator().shifted(j);
        if (parity) row.set_coefficient(n, true);
        g.set_row(j, row.to_bits(n + 1));
    }
    return ExtendedCodeView(code, std::move(g));
}

// Rows of the extended matrix are (x^j g, p) with p = wt(g) mod 2, so the
// Gram entry (i, j) is <g, x^|i-j| g> + p and only k lags need checking.
bool is_self_dual(const ExtendedCodeView& ext) {
    if (2 * std::size_t{ext.dimension()} != ext.length()) return false;
    const auto& g = ext.base().generator();
    const bool parity = g.weight() % 2 == 1;
    for (std::size_t lag = 0; lag < ext.dimension(); ++lag)
        if (shifted_self_product(g, lag) != parity) return false;
    return true;
}

bool is_doubly_even(const ExtendedCodeView& ext) {
    const auto& g = ext.base().generator();
    const std::size_t parity = g.weight() % 2;
    if ((g.weight() + parity) % 4 != 0) return false;
    for (std::size_t lag = 1; lag < ext.dimension(); ++lag)
        if (shifted_self_product(g, lag) != (parity == 1)) return false;
    return true;
}

bool gram_is_zero(const BinaryMatrix& g) { return is_zero(multiply_transpose(g, g)); }

bool basis_doubly_even(const BinaryMatrix& g) {
    for (std::size_t r = 0; r < g.rows(); ++r)
        if (g.row_weight(r) % 4 != 0) return false;
    const auto gram = multiply_transpose(g, g);
    return is_zero(gram);
}

}  // namespace duadic
