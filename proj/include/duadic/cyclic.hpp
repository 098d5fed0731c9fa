#pragma once

// Binary cyclic codes of odd length n built from defining sets, together
// with their duals, even-weight subcodes and parity-extended views.

#include <cstdint>
#include <span>
#include <utility>

#include "duadic/bitmatrix.hpp"
#include "duadic/bits.hpp"
#include "duadic/cosets.hpp"
#include "duadic/gf2poly.hpp"

namespace duadic {

/// Cyclic code <g(x)> in GF(2)[x]/(x^n - 1) with its defining set.
class CyclicCode {
   public:
    // Validates that n is odd, the defining set is conjugate-closed,
    // deg g = |T| and g divides x^n - 1; throws std::invalid_argument.
    CyclicCode(DefiningSet defining_set, BinaryPolynomial generator);

    std::uint32_t n() const noexcept { return defining_set_.n(); }
    std::uint32_t dimension() const noexcept { return n() - static_cast<std::uint32_t>(defining_set_.size()); }
    const DefiningSet& defining_set() const noexcept { return defining_set_; }
    const BinaryPolynomial& generator() const noexcept { return generator_; }
    // h(x) = (x^n - 1) / g(x)
    BinaryPolynomial check_polynomial() const;

    friend bool operator==(const CyclicCode& a, const CyclicCode& b) noexcept {
        return a.defining_set_ == b.defining_set_ && a.generator_ == b.generator_;
    }

   private:
    DefiningSet defining_set_;
    BinaryPolynomial generator_;
};

/// Generator = product of the minimal polynomials of the cosets in T.
/// Throws std::invalid_argument when T is not conjugate-closed or is
/// defined over a modulus other than ctx.n().
CyclicCode from_defining_set(const FieldContext& ctx, const DefiningSet& set);

// C_[r,m,S] with the field's primitive element.
CyclicCode weight_class_code(const FieldContext& ctx, int r, std::span<const int> subset);

BitVector encode(const CyclicCode& code, const BitVector& message);
bool contains(const CyclicCode& code, const BitVector& word);

enum class MatrixForm { kCyclic, kSystematic };

/// k x n generator matrix. Cyclic form has row j = x^j g(x); systematic
/// form is its reduced row echelon form (identity on the first k columns,
/// since any k consecutive positions of a cyclic code are an information set).
BinaryMatrix generator_matrix(const CyclicCode& code, MatrixForm form = MatrixForm::kCyclic);

/// Dual code: defining set -(Z_n \ T), generator the reciprocal of h(x).
CyclicCode dual(const CyclicCode& code);

/// Defining set T ∪ {0}, generator (x + 1) g(x). Throws std::invalid_argument
/// when 0 is already in T.
CyclicCode even_weight_subcode(const CyclicCode& code);

/// Code of length n + 1 obtained by appending an overall parity bit.
class ExtendedCodeView {
   public:
    const CyclicCode& base() const noexcept { return base_; }
    std::uint32_t length() const noexcept { return base_.n() + 1; }
    std::uint32_t dimension() const noexcept { return base_.dimension(); }
    // Rows are x^j g(x) followed by their parity bit in the last column.
    const BinaryMatrix& generator_matrix() const& noexcept { return matrix_; }
    BinaryMatrix generator_matrix() && { return std::move(matrix_); }

   private:
    friend ExtendedCodeView extend(const CyclicCode& code);
    ExtendedCodeView(CyclicCode base, BinaryMatrix matrix) : base_(std::move(base)), matrix_(std::move(matrix)) {}

    CyclicCode base_;
    BinaryMatrix matrix_;
};

ExtendedCodeView extend(const CyclicCode& code);

/// 2k = n + 1 and G G^T = 0.
bool is_self_dual(const ExtendedCodeView& ext);

/// Every basis row has weight divisible by 4 and every pair of rows meets
/// in an even number of positions; sufficient for all weights = 0 mod 4.
bool is_doubly_even(const ExtendedCodeView& ext);

// Matrix-level versions of the two checks above, O(k^2 n); used to cross-check.
bool gram_is_zero(const BinaryMatrix& g);
bool basis_doubly_even(const BinaryMatrix& g);

}  // namespace duadic
