#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "duadic/bits.hpp"

namespace duadic {

/// Dense GF(2) matrix with bit-packed rows.
class BinaryMatrix {
   public:
    BinaryMatrix() = default;
    BinaryMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), stride_(words_for_bits(cols)), data_(rows * stride_, 0) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    std::size_t stride() const noexcept { return stride_; }

    bool get(std::size_t r, std::size_t c) const noexcept {
        return (data_[r * stride_ + c / kWordBits] >> (c % kWordBits)) & 1U;
    }
    void set(std::size_t r, std::size_t c, bool value = true) noexcept {
        const std::uint64_t mask = std::uint64_t{1} << (c % kWordBits);
        auto& w = data_[r * stride_ + c / kWordBits];
        w = value ? (w | mask) : (w & ~mask);
    }

    std::span<std::uint64_t> row(std::size_t r) noexcept { return {data_.data() + r * stride_, stride_}; }
    std::span<const std::uint64_t> row(std::size_t r) const noexcept { return {data_.data() + r * stride_, stride_}; }

    void set_row(std::size_t r, const BitVector& v);
    BitVector row_vector(std::size_t r) const { return BitVector::from_words(row(r), cols_); }
    std::size_t row_weight(std::size_t r) const noexcept;

    // row(dst) ^= row(src)
    void xor_row(std::size_t dst, std::size_t src) noexcept {
        auto* d = data_.data() + dst * stride_;
        const auto* s = data_.data() + src * stride_;
        for (std::size_t i = 0; i < stride_; ++i) d[i] ^= s[i];
    }
    void swap_rows(std::size_t a, std::size_t b) noexcept;

    // Copy with columns reordered: column j of the result is column order[j].
    BinaryMatrix permute_columns(std::span<const std::size_t> order) const;

    // x * M for a row vector x of length rows().
    BitVector left_multiply(const BitVector& x) const;

    friend bool operator==(const BinaryMatrix&, const BinaryMatrix&) = default;

   private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::size_t stride_ = 0;
    std::vector<std::uint64_t> data_;
};

/// Reduced row echelon form with the pivot column of each nonzero row.
struct EchelonForm {
    BinaryMatrix matrix;              // rows [0, rank) are the nonzero rows
    std::vector<std::size_t> pivots;  // pivots[i] is the pivot column of row i
    std::size_t rank() const noexcept { return pivots.size(); }
};

/// Gauss-Jordan elimination visiting candidate pivot columns in the given
/// order (all columns ascending when empty). Columns not listed are never
/// chosen as pivots but are still reduced.
EchelonForm reduced_row_echelon(BinaryMatrix m, std::span<const std::size_t> column_order = {});

std::size_t rank(const BinaryMatrix& m);

// A * B^T
BinaryMatrix multiply_transpose(const BinaryMatrix& a, const BinaryMatrix& b);

bool is_zero(const BinaryMatrix& m) noexcept;

}  // namespace duadic
