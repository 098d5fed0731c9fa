#include "duadic/bitmatrix.hpp"

#include <bit>
#include <numeric>
#include <stdexcept>

namespace duadic {

void BinaryMatrix::set_row(std::size_t r, const BitVector& v) {
    if (v.size() != cols_) throw std::invalid_argument("row length mismatch");
    auto dst = row(r);
    const auto src = v.words();
    for (std::size_t i = 0; i < stride_; ++i) dst[i] = src[i];
}

std::size_t BinaryMatrix::row_weight(std::size_t r) const noexcept {
    std::size_t w = 0;
    for (auto word : row(r)) w += static_cast<std::size_t>(std::popcount(word));
    return w;
}

void BinaryMatrix::swap_rows(std::size_t a, std::size_t b) noexcept {
    if (a == b) return;
    auto ra = row(a);
    auto rb = row(b);
    for (std::size_t i = 0; i < stride_; ++i) std::swap(ra[i], rb[i]);
}

BinaryMatrix BinaryMatrix::permute_columns(std::span<const std::size_t> order) const {
    if (order.size() != cols_) throw std::invalid_argument("column permutation has wrong length");
    BinaryMatrix out(rows_, cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t j = 0; j < cols_; ++j)
            if (get(r, order[j])) out.set(r, j);
    return out;
}

BitVector BinaryMatrix::left_multiply(const BitVector& x) const {
    if (x.size() != rows_) throw std::invalid_argument("vector length does not match matrix rows");
    BitVector out(cols_);
    auto dst = out.words();
    for (std::size_t r = 0; r < rows_; ++r) {
        if (!x.get(r)) continue;
        const auto src = row(r);
        for (std::size_t i = 0; i < stride_; ++i) dst[i] ^= src[i];
    }
    return out;
}

EchelonForm reduced_row_echelon(BinaryMatrix m, std::span<const std::size_t> column_order) {
    std::vector<std::size_t> default_order;
    if (column_order.empty()) {
        default_order.resize(m.cols());
        std::iota(default_order.begin(), default_order.end(), std::size_t{0});
        column_order = default_order;
    }
    EchelonForm out;
    std::size_t next = 0;
    for (auto col : column_order) {
        if (next == m.rows()) break;
        std::size_t pivot = next;
        while (pivot < m.rows() && !m.get(pivot, col)) ++pivot;
        if (pivot == m.rows()) continue;
        m.swap_rows(pivot, next);
        for (std::size_t r = 0; r < m.rows(); ++r)
            if (r != next && m.get(r, col)) m.xor_row(r, next);
        out.pivots.push_back(col);
        ++next;
    }
    out.matrix = std::move(m);
    return out;
}

std::size_t rank(const BinaryMatrix& m) { return reduced_row_echelon(m).rank(); }

BinaryMatrix multiply_transpose(const BinaryMatrix& a, const BinaryMatrix& b) {
    if (a.cols() != b.cols()) throw std::invalid_argument("matrix widths differ");
    BinaryMatrix out(a.rows(), b.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        const auto ra = a.row(i);
        for (std::size_t j = 0; j < b.rows(); ++j) {
            const auto rb = b.row(j);
            unsigned parity = 0;
            for (std::size_t w = 0; w < a.stride(); ++w) parity ^= static_cast<unsigned>(std::popcount(ra[w] & rb[w]));
            if (parity & 1U) out.set(i, j);
        }
    }
    return out;
}

bool is_zero(const BinaryMatrix& m) noexcept {
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (auto w : m.row(r))
            if (w) return false;
    return true;
}

}  // namespace duadic
