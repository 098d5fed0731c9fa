#include "duadic/bits.hpp"

#include <bit>
#include <stdexcept>

namespace duadic {

std::string words_to_hex(std::span<const std::uint64_t> words) {
    static constexpr char kDigits[] = "0123456789abcdef";
    std::size_t top = words.size();
    while (top > 0 && words[top - 1] == 0) --top;
    if (top == 0) return "0x0";

    std::string out = "0x";
    bool leading = true;
    for (std::size_t w = top; w-- > 0;) {
        for (int nib = 15; nib >= 0; --nib) {
            const unsigned d = (words[w] >> (4 * nib)) & 0xFU;
            if (leading && d == 0) continue;
            leading = false;
            out.push_back(kDigits[d]);
        }
    }
    return out;
}

std::vector<std::uint64_t> hex_to_words(std::string_view hex) {
    if (hex.starts_with("0x") || hex.starts_with("0X")) hex.remove_prefix(2);
    if (hex.empty()) throw std::invalid_argument("empty hex string");

    std::vector<std::uint64_t> words(words_for_bits(4 * hex.size()), 0);
    std::size_t bit = 0;
    for (std::size_t i = hex.size(); i-- > 0; bit += 4) {
        const char c = hex[i];
        unsigned d;
        if (c >= '0' && c <= '9')
            d = static_cast<unsigned>(c - '0');
        else if (c >= 'a' && c <= 'f')
            d = static_cast<unsigned>(c - 'a' + 10);
        else if (c >= 'A' && c <= 'F')
            d = static_cast<unsigned>(c - 'A' + 10);
        else
            throw std::invalid_argument("invalid hex digit in '" + std::string(hex) + "'");
        words[bit / kWordBits] |= std::uint64_t{d} << (bit % kWordBits);
    }
    while (!words.empty() && words.back() == 0) words.pop_back();
    return words;
}

BitVector BitVector::from_bits(std::span<const std::uint8_t> bits) {
    BitVector v(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i)
        if (bits[i] & 1U) v.set(i);
    return v;
}

BitVector BitVector::from_words(std::span<const std::uint64_t> words, std::size_t size) {
    BitVector v(size);
    for (std::size_t w = 0; w < words.size(); ++w) {
        if (w >= v.words_.size()) {
            if (words[w] != 0) throw std::invalid_argument("bit vector value exceeds its length");
            continue;
        }
        v.words_[w] = words[w];
    }
    if (size % kWordBits != 0 && !v.words_.empty()) {
        const std::uint64_t mask = (std::uint64_t{1} << (size % kWordBits)) - 1;
        if (v.words_.back() & ~mask) throw std::invalid_argument("bit vector value exceeds its length");
    }
    return v;
}

BitVector BitVector::from_hex(std::string_view hex, std::size_t size) {
    return from_words(hex_to_words(hex), size);
}

std::size_t BitVector::weight() const noexcept {
    std::size_t w = 0;
    for (auto word : words_) w += static_cast<std::size_t>(std::popcount(word));
    return w;
}

bool BitVector::is_zero() const noexcept {
    for (auto word : words_)
        if (word) return false;
    return true;
}

BitVector& BitVector::operator^=(const BitVector& rhs) {
    if (rhs.size_ != size_) throw std::invalid_argument("bit vector length mismatch");
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= rhs.words_[i];
    return *this;
}

std::vector<std::uint8_t> BitVector::to_bits() const {
    std::vector<std::uint8_t> out(size_);
    for (std::size_t i = 0; i < size_; ++i) out[i] = get(i) ? 1 : 0;
    return out;
}

bool dot(const BitVector& a, const BitVector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("bit vector length mismatch");
    unsigned parity = 0;
    const auto aw = a.words();
    const auto bw = b.words();
    for (std::size_t i = 0; i < aw.size(); ++i) parity ^= static_cast<unsigned>(std::popcount(aw[i] & bw[i]));
    return parity & 1U;
}

}  // namespace duadic
