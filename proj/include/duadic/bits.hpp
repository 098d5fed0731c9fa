#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace duadic {

inline constexpr std::size_t kWordBits = 64;

constexpr std::size_t words_for_bits(std::size_t bits) noexcept {
    return (bits + kWordBits - 1) / kWordBits;
}

// Hex text of a little-endian word array, most significant nibble first,
// with a "0x" prefix. Bit 0 of word 0 is the least significant bit.
std::string words_to_hex(std::span<const std::uint64_t> words);

// Inverse of words_to_hex. Accepts an optional 0x/0X prefix.
std::vector<std::uint64_t> hex_to_words(std::string_view hex);

/// Fixed-length vector over GF(2), packed 64 coordinates per word.
class BitVector {
   public:
    BitVector() = default;
    explicit BitVector(std::size_t size) : size_(size), words_(words_for_bits(size), 0) {}

    static BitVector from_bits(std::span<const std::uint8_t> bits);
    static BitVector from_words(std::span<const std::uint64_t> words, std::size_t size);
    // Throws std::invalid_argument if a bit at index >= size is set.
    static BitVector from_hex(std::string_view hex, std::size_t size);

    std::size_t size() const noexcept { return size_; }
    bool get(std::size_t i) const noexcept { return (words_[i / kWordBits] >> (i % kWordBits)) & 1U; }
    void set(std::size_t i, bool value = true) noexcept {
        const std::uint64_t mask = std::uint64_t{1} << (i % kWordBits);
        if (value)
            words_[i / kWordBits] |= mask;
        else
            words_[i / kWordBits] &= ~mask;
    }
    void flip(std::size_t i) noexcept { words_[i / kWordBits] ^= std::uint64_t{1} << (i % kWordBits); }

    std::size_t weight() const noexcept;
    bool is_zero() const noexcept;

    BitVector& operator^=(const BitVector& rhs);
    friend BitVector operator^(BitVector lhs, const BitVector& rhs) { return lhs ^= rhs; }

    std::span<const std::uint64_t> words() const noexcept { return words_; }
    std::span<std::uint64_t> words() noexcept { return words_; }

    std::string to_hex() const { return words_to_hex(words_); }
    std::vector<std::uint8_t> to_bits() const;

    friend bool operator==(const BitVector&, const BitVector&) = default;

   private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

// GF(2) inner product of two equal-length vectors.
bool dot(const BitVector& a, const BitVector& b);

}  // namespace duadic
