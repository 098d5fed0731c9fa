#pragma once

// Combinatorics on Z_n for n = 2^m - 1: 2-cyclotomic cosets, the base-2
// weight function, weight-class defining sets and splittings of Z_n.

#include <cstdint>
#include <span>
#include <vector>

namespace duadic {

using Residue = std::uint32_t;

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) noexcept;

// Inverse of u modulo n. Throws std::invalid_argument when gcd(u, n) != 1.
std::uint64_t inverse_mod(std::uint64_t u, std::uint64_t n);

/// Orbit of a residue under doubling mod n.
struct CyclotomicCoset {
    Residue representative = 0;
    std::vector<Residue> members;  // sorted ascending

    std::size_t size() const noexcept { return members.size(); }
    friend bool operator==(const CyclotomicCoset&, const CyclotomicCoset&) = default;
};

/// A subset of Z_n given by sorted residues, with a membership bitmap.
///
/// The set itself need not be conjugate-closed; callers that build codes
/// check that with is_conjugate_closed().
class DefiningSet {
   public:
    DefiningSet() = default;
    // Sorts and deduplicates. Throws std::invalid_argument on residues >= n.
    DefiningSet(std::uint32_t n, std::vector<Residue> members);

    static DefiningSet from_cosets(std::uint32_t n, std::span<const CyclotomicCoset> cosets);

    std::uint32_t n() const noexcept { return n_; }
    std::span<const Residue> members() const noexcept { return members_; }
    std::size_t size() const noexcept { return members_.size(); }
    bool empty() const noexcept { return members_.empty(); }
    bool contains(std::uint64_t residue) const noexcept {
        return residue < n_ && ((bitmap_[residue / 64] >> (residue % 64)) & 1U);
    }

    bool is_conjugate_closed() const noexcept;

    // Z_n \ T
    DefiningSet complement() const;
    // T ∪ {r}
    DefiningSet with(Residue r) const;

    friend bool operator==(const DefiningSet& a, const DefiningSet& b) noexcept {
        return a.n_ == b.n_ && a.members_ == b.members_;
    }

   private:
    std::uint32_t n_ = 0;
    std::vector<Residue> members_;
    std::vector<std::uint64_t> bitmap_;
};

/// (S1, S2, mu) with S1, S2 partitioning Z_n \ {0} and mu swapping them.
struct Splitting {
    DefiningSet s1;
    DefiningSet s2;
    std::uint64_t mu = 0;
};

int base2_weight(std::uint64_t i) noexcept;

// Throws std::invalid_argument for even n or n == 0.
CyclotomicCoset cyclotomic_coset(std::uint64_t s, std::uint32_t n);

// Partition of Z_n into cosets, ordered by representative.
std::vector<CyclotomicCoset> all_cosets(std::uint32_t n);

inline constexpr int kMaxWeightSetDegree = 24;

/// T_[r,m,S] = {1 <= i <= 2^m - 2 : w_2(i) mod r in S}.
///
/// S is a subset of Z_r; duplicates are ignored. Throws std::invalid_argument
/// when S is empty, equals Z_r, contains a value outside [0, r), or when
/// r < 2 or m is outside [3, kMaxWeightSetDegree].
DefiningSet weight_defining_set(int r, int m, std::span<const int> subset);

// {u*t mod n}. Throws std::invalid_argument when gcd(u, n) != 1.
DefiningSet scale_set(const DefiningSet& set, std::uint64_t unit);

// -T mod n.
inline DefiningSet negate_set(const DefiningSet& set) { return scale_set(set, set.n() - 1); }

bool is_splitting(const DefiningSet& s1, const DefiningSet& s2, std::uint64_t mu);

/// One duadic splitting found by duadic_scan.
struct DuadicPair {
    int r = 0;
    int m = 0;
    std::vector<int> subset;      // canonical: lexicographically smaller of the pair
    std::vector<int> complement;  // Z_r \ subset
    std::uint64_t mu = 0;

    friend bool operator==(const DuadicPair&, const DuadicPair&) = default;
};

struct ScanOptions {
    // Search every unit for a swapping multiplier instead of only -1.
    bool any_unit = false;
};

/// All S of size r/2 (one per complementary pair) such that
/// (T_[r,m,S], T_[r,m,Z_r\S], mu) is a splitting of Z_{2^m-1}.
///
/// Requires r even and m odd; throws std::invalid_argument otherwise.
std::vector<DuadicPair> duadic_scan(int r, int m, ScanOptions options = {});

// Z_r \ subset, sorted.
std::vector<int> complement_subset(int r, std::span<const int> subset);

}  // namespace duadic
