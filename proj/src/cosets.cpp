#include "duadic/cosets.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace duadic {

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) noexcept {
    while (b != 0) {
        const std::uint64_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

std::uint64_t inverse_mod(std::uint64_t u, std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("modulus must be positive");
    if (n == 1) return 0;
    std::int64_t old_r = static_cast<std::int64_t>(u % n), r = static_cast<std::int64_t>(n);
    std::int64_t old_s = 1, s = 0;
    while (r != 0) {
        const std::int64_t q = old_r / r;
        std::int64_t t = old_r - q * r;
        old_r = r;
        r = t;
        t = old_s - q * s;
        old_s = s;
        s = t;
    }
    if (old_r != 1) throw std::invalid_argument(std::to_string(u) + " is not a unit mod " + std::to_string(n));
    const auto sn = static_cast<std::int64_t>(n);
    return static_cast<std::uint64_t>(((old_s % sn) + sn) % sn);
}

DefiningSet::DefiningSet(std::uint32_t n, std::vector<Residue> members)
    : n_(n), members_(std::move(members)), bitmap_((n + 63) / 64, 0) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    for (auto r : members_) {
        if (r >= n_) throw std::invalid_argument("residue " + std::to_string(r) + " out of range for n = " + std::to_string(n_));
        bitmap_[r / 64] |= std::uint64_t{1} << (r % 64);
    }
}

DefiningSet DefiningSet::from_cosets(std::uint32_t n, std::span<const CyclotomicCoset> cosets) {
    std::vector<Residue> members;
    for (const auto& c : cosets) members.insert(members.end(), c.members.begin(), c.members.end());
    return DefiningSet(n, std::move(members));
}

bool DefiningSet::is_conjugate_closed() const noexcept {
    for (auto r : members_)
        if (!contains((2 * std::uint64_t{r}) % n_)) return false;
    return true;
}

DefiningSet DefiningSet::complement() const {
    std::vector<Residue> out;
    out.reserve(n_ - members_.size());
    for (Residue r = 0; r < n_; ++r)
        if (!contains(r)) out.push_back(r);
    return DefiningSet(n_, std::move(out));
}

DefiningSet DefiningSet::with(Residue r) const {
    auto members = members_;
    members.push_back(r);
    return DefiningSet(n_, std::move(members));
}

int base2_weight(std::uint64_t i) noexcept { return std::popcount(i); }

CyclotomicCoset cyclotomic_coset(std::uint64_t s, std::uint32_t n) {
    if (n == 0 || n % 2 == 0) throw std::invalid_argument("cyclotomic cosets need an odd modulus, got " + std::to_string(n));
    CyclotomicCoset coset;
    const std::uint64_t start = s % n;
    std::uint64_t x = start;
    do {
        coset.members.push_back(static_cast<Residue>(x));
        x = (2 * x) % n;
    } while (x != start);
    std::sort(coset.members.begin(), coset.members.end());
    coset.representative = coset.members.front();
    return coset;
}

std::vector<CyclotomicCoset> all_cosets(std::uint32_t n) {
    if (n == 0 || n % 2 == 0) throw std::invalid_argument("cyclotomic cosets need an odd modulus, got " + std::to_string(n));
    std::vector<CyclotomicCoset> out;
    std::vector<bool> seen(n, false);
    for (std::uint32_t s = 0; s < n; ++s) {
        if (seen[s]) continue;
        auto c = cyclotomic_coset(s, n);
        for (auto r : c.members) seen[r] = true;
        out.push_back(std::move(c));
    }
    return out;
}

namespace {

std::uint32_t subset_mask(int r, std::span<const int> subset) {
    if (r < 2 || r > 31) throw std::invalid_argument("r must lie in [2, 31], got " + std::to_string(r));
    std::uint32_t mask = 0;
    for (int s : subset) {
        if (s < 0 || s >= r) throw std::invalid_argument("subset element " + std::to_string(s) + " outside Z_" + std::to_string(r));
        mask |= std::uint32_t{1} << s;
    }
    return mask;
}

DefiningSet weight_set_from_mask(int r, int m, std::uint32_t mask) {
    const std::uint64_t n = (std::uint64_t{1} << m) - 1;
    std::vector<Residue> members;
    for (std::uint64_t i = 1; i < n; ++i)
        if ((mask >> (std::popcount(i) % r)) & 1U) members.push_back(static_cast<Residue>(i));
    return DefiningSet(static_cast<std::uint32_t>(n), std::move(members));
}

}  // namespace

DefiningSet weight_defining_set(int r, int m, std::span<const int> subset) {
    if (m < 3 || m > kMaxWeightSetDegree)
        throw std::invalid_argument("m must lie in [3, " + std::to_string(kMaxWeightSetDegree) + "], got " + std::to_string(m));
    const std::uint32_t mask = subset_mask(r, subset);
    const std::uint32_t full = (std::uint32_t{1} << r) - 1;
    if (mask == 0) throw std::invalid_argument("weight class subset must be nonempty");
    if (mask == full) throw std::invalid_argument("weight class subset must be a proper subset of Z_r");
    return weight_set_from_mask(r, m, mask);
}

DefiningSet scale_set(const DefiningSet& set, std::uint64_t unit) {
    const std::uint64_t n = set.n();
    if (gcd_u64(unit % n, n) != 1) throw std::invalid_argument(std::to_string(unit) + " is not a unit mod " + std::to_string(n));
    std::vector<Residue> out;
    out.reserve(set.size());
    const std::uint64_t u = unit % n;
    for (auto t : set.members()) out.push_back(static_cast<Residue>((u * t) % n));
    return DefiningSet(set.n(), std::move(out));
}

bool is_splitting(const DefiningSet& s1, const DefiningSet& s2, std::uint64_t mu) {
    const std::uint64_t n = s1.n();
    if (s2.n() != n || n == 0) return false;
    if (gcd_u64(mu % n, n) != 1) return false;
    if (s1.contains(0) || s2.contains(0)) return false;
    if (s1.size() + s2.size() != n - 1) return false;
    for (auto t : s1.members())
        if (s2.contains(t)) return false;
    if (!s1.is_conjugate_closed() || !s2.is_conjugate_closed()) return false;
    if (s1.size() != s2.size()) return false;
    const std::uint64_t u = mu % n;
    for (auto t : s1.members())
        if (!s2.contains((u * t) % n)) return false;
    for (auto t : s2.members())
        if (!s1.contains((u * t) % n)) return false;
    return true;
}

std::vector<int> complement_subset(int r, std::span<const int> subset) {
    const std::uint32_t mask = subset_mask(r, subset);
    std::vector<int> out;
    for (int i = 0; i < r; ++i)
        if (!((mask >> i) & 1U)) out.push_back(i);
    return out;
}

std::vector<DuadicPair> duadic_scan(int r, int m, ScanOptions options) {
    if (r < 2 || r % 2 != 0 || r > 30) throw std::invalid_argument("duadic scan needs an even r in [2, 30], got " + std::to_string(r));
    if (m % 2 == 0) throw std::invalid_argument("duadic scan needs odd m, got " + std::to_string(m));
    if (m < 3 || m > kMaxWeightSetDegree)
        throw std::invalid_argument("m must lie in [3, " + std::to_string(kMaxWeightSetDegree) + "], got " + std::to_string(m));

    const std::uint64_t n = (std::uint64_t{1} << m) - 1;
    std::vector<std::uint64_t> unit_reps;
    if (options.any_unit) {
        // Units u and 2u act identically on conjugate-closed sets, so one
        // representative (the smallest) per coset of units suffices.
        for (const auto& c : all_cosets(static_cast<std::uint32_t>(n)))
            if (gcd_u64(c.representative, n) == 1) unit_reps.push_back(c.representative);
    } else {
        unit_reps.push_back(n - 1);
    }

    std::vector<std::vector<int>> candidates;
    const std::uint32_t full = (std::uint32_t{1} << r) - 1;
    for (std::uint32_t mask = 1; mask < full; ++mask) {
        if (std::popcount(mask) != r / 2) continue;
        std::vector<int> s, sbar;
        for (int i = 0; i < r; ++i) ((mask >> i) & 1U ? s : sbar).push_back(i);
        if (s < sbar) candidates.push_back(std::move(s));
    }
    std::sort(candidates.begin(), candidates.end());

    std::vector<DuadicPair> out;
    for (const auto& s : candidates) {
        const auto sbar = complement_subset(r, s);
        const auto t1 = weight_set_from_mask(r, m, subset_mask(r, s));
        const auto t2 = weight_set_from_mask(r, m, subset_mask(r, sbar));
        for (auto mu : unit_reps) {
            if (is_splitting(t1, t2, mu)) {
                out.push_back(DuadicPair{r, m, s, sbar, mu});
                break;
            }
        }
    }
    return out;
}

}  // namespace duadic
