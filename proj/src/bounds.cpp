#include "duadic/bounds.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <string>

namespace duadic {

namespace {

struct Run {
    std::uint64_t length = 0;
    std::uint64_t start = 0;
};

// Longest circular run of set bits in a bitmap of n bits that is not all
// ones. Ties go to the smallest start.
Run longest_circular_run(const std::vector<std::uint64_t>& bitmap, std::uint64_t n) {
    auto test = [&](std::uint64_t i) { return (bitmap[i / 64] >> (i % 64)) & 1U; };
    std::uint64_t gap = 0;
    while (gap < n && test(gap)) ++gap;
    Run best;
    std::uint64_t len = 0, start = 0;
    for (std::uint64_t step = 1; step <= n; ++step) {
        const std::uint64_t i = (gap + step) % n;
        if (test(i)) {
            if (len == 0) start = i;
            ++len;
            continue;
        }
        if (len > best.length || (len == best.length && len > 0 && start < best.start)) best = {len, start};
        len = 0;
    }
    return best;
}

std::vector<std::uint64_t> scaled_bitmap(const DefiningSet& set, std::uint64_t u) {
    const std::uint64_t n = set.n();
    std::vector<std::uint64_t> bitmap((n + 63) / 64, 0);
    for (auto t : set.members()) {
        const std::uint64_t s = (u * t) % n;
        bitmap[s / 64] |= std::uint64_t{1} << (s % 64);
    }
    return bitmap;
}

std::uint64_t coset_min(std::uint64_t u, std::uint64_t n) {
    std::uint64_t best = u, x = (2 * u) % n;
    while (x != u) {
        best = std::min(best, x);
        x = (2 * x) % n;
    }
    return best;
}

std::uint64_t pow_u64(std::uint64_t a, unsigned e) {
    std::uint64_t r = 1;
    for (unsigned i = 0; i < e; ++i) {
        if (a != 0 && r > UINT64_MAX / a) throw std::overflow_error("power exceeds 64 bits");
        r *= a;
    }
    return r;
}

}  // namespace

BoundReport bch_bound(const DefiningSet& set) {
    if (set.n() == 0) throw std::invalid_argument("empty modulus");
    if (set.size() == set.n()) throw std::invalid_argument("defining set is all of Z_n; not a code");
    BoundReport report;
    if (set.empty()) return report;
    const auto run = longest_circular_run(scaled_bitmap(set, 1), set.n());
    report.run_length = run.length;
    report.run_start = run.start;
    report.bound = static_cast<int>(run.length) + 1;
    return report;
}

BoundReport amplified_bch_bound(const DefiningSet& set, const AmplifiedOptions& options) {
    const std::uint64_t n = set.n();
    if (n == 0) throw std::invalid_argument("empty modulus");
    if (set.size() == n) throw std::invalid_argument("defining set is all of Z_n; not a code");

    // u and 2u scale a conjugate-closed set to the same set, so only the
    // smallest element of each coset of units is tried.
    std::vector<std::uint64_t> candidates;
    if (n <= options.full_scan_limit) {
        std::vector<bool> seen(n, false);
        for (std::uint64_t u = 1; u < n; ++u) {
            if (seen[u] || gcd_u64(u, n) != 1) continue;
            std::uint64_t x = u;
            do {
                seen[x] = true;
                x = (2 * x) % n;
            } while (x != u);
            candidates.push_back(u);
        }
    } else {
        candidates.push_back(1);
        for (std::uint64_t j = 2; (std::uint64_t{1} << j) < n; ++j) {
            const std::uint64_t v = (std::uint64_t{1} << j) - 1;
            if (gcd_u64(v, n) != 1) continue;
            const auto inv = inverse_mod(v, n);
            candidates.push_back(inv);
            candidates.push_back(n - inv);
        }
        std::mt19937_64 rng(options.seed);
        std::uniform_int_distribution<std::uint64_t> dist(1, n - 1);
        for (std::size_t i = 0; i < options.random_units; ++i) {
            std::uint64_t u = dist(rng);
            while (gcd_u64(u, n) != 1) u = dist(rng);
            candidates.push_back(u);
        }
        for (auto& u : candidates) u = coset_min(u, n);
        std::sort(candidates.begin(), candidates.end());
        candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    }

    BoundReport best;
    best.witness_unit = 1;
    if (set.empty()) return best;
    bool first = true;
    for (auto u : candidates) {
        const auto run = longest_circular_run(scaled_bitmap(set, u), n);
        if (first || run.length > best.run_length) {
            best.run_length = run.length;
            best.run_start = run.start;
            best.witness_unit = u;
            first = false;
        }
    }
    best.bound = static_cast<int>(best.run_length) + 1;
    return best;
}

bool verify_consecutive_multiples(const DefiningSet& set, std::uint64_t v, std::uint64_t count) {
    const std::uint64_t n = set.n();
    if (gcd_u64(v % n, n) != 1) throw std::invalid_argument(std::to_string(v) + " is not a unit mod " + std::to_string(n));
    const std::uint64_t step = v % n;
    std::uint64_t x = 0;
    for (std::uint64_t a = 1; a <= count; ++a) {
        x += step;
        if (x >= n) x -= n;
        if (!set.contains(x)) return false;
    }
    return true;
}

namespace {

enum class Multiplier { kMinus, kPlus };  // v = 2^((m-1)/2) - 1 or 2^((m+1)/2) - 1

struct ClauseSpec {
    int lemma;
    int modulus;
    int residue;
    int min_m;
    int item;
    Multiplier multiplier;
    bool plus_two;  // A = 2^((m-1)/2) + 2 instead of 2^((m-1)/2)
    std::vector<int> subset;
};

const std::vector<ClauseSpec>& clause_table() {
    using enum Multiplier;
    static const std::vector<ClauseSpec> table = {
        {2, 12, 1, 13, 1, kMinus, true, {0, 4, 5}},
        {2, 12, 1, 13, 2, kPlus, true, {1, 2, 3}},
        {3, 12, 7, 7, 1, kPlus, false, {0, 4, 5}},
        {3, 12, 7, 7, 2, kMinus, false, {1, 2, 3}},
        {4, 6, 1, 7, 1, kMinus, true, {0, 2, 3}},
        {4, 6, 1, 7, 1, kMinus, true, {0, 3, 5}},
        {4, 6, 1, 7, 2, kPlus, true, {1, 4, 5}},
        {4, 6, 1, 7, 2, kPlus, true, {1, 2, 4}},
        {5, 12, 3, 3, 1, kMinus, false, {0, 1, 5}},
        {5, 12, 3, 3, 2, kPlus, false, {2, 3, 4}},
        {6, 12, 9, 9, 1, kPlus, true, {0, 1, 5}},
        {6, 12, 9, 9, 2, kMinus, true, {2, 3, 4}},
        {7, 6, 3, 9, 1, kPlus, false, {0, 2, 5}},
        {7, 6, 3, 9, 1, kPlus, false, {0, 1, 4}},
        {7, 6, 3, 9, 2, kMinus, false, {1, 3, 4}},
        {7, 6, 3, 9, 2, kMinus, false, {2, 3, 5}},
        {8, 12, 5, 5, 1, kMinus, false, {0, 1, 2}},
        {8, 12, 5, 5, 2, kPlus, false, {3, 4, 5}},
        {9, 12, 11, 11, 1, kPlus, true, {0, 1, 2}},
        {9, 12, 11, 11, 2, kMinus, true, {3, 4, 5}},
        {10, 6, 5, 5, 1, kPlus, true, {0, 1, 3}},
        {10, 6, 5, 5, 1, kPlus, false, {0, 3, 4}},
        {10, 6, 5, 5, 2, kMinus, true, {2, 4, 5}},
        {10, 6, 5, 5, 2, kMinus, false, {1, 2, 5}},
    };
    return table;
}

}  // namespace

std::vector<LemmaClause> lemma_suite(int m) {
    if (m < 3 || m % 2 == 0 || m > kMaxWeightSetDegree)
        throw std::invalid_argument("lemma suite needs odd m in [3, " + std::to_string(kMaxWeightSetDegree) + "], got " +
                                    std::to_string(m));
    const std::uint64_t n = (std::uint64_t{1} << m) - 1;
    const std::uint64_t half = std::uint64_t{1} << ((m - 1) / 2);
    std::vector<LemmaClause> out;
    for (const auto& spec : clause_table()) {
        if (m % spec.modulus != spec.residue || m < spec.min_m) continue;
        LemmaClause clause;
        clause.lemma = spec.lemma;
        clause.item = spec.item;
        clause.m = m;
        clause.subset = spec.subset;
        clause.v = (std::uint64_t{1} << (spec.multiplier == Multiplier::kMinus ? (m - 1) / 2 : (m + 1) / 2)) - 1;
        clause.count = spec.plus_two ? half + 2 : half;
        clause.unit = gcd_u64(clause.v, n) == 1;
        clause.degenerate = clause.v == 1;
        const auto set = weight_defining_set(6, m, spec.subset);
        if (clause.unit) clause.pass = verify_consecutive_multiples(set, clause.v, clause.count);
        const std::uint64_t other = (std::uint64_t{1} << (spec.multiplier == Multiplier::kMinus ? (m + 1) / 2 : (m - 1) / 2)) - 1;
        if (gcd_u64(other, n) == 1) clause.alternate_pass = verify_consecutive_multiples(set, other, clause.count);
        out.push_back(std::move(clause));
    }
    return out;
}

bool gcd_power_identity_holds(std::uint64_t a, unsigned m, unsigned l) {
    if (a < 2 || m == 0 || l == 0) throw std::invalid_argument("identity needs a >= 2 and positive exponents");
    const std::uint64_t lhs = gcd_u64(pow_u64(a, m) - 1, pow_u64(a, l) - 1);
    return lhs == pow_u64(a, static_cast<unsigned>(gcd_u64(m, l))) - 1;
}

int square_root_bound(std::uint64_t n, bool mu_is_minus_one) {
    std::uint64_t d = 1;
    auto holds = [&](std::uint64_t x) { return mu_is_minus_one ? x * x - x + 1 >= n : x * x >= n; };
    while (!holds(d)) ++d;
    return static_cast<int>(d);
}

namespace {

// Offset over 2^((m-1)/2), or -1 when (m, S) has no closed-form bound.
int theorem_offset(int m, std::span<const int> subset) {
    if (m < 3 || m % 2 == 0) return -1;
    std::vector<int> s(subset.begin(), subset.end());
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    auto is = [&](std::initializer_list<int> l) { return std::equal(s.begin(), s.end(), l.begin(), l.end()); };
    switch (m % 6) {
        case 1:
            if (m < 7) return -1;
            if (is({0, 4, 5}) || is({1, 2, 3})) return m % 12 == 1 ? 3 : 1;
            if (is({0, 2, 3}) || is({1, 4, 5}) || is({0, 3, 5}) || is({1, 2, 4})) return 3;
            return -1;
        case 3:
            if (is({0, 1, 5}) || is({2, 3, 4})) return m % 12 == 3 ? 1 : 3;
            if (is({0, 1, 4}) || is({2, 3, 5}) || is({0, 2, 5}) || is({1, 3, 4})) return 1;
            return -1;
        case 5:
            if (is({0, 1, 2}) || is({3, 4, 5})) return m % 12 == 5 ? 1 : 3;
            if (is({0, 1, 3}) || is({2, 4, 5})) return 3;
            if (is({0, 3, 4}) || is({1, 2, 5})) return 1;
            return -1;
        default:
            return -1;
    }
}

}  // namespace

bool theorem_covers(int m, std::span<const int> subset) { return theorem_offset(m, subset) >= 0; }

int theorem_bound(int m, std::span<const int> subset) {
    const int offset = theorem_offset(m, subset);
    if (offset < 0 || m > 61) throw std::invalid_argument("no closed-form bound for m = " + std::to_string(m) + " and this S");
    return static_cast<int>(std::uint64_t{1} << ((m - 1) / 2)) + offset;
}

}  // namespace duadic
