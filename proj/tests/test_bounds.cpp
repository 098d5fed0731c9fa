#include <doctest.h>

#include <numeric>
#include <random>
#include <stdexcept>

#include "duadic/bounds.hpp"
#include "duadic/cyclic.hpp"
#include "oracles.hpp"

using namespace duadic;

namespace {

// Longest circular run in a residue list, by direct scan from every start.
int run_oracle(const std::vector<std::uint32_t>& members, std::uint32_t n) {
    std::vector<bool> in(n, false);
    for (auto x : members) in[x] = true;
    int best = 0;
    for (std::uint32_t s = 0; s < n; ++s) {
        int len = 0;
        while (len < static_cast<int>(n) && in[(s + len) % n]) ++len;
        best = std::max(best, len);
    }
    return best;
}

std::vector<std::uint32_t> scaled(const std::vector<std::uint32_t>& members, std::uint64_t u, std::uint32_t n) {
    std::vector<std::uint32_t> out;
    for (auto x : members) out.push_back(static_cast<std::uint32_t>(x * u % n));
    return out;
}

}  // namespace

TEST_CASE("BCH bound") {
    const auto hamming = bch_bound(DefiningSet(7, {1, 2, 4}));
    CHECK(hamming.bound == 3);
    CHECK(hamming.run_start == 1);
    CHECK(hamming.run_length == 2);
    CHECK_FALSE(hamming.witness_unit.has_value());

    const auto simplex = bch_bound(DefiningSet(7, {0, 1, 2, 4}));
    CHECK(simplex.bound == 4);
    CHECK(simplex.run_start == 0);

    CHECK(bch_bound(DefiningSet(7, {0})).bound == 2);
    // wrap-around run {6, 0, 1}
    const auto wrap = bch_bound(DefiningSet(7, {0, 1, 3, 6}));
    CHECK(wrap.bound == 4);
    CHECK(wrap.run_start == 6);
    CHECK_THROWS_AS(bch_bound(DefiningSet(7, {0, 1, 2, 3, 4, 5, 6})), std::invalid_argument);
}

TEST_CASE("BCH bound matches the run oracle") {
    std::mt19937_64 rng(41);
    for (std::uint32_t n : {7U, 15U, 31U, 63U, 127U}) {
        for (int t = 0; t < 40; ++t) {
            const auto members = oracle::random_closed_set(n, rng);
            CHECK(bch_bound(DefiningSet(n, members)).bound == run_oracle(members, n) + 1);
        }
    }
}

TEST_CASE("amplified bound equals the best scaled run") {
    std::mt19937_64 rng(43);
    for (std::uint32_t n : {15U, 31U, 63U}) {
        for (int t = 0; t < 20; ++t) {
            const auto members = oracle::random_closed_set(n, rng);
            int best = 0;
            for (std::uint64_t u = 1; u < n; ++u)
                if (std::gcd(u, std::uint64_t{n}) == 1) best = std::max(best, run_oracle(scaled(members, u, n), n));
            const auto report = amplified_bch_bound(DefiningSet(n, members));
            CHECK(report.bound == best + 1);
            REQUIRE(report.witness_unit.has_value());
            CHECK(run_oracle(scaled(members, *report.witness_unit, n), n) == best);
            CHECK(report.bound >= bch_bound(DefiningSet(n, members)).bound);
        }
    }
}

TEST_CASE("amplified bound is sound against exhaustive distances for n <= 31") {
    std::mt19937_64 rng(47);
    for (int m : {3, 4, 5}) {
        const FieldContext ctx(m);
        const auto n = static_cast<std::uint32_t>(ctx.n());
        for (int t = 0; t < 40; ++t) {
            const auto members = oracle::random_closed_set(n, rng);
            const auto code = from_defining_set(ctx, DefiningSet(n, members));
            if (code.dimension() > 20) continue;
            const int d = oracle::min_weight(oracle::span(code.generator().to_mask(), n, code.dimension()));
            const auto amp = amplified_bch_bound(code.defining_set());
            CHECK(amp.bound <= d);
            CHECK(amp.bound >= 2);
        }
    }
}

TEST_CASE("scaling the defining set does not change the amplified bound") {
    const std::vector<int> s023{0, 2, 3};
    const auto t = weight_defining_set(6, 7, s023);
    const int base = amplified_bch_bound(t).bound;
    for (std::uint64_t w : {3ULL, 5ULL, 9ULL, 126ULL}) CHECK(amplified_bch_bound(scale_set(t, w)).bound == base);
}

TEST_CASE("amplified bound on the weight-class codes") {
    const std::vector<int> s045{0, 4, 5};
    CHECK(amplified_bch_bound(weight_defining_set(6, 7, s045)).bound >= 9);
    const auto big = amplified_bch_bound(weight_defining_set(6, 13, s045));
    CHECK(big.bound >= 67);
    REQUIRE(big.witness_unit.has_value());
    const auto moved = scale_set(weight_defining_set(6, 13, s045), *big.witness_unit);
    for (std::uint64_t i = 0; i < big.run_length; ++i) CHECK(moved.contains((big.run_start + i) % 8191));
}

TEST_CASE("consecutive multiples") {
    const std::vector<int> s045{0, 4, 5};
    CHECK(verify_consecutive_multiples(weight_defining_set(6, 13, s045), 63, 66));
    CHECK(verify_consecutive_multiples(weight_defining_set(6, 7, s045), 15, 8));
    CHECK(verify_consecutive_multiples(weight_defining_set(6, 7, s045), 15, 0));
    CHECK_FALSE(verify_consecutive_multiples(weight_defining_set(6, 7, s045), 1, 2));
    CHECK_THROWS_AS(verify_consecutive_multiples(weight_defining_set(6, 6, s045), 3, 2), std::invalid_argument);
}

TEST_CASE("lemma suite") {
    auto all_pass = [](int m) {
        bool ok = true;
        for (const auto& c : lemma_suite(m)) ok = ok && c.pass;
        return ok;
    };
    auto lemmas = [](int m) {
        std::vector<int> ids;
        for (const auto& c : lemma_suite(m)) ids.push_back(c.lemma);
        return ids;
    };
    CHECK(all_pass(7));
    CHECK(lemmas(7) == std::vector<int>{3, 3, 4, 4, 4, 4});
    CHECK(all_pass(5));
    CHECK(lemmas(5) == std::vector<int>{8, 8, 10, 10, 10, 10});
    CHECK(all_pass(11));
    CHECK(all_pass(13));
    CHECK(lemmas(13) == std::vector<int>{2, 2, 4, 4, 4, 4});

    const auto m5 = lemma_suite(5);
    for (const auto& c : m5) {
        if (c.lemma != 10) continue;
        const bool wide = c.subset == std::vector<int>{0, 1, 3} || c.subset == std::vector<int>{2, 4, 5};
        CHECK(c.count == (wide ? 6U : 4U));
    }

    const auto m3 = lemma_suite(3);
    REQUIRE(m3.size() == 2);
    for (const auto& c : m3) {
        CHECK(c.lemma == 5);
        CHECK(c.pass);
    }
    CHECK(m3[0].degenerate);  // v = 2^1 - 1

    // Clause group 6 holds at m = 9. Group 7 fails on {0,1,4} and {2,3,5},
    // which hold with the other choice of v.
    for (const auto& c : lemma_suite(9)) {
        if (c.lemma == 6) CHECK(c.pass);
        if (c.lemma != 7) continue;
        const bool swapped = c.subset == std::vector<int>{0, 1, 4} || c.subset == std::vector<int>{2, 3, 5};
        CHECK(c.pass == !swapped);
        if (swapped) CHECK(c.alternate_pass);
    }

    CHECK_THROWS_AS(lemma_suite(8), std::invalid_argument);
    CHECK_THROWS_AS(lemma_suite(1), std::invalid_argument);
}

TEST_CASE("gcd identity") {
    for (std::uint64_t a : {2ULL, 3ULL})
        for (unsigned m = 1; m <= 20; ++m)
            for (unsigned l = 1; l <= 20; ++l) CHECK(gcd_power_identity_holds(a, m, l));
    CHECK_THROWS_AS(gcd_power_identity_holds(1, 3, 4), std::invalid_argument);
}

TEST_CASE("square-root bound") {
    CHECK(square_root_bound(127, true) == 12);
    CHECK(square_root_bound(127, false) == 12);
    CHECK(square_root_bound(9, false) == 3);
    CHECK(square_root_bound(31, true) == 6);
}

TEST_CASE("closed-form bounds") {
    const std::vector<int> s045{0, 4, 5}, s034{0, 3, 4}, s035{0, 3, 5}, s024{0, 2, 4}, s012{0, 1, 2};
    CHECK(theorem_bound(13, s045) == 64 + 3);
    CHECK(theorem_bound(7, s045) == 8 + 1);
    CHECK(theorem_bound(11, s034) == 32 + 1);
    CHECK(theorem_bound(7, s035) == 8 + 3);
    CHECK(theorem_bound(5, s012) == 4 + 1);
    CHECK(theorem_bound(11, s012) == 32 + 3);
    CHECK(theorem_dual_bound(13, s045) == 68);
    CHECK_FALSE(theorem_covers(7, s024));
    CHECK_THROWS_AS(theorem_bound(7, s024), std::invalid_argument);
    CHECK_THROWS_AS(theorem_bound(7, s012), std::invalid_argument);
}

TEST_CASE("amplified bounds meet the closed forms for m <= 13") {
    for (int m : {5, 7, 9, 11, 13}) {
        for (const auto& p : duadic_scan(6, m))
            for (const auto& s : {p.subset, p.complement}) {
                if (!theorem_covers(m, s)) continue;
                const auto t = weight_defining_set(6, m, s);
                CHECK(amplified_bch_bound(t).bound >= theorem_bound(m, s));
                CHECK(amplified_bch_bound(t.with(0)).bound >= theorem_dual_bound(m, s));
            }
    }
}
