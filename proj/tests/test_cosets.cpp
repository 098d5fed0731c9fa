#include <doctest.h>

#include <algorithm>
#include <random>
#include <stdexcept>

#include "duadic/cosets.hpp"
#include "oracles.hpp"

using namespace duadic;

namespace {

std::vector<Residue> as_vector(const DefiningSet& s) { return {s.members().begin(), s.members().end()}; }

std::vector<std::vector<int>> scan_subsets(int r, int m, ScanOptions o = {}) {
    std::vector<std::vector<int>> out;
    for (const auto& p : duadic_scan(r, m, o)) out.push_back(p.subset);
    return out;
}

}  // namespace

TEST_CASE("base-2 weight") {
    CHECK(base2_weight(0) == 0);
    CHECK(base2_weight(5) == 2);
    CHECK(base2_weight(126) == 6);
    CHECK(base2_weight(126) == 7 - base2_weight(127 - 126));
    for (int m = 3; m <= 16; ++m) {
        const std::uint64_t n = (1ULL << m) - 1;
        for (std::uint64_t i = 1; i < n; i += 1 + i / 64) CHECK(base2_weight(i) + base2_weight(n - i) == m);
    }
}

TEST_CASE("cyclotomic cosets") {
    CHECK(cyclotomic_coset(0, 7).members == std::vector<Residue>{0});
    CHECK(cyclotomic_coset(1, 7).members == std::vector<Residue>{1, 2, 4});
    CHECK(cyclotomic_coset(3, 7).members == std::vector<Residue>{3, 5, 6});
    CHECK_THROWS_AS(cyclotomic_coset(1, 8), std::invalid_argument);

    const auto c7 = all_cosets(7);
    REQUIRE(c7.size() == 3);
    CHECK(c7[0].members == std::vector<Residue>{0});
    CHECK(c7[1].members == std::vector<Residue>{1, 2, 4});
    CHECK(c7[2].members == std::vector<Residue>{3, 5, 6});
    const auto c3 = all_cosets(3);
    REQUIRE(c3.size() == 2);
    CHECK(c3[1].members == std::vector<Residue>{1, 2});

    for (std::uint32_t n : {15U, 21U, 31U, 45U, 63U, 255U}) {
        std::size_t total = 0;
        for (const auto& c : all_cosets(n)) {
            CHECK(c.members == oracle::coset(c.representative, n));
            CHECK(c.representative == c.members.front());
            total += c.size();
        }
        CHECK(total == n);
    }
}

TEST_CASE("weight defining sets") {
    const std::vector<int> s045{0, 4, 5};
    const auto t = weight_defining_set(6, 7, s045);
    CHECK(t.size() == 63);
    CHECK(t.contains(15));
    CHECK_FALSE(t.contains(1));

    const std::vector<int> s0{0};
    const auto even = weight_defining_set(2, 7, s0);
    CHECK(even.size() == 63);
    for (auto i : even.members()) CHECK(base2_weight(i) % 2 == 0);

    const std::vector<int> empty, all{0, 1, 2, 3, 4, 5}, out_of_range{0, 6};
    CHECK_THROWS_AS(weight_defining_set(6, 7, empty), std::invalid_argument);
    CHECK_THROWS_AS(weight_defining_set(6, 7, all), std::invalid_argument);
    CHECK_THROWS_AS(weight_defining_set(6, 7, out_of_range), std::invalid_argument);
    CHECK_THROWS_AS(weight_defining_set(1, 7, s0), std::invalid_argument);

    // even m is accepted
    CHECK(weight_defining_set(6, 8, s045).is_conjugate_closed());
}

TEST_CASE("weight sets match the brute-force oracle, are closed and partition Z_n minus 0") {
    std::mt19937_64 rng(17);
    for (int m = 3; m <= 12; ++m)
        for (int r : {2, 3, 4, 5, 6, 7}) {
            std::vector<int> s;
            while (s.empty() || static_cast<int>(s.size()) == r) {
                s.clear();
                for (int x = 0; x < r; ++x)
                    if (rng() & 1U) s.push_back(x);
            }
            const auto t = weight_defining_set(r, m, s);
            CHECK(as_vector(t) == oracle::weight_set(r, m, s));
            CHECK(t.is_conjugate_closed());
            const auto bar = weight_defining_set(r, m, complement_subset(r, s));
            const auto n = t.n();
            CHECK(t.size() + bar.size() == n - 1);
            for (std::uint32_t i = 1; i < n; ++i) CHECK(t.contains(i) != bar.contains(i));
            CHECK_FALSE(t.contains(0));
            CHECK_FALSE(bar.contains(0));
        }
}

TEST_CASE("scaling") {
    const std::vector<int> s045{0, 4, 5}, s123{1, 2, 3};
    const auto t = weight_defining_set(6, 7, s045);
    CHECK(scale_set(t, 1) == t);
    CHECK(negate_set(t) == weight_defining_set(6, 7, s123));
    CHECK(negate_set(weight_defining_set(6, 13, s045)) == weight_defining_set(6, 13, s123));
    for (std::uint64_t u : {3ULL, 5ULL, 19ULL, 100ULL}) {
        const auto back = scale_set(scale_set(t, u), inverse_mod(u, 127));
        CHECK(back == t);
        CHECK(scale_set(t, u).size() == t.size());
    }
    const auto t63 = weight_defining_set(6, 6, s045);
    CHECK_THROWS_AS(scale_set(t63, 3), std::invalid_argument);
    CHECK_THROWS_AS(inverse_mod(3, 63), std::invalid_argument);
    CHECK(inverse_mod(15, 127) * 15 % 127 == 1);
}

TEST_CASE("splittings") {
    const std::vector<int> s023{0, 2, 3}, s145{1, 4, 5}, s012{0, 1, 2}, s345{3, 4, 5};
    CHECK(is_splitting(weight_defining_set(6, 7, s023), weight_defining_set(6, 7, s145), 126));
    CHECK_FALSE(is_splitting(weight_defining_set(6, 7, s012), weight_defining_set(6, 7, s345), 126));
    const auto t = weight_defining_set(6, 7, s023);
    CHECK_FALSE(is_splitting(t, t, 126));
    CHECK_FALSE(is_splitting(t, weight_defining_set(6, 7, s145), 1));
}

TEST_CASE("duadic scan for r = 6") {
    const std::vector<std::vector<int>> case1{{0, 2, 3}, {0, 2, 4}, {0, 3, 5}, {0, 4, 5}};
    const std::vector<std::vector<int>> case2{{0, 1, 4}, {0, 1, 5}, {0, 2, 4}, {0, 2, 5}};
    const std::vector<std::vector<int>> case3{{0, 1, 2}, {0, 1, 3}, {0, 2, 4}, {0, 3, 4}};
    CHECK(scan_subsets(6, 7) == case1);
    CHECK(scan_subsets(6, 13) == case1);
    CHECK(scan_subsets(6, 9) == case2);
    CHECK(scan_subsets(6, 15) == case2);
    CHECK(scan_subsets(6, 5) == case3);
    CHECK(scan_subsets(6, 11) == case3);
    CHECK(scan_subsets(6, 17) == case3);

    for (const auto& p : duadic_scan(6, 9)) {
        CHECK(p.mu == 510);
        CHECK(p.complement == complement_subset(6, p.subset));
    }
    CHECK_THROWS_AS(duadic_scan(6, 8), std::invalid_argument);
    CHECK_THROWS_AS(duadic_scan(5, 7), std::invalid_argument);
}

TEST_CASE("scan with arbitrary multipliers finds at least the mu = -1 splittings") {
    for (int m : {5, 7}) {
        const auto minus_one = scan_subsets(6, m);
        ScanOptions o;
        o.any_unit = true;
        const auto any = scan_subsets(6, m, o);
        for (const auto& s : minus_one) CHECK(std::find(any.begin(), any.end(), s) != any.end());
        for (const auto& p : duadic_scan(6, m, o)) {
            CHECK(is_splitting(weight_defining_set(6, m, p.subset), weight_defining_set(6, m, p.complement), p.mu));
        }
    }
}

TEST_CASE("duadic scan for r = 2 and r = 4 at m = 7") {
    // For odd m, -T_[2,m,{0}] = T_[2,m,{1}], so {0} | {1} is a splitting.
    CHECK(scan_subsets(2, 7) == std::vector<std::vector<int>>{{0}});
    const auto four = scan_subsets(4, 7);
    CHECK(std::find(four.begin(), four.end(), std::vector<int>{0, 1}) != four.end());
}

TEST_CASE("gcd helpers") {
    CHECK(gcd_u64(0, 5) == 5);
    CHECK(gcd_u64(12, 18) == 6);
}
