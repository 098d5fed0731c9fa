#include <doctest.h>

#include <bit>
#include <stdexcept>

#include "duadic/catalog.hpp"

using namespace duadic;

TEST_CASE("reference rows") {
    const FieldContext gf128(7);
    const auto t1 = table1_rows(gf128);
    REQUIRE(t1.size() == 3);
    CHECK(t1[0].label == "C[6,7,{0,2,3}]");
    CHECK(t1[0].expected_d == 15);
    CHECK(t1[0].expected_dual_d == 20);
    CHECK(t1[1].expected_d == 19);
    CHECK(t1[2].expected_dual_d == 16);
    for (const auto& r : t1) {
        CHECK(static_cast<int>(r.code.dimension()) == r.expected_k);
        CHECK(static_cast<int>(dual(r.code).dimension()) == r.expected_dual_k);
    }
    CHECK(table1_rows(gf128, true).size() == 6);

    const auto t2 = table2_rows(gf128);
    REQUIRE(t2.size() == 5);
    CHECK(t2[0].label == "PRM(3,7)");
    for (const auto& r : t2) CHECK(static_cast<int>(r.code.dimension()) == r.expected_k);

    CHECK_THROWS_AS(table1_rows(FieldContext(5)), std::invalid_argument);
}

TEST_CASE("punctured Reed-Muller defining set") {
    const auto t = punctured_reed_muller_defining_set(3, 7);
    CHECK(t.size() == 63);  // 7 + 21 + 35 residues of weight 1, 2, 3
    for (auto i : t.members()) CHECK(std::popcount(i) <= 3);
    CHECK(t.is_conjugate_closed());
    CHECK_THROWS_AS(punctured_reed_muller_defining_set(7, 7), std::invalid_argument);
}

TEST_CASE("verdicts") {
    DistanceCertificate c;
    c.status = CertificateStatus::kCertified;
    c.lower = c.upper = 15;
    CHECK(compare_distance(c, 15) == Verdict::kMatch);
    CHECK(compare_distance(c, 16) == Verdict::kMismatch);
    c.status = CertificateStatus::kPartial;
    c.lower = 12;
    CHECK(compare_distance(c, 15) == Verdict::kPartial);
    CHECK(compare_distance(c, 11) == Verdict::kMismatch);
    CHECK(compare_distance(c, 16) == Verdict::kMismatch);
    CHECK(to_string(Verdict::kPartial) == "partial");
}

TEST_CASE("expected duadic subsets") {
    CHECK(expected_duadic_subsets(7) == expected_duadic_subsets(13));
    CHECK(expected_duadic_subsets(9).front() == std::vector<int>{0, 1, 4});
    CHECK(expected_duadic_subsets(11).back() == std::vector<int>{0, 3, 4});
    CHECK_THROWS_AS(expected_duadic_subsets(8), std::invalid_argument);
}

TEST_CASE("structural checks on the r = 6 duadic codes") {
    for (int m : {5, 7, 9}) {
        const FieldContext ctx(m);
        for (const auto& s : expected_duadic_subsets(m))
            for (const auto& sub : {s, complement_subset(6, s)}) {
                const auto check = check_duadic_code(ctx, sub);
                CHECK(check.ok());
                CHECK(check.dual_amplified >= check.amplified);
            }
    }
}
