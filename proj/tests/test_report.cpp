#include <doctest.h>

#include "duadic/report.hpp"

using namespace duadic;

TEST_CASE("certificate JSON round trip and recheck") {
    const FieldContext gf32(5);
    const std::vector<int> s012{0, 1, 2};
    const auto code = weight_class_code(gf32, 6, s012);
    const auto cert = exhaustive_min_weight(code);
    const Json j = to_json(cert);
    CHECK(j.at("status") == "certified");
    CHECK(j.at("parity") == "all");

    const auto back = certificate_from_json(Json::parse(j.dump()));
    CHECK(back.upper == cert.upper);
    CHECK(back.lower == cert.lower);
    CHECK(back.witness == cert.witness);
    CHECK(back.certified());
    CHECK(recheck_certificate(back, code));

    auto wrong_weight = back;
    wrong_weight.upper += 1;
    wrong_weight.lower += 1;
    CHECK_FALSE(recheck_certificate(wrong_weight, code));

    auto not_codeword = back;
    not_codeword.witness.flip(0);
    not_codeword.witness.flip(1);
    CHECK_FALSE(recheck_certificate(not_codeword, code));

    auto inconsistent = back;
    inconsistent.lower = inconsistent.upper - 1;
    CHECK_FALSE(recheck_certificate(inconsistent, code));

    Json bad = j;
    bad["status"] = "done";
    CHECK_THROWS_AS(certificate_from_json(bad), std::invalid_argument);
}

TEST_CASE("records") {
    const FieldContext gf128(7);
    const std::vector<int> s045{0, 4, 5};
    const auto code = weight_class_code(gf128, 6, s045);
    const Json rec = code_record(code);
    CHECK(rec.at("n") == 127);
    CHECK(rec.at("k") == 64);
    CHECK(rec.at("defining_set_size") == 63);
    CHECK(rec.at("properties").at("self_dual_extended") == true);
    CHECK(rec.at("properties").at("doubly_even_extended") == true);
    CHECK(BinaryPolynomial::from_hex(rec.at("generator_hex").get<std::string>()) == code.generator());

    const Json b = to_json(amplified_bch_bound(code.defining_set()));
    CHECK(b.at("bound").get<int>() >= 9);
    CHECK(b.contains("unit"));
    CHECK(to_json(bch_bound(code.defining_set())).at("unit").is_null());

    const auto pair = duadic_scan(6, 7).front();
    const Json p = to_json(pair);
    CHECK(p.at("S") == std::vector<int>{0, 2, 3});
    CHECK(p.at("S_bar") == std::vector<int>{1, 4, 5});

    CHECK(defining_set_json(DefiningSet(7, {4, 1, 2})) == Json::array({1, 2, 4}));
    const Json clause = to_json(lemma_suite(7).front());
    CHECK(clause.at("pass") == true);
    CHECK(clause.at("lemma") == 3);
}
