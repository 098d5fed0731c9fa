#include "duadic/catalog.hpp"

#include <algorithm>
#include <stdexcept>

namespace duadic {

namespace {

void require_length_127(const FieldContext& ctx) {
    if (ctx.m() != 7) throw std::invalid_argument("reference tables are defined for m = 7");
}

ReferenceRow make_row(std::string label, const CyclicCode& code, int d, int dual_d) {
    ReferenceRow row{label, label + "^perp", code, 64, d, 63, dual_d};
    return row;
}

}  // namespace

std::string code_label(int r, std::span<const int> subset, int m) {
    std::string s = "C[" + std::to_string(r) + "," + std::to_string(m) + ",{";
    for (std::size_t i = 0; i < subset.size(); ++i) s += (i ? "," : "") + std::to_string(subset[i]);
    return s + "}]";
}

std::vector<ReferenceRow> table1_rows(const FieldContext& ctx, bool include_complements) {
    require_length_127(ctx);
    struct Spec {
        std::vector<int> subset;
        int d, dual_d;
    };
    const std::vector<Spec> specs = {{{0, 2, 3}, 15, 20}, {{0, 3, 5}, 19, 20}, {{0, 4, 5}, 15, 16}};
    std::vector<ReferenceRow> rows;
    for (const auto& s : specs) {
        rows.push_back(make_row(code_label(6, s.subset, 7), weight_class_code(ctx, 6, s.subset), s.d, s.dual_d));
        if (include_complements) {
            const auto bar = complement_subset(6, s.subset);
            rows.push_back(make_row(code_label(6, bar, 7), weight_class_code(ctx, 6, bar), s.d, s.dual_d));
        }
    }
    return rows;
}

DefiningSet punctured_reed_muller_defining_set(int order, int m) {
    if (m < 2 || m > kMaxWeightSetDegree || order < 0 || order >= m)
        throw std::invalid_argument("punctured Reed-Muller code needs 0 <= order < m");
    const std::uint64_t n = (std::uint64_t{1} << m) - 1;
    std::vector<Residue> members;
    for (std::uint64_t i = 1; i < n; ++i)
        if (base2_weight(i) <= m - order - 1) members.push_back(static_cast<Residue>(i));
    return DefiningSet(static_cast<std::uint32_t>(n), std::move(members));
}

std::vector<ReferenceRow> table2_rows(const FieldContext& ctx) {
    require_length_127(ctx);
    std::vector<ReferenceRow> rows;
    rows.push_back(make_row("PRM(3,7)", from_defining_set(ctx, punctured_reed_muller_defining_set(3, 7)), 15, 16));
    const std::vector<int> s0{0}, s1{1}, s01{0, 1}, s23{2, 3};
    rows.push_back(make_row(code_label(2, s0, 7), weight_class_code(ctx, 2, s0), 19, 20));
    rows.push_back(make_row(code_label(2, s1, 7), weight_class_code(ctx, 2, s1), 19, 20));
    rows.push_back(make_row(code_label(4, s01, 7), weight_class_code(ctx, 4, s01), 15, 20));
    rows.push_back(make_row(code_label(4, s23, 7), weight_class_code(ctx, 4, s23), 15, 20));
    return rows;
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::kMatch: return "match";
        case Verdict::kMismatch: return "mismatch";
        default: return "partial";
    }
}

Verdict compare_distance(const DistanceCertificate& cert, int expected) {
    if (cert.certified()) return cert.upper == expected ? Verdict::kMatch : Verdict::kMismatch;
    if (expected < cert.lower || expected > cert.upper) return Verdict::kMismatch;
    return Verdict::kPartial;
}

DistanceCertificate certify_distance(const CyclicCode& code, Engine engine, const BZOptions& options) {
    if (engine == Engine::kExhaustive) return exhaustive_min_weight(code, options.target);
    return brouwer_zimmermann(code, options);
}

std::vector<std::vector<int>> expected_duadic_subsets(int m) {
    if (m % 2 == 0) throw std::invalid_argument("duadic subsets are listed for odd m only");
    switch (m % 6) {
        case 1: return {{0, 2, 3}, {0, 2, 4}, {0, 3, 5}, {0, 4, 5}};
        case 3: return {{0, 1, 4}, {0, 1, 5}, {0, 2, 4}, {0, 2, 5}};
        default: return {{0, 1, 2}, {0, 1, 3}, {0, 2, 4}, {0, 3, 4}};
    }
}

PairCheck check_duadic_code(const FieldContext& ctx, std::span<const int> subset) {
    PairCheck check;
    check.subset.assign(subset.begin(), subset.end());
    check.m = ctx.m();
    const auto code = weight_class_code(ctx, 6, subset);
    const auto d = dual(code);
    const std::uint32_t half = std::uint32_t{1} << (ctx.m() - 1);
    check.dimension_ok = code.dimension() == half && d.dimension() == half - 1;
    check.dual_law_ok = d.defining_set() == negate_set(code.defining_set().complement()) &&
                        from_defining_set(ctx, d.defining_set()).generator() == d.generator();
    check.dual_is_even_subcode = even_weight_subcode(code).generator() == d.generator();
    const auto ext = extend(code);
    check.self_dual_extended = is_self_dual(ext);
    check.doubly_even_extended = is_doubly_even(ext);
    check.amplified = amplified_bch_bound(code.defining_set()).bound;
    check.dual_amplified = amplified_bch_bound(d.defining_set()).bound;
    if (theorem_covers(ctx.m(), subset)) {
        check.theorem = theorem_bound(ctx.m(), subset);
        check.bounds_ok = check.amplified >= check.theorem && check.dual_amplified >= check.theorem + 1;
    } else {
        check.bounds_ok = true;
    }
    return check;
}

}  // namespace duadic
