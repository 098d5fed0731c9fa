#pragma once

// Reference codes of length 2^m - 1 with published parameters, and the
// end-to-end checks run by the CLI and the acceptance suite.

#include <string>
#include <vector>

#include "duadic/bounds.hpp"
#include "duadic/cosets.hpp"
#include "duadic/cyclic.hpp"
#include "duadic/distance.hpp"
#include "duadic/gf2poly.hpp"

namespace duadic {

/// A code, its dual, and the minimum distances they are expected to have.
struct ReferenceRow {
    std::string label;
    std::string dual_label;
    CyclicCode code;
    int expected_k = 0;
    int expected_d = 0;
    int expected_dual_k = 0;
    int expected_dual_d = 0;
};

/// C_[6,7,S] for S in {0,2,3}, {0,3,5}, {0,4,5} (and optionally their
/// complements), each with its dual. ctx must have m = 7.
std::vector<ReferenceRow> table1_rows(const FieldContext& ctx, bool include_complements = false);

/// Punctured Reed-Muller code of order 3, C_[2,7,{0}], C_[2,7,{1}],
/// C_[4,7,{0,1}], C_[4,7,{2,3}], each with its dual. ctx must have m = 7.
std::vector<ReferenceRow> table2_rows(const FieldContext& ctx);

/// {1 <= i <= n - 1 : w_2(i) <= m - order - 1}: defining set of the
/// punctured Reed-Muller code of the given order.
DefiningSet punctured_reed_muller_defining_set(int order, int m);

std::string code_label(int r, std::span<const int> subset, int m);

enum class Verdict { kMatch, kMismatch, kPartial };
std::string to_string(Verdict v);

/// Match when certified and equal; mismatch when certified and different
/// or when the expected value falls outside [lower, upper]; partial otherwise.
Verdict compare_distance(const DistanceCertificate& cert, int expected);

enum class Engine { kExhaustive, kBrouwerZimmermann };

/// Exhaustive when requested, otherwise Brouwer-Zimmermann.
DistanceCertificate certify_distance(const CyclicCode& code, Engine engine, const BZOptions& options);

/// The r = 6 duadic subsets listed for m mod 6 in {1, 3, 5}, sorted.
/// Throws std::invalid_argument for even m.
std::vector<std::vector<int>> expected_duadic_subsets(int m);

/// Structural facts checked for each code of a duadic pair.
struct PairCheck {
    std::vector<int> subset;
    int m = 0;
    bool dimension_ok = false;          // k = 2^(m-1), dual k = 2^(m-1) - 1
    bool dual_law_ok = false;           // dual defining set = -(Z_n \ T)
    bool dual_is_even_subcode = false;  // same generator as T ∪ {0}
    bool self_dual_extended = false;
    bool doubly_even_extended = false;
    int amplified = 0;       // amplified_bch_bound(T)
    int dual_amplified = 0;  // amplified_bch_bound(T ∪ {0})
    int theorem = 0;         // 0 when no closed form applies
    bool bounds_ok = false;  // amplified >= theorem and dual_amplified >= theorem + 1

    bool ok() const noexcept {
        return dimension_ok && dual_law_ok && dual_is_even_subcode && self_dual_extended && doubly_even_extended && bounds_ok;
    }
};

PairCheck check_duadic_code(const FieldContext& ctx, std::span<const int> subset);

}  // namespace duadic
