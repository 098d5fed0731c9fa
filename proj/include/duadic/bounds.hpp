#pragma once

// Lower bounds on the minimum distance of cyclic codes: the BCH bound on
// runs of consecutive roots, the same bound after rescaling the defining set
// by a unit, the square-root bound for odd-like duadic codes, the closed-form
// bounds for the r = 6 families, and the consecutive-multiple containments
// that produce those bounds.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "duadic/cosets.hpp"

namespace duadic {

/// Run {run_start, ..., run_start + run_length - 1} (mod n) lies in
/// witness_unit * T, so d >= bound = run_length + 1.
struct BoundReport {
    int bound = 1;
    std::optional<std::uint64_t> witness_unit;
    std::uint64_t run_start = 0;
    std::uint64_t run_length = 0;

    friend bool operator==(const BoundReport&, const BoundReport&) = default;
};

/// Longest circular run of consecutive residues in T. Ties go to the
/// smallest start. Throws std::invalid_argument when T = Z_n.
BoundReport bch_bound(const DefiningSet& set);

struct AmplifiedOptions {
    // Moduli up to this size scan every unit; larger ones scan the
    // structured candidates plus random_units random units.
    std::uint64_t full_scan_limit = std::uint64_t{1} << 15;
    std::size_t random_units = 256;
    std::uint64_t seed = 1;
};

/// max over units u of bch_bound(u T), reporting the smallest maximizing u.
BoundReport amplified_bch_bound(const DefiningSet& set, const AmplifiedOptions& options = {});

/// {a v mod n : 1 <= a <= count} ⊆ T. Throws std::invalid_argument when
/// gcd(v, n) != 1.
bool verify_consecutive_multiples(const DefiningSet& set, std::uint64_t v, std::uint64_t count);

/// One containment clause of the r = 6 auxiliary lemmas.
struct LemmaClause {
    int lemma = 0;      // 2..10
    int item = 0;       // 1 or 2
    int m = 0;
    std::uint64_t v = 0;
    std::uint64_t count = 0;  // A in {a v : 1 <= a <= A}
    std::vector<int> subset;
    bool unit = false;  // gcd(v, n) == 1
    bool pass = false;
    bool degenerate = false;  // v == 1, the clause reduces to a plain run
    // Containment with the other choice of v, 2^((m+1)/2) - 1 <-> 2^((m-1)/2) - 1.
    bool alternate_pass = false;
};

/// Every containment clause whose congruence condition and lower limit on m
/// apply. Throws std::invalid_argument for even m or m < 3.
std::vector<LemmaClause> lemma_suite(int m);

/// gcd(a^m - 1, a^l - 1) == a^gcd(m,l) - 1, evaluated exactly.
bool gcd_power_identity_holds(std::uint64_t a, unsigned m, unsigned l);

/// Smallest d with d^2 >= n, or d^2 - d + 1 >= n when the splitting is
/// given by mu = -1.
int square_root_bound(std::uint64_t n, bool mu_is_minus_one);

/// Closed-form lower bound on d(C_[6,m,S]) for the families with a proven
/// bound. Throws std::invalid_argument for other (m, S).
int theorem_bound(int m, std::span<const int> subset);

// Bound for the dual (even-like) code: theorem_bound + 1.
inline int theorem_dual_bound(int m, std::span<const int> subset) { return theorem_bound(m, subset) + 1; }

// True when theorem_bound(m, subset) is defined.
bool theorem_covers(int m, std::span<const int> subset);

}  // namespace duadic
