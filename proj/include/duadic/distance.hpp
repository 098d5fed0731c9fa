#pragma once

// Minimum-distance engines for binary cyclic codes.
//
// exhaustive_min_weight walks all 2^k codewords in Gray-code order and is
// the ground truth for small dimensions. brouwer_zimmermann enumerates
// low-weight messages over a chain of information sets and stops once the
// proven lower bound meets the lightest codeword seen. Both track the
// minimum odd weight alongside the minimum weight.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "duadic/bits.hpp"
#include "duadic/cyclic.hpp"

namespace duadic {

enum class ParityFilter { kAll, kOddOnly };
enum class CertificateStatus { kCertified, kPartial };

struct WorkStats {
    std::uint64_t evaluations = 0;  // codewords whose weight was computed
    double seconds = 0.0;
    int information_sets = 0;
    std::vector<int> completed_weights;  // per information set, largest message weight fully enumerated
};

/// lower <= d <= upper, with a codeword of weight upper as witness. For
/// ParityFilter::kOddOnly the bounds refer to the minimum odd weight.
struct DistanceCertificate {
    std::uint32_t n = 0;
    std::uint32_t k = 0;
    ParityFilter parity = ParityFilter::kAll;
    int lower = 0;
    int upper = 0;
    BitVector witness;
    CertificateStatus status = CertificateStatus::kPartial;
    WorkStats work;

    bool certified() const noexcept { return status == CertificateStatus::kCertified; }
};

struct ExhaustiveOptions {
    std::uint32_t max_dimension = 28;
};

/// Throws std::invalid_argument when k == 0 or k > max_dimension, and
/// std::domain_error when kOddOnly is requested but every codeword is even.
DistanceCertificate exhaustive_min_weight(const CyclicCode& code, ParityFilter parity = ParityFilter::kAll,
                                          const ExhaustiveOptions& options = {});

struct BZProgress {
    int round = 0;
    int information_set = 0;
    int lower = 0;
    int upper = 0;
    std::uint64_t evaluations = 0;
    double seconds = 0.0;
};

struct BZOptions {
    std::uint64_t budget = 100'000'000'000ULL;  // codeword evaluations
    unsigned threads = 0;                       // 0: hardware concurrency
    ParityFilter target = ParityFilter::kAll;
    // Use that every cyclic shift of a codeword is a codeword: if the first
    // information set is a window of k consecutive positions and all
    // messages of weight <= r were seen on it, unseen words have weight
    // >= ceil(n (r + 1) / k).
    bool cyclic_window_bound = true;
    // JSON state file; completed (round, information set) steps are stored
    // and skipped on a later run of the same code.
    std::string checkpoint_path;
    std::function<void(const BZProgress&)> progress;
};

/// Certified minimum (odd) weight, or a partial certificate when the budget
/// runs out first. Deterministic for a given code and options.
DistanceCertificate brouwer_zimmermann(const CyclicCode& code, const BZOptions& options = {});

/// Lightest codeword found by encoding all messages of weight <= max_weight
/// over `trials` information sets. The first trial uses the natural column
/// order; the rest use column orders shuffled by a generator seeded with seed.
int random_information_set_upper(const CyclicCode& code, std::uint64_t trials, std::uint64_t seed,
                                 int max_message_weight = 2);

struct MinOddOptions {
    std::uint32_t exhaustive_max_dimension = 28;
    BZOptions bz;
};

/// Minimum odd weight d_o. Exhaustive up to the dimension cap, otherwise
/// Brouwer-Zimmermann targeting odd weights (may return a partial
/// certificate). Throws std::invalid_argument when 0 is in the defining set.
DistanceCertificate min_odd_weight(const CyclicCode& code, const MinOddOptions& options = {});

std::string to_string(CertificateStatus status);

}  // namespace duadic
