#include "duadic/distance.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <limits>
#include <mutex>
#include <numeric>
#include <optional>
#include <random>
#include <stdexcept>
#include <thread>

#include <json.hpp>

namespace duadic {

namespace {

using Clock = std::chrono::steady_clock;
constexpr int kNoWeight = std::numeric_limits<int>::max();

double elapsed(Clock::time_point start) { return std::chrono::duration<double>(Clock::now() - start).count(); }

std::uint64_t binomial(std::uint64_t n, std::uint64_t r) {
    if (r > n) return 0;
    r = std::min(r, n - r);
    unsigned __int128 result = 1;
    for (std::uint64_t i = 1; i <= r; ++i) {
        result = result * (n - r + i) / i;
        if (result > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
    }
    return static_cast<std::uint64_t>(result);
}

// ---------------------------------------------------------------------------
// Exhaustive enumeration

DistanceCertificate exhaustive_impl(const CyclicCode& code, ParityFilter parity, std::uint32_t cap) {
    const std::uint32_t k = code.dimension();
    if (k == 0) throw std::invalid_argument("the zero code has no minimum distance");
    if (k > cap)
        throw std::invalid_argument("dimension " + std::to_string(k) + " exceeds the exhaustive cap of " + std::to_string(cap) +
                                    "; use brouwer_zimmermann");
    const auto start = Clock::now();
    const auto g = generator_matrix(code, MatrixForm::kCyclic);
    const std::size_t stride = g.stride();

    std::vector<std::uint64_t> acc(stride, 0);
    int best = kNoWeight, best_odd = kNoWeight;
    std::uint64_t best_msg = 0, best_odd_msg = 0;
    const std::uint64_t total = std::uint64_t{1} << k;
    for (std::uint64_t i = 1; i < total; ++i) {
        const auto flip = static_cast<std::size_t>(std::countr_zero(i));
        const auto row = g.row(flip);
        int w = 0;
        for (std::size_t j = 0; j < stride; ++j) {
            acc[j] ^= row[j];
            w += std::popcount(acc[j]);
        }
        if (w < best) {
            best = w;
            best_msg = i ^ (i >> 1);
        }
        if ((w & 1) && w < best_odd) {
            best_odd = w;
            best_odd_msg = i ^ (i >> 1);
        }
    }

    DistanceCertificate cert;
    cert.n = code.n();
    cert.k = k;
    cert.parity = parity;
    const bool odd = parity == ParityFilter::kOddOnly;
    if (odd && best_odd == kNoWeight) throw std::domain_error("code has no odd-weight codewords");
    cert.lower = cert.upper = odd ? best_odd : best;
    BitVector msg(k);
    const std::uint64_t chosen = odd ? best_odd_msg : best_msg;
    for (std::uint32_t b = 0; b < k; ++b)
        if ((chosen >> b) & 1U) msg.set(b);
    cert.witness = g.left_multiply(msg);
    cert.status = CertificateStatus::kCertified;
    cert.work.evaluations = total - 1;
    cert.work.seconds = elapsed(start);
    return cert;
}

// ---------------------------------------------------------------------------
// Information sets

struct InformationSet {
    BinaryMatrix systematic;            // k x n, identity on the pivot columns
    std::vector<std::size_t> pivots;    // pivot column of each row
    std::vector<std::size_t> others;    // the n - k non-pivot columns
    std::size_t words = 0;              // words per packed redundancy row
    std::vector<std::uint64_t> packed;  // k rows restricted to `others`
    int deficiency = 0;                 // pivots shared with earlier sets
};

InformationSet make_information_set(const BinaryMatrix& g, std::span<const std::size_t> column_order,
                                    const std::vector<bool>& used) {
    auto ech = reduced_row_echelon(g, column_order);
    if (ech.rank() != g.rows()) throw std::logic_error("generator matrix is not of full row rank");
    InformationSet set;
    set.systematic = std::move(ech.matrix);
    set.pivots = std::move(ech.pivots);
    std::vector<bool> is_pivot(g.cols(), false);
    for (auto p : set.pivots) {
        is_pivot[p] = true;
        if (used[p]) ++set.deficiency;
    }
    for (std::size_t c = 0; c < g.cols(); ++c)
        if (!is_pivot[c]) set.others.push_back(c);
    set.words = std::max<std::size_t>(1, words_for_bits(set.others.size()));
    set.packed.assign(g.rows() * set.words, 0);
    for (std::size_t r = 0; r < g.rows(); ++r)
        for (std::size_t j = 0; j < set.others.size(); ++j)
            if (set.systematic.get(r, set.others[j])) set.packed[r * set.words + j / 64] |= std::uint64_t{1} << (j % 64);
    return set;
}

// Greedy chain: each new set prefers columns not yet used as pivots.
std::vector<InformationSet> information_set_chain(const BinaryMatrix& g) {
    const std::size_t n = g.cols();
    const std::size_t k = g.rows();
    std::vector<bool> used(n, false);
    std::size_t used_count = 0;
    std::vector<InformationSet> chain;
    while (used_count < n) {
        std::vector<std::size_t> order;
        order.reserve(n);
        for (std::size_t c = 0; c < n; ++c)
            if (!used[c]) order.push_back(c);
        for (std::size_t c = 0; c < n; ++c)
            if (used[c]) order.push_back(c);
        auto set = make_information_set(g, order, used);
        if (static_cast<std::size_t>(set.deficiency) == k) break;
        for (auto p : set.pivots)
            if (!used[p]) {
                used[p] = true;
                ++used_count;
            }
        chain.push_back(std::move(set));
    }
    return chain;
}

// ---------------------------------------------------------------------------
// Weight-r enumeration over one information set

struct Found {
    bool track_odd = true;
    int weight = kNoWeight;
    std::vector<std::uint32_t> combo;
    int odd_weight = kNoWeight;
    std::vector<std::uint32_t> odd_combo;
};

// Keeps the lighter result; equal weights keep the lexicographically
// smaller combination so the outcome does not depend on thread scheduling.
void merge_found(Found& into, const Found& from) {
    if (from.weight < into.weight || (from.weight == into.weight && from.weight != kNoWeight && from.combo < into.combo)) {
        into.weight = from.weight;
        into.combo = from.combo;
    }
    if (from.odd_weight < into.odd_weight ||
        (from.odd_weight == into.odd_weight && from.odd_weight != kNoWeight && from.odd_combo < into.odd_combo)) {
        into.odd_weight = from.odd_weight;
        into.odd_combo = from.odd_combo;
    }
}

// W > 0 fixes the row width at compile time; W == 0 reads it at run time.
template <std::size_t W>
class CombinationWalker {
   public:
    CombinationWalker(const std::uint64_t* rows, std::size_t words, std::uint32_t k, int r, Found& found)
        : rows_(rows), words_(words), k_(k), r_(r), found_(found), idx_(static_cast<std::size_t>(r)),
          acc_(static_cast<std::size_t>(r) * (W ? W : words), 0) {
        update_threshold();
    }

    // All r-subsets whose smallest element is `first`.
    void run(std::uint32_t first) {
        if (first + static_cast<std::uint32_t>(r_) > k_) return;
        idx_[0] = first;
        const std::uint64_t* row = rows_ + std::size_t{first} * width();
        if (r_ == 1) {
            int pc = 0;
            for (std::size_t w = 0; w < width(); ++w) pc += std::popcount(row[w]);
            if (pc < threshold_) record(pc);
            return;
        }
        std::copy(row, row + width(), acc_.begin());
        descend(1, first + 1);
    }

   private:
    std::size_t width() const noexcept {
        if constexpr (W != 0)
            return W;
        else
            return words_;
    }

    void descend(int depth, std::uint32_t start) {
        const std::uint64_t* acc = acc_.data() + static_cast<std::size_t>(depth - 1) * width();
        if (depth == r_ - 1) {
            for (std::uint32_t i = start; i < k_; ++i) {
                const std::uint64_t* row = rows_ + std::size_t{i} * width();
                int pc = 0;
                for (std::size_t w = 0; w < width(); ++w) pc += std::popcount(acc[w] ^ row[w]);
                if (pc < threshold_) [[unlikely]] {
                    idx_[static_cast<std::size_t>(depth)] = i;
                    record(pc);
                }
            }
            return;
        }
        std::uint64_t* next = acc_.data() + static_cast<std::size_t>(depth) * width();
        const std::uint32_t last = k_ - static_cast<std::uint32_t>(r_ - depth);
        for (std::uint32_t i = start; i <= last; ++i) {
            const std::uint64_t* row = rows_ + std::size_t{i} * width();
            for (std::size_t w = 0; w < width(); ++w) next[w] = acc[w] ^ row[w];
            idx_[static_cast<std::size_t>(depth)] = i;
            descend(depth + 1, i + 1);
        }
    }

    void record(int pc) {
        const int weight = r_ + pc;
        if (weight < found_.weight) {
            found_.weight = weight;
            found_.combo = idx_;
        }
        if ((weight & 1) && weight < found_.odd_weight) {
            found_.odd_weight = weight;
            found_.odd_combo = idx_;
        }
        update_threshold();
    }

    void update_threshold() {
        const int limit = found_.track_odd ? std::max(found_.weight, found_.odd_weight) : found_.weight;
        threshold_ = limit == kNoWeight ? kNoWeight : limit - r_;
    }

    const std::uint64_t* rows_;
    std::size_t words_;
    std::uint32_t k_;
    int r_;
    Found& found_;
    int threshold_ = kNoWeight;
    std::vector<std::uint32_t> idx_;
    std::vector<std::uint64_t> acc_;
};

template <std::size_t W>
void enumerate_prefixes(const InformationSet& set, std::uint32_t k, int r, unsigned threads, Found& found) {
    std::atomic<std::uint32_t> next_first{0};
    std::mutex merge_mutex;
    const Found seed = found;
    auto worker = [&] {
        Found local = seed;
        CombinationWalker<W> walker(set.packed.data(), set.words, k, r, local);
        for (std::uint32_t first = next_first.fetch_add(1); first < k; first = next_first.fetch_add(1)) walker.run(first);
        std::lock_guard lock(merge_mutex);
        merge_found(found, local);
    };
    if (threads <= 1) {
        worker();
        return;
    }
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
}

void enumerate_weight(const InformationSet& set, std::uint32_t k, int r, unsigned threads, Found& found) {
    switch (set.words) {
        case 1: return enumerate_prefixes<1>(set, k, r, threads, found);
        case 2: return enumerate_prefixes<2>(set, k, r, threads, found);
        case 3: return enumerate_prefixes<3>(set, k, r, threads, found);
        case 4: return enumerate_prefixes<4>(set, k, r, threads, found);
        case 6: return enumerate_prefixes<6>(set, k, r, threads, found);
        case 8: return enumerate_prefixes<8>(set, k, r, threads, found);
        default: return enumerate_prefixes<0>(set, k, r, threads, found);
    }
}

BitVector combine_rows(const BinaryMatrix& m, std::span<const std::uint32_t> combo) {
    BitVector out(m.cols());
    auto dst = out.words();
    for (auto i : combo) {
        const auto row = m.row(i);
        for (std::size_t w = 0; w < dst.size(); ++w) dst[w] ^= row[w];
    }
    return out;
}

// ---------------------------------------------------------------------------
// Checkpoints

using nlohmann::json;

struct CheckpointEntry {
    std::vector<int> completed;
    int upper = kNoWeight;
    std::string witness_hex;
    int odd_upper = kNoWeight;
    std::string odd_witness_hex;
    std::uint64_t evaluations = 0;
    double seconds = 0.0;
};

std::string checkpoint_key(const CyclicCode& code) { return std::to_string(code.n()) + ":" + code.generator().to_hex(); }

json read_checkpoint_file(const std::string& path) {
    if (path.empty() || !std::filesystem::exists(path)) return json::object();
    std::ifstream in(path);
    json j = json::parse(in, nullptr, false);
    if (j.is_discarded() || !j.is_object()) return json::object();
    return j;
}

std::optional<CheckpointEntry> load_checkpoint(const std::string& path, const CyclicCode& code, std::size_t sets) {
    const json root = read_checkpoint_file(path);
    const auto codes = root.find("codes");
    if (codes == root.end() || !codes->contains(checkpoint_key(code))) return std::nullopt;
    const json& e = (*codes)[checkpoint_key(code)];
    CheckpointEntry entry;
    entry.completed = e.at("completed").get<std::vector<int>>();
    if (entry.completed.size() != sets) return std::nullopt;
    if (!e.at("upper").is_null()) {
        entry.upper = e.at("upper").get<int>();
        entry.witness_hex = e.at("witness_hex").get<std::string>();
    }
    if (!e.at("odd_upper").is_null()) {
        entry.odd_upper = e.at("odd_upper").get<int>();
        entry.odd_witness_hex = e.at("odd_witness_hex").get<std::string>();
    }
    entry.evaluations = e.at("evaluations").get<std::uint64_t>();
    entry.seconds = e.value("seconds", 0.0);
    return entry;
}

void store_checkpoint(const std::string& path, const CyclicCode& code, const CheckpointEntry& entry) {
    if (path.empty()) return;
    json root = read_checkpoint_file(path);
    json e;
    e["n"] = code.n();
    e["k"] = code.dimension();
    e["completed"] = entry.completed;
    e["upper"] = entry.upper == kNoWeight ? json(nullptr) : json(entry.upper);
    e["witness_hex"] = entry.witness_hex;
    e["odd_upper"] = entry.odd_upper == kNoWeight ? json(nullptr) : json(entry.odd_upper);
    e["odd_witness_hex"] = entry.odd_witness_hex;
    e["evaluations"] = entry.evaluations;
    e["seconds"] = entry.seconds;
    root["codes"][checkpoint_key(code)] = std::move(e);
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp);
        out << root.dump(2) << '\n';
    }
    std::filesystem::rename(tmp, path);
}

}  // namespace

std::string to_string(CertificateStatus status) { return status == CertificateStatus::kCertified ? "certified" : "partial"; }

DistanceCertificate exhaustive_min_weight(const CyclicCode& code, ParityFilter parity, const ExhaustiveOptions& options) {
    return exhaustive_impl(code, parity, options.max_dimension);
}

DistanceCertificate brouwer_zimmermann(const CyclicCode& code, const BZOptions& options) {
    const std::uint32_t n = code.n();
    const std::uint32_t k = code.dimension();
    if (k == 0) throw std::invalid_argument("the zero code has no minimum distance");
    const auto start = Clock::now();
    const bool odd_target = options.target == ParityFilter::kOddOnly;
    const unsigned threads = options.threads ? options.threads : std::max(1U, std::thread::hardware_concurrency());

    const auto g = generator_matrix(code, MatrixForm::kCyclic);
    const auto chain = information_set_chain(g);
    bool all_even = true;
    for (std::size_t r = 0; r < g.rows(); ++r)
        if (g.row_weight(r) % 2) all_even = false;
    if (odd_target && all_even) throw std::domain_error("code has no odd-weight codewords");

    bool window = false;
    if (options.cyclic_window_bound) {
        window = true;
        for (std::size_t i = 0; i < chain[0].pivots.size(); ++i)
            if (chain[0].pivots[i] != i) window = false;
    }

    std::vector<int> completed(chain.size(), 0);
    Found found;
    BitVector witness(n), odd_witness(n);
    std::uint64_t evaluations = 0;
    double prior_seconds = 0.0;
    if (auto entry = load_checkpoint(options.checkpoint_path, code, chain.size())) {
        // Restored witnesses are re-checked; a bad state file only costs recomputation.
        auto valid = [&](int weight, const std::string& hex, BitVector& dst) {
            if (weight == kNoWeight) return true;
            try {
                dst = BitVector::from_hex(hex, n);
            } catch (const std::invalid_argument&) {
                return false;
            }
            return static_cast<int>(dst.weight()) == weight && contains(code, dst);
        };
        if (valid(entry->upper, entry->witness_hex, witness) && valid(entry->odd_upper, entry->odd_witness_hex, odd_witness)) {
            completed = entry->completed;
            evaluations = entry->evaluations;
            prior_seconds = entry->seconds;
            found.weight = entry->upper;
            found.odd_weight = entry->odd_upper;
        } else {
            witness = odd_witness = BitVector(n);
        }
    }

    auto proven_bound = [&]() -> int {
        long bound = 0;
        for (std::size_t j = 0; j < chain.size(); ++j) bound += std::max(0, completed[j] + 1 - chain[j].deficiency);
        if (window) {
            const long w = (static_cast<long>(n) * (completed[0] + 1) + k - 1) / k;
            bound = std::max(bound, w);
        }
        bound = std::max(bound, 1L);
        if (odd_target) {
            if (bound % 2 == 0) ++bound;
        } else if (all_even && bound % 2 == 1) {
            ++bound;
        }
        return static_cast<int>(std::min<long>(bound, std::numeric_limits<int>::max() - 1));
    };
    auto current_upper = [&] { return odd_target ? found.odd_weight : found.weight; };
    auto exhausted = [&] {
        for (int c : completed)
            if (c >= static_cast<int>(k)) return true;
        return false;
    };
    auto is_certified = [&] { return current_upper() != kNoWeight && (exhausted() || proven_bound() >= current_upper()); };

    bool out_of_budget = false;
    for (int r = 1; r <= static_cast<int>(k) && !is_certified() && !out_of_budget; ++r) {
        for (std::size_t j = 0; j < chain.size() && !is_certified(); ++j) {
            if (completed[j] >= r) continue;
            const std::uint64_t cost = binomial(k, static_cast<std::uint64_t>(r));
            if (cost > options.budget || evaluations > options.budget - cost) {
                out_of_budget = true;
                break;
            }
            Found step;
            step.track_odd = !all_even;
            step.weight = found.weight;
            step.odd_weight = found.odd_weight;
            enumerate_weight(chain[j], k, r, threads, step);
            if (step.weight < found.weight) {
                found.weight = step.weight;
                witness = combine_rows(chain[j].systematic, step.combo);
            }
            if (step.odd_weight < found.odd_weight) {
                found.odd_weight = step.odd_weight;
                odd_witness = combine_rows(chain[j].systematic, step.odd_combo);
            }
            completed[j] = r;
            evaluations += cost;

            CheckpointEntry entry{completed,
                                  found.weight,
                                  found.weight == kNoWeight ? "" : witness.to_hex(),
                                  found.odd_weight,
                                  found.odd_weight == kNoWeight ? "" : odd_witness.to_hex(),
                                  evaluations,
                                  prior_seconds + elapsed(start)};
            store_checkpoint(options.checkpoint_path, code, entry);
            if (options.progress) {
                const int up = current_upper();
                options.progress(BZProgress{r, static_cast<int>(j), std::min(proven_bound(), up), up, evaluations,
                                            prior_seconds + elapsed(start)});
            }
        }
    }

    DistanceCertificate cert;
    cert.n = n;
    cert.k = k;
    cert.parity = options.target;
    const int up = current_upper();
    cert.upper = up == kNoWeight ? static_cast<int>(n) + 1 : up;
    cert.witness = odd_target ? odd_witness : witness;
    const bool done = is_certified();
    cert.lower = done ? cert.upper : std::min(proven_bound(), cert.upper);
    cert.status = done ? CertificateStatus::kCertified : CertificateStatus::kPartial;
    cert.work.evaluations = evaluations;
    cert.work.seconds = prior_seconds + elapsed(start);
    cert.work.information_sets = static_cast<int>(chain.size());
    cert.work.completed_weights = completed;
    return cert;
}

int random_information_set_upper(const CyclicCode& code, std::uint64_t trials, std::uint64_t seed, int max_message_weight) {
    if (trials == 0) throw std::invalid_argument("at least one trial is required");
    if (code.dimension() == 0) throw std::invalid_argument("the zero code has no minimum distance");
    const auto g = generator_matrix(code, MatrixForm::kCyclic);
    const std::size_t k = g.rows();
    std::vector<std::size_t> order(g.cols());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::mt19937_64 rng(seed);
    int best = kNoWeight;
    const int max_r = std::min<int>(max_message_weight, static_cast<int>(k));
    std::vector<std::uint64_t> acc(g.stride());
    for (std::uint64_t t = 0; t < trials; ++t) {
        if (t > 0) std::shuffle(order.begin(), order.end(), rng);
        const auto ech = reduced_row_echelon(g, order);
        const auto& s = ech.matrix;
        // Messages of weight <= max_r, enumerated as sorted index tuples.
        std::vector<std::size_t> idx;
        for (int r = 1; r <= max_r; ++r) {
            idx.assign(static_cast<std::size_t>(r), 0);
            std::iota(idx.begin(), idx.end(), std::size_t{0});
            while (true) {
                std::fill(acc.begin(), acc.end(), 0);
                for (auto i : idx) {
                    const auto row = s.row(i);
                    for (std::size_t w = 0; w < acc.size(); ++w) acc[w] ^= row[w];
                }
                int weight = 0;
                for (auto w : acc) weight += std::popcount(w);
                best = std::min(best, weight);
                int pos = r - 1;
                while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == k - static_cast<std::size_t>(r - pos)) --pos;
                if (pos < 0) break;
                ++idx[static_cast<std::size_t>(pos)];
                for (int q = pos + 1; q < r; ++q) idx[static_cast<std::size_t>(q)] = idx[static_cast<std::size_t>(q - 1)] + 1;
            }
        }
    }
    return best;
}

DistanceCertificate min_odd_weight(const CyclicCode& code, const MinOddOptions& options) {
    if (code.defining_set().contains(0)) throw std::invalid_argument("0 is in the defining set; every codeword has even weight");
    if (code.dimension() <= options.exhaustive_max_dimension)
        return exhaustive_impl(code, ParityFilter::kOddOnly, options.exhaustive_max_dimension);
    BZOptions bz = options.bz;
    bz.target = ParityFilter::kOddOnly;
    return brouwer_zimmermann(code, bz);
}

}  // namespace duadic
