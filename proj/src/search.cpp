#include "gcp/search.hpp"

#include "gcp/cyclotomic.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>

namespace gcp {

namespace {

constexpr std::uint64_t kNodeFlushInterval = 4096;

struct SharedState {
    explicit SharedState(const SearchSpec& spec)
        : length(spec.length),
          alphabet(spec.alphabet),
          normalize(spec.normalize),
          budget(spec.node_budget),
          reducer(&reducer_for(spec.alphabet)) {}

    std::int64_t length;
    std::int64_t alphabet;
    bool normalize;
    std::uint64_t budget;
    const CycloReducer* reducer;
    std::atomic<std::uint64_t> nodes{0};
    std::atomic<bool> aborted{false};
};

using RawPair = std::pair<std::vector<std::int64_t>, std::vector<std::int64_t>>;

// One independent exploration unit. Holds all scratch buffers so the inner
// loops never allocate.
class Worker {
  public:
    Worker(SharedState& shared, bool stop_after_first_a)
        : shared_(shared),
          stop_after_first_a_(stop_after_first_a),
          m_(shared.length),
          q_(shared.alphabet),
          degree_(shared.reducer->degree()),
          a_(static_cast<std::size_t>(m_), 0),
          b_(static_cast<std::size_t>(m_), 0),
          counts_(static_cast<std::size_t>(q_), 0),
          reduced_(static_cast<std::size_t>(degree_), 0),
          targets_(static_cast<std::size_t>(m_) * static_cast<std::size_t>(degree_), 0),
          targets_ready_(static_cast<std::size_t>(m_), 0),
          b_order_(static_cast<std::size_t>(m_), 0) {
        // b is assigned 0, M-1, 1, M-2, ...; after the (2t)-th assignment the
        // shift M-t becomes fully determined on both ends and is checked.
        for (std::int64_t s = 0; s < m_; ++s) {
            b_order_[static_cast<std::size_t>(s)] = (s % 2 == 0) ? s / 2 : m_ - (s + 1) / 2;
        }
    }

    // Runs the a-enumeration with the given prefix already assigned
    // (prefix values at positions [first_free, first_free + prefix_len)).
    void run(std::span<const std::int64_t> prefix) {
        const std::int64_t first_free = shared_.normalize ? 1 : 0;
        for (std::size_t i = 0; i < prefix.size(); ++i) {
            a_[static_cast<std::size_t>(first_free) + i] = prefix[i];
            if (!tick()) {
                return;
            }
        }
        search_a(first_free + static_cast<std::int64_t>(prefix.size()));
        flush_nodes();
    }

    std::vector<RawPair>& results() { return results_; }
    bool found_any() const { return !results_.empty(); }

  private:
    bool tick() {
        if (++local_nodes_ >= kNodeFlushInterval) {
            flush_nodes();
        }
        return !shared_.aborted.load(std::memory_order_relaxed) && !done_;
    }

    void flush_nodes() {
        if (local_nodes_ == 0) {
            return;
        }
        const std::uint64_t total =
            shared_.nodes.fetch_add(local_nodes_, std::memory_order_relaxed) + local_nodes_;
        local_nodes_ = 0;
        if (total > shared_.budget) {
            shared_.aborted.store(true, std::memory_order_relaxed);
        }
    }

    void search_a(std::int64_t pos) {
        if (pos == m_) {
            complete_a();
            return;
        }
        for (std::int64_t v = 0; v < q_; ++v) {
            a_[static_cast<std::size_t>(pos)] = v;
            if (!tick()) {
                return;
            }
            search_a(pos + 1);
            if (shared_.aborted.load(std::memory_order_relaxed) || done_) {
                return;
            }
        }
    }

    void complete_a() {
        std::fill(targets_ready_.begin(), targets_ready_.end(), 0);
        const std::size_t before = results_.size();
        search_b(0);
        if (stop_after_first_a_ && results_.size() > before) {
            // All counter-sequences of this a were collected; the caller
            // takes the lexicographic minimum.
            done_ = true;
        }
    }

    void search_b(std::int64_t step) {
        if (step == m_) {
            // Shifts below ceil(M/2) involve interior entries on both sides
            // and are only decidable on the complete sequence.
            for (std::int64_t lam = 1; lam < (m_ + 1) / 2; ++lam) {
                if (!shift_satisfied(lam)) {
                    return;
                }
            }
            results_.emplace_back(a_, b_);
            return;
        }
        const std::int64_t pos = b_order_[static_cast<std::size_t>(step)];
        const std::int64_t last = (shared_.normalize && pos == 0) ? 0 : q_ - 1;
        const std::int64_t check_lam = (step % 2 == 1) ? m_ - (step + 1) / 2 : 0;
        for (std::int64_t v = 0; v <= last; ++v) {
            b_[static_cast<std::size_t>(pos)] = v;
            if (!tick()) {
                return;
            }
            if (check_lam != 0 && !shift_satisfied(check_lam)) {
                continue;
            }
            search_b(step + 1);
            if (shared_.aborted.load(std::memory_order_relaxed)) {
                return;
            }
        }
    }

    bool shift_satisfied(std::int64_t lam) {
        const std::size_t base = static_cast<std::size_t>(lam) * static_cast<std::size_t>(degree_);
        if (!targets_ready_[static_cast<std::size_t>(lam)]) {
            // targets_[lam] = reduced coordinates of -C_a(lam), computed on
            // first use: most b-branches die at the outermost shifts.
            std::fill(counts_.begin(), counts_.end(), 0);
            for (std::int64_t l = 0; l + lam < m_; ++l) {
                ++counts_[static_cast<std::size_t>(mod_q(a_[static_cast<std::size_t>(l)] -
                                                         a_[static_cast<std::size_t>(l + lam)]))];
            }
            shared_.reducer->reduce_into(counts_, reduced_);
            for (std::int64_t k = 0; k < degree_; ++k) {
                targets_[base + static_cast<std::size_t>(k)] = -reduced_[static_cast<std::size_t>(k)];
            }
            targets_ready_[static_cast<std::size_t>(lam)] = 1;
        }
        std::fill(counts_.begin(), counts_.end(), 0);
        for (std::int64_t l = 0; l + lam < m_; ++l) {
            ++counts_[static_cast<std::size_t>(mod_q(b_[static_cast<std::size_t>(l)] -
                                                     b_[static_cast<std::size_t>(l + lam)]))];
        }
        shared_.reducer->reduce_into(counts_, reduced_);
        for (std::int64_t k = 0; k < degree_; ++k) {
            if (reduced_[static_cast<std::size_t>(k)] != targets_[base + static_cast<std::size_t>(k)]) {
                return false;
            }
        }
        return true;
    }

    std::int64_t mod_q(std::int64_t v) const {
        std::int64_t r = v % q_;
        return r < 0 ? r + q_ : r;
    }

    SharedState& shared_;
    bool stop_after_first_a_;
    bool done_ = false;
    std::int64_t m_;
    std::int64_t q_;
    std::int64_t degree_;
    std::uint64_t local_nodes_ = 0;
    std::vector<std::int64_t> a_;
    std::vector<std::int64_t> b_;
    std::vector<std::int64_t> counts_;
    std::vector<std::int64_t> reduced_;
    std::vector<std::int64_t> targets_;
    std::vector<char> targets_ready_;
    std::vector<std::int64_t> b_order_;
    std::vector<RawPair> results_;
};

void validate(const SearchSpec& spec) {
    if (spec.length < 1) {
        throw std::invalid_argument("search: length must be >= 1");
    }
    if (spec.alphabet < 2) {
        throw std::invalid_argument("search: alphabet must be >= 2");
    }
}

// A full enumeration assigns every free entry of a at least q^free times, so
// exceeding the budget is already decided by the instance size. Only the
// full search gets this pre-flight; find_seed may legitimately stop early.
void reject_oversized(const SearchSpec& spec) {
    const std::int64_t free_positions = spec.length - (spec.normalize ? 1 : 0);
    std::uint64_t lower_bound = 1;
    for (std::int64_t i = 0; i < free_positions; ++i) {
        if (lower_bound > spec.node_budget / static_cast<std::uint64_t>(spec.alphabet)) {
            throw SearchBudgetExceeded("search too large: at least " + std::to_string(spec.alphabet) +
                                       "^" + std::to_string(free_positions) +
                                       " nodes needed, node budget is " +
                                       std::to_string(spec.node_budget) +
                                       " (raise the budget to continue)");
        }
        lower_bound *= static_cast<std::uint64_t>(spec.alphabet);
    }
}

// Top-level branches: assignments of the first free a-entries, in
// lexicographic order. Depth is capped so the branch list stays small.
std::vector<std::vector<std::int64_t>> branch_prefixes(const SearchSpec& spec) {
    const std::int64_t free_positions = spec.length - (spec.normalize ? 1 : 0);
    const std::int64_t depth = std::min<std::int64_t>(free_positions, 2);
    std::vector<std::vector<std::int64_t>> prefixes;
    std::int64_t count = 1;
    for (std::int64_t i = 0; i < depth; ++i) {
        count *= spec.alphabet;
    }
    prefixes.reserve(static_cast<std::size_t>(count));
    for (std::int64_t id = 0; id < count; ++id) {
        std::vector<std::int64_t> p(static_cast<std::size_t>(depth));
        std::int64_t rest = id;
        for (std::int64_t i = depth; i-- > 0;) {
            p[static_cast<std::size_t>(i)] = rest % spec.alphabet;
            rest /= spec.alphabet;
        }
        prefixes.push_back(std::move(p));
    }
    return prefixes;
}

SearchResult finalize(std::vector<std::vector<RawPair>> branch_results, const SearchSpec& spec,
                      const SharedState& state) {
    if (state.aborted.load()) {
        throw SearchBudgetExceeded("search too large: node budget of " + std::to_string(spec.node_budget) +
                                   " exceeded (raise the budget to continue)");
    }
    std::vector<RawPair> all;
    for (auto& chunk : branch_results) {
        for (auto& rp : chunk) {
            all.push_back(std::move(rp));
        }
    }
    std::sort(all.begin(), all.end());
    SearchResult out;
    out.nodes_visited = state.nodes.load();
    if (spec.max_results && all.size() > *spec.max_results) {
        all.resize(*spec.max_results);
        out.truncated = true;
    }
    out.pairs.reserve(all.size());
    for (auto& rp : all) {
        out.pairs.emplace_back(QarySeq(spec.alphabet, std::move(rp.first)),
                               QarySeq(spec.alphabet, std::move(rp.second)));
    }
    return out;
}

} // namespace

SearchResult exhaustive_gcp_search(const SearchSpec& spec) {
    validate(spec);
    reject_oversized(spec);
    SharedState state(spec);
    const auto prefixes = branch_prefixes(spec);
    std::vector<std::vector<RawPair>> branch_results(prefixes.size());

#pragma omp parallel for schedule(dynamic, 1)
    for (std::size_t i = 0; i < prefixes.size(); ++i) {
        Worker worker(state, false);
        worker.run(prefixes[i]);
        branch_results[i] = std::move(worker.results());
    }
    return finalize(std::move(branch_results), spec, state);
}

SearchResult exhaustive_gcp_search_serial(const SearchSpec& spec) {
    validate(spec);
    reject_oversized(spec);
    SharedState state(spec);
    Worker worker(state, false);
    worker.run({});
    std::vector<std::vector<RawPair>> branch_results;
    branch_results.push_back(std::move(worker.results()));
    return finalize(std::move(branch_results), spec, state);
}

std::optional<SeqPair> find_seed(std::int64_t length, std::int64_t alphabet,
                                 std::uint64_t node_budget) {
    SearchSpec spec;
    spec.length = length;
    spec.alphabet = alphabet;
    spec.normalize = true;
    spec.node_budget = node_budget;
    validate(spec);
    SharedState state(spec);
    // Lexicographic-first requires in-order traversal: a single worker walks
    // a in lex order and stops at the first a admitting any counter-sequence.
    Worker worker(state, true);
    worker.run({});
    if (state.aborted.load()) {
        throw SearchBudgetExceeded("search too large: node budget of " + std::to_string(spec.node_budget) +
                                   " exceeded (raise the budget to continue)");
    }
    if (!worker.found_any()) {
        return std::nullopt;
    }
    auto& results = worker.results();
    std::sort(results.begin(), results.end());
    return SeqPair(QarySeq(alphabet, std::move(results.front().first)),
                   QarySeq(alphabet, std::move(results.front().second)));
}

} // namespace gcp
