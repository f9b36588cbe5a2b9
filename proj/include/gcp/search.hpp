#pragma once

#include "gcp/sequence.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace gcp {

struct SearchSpec {
    std::int64_t length = 2;
    std::int64_t alphabet = 2;
    // Fix the first exponent of both sequences to 0, quotienting the global
    // phase the autocorrelation is invariant under (factor q^2 reduction).
    bool normalize = true;
    std::optional<std::size_t> max_results;
    std::uint64_t node_budget = 1'000'000'000;
};

// Raised when the configured node budget is exhausted. Never silently
// truncates: a partial enumeration is not an enumeration.
class SearchBudgetExceeded : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct SearchResult {
    std::vector<SeqPair> pairs; // lexicographic on (a.exps, b.exps)
    bool truncated = false;     // max_results applied after the full run
    std::uint64_t nodes_visited = 0;
};

/**
 * Every pair (a, b) over Z_q of the given length whose autocorrelations sum
 * to zero at all nonzero shifts. Enumerates a depth-first; for each complete
 * a the counter-sequence b is searched from both ends inward, so the
 * largest-shift constraints C_b(M-k) = -C_a(M-k) — which involve only the
 * first k and last k entries — prune as soon as both ends are assigned.
 * The parallel variant explores top-level branches concurrently; output is
 * sorted and identical for any worker count.
 */
SearchResult exhaustive_gcp_search(const SearchSpec& spec);
SearchResult exhaustive_gcp_search_serial(const SearchSpec& spec);

// First normalized pair in the deterministic order, or nullopt if none
// exists. Same node-budget guard as the full search, but applied as the
// walk proceeds: an early hit may return before the budget matters.
std::optional<SeqPair> find_seed(std::int64_t length, std::int64_t alphabet,
                                 std::uint64_t node_budget = 1'000'000'000);

} // namespace gcp
