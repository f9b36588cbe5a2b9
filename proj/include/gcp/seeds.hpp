#pragma once

#include "gcp/construct.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace gcp {

// A shipped or user-registered quaternary seed with its origin. `verified`
// is set by running the exact complementarity check at load time.
struct SeedRecord {
    std::string name;
    SeedPair seed;
    std::string provenance;
    bool verified = false;
};

// Raised when a record fails the complementarity check at load time.
class SeedIntegrityError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/**
 * Witness that M = 2^(a+u) 3^b 5^c 11^d 13^e with
 * b + c + d + e <= a + 2u + 1 and u <= c + e.
 */
struct LengthWitness {
    std::int64_t a = 0;
    std::int64_t b = 0;
    std::int64_t c = 0;
    std::int64_t d = 0;
    std::int64_t e = 0;
    std::int64_t u = 0;

    friend bool operator==(const LengthWitness&, const LengthWitness&) = default;
};

// Shipped seed database; every record is verified on first access.
const std::vector<SeedRecord>& builtin_seeds();

// Loads additional records from every .json pair document in a directory
// (quaternary pairs only). Records failing verification are fatal.
std::vector<SeedRecord> load_seed_directory(const std::string& dir);

// Builtin records first, then (non-shadowing) directory records. dir may be
// empty. Lookup by name prefers builtins.
std::vector<SeedRecord> all_seeds(const std::string& dir);
std::optional<SeedRecord> find_seed_by_name(const std::string& name, const std::string& dir);

/**
 * Existence test for quaternary complementary pairs of length M: a witness
 * of the admissible decomposition, or nullopt when M has no such
 * decomposition. The smallest valid u is returned. A nullopt means "not
 * covered by the existence criterion", never "does not exist".
 */
std::optional<LengthWitness> is_admissible_length(std::int64_t length);

// All L <= limit of the form M * 2^m with M admissible and m >= 1,
// deduplicated, ascending.
std::vector<std::int64_t> reachable_lengths(std::int64_t limit);

// The two ceiling-formula functions from the published length-44 attempt,
// values reduced mod 4 after an exact integer evaluation. y in [0, 10].
std::pair<std::int64_t, std::int64_t> attempt44_chi(std::int64_t y);

// The length-44 exponent pair defined by that attempt (reading the bracket
// as x1*(chi2-chi1) + chi1). Its complementarity verdict is an output of the
// verifier, not an input assumption.
SeqPair attempt44_pair();

} // namespace gcp
