#pragma once

#include "gcp/sequence.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace gcp {

/**
 * Parameters of the extended-Boolean-function expansion: m binary variables,
 * alphabet scale h (final alphabet 4h), a permutation pi of {1,...,m},
 * affine coefficients c_1..c_m and offsets theta, theta_prime over Z_{4h}.
 * Coefficients and offsets are reduced mod 4h on construction.
 */
class ExpansionParams {
  public:
    ExpansionParams(std::int64_t m, std::int64_t h, std::vector<std::int64_t> perm,
                    std::vector<std::int64_t> coeffs, std::int64_t theta, std::int64_t theta_prime);

    // pi = identity, c = all-ones; theta = 1, theta_prime = 0, except m = 2
    // where theta = theta_prime = 1. Any defaults give equivalent verdicts.
    static ExpansionParams defaults(std::int64_t m, std::int64_t h);

    std::int64_t m() const noexcept { return m_; }
    std::int64_t h() const noexcept { return h_; }
    std::int64_t alphabet() const noexcept { return 4 * h_; }
    // 1-based: pi(k) = perm()[k-1].
    std::span<const std::int64_t> perm() const noexcept { return perm_; }
    std::span<const std::int64_t> coeffs() const noexcept { return coeffs_; }
    std::int64_t theta() const noexcept { return theta_; }
    std::int64_t theta_prime() const noexcept { return theta_prime_; }

  private:
    std::int64_t m_;
    std::int64_t h_;
    std::vector<std::int64_t> perm_;
    std::vector<std::int64_t> coeffs_;
    std::int64_t theta_;
    std::int64_t theta_prime_;
};

// A quaternary seed pair (phi1, phi2) of equal length. Alphabets other than
// 4 are rejected; callers embed explicitly via rescale_alphabet if needed.
class SeedPair {
  public:
    SeedPair(QarySeq phi1, QarySeq phi2);

    const QarySeq& phi1() const noexcept { return phi1_; }
    const QarySeq& phi2() const noexcept { return phi2_; }
    std::int64_t length() const noexcept { return phi1_.length(); }
    SeqPair as_pair() const { return SeqPair(phi1_, phi2_); }

    friend bool operator==(const SeedPair&, const SeedPair&) = default;

  private:
    QarySeq phi1_;
    QarySeq phi2_;
};

struct IndexDecomposition {
    std::vector<std::int64_t> bits; // i_1..i_m, i_1 most significant
    std::int64_t y = 0;
};

// I = (i_1 2^{m-1} + ... + i_m) * M + y with 0 <= y <= M-1.
IndexDecomposition index_decompose(std::int64_t index, std::int64_t m, std::int64_t seed_length);

/**
 * The expansion function over Z_{4h}:
 *   2h * sum_{k<m} x_{pi(k)} x_{pi(k+1)} + sum_k c_k x_k
 *     + h * [ x_{pi(m)} * (phi2(y) - phi1(y)) + phi1(y) ]
 * The bracket is evaluated mod 4 before scaling by h; the quadratic sum is
 * empty for m = 1.
 */
std::int64_t eval_f(const ExpansionParams& params, const SeedPair& seed,
                    std::span<const std::int64_t> bits, std::int64_t y);

/**
 * The (seed, params) expansion: a pair over Z_{4h} of length M*2^m with
 *   exps_a[I] = f(I) + theta,  exps_b[I] = f(I) + 2h*x_{pi(1)} + theta_prime.
 * Indices are independent; the parallel variant writes by index, the serial
 * variant is the literal index_decompose + eval_f composition.
 */
SeqPair construct_pair(const SeedPair& seed, const ExpansionParams& params);
SeqPair construct_pair_serial(const SeedPair& seed, const ExpansionParams& params);

struct EquivalenceReport {
    bool seed_is_gcp = false;
    bool constructed_is_gcp = false;
    bool equivalence_holds = false;
    std::optional<std::int64_t> first_failing_shift;
};

// Executable form of the equivalence: the expansion is a GCP iff the seed is.
EquivalenceReport verify_equivalence(const SeedPair& seed, const ExpansionParams& params);

/**
 * Exact ring identity behind the equivalence, valid for EVERY seed (GCP or
 * not): for all shifts in [1, M*2^m - 1],
 *   correlation_sum(expansion, shift)
 *     == promote(scale_int(correlation_sum(seed, shift), 2^m), h)
 * with the seed correlation sum taken as the zero element once shift >= M.
 * Returns true when the identity holds at every shift; otherwise stores the
 * smallest violating shift if requested.
 */
bool expansion_identity_holds(const SeedPair& seed, const ExpansionParams& params,
                              std::int64_t* first_bad_shift = nullptr);

// Same identity checked against a caller-supplied candidate for the
// expansion (lets a checker distinguish a broken pair from a broken seed).
bool expansion_identity_holds_for(const SeedPair& seed, const ExpansionParams& params,
                                  const SeqPair& candidate, std::int64_t* first_bad_shift = nullptr);

} // namespace gcp
