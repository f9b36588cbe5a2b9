#pragma once

#include "gcp/cyclotomic.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace gcp {

/**
 * A q-ary sequence stored as its exponent vector over Z_q; the complex
 * realization A_i = zeta_q^{exps[i]} is implied and never materialized as
 * floating point. Immutable value object; equality is element-wise on
 * (q, exps).
 */
class QarySeq {
  public:
    QarySeq(std::int64_t q, std::vector<std::int64_t> exps);

    std::int64_t q() const noexcept { return q_; }
    std::int64_t length() const noexcept { return static_cast<std::int64_t>(exps_.size()); }
    std::span<const std::int64_t> exps() const noexcept { return exps_; }
    std::int64_t operator[](std::int64_t i) const { return exps_.at(static_cast<std::size_t>(i)); }

    friend bool operator==(const QarySeq&, const QarySeq&) = default;

  private:
    std::int64_t q_;
    std::vector<std::int64_t> exps_;
};

// Two equal-length, equal-alphabet candidates for the complementarity test.
class SeqPair {
  public:
    SeqPair(QarySeq a, QarySeq b);

    const QarySeq& a() const noexcept { return a_; }
    const QarySeq& b() const noexcept { return b_; }
    std::int64_t q() const noexcept { return a_.q(); }
    std::int64_t length() const noexcept { return a_.length(); }

    friend bool operator==(const SeqPair&, const SeqPair&) = default;

  private:
    QarySeq a_;
    QarySeq b_;
};

/**
 * Aperiodic autocorrelation at an integer shift, as an exact element of
 * Z[zeta_q]. Shift 0 gives length * 1; |shift| >= length gives the zero
 * element; negative shifts give the conjugate-symmetric branch.
 */
CycloElem aacf(const QarySeq& s, std::int64_t shift);

// aacf(p.a, shift) + aacf(p.b, shift).
CycloElem correlation_sum(const SeqPair& p, std::int64_t shift);

/**
 * Smallest shift in [1, length-1] whose correlation sum is nonzero, or
 * nullopt when the pair is complementary. The shifts are independent, so the
 * scan is parallelized; the serial variant is the literal
 * aacf -> add -> is_zero composition kept as the reference implementation.
 */
std::optional<std::int64_t> first_failing_shift(const SeqPair& p);
std::optional<std::int64_t> first_failing_shift_serial(const SeqPair& p);

// True iff the correlation sum vanishes at every shift in [1, length-1].
// Length 1 is vacuously complementary.
bool is_gcp(const SeqPair& p);

// Embed into the k*q-ary alphabet without changing the complex realization:
// q' = k*q, exps'[i] = k*exps[i].
QarySeq rescale_alphabet(const QarySeq& s, std::int64_t k);

} // namespace gcp
