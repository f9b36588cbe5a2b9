#include "gcp/sequence.hpp"

#include <stdexcept>

namespace gcp {

namespace {

std::int64_t floor_mod(std::int64_t value, std::int64_t modulus) {
    std::int64_t r = value % modulus;
    return r < 0 ? r + modulus : r;
}

// Accumulates the exponent-difference counts of one shift into counts
// (size q). For shift >= 0: sum over l of zeta^(exps[l] - exps[l+shift]).
void accumulate_diffs(std::span<const std::int64_t> exps, std::int64_t q, std::int64_t shift,
                      std::span<std::int64_t> counts) {
    const std::int64_t m = static_cast<std::int64_t>(exps.size());
    if (shift >= 0) {
        for (std::int64_t l = 0; l + shift < m; ++l) {
            ++counts[static_cast<std::size_t>(
                floor_mod(exps[static_cast<std::size_t>(l)] - exps[static_cast<std::size_t>(l + shift)], q))];
        }
    } else {
        // Second branch of the definition: terms A_{l-shift} A_l^*.
        for (std::int64_t l = 0; l - shift < m; ++l) {
            ++counts[static_cast<std::size_t>(
                floor_mod(exps[static_cast<std::size_t>(l - shift)] - exps[static_cast<std::size_t>(l)], q))];
        }
    }
}

} // namespace

QarySeq::QarySeq(std::int64_t q, std::vector<std::int64_t> exps) : q_(q), exps_(std::move(exps)) {
    if (q_ < 2) {
        throw std::invalid_argument("QarySeq: alphabet size must be >= 2");
    }
    if (exps_.empty()) {
        throw std::invalid_argument("QarySeq: length must be >= 1");
    }
    for (std::int64_t e : exps_) {
        if (e < 0 || e >= q_) {
            throw std::invalid_argument("QarySeq: exponent out of [0, q-1]");
        }
    }
}

SeqPair::SeqPair(QarySeq a, QarySeq b) : a_(std::move(a)), b_(std::move(b)) {
    if (a_.q() != b_.q()) {
        throw std::invalid_argument("SeqPair: alphabet mismatch");
    }
    if (a_.length() != b_.length()) {
        throw std::invalid_argument("SeqPair: length mismatch");
    }
}

CycloElem aacf(const QarySeq& s, std::int64_t shift) {
    const std::int64_t q = s.q();
    std::vector<std::int64_t> counts(static_cast<std::size_t>(q), 0);
    if (shift > -s.length() && shift < s.length()) {
        accumulate_diffs(s.exps(), q, shift, counts);
    }
    return CycloElem(q, std::move(counts));
}

CycloElem correlation_sum(const SeqPair& p, std::int64_t shift) {
    return aacf(p.a(), shift) + aacf(p.b(), shift);
}

std::optional<std::int64_t> first_failing_shift_serial(const SeqPair& p) {
    for (std::int64_t lam = 1; lam < p.length(); ++lam) {
        if (!is_zero(correlation_sum(p, lam))) {
            return lam;
        }
    }
    return std::nullopt;
}

std::optional<std::int64_t> first_failing_shift(const SeqPair& p) {
    const std::int64_t m = p.length();
    if (m <= 1) {
        return std::nullopt;
    }
    const CycloReducer& red = reducer_for(p.q());
    const std::int64_t q = p.q();
    std::int64_t first = m; // sentinel: no failure

#pragma omp parallel reduction(min : first)
    {
        std::vector<std::int64_t> counts(static_cast<std::size_t>(q), 0);
        // Interleaved chunks: the work per shift is triangular (length - shift
        // terms), so contiguous halves would leave one thread with most of it.
#pragma omp for schedule(static, 16) nowait
        for (std::int64_t lam = 1; lam < m; ++lam) {
            std::fill(counts.begin(), counts.end(), 0);
            accumulate_diffs(p.a().exps(), q, lam, counts);
            accumulate_diffs(p.b().exps(), q, lam, counts);
            if (!red.is_zero(counts) && lam < first) {
                first = lam;
            }
        }
    }
    if (first == m) {
        return std::nullopt;
    }
    return first;
}

bool is_gcp(const SeqPair& p) {
    return !first_failing_shift(p).has_value();
}

QarySeq rescale_alphabet(const QarySeq& s, std::int64_t k) {
    if (k < 1) {
        throw std::invalid_argument("rescale_alphabet: factor must be >= 1");
    }
    std::vector<std::int64_t> exps(s.exps().begin(), s.exps().end());
    for (auto& e : exps) {
        e *= k;
    }
    return QarySeq(k * s.q(), std::move(exps));
}

} // namespace gcp
