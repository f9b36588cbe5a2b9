#include "gcp/construct.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace gcp {

namespace {

std::int64_t floor_mod(std::int64_t value, std::int64_t modulus) {
    std::int64_t r = value % modulus;
    return r < 0 ? r + modulus : r;
}

std::int64_t expansion_length(std::int64_t seed_length, std::int64_t m) {
    if (m < 1 || m > 40) {
        throw std::invalid_argument("expansion: m must be in [1, 40]");
    }
    if (seed_length > (std::numeric_limits<std::int64_t>::max() >> m)) {
        throw std::invalid_argument("expansion: M * 2^m does not fit a 64-bit length");
    }
    return seed_length << m;
}

} // namespace

ExpansionParams::ExpansionParams(std::int64_t m, std::int64_t h, std::vector<std::int64_t> perm,
                                 std::vector<std::int64_t> coeffs, std::int64_t theta,
                                 std::int64_t theta_prime)
    : m_(m), h_(h), perm_(std::move(perm)), coeffs_(std::move(coeffs)) {
    if (m_ < 1) {
        throw std::invalid_argument("ExpansionParams: m must be >= 1");
    }
    if (h_ < 1) {
        throw std::invalid_argument("ExpansionParams: h must be >= 1");
    }
    if (perm_.size() != static_cast<std::size_t>(m_)) {
        throw std::invalid_argument("ExpansionParams: permutation must have m entries");
    }
    std::vector<bool> seen(static_cast<std::size_t>(m_), false);
    for (std::int64_t v : perm_) {
        if (v < 1 || v > m_ || seen[static_cast<std::size_t>(v - 1)]) {
            throw std::invalid_argument("ExpansionParams: perm is not a permutation of 1..m");
        }
        seen[static_cast<std::size_t>(v - 1)] = true;
    }
    if (coeffs_.size() != static_cast<std::size_t>(m_)) {
        throw std::invalid_argument("ExpansionParams: coefficient vector must have m entries");
    }
    const std::int64_t q = 4 * h_;
    for (auto& c : coeffs_) {
        c = floor_mod(c, q);
    }
    theta_ = floor_mod(theta, q);
    theta_prime_ = floor_mod(theta_prime, q);
}

ExpansionParams ExpansionParams::defaults(std::int64_t m, std::int64_t h) {
    std::vector<std::int64_t> perm(static_cast<std::size_t>(m));
    for (std::int64_t k = 0; k < m; ++k) {
        perm[static_cast<std::size_t>(k)] = k + 1;
    }
    std::vector<std::int64_t> ones(static_cast<std::size_t>(m), 1);
    const std::int64_t theta = 1;
    const std::int64_t theta_prime = (m == 2) ? 1 : 0;
    return ExpansionParams(m, h, std::move(perm), std::move(ones), theta, theta_prime);
}

SeedPair::SeedPair(QarySeq phi1, QarySeq phi2) : phi1_(std::move(phi1)), phi2_(std::move(phi2)) {
    if (phi1_.q() != 4 || phi2_.q() != 4) {
        throw std::invalid_argument("SeedPair: seeds must be quaternary (q = 4)");
    }
    if (phi1_.length() != phi2_.length()) {
        throw std::invalid_argument("SeedPair: members must have equal length");
    }
}

IndexDecomposition index_decompose(std::int64_t index, std::int64_t m, std::int64_t seed_length) {
    if (seed_length < 1) {
        throw std::invalid_argument("index_decompose: seed length must be >= 1");
    }
    const std::int64_t total = expansion_length(seed_length, m);
    if (index < 0 || index >= total) {
        throw std::out_of_range("index_decompose: index out of [0, M*2^m - 1]");
    }
    IndexDecomposition out;
    const std::int64_t block = index / seed_length;
    out.y = index % seed_length;
    out.bits.resize(static_cast<std::size_t>(m));
    for (std::int64_t k = 1; k <= m; ++k) {
        out.bits[static_cast<std::size_t>(k - 1)] = (block >> (m - k)) & 1;
    }
    return out;
}

std::int64_t eval_f(const ExpansionParams& params, const SeedPair& seed,
                    std::span<const std::int64_t> bits, std::int64_t y) {
    const std::int64_t m = params.m();
    const std::int64_t h = params.h();
    const std::int64_t q = params.alphabet();
    if (bits.size() != static_cast<std::size_t>(m)) {
        throw std::invalid_argument("eval_f: bit vector must have m entries");
    }
    if (y < 0 || y >= seed.length()) {
        throw std::out_of_range("eval_f: y out of [0, M-1]");
    }
    const auto x = [&](std::int64_t var) { return bits[static_cast<std::size_t>(var - 1)]; };
    const auto pi = [&](std::int64_t k) { return params.perm()[static_cast<std::size_t>(k - 1)]; };

    std::int64_t acc = 0;
    for (std::int64_t k = 1; k < m; ++k) {
        acc += 2 * h * x(pi(k)) * x(pi(k + 1));
    }
    for (std::int64_t k = 1; k <= m; ++k) {
        acc += params.coeffs()[static_cast<std::size_t>(k - 1)] * x(k);
    }
    const std::int64_t phi1 = seed.phi1()[y];
    const std::int64_t phi2 = seed.phi2()[y];
    const std::int64_t bracket = floor_mod(x(pi(m)) * floor_mod(phi2 - phi1, 4) + phi1, 4);
    acc += h * bracket;
    return floor_mod(acc, q);
}

SeqPair construct_pair_serial(const SeedPair& seed, const ExpansionParams& params) {
    const std::int64_t seed_len = seed.length();
    const std::int64_t total = expansion_length(seed_len, params.m());
    const std::int64_t q = params.alphabet();
    const std::int64_t pi1 = params.perm()[0];
    std::vector<std::int64_t> ea(static_cast<std::size_t>(total));
    std::vector<std::int64_t> eb(static_cast<std::size_t>(total));
    for (std::int64_t index = 0; index < total; ++index) {
        const IndexDecomposition d = index_decompose(index, params.m(), seed_len);
        const std::int64_t f = eval_f(params, seed, d.bits, d.y);
        ea[static_cast<std::size_t>(index)] = floor_mod(f + params.theta(), q);
        eb[static_cast<std::size_t>(index)] =
            floor_mod(f + 2 * params.h() * d.bits[static_cast<std::size_t>(pi1 - 1)] + params.theta_prime(), q);
    }
    return SeqPair(QarySeq(q, std::move(ea)), QarySeq(q, std::move(eb)));
}

SeqPair construct_pair(const SeedPair& seed, const ExpansionParams& params) {
    const std::int64_t m = params.m();
    const std::int64_t h = params.h();
    const std::int64_t seed_len = seed.length();
    const std::int64_t total = expansion_length(seed_len, m);
    const std::int64_t q = params.alphabet();
    const std::int64_t pi1 = params.perm()[0];
    const std::int64_t pim = params.perm()[static_cast<std::size_t>(m - 1)];
    std::vector<std::int64_t> ea(static_cast<std::size_t>(total));
    std::vector<std::int64_t> eb(static_cast<std::size_t>(total));

#pragma omp parallel
    {
        std::vector<std::int64_t> bits(static_cast<std::size_t>(m));
#pragma omp for schedule(static) nowait
        for (std::int64_t index = 0; index < total; ++index) {
            const std::int64_t block = index / seed_len;
            const std::int64_t y = index % seed_len;
            for (std::int64_t k = 1; k <= m; ++k) {
                bits[static_cast<std::size_t>(k - 1)] = (block >> (m - k)) & 1;
            }
            std::int64_t acc = 0;
            for (std::int64_t k = 1; k < m; ++k) {
                acc += 2 * h * bits[static_cast<std::size_t>(params.perm()[static_cast<std::size_t>(k - 1)] - 1)] *
                       bits[static_cast<std::size_t>(params.perm()[static_cast<std::size_t>(k)] - 1)];
            }
            for (std::int64_t k = 0; k < m; ++k) {
                acc += params.coeffs()[static_cast<std::size_t>(k)] * bits[static_cast<std::size_t>(k)];
            }
            const std::int64_t phi1 = seed.phi1()[y];
            const std::int64_t phi2 = seed.phi2()[y];
            acc += h * floor_mod(bits[static_cast<std::size_t>(pim - 1)] * floor_mod(phi2 - phi1, 4) + phi1, 4);
            ea[static_cast<std::size_t>(index)] = floor_mod(acc + params.theta(), q);
            eb[static_cast<std::size_t>(index)] =
                floor_mod(acc + 2 * h * bits[static_cast<std::size_t>(pi1 - 1)] + params.theta_prime(), q);
        }
    }
    return SeqPair(QarySeq(q, std::move(ea)), QarySeq(q, std::move(eb)));
}

EquivalenceReport verify_equivalence(const SeedPair& seed, const ExpansionParams& params) {
    EquivalenceReport report;
    const auto seed_fail = first_failing_shift(seed.as_pair());
    const auto expanded_fail = first_failing_shift(construct_pair(seed, params));
    report.seed_is_gcp = !seed_fail.has_value();
    report.constructed_is_gcp = !expanded_fail.has_value();
    report.equivalence_holds = (report.seed_is_gcp == report.constructed_is_gcp);
    if (seed_fail) {
        report.first_failing_shift = seed_fail;
    } else if (expanded_fail) {
        report.first_failing_shift = expanded_fail;
    }
    return report;
}

bool expansion_identity_holds_for(const SeedPair& seed, const ExpansionParams& params,
                                  const SeqPair& candidate, std::int64_t* first_bad_shift) {
    if (candidate.q() != params.alphabet() ||
        candidate.length() != (seed.length() << params.m())) {
        throw std::invalid_argument("expansion_identity_holds_for: candidate shape mismatch");
    }
    const std::int64_t seed_len = seed.length();
    const std::int64_t total = candidate.length();
    const std::int64_t scale = std::int64_t{1} << params.m();
    const SeqPair seed_pair = seed.as_pair();
    for (std::int64_t lam = 1; lam < total; ++lam) {
        const CycloElem lhs = correlation_sum(candidate, lam);
        const CycloElem seed_sum =
            lam < seed_len ? correlation_sum(seed_pair, lam) : CycloElem::zero(4);
        const CycloElem rhs = promote(scale_int(seed_sum, scale), params.h());
        if (!is_zero(lhs - rhs)) {
            if (first_bad_shift != nullptr) {
                *first_bad_shift = lam;
            }
            return false;
        }
    }
    return true;
}

bool expansion_identity_holds(const SeedPair& seed, const ExpansionParams& params,
                              std::int64_t* first_bad_shift) {
    return expansion_identity_holds_for(seed, params, construct_pair(seed, params), first_bad_shift);
}

} // namespace gcp
