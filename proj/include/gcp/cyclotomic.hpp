#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace gcp {

/**
 * Exact element of Z[zeta_n], zeta_n = exp(2*pi*i/n), stored as an integer
 * multiplicity vector over the exponents 0..n-1 (group-ring form).
 *
 * The representation is not canonical: distinct coefficient vectors can
 * denote the same complex number (e.g. 1 + zeta_4^2 == 0). Whether an
 * element IS a given value is decided through is_zero() on differences,
 * which reduces modulo the n-th cyclotomic polynomial and is therefore a
 * sound and complete zero test. Elements are immutable after construction.
 */
class CycloElem {
  public:
    CycloElem(std::int64_t order, std::vector<std::int64_t> coeffs);

    static CycloElem zero(std::int64_t order);

    // zeta_order^exponent; the exponent may be any integer (wraps mod order).
    static CycloElem root(std::int64_t order, std::int64_t exponent);

    std::int64_t order() const noexcept { return order_; }
    std::span<const std::int64_t> coeffs() const noexcept { return coeffs_; }
    std::int64_t coeff(std::int64_t index) const { return coeffs_.at(static_cast<std::size_t>(index)); }

    // Coefficient-wise arithmetic. Mixing orders is a hard error: silent
    // promotion would hide alphabet bookkeeping bugs.
    friend CycloElem operator+(const CycloElem& x, const CycloElem& y);
    friend CycloElem operator-(const CycloElem& x, const CycloElem& y);
    CycloElem operator-() const;

  private:
    std::int64_t order_;
    std::vector<std::int64_t> coeffs_;
};

CycloElem scale_int(const CycloElem& x, std::int64_t k);

// Complex conjugation: the coefficient of zeta^j moves to zeta^(n-j).
CycloElem conj(const CycloElem& x);

// Re-express x in Z[zeta_{k*n}] via zeta_n = zeta_{k*n}^k. Same complex value.
CycloElem promote(const CycloElem& x, std::int64_t k);

/**
 * The n-th cyclotomic polynomial, ascending coefficients, monic with integer
 * entries, degree phi(n). Computed by exact division of x^n - 1 by Phi_d for
 * every proper divisor d of n (arbitrary-precision intermediates), memoized
 * per order.
 */
std::vector<std::int64_t> cyclotomic_poly(std::int64_t n);

// True iff x denotes the complex number 0, i.e. the polynomial
// sum coeffs[j] x^j has zero remainder modulo Phi_order(x) over Z.
bool is_zero(const CycloElem& x);

/**
 * Canonical coordinates of Z[zeta_n] on the power basis 1, zeta, ...,
 * zeta^(phi(n)-1). The constructor precomputes the basis expansion of every
 * exponent once; reduce()/is_zero() are then small integer dot products with
 * no allocation of big integers, suitable for hot loops. Two coefficient
 * vectors denote the same complex value iff their reductions are equal.
 */
class CycloReducer {
  public:
    explicit CycloReducer(std::int64_t order);

    std::int64_t order() const noexcept { return order_; }
    std::int64_t degree() const noexcept { return degree_; }

    // out must have size degree(); coeffs must have size order().
    void reduce_into(std::span<const std::int64_t> coeffs, std::span<std::int64_t> out) const;
    std::vector<std::int64_t> reduce(std::span<const std::int64_t> coeffs) const;
    bool is_zero(std::span<const std::int64_t> coeffs) const noexcept;

  private:
    std::int64_t order_;
    std::int64_t degree_;
    std::vector<std::int64_t> rows_; // order_ x degree_, row-major
};

// Shared memoized reducer per order (thread-safe).
const CycloReducer& reducer_for(std::int64_t order);

// Diagnostic renderings only; all decisions go through is_zero.
std::complex<double> to_complex(const CycloElem& x);
std::string to_string(const CycloElem& x);

} // namespace gcp
