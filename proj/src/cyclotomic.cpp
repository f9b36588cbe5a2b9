#include "gcp/cyclotomic.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace gcp {

namespace {

using BigInt = boost::multiprecision::cpp_int;
using BigPoly = std::vector<BigInt>; // ascending coefficients

std::int64_t floor_mod(std::int64_t value, std::int64_t modulus) {
    std::int64_t r = value % modulus;
    return r < 0 ? r + modulus : r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t out = 0;
    if (__builtin_add_overflow(a, b, &out)) {
        throw std::overflow_error("CycloElem coefficient overflow in addition");
    }
    return out;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t out = 0;
    if (__builtin_mul_overflow(a, b, &out)) {
        throw std::overflow_error("CycloElem coefficient overflow in scaling");
    }
    return out;
}

std::size_t degree_of(const BigPoly& p) {
    std::size_t d = p.size();
    while (d > 0 && p[d - 1] == 0) {
        --d;
    }
    return d == 0 ? 0 : d - 1;
}

// Exact division num / den for monic den; remainder must come out zero.
BigPoly exact_div(BigPoly num, const BigPoly& den) {
    const std::size_t dd = degree_of(den);
    if (den[dd] != 1) {
        throw std::logic_error("exact_div expects a monic divisor");
    }
    std::size_t dn = degree_of(num);
    if (dn < dd) {
        throw std::logic_error("exact_div: degree underflow");
    }
    BigPoly quot(dn - dd + 1);
    for (std::size_t k = dn - dd + 1; k-- > 0;) {
        BigInt c = num[k + dd];
        quot[k] = c;
        if (c == 0) {
            continue;
        }
        for (std::size_t j = 0; j <= dd; ++j) {
            num[k + j] -= c * den[j];
        }
    }
    for (const BigInt& c : num) {
        if (c != 0) {
            throw std::logic_error("exact_div: nonzero remainder");
        }
    }
    return quot;
}

std::int64_t narrow(const BigInt& v, const char* what) {
    if (v < std::numeric_limits<std::int64_t>::min() || v > std::numeric_limits<std::int64_t>::max()) {
        throw std::overflow_error(std::string(what) + ": coefficient exceeds 64 bits");
    }
    return static_cast<std::int64_t>(v);
}

// Recursive computation against the cache; the caller holds the lock.
// std::map node stability keeps returned references valid across inserts.
const BigPoly& compute_cyclotomic_locked(std::map<std::int64_t, BigPoly>& cache, std::int64_t n) {
    auto it = cache.find(n);
    if (it != cache.end()) {
        return it->second;
    }
    // x^n - 1 divided by Phi_d for all proper divisors d of n.
    BigPoly p(static_cast<std::size_t>(n) + 1);
    p[0] = -1;
    p[static_cast<std::size_t>(n)] = 1;
    for (std::int64_t d = 1; d < n; ++d) {
        if (n % d == 0) {
            p = exact_div(std::move(p), compute_cyclotomic_locked(cache, d));
        }
    }
    return cache.emplace(n, std::move(p)).first->second;
}

// Memoized per order; computed once per verification run per alphabet.
const BigPoly& cached_cyclotomic(std::int64_t n) {
    if (n < 1) {
        throw std::invalid_argument("cyclotomic_poly: order must be >= 1");
    }
    static std::map<std::int64_t, BigPoly> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    return compute_cyclotomic_locked(cache, n);
}

} // namespace

CycloElem::CycloElem(std::int64_t order, std::vector<std::int64_t> coeffs)
    : order_(order), coeffs_(std::move(coeffs)) {
    if (order_ < 1) {
        throw std::invalid_argument("CycloElem: order must be >= 1");
    }
    if (coeffs_.size() != static_cast<std::size_t>(order_)) {
        throw std::invalid_argument("CycloElem: coefficient vector length must equal order");
    }
}

CycloElem CycloElem::zero(std::int64_t order) {
    if (order < 1) {
        throw std::invalid_argument("CycloElem: order must be >= 1");
    }
    return CycloElem(order, std::vector<std::int64_t>(static_cast<std::size_t>(order), 0));
}

CycloElem CycloElem::root(std::int64_t order, std::int64_t exponent) {
    CycloElem e = zero(order);
    e.coeffs_[static_cast<std::size_t>(floor_mod(exponent, order))] = 1;
    return e;
}

CycloElem operator+(const CycloElem& x, const CycloElem& y) {
    if (x.order_ != y.order_) {
        throw std::invalid_argument("CycloElem: order mismatch in addition");
    }
    std::vector<std::int64_t> out(x.coeffs_);
    for (std::size_t j = 0; j < out.size(); ++j) {
        out[j] = checked_add(out[j], y.coeffs_[j]);
    }
    return CycloElem(x.order_, std::move(out));
}

CycloElem operator-(const CycloElem& x, const CycloElem& y) {
    if (x.order_ != y.order_) {
        throw std::invalid_argument("CycloElem: order mismatch in subtraction");
    }
    std::vector<std::int64_t> out(x.coeffs_);
    for (std::size_t j = 0; j < out.size(); ++j) {
        out[j] = checked_add(out[j], -y.coeffs_[j]);
    }
    return CycloElem(x.order_, std::move(out));
}

CycloElem CycloElem::operator-() const {
    std::vector<std::int64_t> out(coeffs_);
    for (auto& c : out) {
        c = checked_mul(c, -1);
    }
    return CycloElem(order_, std::move(out));
}

CycloElem scale_int(const CycloElem& x, std::int64_t k) {
    std::vector<std::int64_t> out(x.coeffs().begin(), x.coeffs().end());
    for (auto& c : out) {
        c = checked_mul(c, k);
    }
    return CycloElem(x.order(), std::move(out));
}

CycloElem conj(const CycloElem& x) {
    const std::int64_t n = x.order();
    std::vector<std::int64_t> out(static_cast<std::size_t>(n), 0);
    for (std::int64_t j = 0; j < n; ++j) {
        out[static_cast<std::size_t>((n - j) % n)] = x.coeffs()[static_cast<std::size_t>(j)];
    }
    return CycloElem(n, std::move(out));
}

CycloElem promote(const CycloElem& x, std::int64_t k) {
    if (k < 1) {
        throw std::invalid_argument("promote: factor must be >= 1");
    }
    const std::int64_t n = x.order();
    std::int64_t big_order = checked_mul(n, k);
    std::vector<std::int64_t> out(static_cast<std::size_t>(big_order), 0);
    for (std::int64_t j = 0; j < n; ++j) {
        out[static_cast<std::size_t>(j * k)] = x.coeffs()[static_cast<std::size_t>(j)];
    }
    return CycloElem(big_order, std::move(out));
}

std::vector<std::int64_t> cyclotomic_poly(std::int64_t n) {
    const BigPoly& big = cached_cyclotomic(n);
    std::vector<std::int64_t> out;
    out.reserve(big.size());
    for (const BigInt& c : big) {
        out.push_back(narrow(c, "cyclotomic_poly"));
    }
    return out;
}

CycloReducer::CycloReducer(std::int64_t order) : order_(order) {
    const BigPoly& phi = cached_cyclotomic(order);
    const std::size_t deg = degree_of(phi);
    degree_ = static_cast<std::int64_t>(deg);
    rows_.assign(static_cast<std::size_t>(order_) * deg, 0);

    // rows_[j] = coordinates of x^j mod Phi_order, built by repeated shifts.
    BigPoly cur(deg + 1);
    cur[0] = 1;
    for (std::int64_t j = 0; j < order_; ++j) {
        for (std::size_t k = 0; k < deg; ++k) {
            rows_[static_cast<std::size_t>(j) * deg + k] = narrow(cur[k], "CycloReducer");
        }
        // cur <- x * cur mod Phi (Phi is monic)
        for (std::size_t k = deg + 1; k-- > 1;) {
            cur[k] = cur[k - 1];
        }
        cur[0] = 0;
        if (cur[deg] != 0) {
            BigInt lead = cur[deg];
            for (std::size_t k = 0; k <= deg; ++k) {
                cur[k] -= lead * phi[k];
            }
        }
    }
}

void CycloReducer::reduce_into(std::span<const std::int64_t> coeffs, std::span<std::int64_t> out) const {
    if (coeffs.size() != static_cast<std::size_t>(order_) || out.size() != static_cast<std::size_t>(degree_)) {
        throw std::invalid_argument("CycloReducer::reduce_into: size mismatch");
    }
    const std::size_t deg = static_cast<std::size_t>(degree_);
    for (std::size_t k = 0; k < deg; ++k) {
        __int128 acc = 0;
        for (std::size_t j = 0; j < coeffs.size(); ++j) {
            acc += static_cast<__int128>(coeffs[j]) * rows_[j * deg + k];
        }
        if (acc < std::numeric_limits<std::int64_t>::min() || acc > std::numeric_limits<std::int64_t>::max()) {
            throw std::overflow_error("CycloReducer::reduce_into: coordinate exceeds 64 bits");
        }
        out[k] = static_cast<std::int64_t>(acc);
    }
}

std::vector<std::int64_t> CycloReducer::reduce(std::span<const std::int64_t> coeffs) const {
    std::vector<std::int64_t> out(static_cast<std::size_t>(degree_), 0);
    reduce_into(coeffs, out);
    return out;
}

bool CycloReducer::is_zero(std::span<const std::int64_t> coeffs) const noexcept {
    const std::size_t deg = static_cast<std::size_t>(degree_);
    for (std::size_t k = 0; k < deg; ++k) {
        __int128 acc = 0;
        for (std::size_t j = 0; j < coeffs.size(); ++j) {
            acc += static_cast<__int128>(coeffs[j]) * rows_[j * deg + k];
        }
        if (acc != 0) {
            return false;
        }
    }
    return true;
}

const CycloReducer& reducer_for(std::int64_t order) {
    static std::map<std::int64_t, CycloReducer> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(order);
    if (it == cache.end()) {
        it = cache.emplace(order, CycloReducer(order)).first;
    }
    return it->second;
}

bool is_zero(const CycloElem& x) {
    return reducer_for(x.order()).is_zero(x.coeffs());
}

std::complex<double> to_complex(const CycloElem& x) {
    const long double tau = 2.0L * std::numbers::pi_v<long double>;
    long double re = 0.0L;
    long double im = 0.0L;
    for (std::int64_t j = 0; j < x.order(); ++j) {
        const std::int64_t c = x.coeffs()[static_cast<std::size_t>(j)];
        if (c == 0) {
            continue;
        }
        const long double angle = tau * static_cast<long double>(j) / static_cast<long double>(x.order());
        re += static_cast<long double>(c) * std::cos(angle);
        im += static_cast<long double>(c) * std::sin(angle);
    }
    return {static_cast<double>(re), static_cast<double>(im)};
}

std::string to_string(const CycloElem& x) {
    // Exponent-of-root rendering, z = exp(2*pi*i/order).
    std::ostringstream os;
    bool first = true;
    for (std::int64_t j = 0; j < x.order(); ++j) {
        const std::int64_t c = x.coeffs()[static_cast<std::size_t>(j)];
        if (c == 0) {
            continue;
        }
        if (first) {
            if (c < 0) {
                os << "-";
            }
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        const std::int64_t mag = c < 0 ? -c : c;
        if (mag != 1) {
            os << mag << "*";
        }
        os << "z^" << j;
    }
    if (first) {
        os << "0";
    }
    return os.str();
}

} // namespace gcp
