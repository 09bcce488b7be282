#pragma once

// Exact arithmetic in the cyclotomic field Q(w), w a primitive n-th root of
// unity, as Q[x] modulo the n-th cyclotomic polynomial.  Elements are dense
// rational coefficient vectors of length phi(n).  The use case is n = 2d, so
// that w^d = -1 provides the root the linear-cycle witness needs.

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace ivhs {

namespace detail {

using QPoly = std::vector<mpq_class>;  // coefficient i of x^i; no trailing zeros

inline void qpoly_trim(QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline QPoly qpoly_mul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    qpoly_trim(r);
    return r;
}

/// Division with remainder; divisor must be nonzero.  The leading term of
/// the numerator cancels exactly each round, so the loop terminates.
inline std::pair<QPoly, QPoly> qpoly_divrem(QPoly num, const QPoly& den) {
    if (den.empty()) throw std::domain_error("qpoly division by zero");
    qpoly_trim(num);
    QPoly quot;
    if (num.size() >= den.size()) quot.assign(num.size() - den.size() + 1, 0);
    while (num.size() >= den.size()) {
        mpq_class f = num.back() / den.back();
        std::size_t shift = num.size() - den.size();
        quot[shift] = f;
        for (std::size_t i = 0; i < den.size(); ++i) num[shift + i] -= f * den[i];
        qpoly_trim(num);
    }
    qpoly_trim(quot);
    return {std::move(quot), std::move(num)};
}

}  // namespace detail

/// The n-th cyclotomic polynomial, monic with integer coefficients, via
/// x^n - 1 = prod_{k | n} Phi_k.
inline std::vector<mpz_class> cyclotomic_polynomial(int n) {
    static std::map<int, std::vector<mpz_class>> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    if (n < 1) throw std::invalid_argument("cyclotomic order must be positive");

    using detail::QPoly;
    QPoly num(static_cast<std::size_t>(n) + 1, 0);
    num[0] = -1;
    num[static_cast<std::size_t>(n)] = 1;  // x^n - 1
    QPoly den{1};
    for (int k = 1; k < n; ++k) {
        if (n % k) continue;
        std::vector<mpz_class> phi_k = cyclotomic_polynomial(k);
        QPoly q(phi_k.size());
        for (std::size_t i = 0; i < phi_k.size(); ++i) q[i] = mpq_class(phi_k[i]);
        den = detail::qpoly_mul(den, q);
    }
    auto [quot, rem] = detail::qpoly_divrem(num, den);
    if (!rem.empty()) throw std::logic_error("cyclotomic polynomial division left a remainder");
    std::vector<mpz_class> out(quot.size());
    for (std::size_t i = 0; i < quot.size(); ++i) {
        if (quot[i].get_den() != 1)
            throw std::logic_error("cyclotomic polynomial has non-integer coefficient");
        out[i] = quot[i].get_num();
    }
    cache[n] = out;
    return out;
}

class CyclotomicField {
public:
    using Element = std::vector<mpq_class>;  // length degree(), coefficient of w^i

    explicit CyclotomicField(int order) : n_(order) {
        auto phi = cyclotomic_polynomial(order);
        deg_ = phi.size() - 1;
        phi_.assign(phi.begin(), phi.end());
        // reduction table: w^k for k = deg .. 2*deg-2
        reductions_.resize(deg_ ? deg_ - 1 : 0);
        Element cur = reduce_top();  // w^deg
        for (std::size_t k = 0; k + 1 < deg_; ++k) {
            reductions_[k] = cur;
            cur = shift_reduce(cur);
        }
    }

    int order() const { return n_; }
    std::size_t degree() const { return deg_; }
    const std::vector<mpz_class>& minimal_polynomial() const { return phi_; }

    Element zero() const { return Element(deg_, 0); }
    Element one() const {
        Element e(deg_, 0);
        e[0] = 1;
        return e;
    }
    Element omega() const { return root_power(1); }

    /// w^k reduced into the coefficient basis, any integer k.
    Element root_power(long long k) const {
        long long r = k % n_;
        if (r < 0) r += n_;
        Element e(deg_, 0);
        if (static_cast<std::size_t>(r) < deg_) {
            e[static_cast<std::size_t>(r)] = 1;
            return e;
        }
        // multiply w^{deg-1} by w repeatedly; r < n is small
        Element cur(deg_, 0);
        cur[deg_ - 1] = 1;
        for (long long s = static_cast<long long>(deg_) - 1; s < r; ++s) cur = shift_reduce(cur);
        return cur;
    }

    Element from_mpq(const mpq_class& q) const {
        Element e(deg_, 0);
        e[0] = q;
        return e;
    }

    bool is_zero(const Element& a) const {
        for (const auto& c : a)
            if (c != 0) return false;
        return true;
    }
    bool eq(const Element& a, const Element& b) const { return a == b; }

    Element add(const Element& a, const Element& b) const {
        Element r(deg_);
        for (std::size_t i = 0; i < deg_; ++i) r[i] = a[i] + b[i];
        return r;
    }
    Element sub(const Element& a, const Element& b) const {
        Element r(deg_);
        for (std::size_t i = 0; i < deg_; ++i) r[i] = a[i] - b[i];
        return r;
    }
    Element neg(const Element& a) const {
        Element r(deg_);
        for (std::size_t i = 0; i < deg_; ++i) r[i] = -a[i];
        return r;
    }
    Element scale(const Element& a, const mpq_class& c) const {
        Element r(deg_);
        for (std::size_t i = 0; i < deg_; ++i) r[i] = a[i] * c;
        return r;
    }

    Element mul(const Element& a, const Element& b) const {
        std::vector<mpq_class> conv(2 * deg_ - 1, 0);
        for (std::size_t i = 0; i < deg_; ++i) {
            if (a[i] == 0) continue;
            for (std::size_t j = 0; j < deg_; ++j) {
                if (b[j] == 0) continue;
                conv[i + j] += a[i] * b[j];
            }
        }
        Element r(conv.begin(), conv.begin() + static_cast<std::ptrdiff_t>(deg_));
        for (std::size_t k = deg_; k < conv.size(); ++k) {
            if (conv[k] == 0) continue;
            const Element& red = reductions_[k - deg_];
            for (std::size_t i = 0; i < deg_; ++i) r[i] += conv[k] * red[i];
        }
        return r;
    }

    Element pow(Element base, std::uint64_t e) const {
        Element r = one();
        while (e) {
            if (e & 1) r = mul(r, base);
            base = mul(base, base);
            e >>= 1;
        }
        return r;
    }

    /// Inverse by the extended Euclidean algorithm against the minimal
    /// polynomial (irreducible, so every nonzero element is a unit).
    Element inv(const Element& a) const {
        if (is_zero(a)) throw std::domain_error("inverse of zero cyclotomic element");
        using detail::QPoly;
        QPoly r0(phi_.size());
        for (std::size_t i = 0; i < phi_.size(); ++i) r0[i] = mpq_class(phi_[i]);
        QPoly r1(a.begin(), a.end());
        detail::qpoly_trim(r1);
        QPoly s0{}, s1{1};  // coefficients of the second argument
        while (!r1.empty()) {
            auto [q, rem] = detail::qpoly_divrem(r0, r1);
            QPoly s2 = s0;
            QPoly qs1 = detail::qpoly_mul(q, s1);
            if (s2.size() < qs1.size()) s2.resize(qs1.size(), 0);
            for (std::size_t i = 0; i < qs1.size(); ++i) s2[i] -= qs1[i];
            detail::qpoly_trim(s2);
            r0 = std::move(r1);
            r1 = std::move(rem);
            s0 = std::move(s1);
            s1 = std::move(s2);
        }
        if (r0.size() != 1)
            throw std::logic_error("gcd with minimal polynomial is not constant");
        mpq_class scale = 1 / r0[0];
        Element out = zero();
        for (std::size_t i = 0; i < s0.size() && i < deg_; ++i) out[i] = s0[i] * scale;
        if (s0.size() > deg_) {
            // reduce the Bezout coefficient if it overshoots (it should not)
            throw std::logic_error("Bezout coefficient exceeds field degree");
        }
        return out;
    }

    /// Galois automorphism w -> w^u, for u coprime to the order.
    Element galois(const Element& a, int u) const {
        if (std::gcd(u % n_ + n_, n_) != 1)
            throw std::invalid_argument("galois exponent not coprime to the order");
        Element r = zero();
        for (std::size_t k = 0; k < deg_; ++k) {
            if (a[k] == 0) continue;
            Element wk = root_power(static_cast<long long>(k) * u);
            for (std::size_t i = 0; i < deg_; ++i) r[i] += a[k] * wk[i];
        }
        return r;
    }

    /// Numeric embedding w -> exp(2 pi i / n), for floating cross-checks.
    std::complex<double> to_complex(const Element& a) const {
        const double theta = 2.0 * 3.14159265358979323846 / n_;
        std::complex<double> w(std::cos(theta), std::sin(theta));
        std::complex<double> acc(0.0, 0.0), wp(1.0, 0.0);
        for (std::size_t i = 0; i < deg_; ++i) {
            acc += a[i].get_d() * wp;
            wp *= w;
        }
        return acc;
    }

    std::string to_string(const Element& a) const {
        std::ostringstream os;
        os << '[';
        for (std::size_t i = 0; i < deg_; ++i) {
            if (i) os << ',';
            os << a[i].get_str();
        }
        os << ']';
        return os.str();
    }

private:
    // w^deg expressed in the basis: x^deg = -(phi_0 + ... + phi_{deg-1} x^{deg-1})
    Element reduce_top() const {
        Element e(deg_);
        for (std::size_t i = 0; i < deg_; ++i) e[i] = mpq_class(-phi_[i]);
        return e;
    }

    /// Given a reduced element v (representing some value), returns w * v.
    Element shift_reduce(const Element& v) const {
        Element r(deg_, 0);
        for (std::size_t i = 0; i + 1 < deg_; ++i) r[i + 1] = v[i];
        if (v[deg_ - 1] != 0) {
            Element top = reduce_top();
            for (std::size_t i = 0; i < deg_; ++i) r[i] += v[deg_ - 1] * top[i];
        }
        return r;
    }

    int n_;
    std::size_t deg_;
    std::vector<mpz_class> phi_;
    std::vector<Element> reductions_;  // w^{deg+k} for k = 0..deg-2
};

}  // namespace ivhs
