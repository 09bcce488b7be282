#pragma once

// Field adapters with a uniform element interface, shared by polynomial
// evaluation and the generic Gaussian elimination in linalg.hpp.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ivhs {

struct RationalField {
    using Element = mpq_class;
    Element zero() const { return 0; }
    Element one() const { return 1; }
    Element add(const Element& a, const Element& b) const { return a + b; }
    Element sub(const Element& a, const Element& b) const { return a - b; }
    Element mul(const Element& a, const Element& b) const { return a * b; }
    Element neg(const Element& a) const { return -a; }
    Element inv(const Element& a) const {
        if (a == 0) throw std::domain_error("inverse of zero");
        return 1 / a;
    }
    Element from_mpq(const mpq_class& q) const { return q; }
    bool is_zero(const Element& a) const { return a == 0; }
};

/// Prime field F_p with p < 2^31 so products fit in 64 bits.
class PrimeField {
public:
    using Element = std::uint64_t;

    explicit PrimeField(std::uint64_t p) : p_(p) {
        if (p < 2 || p >= (1ull << 31)) throw std::invalid_argument("prime out of range");
    }

    std::uint64_t modulus() const { return p_; }

    Element zero() const { return 0; }
    Element one() const { return 1 % p_; }
    Element add(Element a, Element b) const { return (a + b) % p_; }
    Element sub(Element a, Element b) const { return (a + p_ - b % p_) % p_; }
    Element mul(Element a, Element b) const { return (a * b) % p_; }
    Element neg(Element a) const { return (p_ - a % p_) % p_; }
    Element pow(Element a, std::uint64_t e) const {
        Element r = one(), base = a % p_;
        while (e) {
            if (e & 1) r = mul(r, base);
            base = mul(base, base);
            e >>= 1;
        }
        return r;
    }
    Element inv(Element a) const {
        a %= p_;
        if (a == 0) throw std::domain_error("inverse of zero");
        return pow(a, p_ - 2);
    }
    Element from_mpq(const mpq_class& q) const {
        mpz_class num = q.get_num() % mpz_class(static_cast<unsigned long>(p_));
        mpz_class den = q.get_den() % mpz_class(static_cast<unsigned long>(p_));
        if (num < 0) num += static_cast<unsigned long>(p_);
        Element n = num.get_ui() % p_;
        Element d = den.get_ui() % p_;
        if (d == 0) throw std::domain_error("denominator divisible by p");
        return mul(n, inv(d));
    }
    bool is_zero(Element a) const { return a % p_ == 0; }

private:
    std::uint64_t p_;
};

inline constexpr std::uint64_t kDefaultProbePrime = (1ull << 31) - 1;

}  // namespace ivhs
