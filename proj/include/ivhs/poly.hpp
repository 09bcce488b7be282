#pragma once

// Exact sparse multivariate polynomials over the rationals.  Variables are
// positions 0..nvars-1 into an externally supplied variable list (the x_k in
// additive order); the term order is graded lexicographic with the variable
// of largest additive index most significant.  All arithmetic is exact.

#include <gmpxx.h>

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace ivhs {

class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<std::uint16_t> exps) : e_(std::move(exps)) {
        for (auto v : e_) deg_ += v;
    }
    static Monomial one(std::size_t nvars) {
        return Monomial(std::vector<std::uint16_t>(nvars, 0));
    }
    static Monomial var(std::size_t nvars, std::size_t v, std::uint16_t power = 1) {
        std::vector<std::uint16_t> e(nvars, 0);
        e[v] = power;
        return Monomial(std::move(e));
    }

    std::size_t nvars() const { return e_.size(); }
    int degree() const { return deg_; }
    std::uint16_t exponent(std::size_t v) const { return e_[v]; }
    bool is_one() const { return deg_ == 0; }

    Monomial operator*(const Monomial& o) const {
        std::vector<std::uint16_t> e(e_.size());
        for (std::size_t v = 0; v < e_.size(); ++v)
            e[v] = static_cast<std::uint16_t>(e_[v] + o.e_[v]);
        return Monomial(std::move(e));
    }

    bool divides(const Monomial& o) const {
        if (deg_ > o.deg_) return false;
        for (std::size_t v = 0; v < e_.size(); ++v)
            if (e_[v] > o.e_[v]) return false;
        return true;
    }

    /// Quotient; requires divisibility.
    Monomial divide(const Monomial& o) const {
        std::vector<std::uint16_t> e(e_.size());
        for (std::size_t v = 0; v < e_.size(); ++v) {
            if (e_[v] < o.e_[v]) throw std::logic_error("Monomial::divide: not divisible");
            e[v] = static_cast<std::uint16_t>(e_[v] - o.e_[v]);
        }
        return Monomial(std::move(e));
    }

    Monomial lcm(const Monomial& o) const {
        std::vector<std::uint16_t> e(e_.size());
        for (std::size_t v = 0; v < e_.size(); ++v)
            e[v] = std::max(e_[v], o.e_[v]);
        return Monomial(std::move(e));
    }

    bool coprime(const Monomial& o) const {
        for (std::size_t v = 0; v < e_.size(); ++v)
            if (e_[v] && o.e_[v]) return false;
        return true;
    }

    /// Pure power of a single variable?  Returns the variable on success.
    std::optional<std::size_t> pure_power_variable() const {
        std::optional<std::size_t> found;
        for (std::size_t v = 0; v < e_.size(); ++v) {
            if (!e_[v]) continue;
            if (found) return std::nullopt;
            found = v;
        }
        return found;
    }

    bool operator==(const Monomial& o) const { return e_ == o.e_; }

    /// Graded lex: total degree first, then lex with the highest variable
    /// position most significant.
    std::strong_ordering operator<=>(const Monomial& o) const {
        if (auto c = deg_ <=> o.deg_; c != 0) return c;
        for (std::size_t v = e_.size(); v-- > 0;)
            if (auto c = e_[v] <=> o.e_[v]; c != 0) return c;
        return std::strong_ordering::equal;
    }

private:
    std::vector<std::uint16_t> e_;
    int deg_ = 0;
};

struct MonomialGreater {
    bool operator()(const Monomial& a, const Monomial& b) const { return a > b; }
};

class SparsePoly {
public:
    using TermMap = std::map<Monomial, mpq_class, MonomialGreater>;

    explicit SparsePoly(std::size_t nvars = 0) : nvars_(nvars) {}

    static SparsePoly zero(std::size_t nvars) { return SparsePoly(nvars); }
    static SparsePoly constant(std::size_t nvars, const mpq_class& c) {
        SparsePoly p(nvars);
        p.add_term(Monomial::one(nvars), c);
        return p;
    }
    static SparsePoly variable(std::size_t nvars, std::size_t v) {
        SparsePoly p(nvars);
        p.add_term(Monomial::var(nvars, v), 1);
        return p;
    }

    std::size_t nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    /// Leading term under graded lex; poly must be nonzero.
    const Monomial& leading_monomial() const {
        if (terms_.empty()) throw std::logic_error("leading_monomial of zero polynomial");
        return terms_.begin()->first;
    }
    const mpq_class& leading_coefficient() const {
        if (terms_.empty()) throw std::logic_error("leading_coefficient of zero polynomial");
        return terms_.begin()->second;
    }

    int degree() const {
        return terms_.empty() ? -1 : terms_.begin()->first.degree();
    }

    bool is_homogeneous() const {
        if (terms_.empty()) return true;
        const int deg = terms_.begin()->first.degree();
        for (const auto& [mono, c] : terms_)
            if (mono.degree() != deg) return false;
        return true;
    }

    void add_term(const Monomial& mono, const mpq_class& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.emplace(mono, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    SparsePoly& operator+=(const SparsePoly& o) {
        for (const auto& [mono, c] : o.terms_) add_term(mono, c);
        return *this;
    }
    SparsePoly& operator-=(const SparsePoly& o) {
        for (const auto& [mono, c] : o.terms_) add_term(mono, -c);
        return *this;
    }
    SparsePoly operator+(const SparsePoly& o) const {
        SparsePoly r = *this;
        r += o;
        return r;
    }
    SparsePoly operator-(const SparsePoly& o) const {
        SparsePoly r = *this;
        r -= o;
        return r;
    }
    SparsePoly operator-() const {
        SparsePoly r(nvars_);
        for (const auto& [mono, c] : terms_) r.terms_.emplace(mono, -c);
        return r;
    }

    SparsePoly operator*(const SparsePoly& o) const {
        SparsePoly r(nvars_);
        for (const auto& [ma, ca] : terms_)
            for (const auto& [mb, cb] : o.terms_) r.add_term(ma * mb, ca * cb);
        return r;
    }

    /// In-place c * mono * this, accumulated into out.
    void add_scaled_into(SparsePoly& out, const Monomial& mono, const mpq_class& c) const {
        for (const auto& [mt, ct] : terms_) out.add_term(mt * mono, ct * c);
    }

    SparsePoly& operator*=(const mpq_class& c) {
        if (c == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [mono, coeff] : terms_) coeff *= c;
        return *this;
    }
    SparsePoly operator*(const mpq_class& c) const {
        SparsePoly r = *this;
        r *= c;
        return r;
    }

    /// Monic normalization (canonical representative up to scaling).
    SparsePoly monic() const {
        if (terms_.empty()) return *this;
        SparsePoly r = *this;
        mpq_class inv = 1 / leading_coefficient();
        r *= inv;
        return r;
    }

    /// Drop every term containing any variable for which `kill` is true.
    SparsePoly killed(const std::vector<bool>& kill) const {
        SparsePoly r(nvars_);
        for (const auto& [mono, c] : terms_) {
            bool drop = false;
            for (std::size_t v = 0; v < nvars_ && !drop; ++v)
                if (mono.exponent(v) && kill[v]) drop = true;
            if (!drop) r.terms_.emplace(mono, c);
        }
        return r;
    }

    bool operator==(const SparsePoly& o) const { return terms_ == o.terms_; }

    /// Deterministic total order on polynomials (for dedup sets).
    std::strong_ordering operator<=>(const SparsePoly& o) const {
        auto a = terms_.begin();
        auto b = o.terms_.begin();
        for (; a != terms_.end() && b != o.terms_.end(); ++a, ++b) {
            if (auto c = a->first <=> b->first; c != 0) return c;
            if (int c = cmp(a->second, b->second); c != 0)
                return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
        }
        if (a != terms_.end()) return std::strong_ordering::greater;
        if (b != o.terms_.end()) return std::strong_ordering::less;
        return std::strong_ordering::equal;
    }

    /// Exact evaluation in any commutative ring presented by a Field-like
    /// adapter (zero/one/add/mul/from_mpq).
    template <class Field>
    typename Field::Element evaluate(const Field& K,
                                     const std::vector<typename Field::Element>& x) const {
        if (x.size() != nvars_) throw std::invalid_argument("evaluate: wrong assignment length");
        typename Field::Element acc = K.zero();
        for (const auto& [mono, c] : terms_) {
            typename Field::Element term = K.from_mpq(c);
            for (std::size_t v = 0; v < nvars_; ++v)
                for (std::uint16_t p = 0; p < mono.exponent(v); ++p)
                    term = K.mul(term, x[v]);
            acc = K.add(acc, term);
        }
        return acc;
    }

    /// Canonical text form, terms in decreasing graded-lex order.  `name`
    /// maps a variable position to its display name.
    template <class NameFn>
    std::string to_string(NameFn name) const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [mono, c] : terms_) {
            mpq_class abs_c = c < 0 ? mpq_class(-c) : c;
            if (first) {
                if (c < 0) os << "-";
                first = false;
            } else {
                os << (c < 0 ? " - " : " + ");
            }
            const bool unit = abs_c == 1;
            if (!unit || mono.is_one()) os << abs_c.get_str();
            bool printed_factor = !unit || mono.is_one();
            for (std::size_t v = 0; v < nvars_; ++v) {
                if (!mono.exponent(v)) continue;
                if (printed_factor) os << "*";
                os << name(v);
                if (mono.exponent(v) > 1) os << "^" << mono.exponent(v);
                printed_factor = true;
            }
        }
        return os.str();
    }

private:
    std::size_t nvars_;
    TermMap terms_;
};

inline SparsePoly operator*(const mpq_class& c, const SparsePoly& p) { return p * c; }

}  // namespace ivhs
