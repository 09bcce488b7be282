#pragma once

// Bounded-composition multi-indices: the tuples that index every variable,
// matrix row and matrix column in this library.  An index set I(m,d,N)
// collects the (m+2)-tuples with entries in [0, d-2] summing to N, kept in
// increasing lexicographic order (leftmost entry most significant).  Lex is
// an additive order: i < j implies i+k < j+k, which is what the elimination
// certificates rely on.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace ivhs {

class MultiIndex {
public:
    MultiIndex() = default;

    explicit MultiIndex(std::vector<int> entries)
        : entries_(std::move(entries)), degree_(0) {
        for (int e : entries_) degree_ += e;
    }

    MultiIndex(std::initializer_list<int> entries)
        : MultiIndex(std::vector<int>(entries)) {}

    static MultiIndex zeros(std::size_t len) {
        return MultiIndex(std::vector<int>(len, 0));
    }

    std::size_t size() const { return entries_.size(); }
    int operator[](std::size_t e) const { return entries_[e]; }
    const std::vector<int>& entries() const { return entries_; }
    int degree() const { return degree_; }

    /// All entries within [0, d-2]?
    bool in_box(int d) const {
        for (int e : entries_)
            if (e < 0 || e > d - 2) return false;
        return true;
    }

    /// Componentwise sum, no box check.
    MultiIndex plus(const MultiIndex& other) const {
        std::vector<int> out(entries_.size());
        for (std::size_t e = 0; e < entries_.size(); ++e)
            out[e] = entries_[e] + other.entries_[e];
        return MultiIndex(std::move(out));
    }

    /// Componentwise difference, no box check.
    MultiIndex minus(const MultiIndex& other) const {
        std::vector<int> out(entries_.size());
        for (std::size_t e = 0; e < entries_.size(); ++e)
            out[e] = entries_[e] - other.entries_[e];
        return MultiIndex(std::move(out));
    }

    // Lexicographic, leftmost entry most significant.  This is the additive
    // order used everywhere.
    std::strong_ordering operator<=>(const MultiIndex& other) const {
        return std::lexicographical_compare_three_way(
            entries_.begin(), entries_.end(),
            other.entries_.begin(), other.entries_.end());
    }
    bool operator==(const MultiIndex& other) const = default;

    std::string to_string() const {
        std::ostringstream os;
        os << '[';
        for (std::size_t e = 0; e < entries_.size(); ++e) {
            if (e) os << ',';
            os << entries_[e];
        }
        os << ']';
        return os.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const MultiIndex& i) {
        return os << i.to_string();
    }

private:
    std::vector<int> entries_;
    int degree_ = 0;
};

/// Total additive order; throws on length mismatch.
inline std::strong_ordering compare_additive(const MultiIndex& i, const MultiIndex& j) {
    if (i.size() != j.size())
        throw std::invalid_argument("compare_additive: length mismatch");
    return i <=> j;
}

// Either a multi-index inside the variable box or the distinguished zero
// sentinel; the sentinel stands for "this symbol is identically zero" and
// never takes part in arithmetic.
class IndexOrZero {
public:
    static IndexOrZero zero() { return IndexOrZero(); }
    static IndexOrZero of(MultiIndex i) {
        IndexOrZero r;
        r.idx_ = std::move(i);
        return r;
    }

    bool is_zero() const { return !idx_.has_value(); }
    const MultiIndex& index() const {
        if (!idx_) throw std::logic_error("IndexOrZero: zero sentinel has no index");
        return *idx_;
    }

    bool operator==(const IndexOrZero& other) const = default;

private:
    std::optional<MultiIndex> idx_;
};

inline void check_params(int m, int d) {
    if (m < 2 || m % 2 != 0)
        throw std::invalid_argument("m must be an even integer >= 2, got " + std::to_string(m));
    if (d < 2)
        throw std::invalid_argument("d must be an integer >= 2, got " + std::to_string(d));
}

/// The standing hypothesis d >= 2 + 4/m, equivalently m(d-2) >= 4; it is
/// exactly what makes the row index set nonempty.
inline void check_hypothesis(int m, int d) {
    check_params(m, d);
    if (m * (d - 2) < 4)
        throw std::invalid_argument(
            "parameters violate d >= 2 + 4/m: m=" + std::to_string(m) +
            ", d=" + std::to_string(d));
}

/// Number of (m+2)-tuples with entries in [0,d-2] and sum N, i.e. the
/// coefficient of z^N in (1 + z + ... + z^{d-2})^{m+2}.
inline long long count(int m, int d, long long N) {
    check_params(m, d);
    const long long top = static_cast<long long>(d - 2) * (m + 2);
    if (N < 0 || N > top) return 0;
    std::vector<long long> coeff(static_cast<std::size_t>(N) + 1, 0);
    coeff[0] = 1;
    for (int pos = 0; pos < m + 2; ++pos) {
        std::vector<long long> next(coeff.size(), 0);
        for (std::size_t n = 0; n < coeff.size(); ++n) {
            if (!coeff[n]) continue;
            for (std::size_t e = 0; e <= static_cast<std::size_t>(d - 2) && n + e < next.size(); ++e)
                next[n + e] += coeff[n];
        }
        coeff.swap(next);
    }
    return coeff[static_cast<std::size_t>(N)];
}

class IndexSet {
public:
    IndexSet() = default;

    int m() const { return m_; }
    int d() const { return d_; }
    int N() const { return N_; }
    std::size_t size() const { return members_.size(); }
    const std::vector<MultiIndex>& members() const { return members_; }
    const MultiIndex& operator[](std::size_t pos) const { return members_[pos]; }

    /// Position of i in additive order, or nullopt if absent.
    std::optional<std::size_t> position(const MultiIndex& i) const {
        auto it = std::lower_bound(members_.begin(), members_.end(), i);
        if (it != members_.end() && *it == i)
            return static_cast<std::size_t>(it - members_.begin());
        return std::nullopt;
    }

    bool contains(const MultiIndex& i) const { return position(i).has_value(); }

    friend IndexSet enumerate_index_set(int m, int d, int N);

private:
    int m_ = 0, d_ = 0, N_ = 0;
    std::vector<MultiIndex> members_;
};

/// All (m+2)-tuples with entries in [0,d-2] and degree N, in increasing
/// lexicographic order.  Out-of-range N yields the empty set.
inline IndexSet enumerate_index_set(int m, int d, int N) {
    check_params(m, d);
    IndexSet out;
    out.m_ = m;
    out.d_ = d;
    out.N_ = N;
    const int len = m + 2;
    if (N < 0 || N > (d - 2) * len) return out;

    std::vector<int> buf(static_cast<std::size_t>(len), 0);
    // Recursive descent emits tuples in increasing lex order: smaller leading
    // entries first.
    auto rec = [&](auto&& self, int pos, int remaining) -> void {
        if (pos == len - 1) {
            if (remaining <= d - 2) {
                buf[static_cast<std::size_t>(pos)] = remaining;
                out.members_.emplace_back(buf);
            }
            return;
        }
        const int hi = std::min(d - 2, remaining);
        for (int e = 0; e <= hi; ++e) {
            // prune: the rest must be able to absorb remaining - e
            if (static_cast<long long>(remaining - e) >
                static_cast<long long>(d - 2) * (len - pos - 1))
                continue;
            buf[static_cast<std::size_t>(pos)] = e;
            self(self, pos + 1, remaining - e);
        }
    };
    rec(rec, 0, N);
    return out;
}

/// Process-wide cache; sets are small and immutable once built.
inline const IndexSet& cached_index_set(int m, int d, int N) {
    static std::mutex mu;
    static std::map<std::tuple<int, int, int>, std::unique_ptr<IndexSet>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_tuple(m, d, N);
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, std::make_unique<IndexSet>(enumerate_index_set(m, d, N))).first;
    return *it->second;
}

/// Componentwise sum, downgraded to the zero sentinel as soon as any entry
/// leaves [0, d-2].
inline IndexOrZero add(const MultiIndex& i, const MultiIndex& j, int d) {
    if (i.size() != j.size())
        throw std::invalid_argument("add: length mismatch");
    MultiIndex s = i.plus(j);
    if (!s.in_box(d)) return IndexOrZero::zero();
    return IndexOrZero::of(std::move(s));
}

struct AddAlphaResult {
    IndexOrZero index;
    int coefficient = 0;  // zero exactly when index is the sentinel
};

/// The corrected sum i +_alpha j: requires exactly one coordinate with
/// i_e + j_e >= d-1; at that coordinate d is subtracted from i+j+alpha and
/// the coefficient alpha_e is attached.  Every degenerate case (no unique
/// overflow, vanishing coefficient, corrected tuple outside the box) is the
/// canonical zero (sentinel, coefficient 0).
inline AddAlphaResult add_alpha(const MultiIndex& i, const MultiIndex& j,
                                const MultiIndex& alpha, int d) {
    if (i.size() != j.size() || i.size() != alpha.size())
        throw std::invalid_argument("add_alpha: length mismatch");
    int overflow_at = -1;
    int overflows = 0;
    for (std::size_t e = 0; e < i.size(); ++e) {
        if (i[e] + j[e] >= d - 1) {
            ++overflows;
            overflow_at = static_cast<int>(e);
        }
    }
    if (overflows != 1) return {IndexOrZero::zero(), 0};
    const int coeff = alpha[static_cast<std::size_t>(overflow_at)];
    if (coeff == 0) return {IndexOrZero::zero(), 0};
    std::vector<int> out(i.size());
    for (std::size_t e = 0; e < i.size(); ++e)
        out[e] = i[e] + j[e] + alpha[e];
    out[static_cast<std::size_t>(overflow_at)] -= d;
    MultiIndex corrected{std::move(out)};
    if (!corrected.in_box(d)) return {IndexOrZero::zero(), 0};
    return {IndexOrZero::of(std::move(corrected)), coeff};
}

/// Degree of the variable indices x_k: k runs over I(m, d, (m/2+1)d - m - 2).
inline int variable_degree(int m, int d) { return (m / 2 + 1) * d - m - 2; }

/// Degree of the row indices of the Hodge-class pairing matrix.
inline int row_degree(int m, int d) { return (m / 2) * d - m - 2; }

}  // namespace ivhs
