#pragma once

// Symbolic matrices attached to the Fermat point: the pairing matrix M with
// entries x_{i+j}, its first-order corrections Mcheck_alpha with entries
// alpha_e * x_{i+_alpha j}, and the column-replaced matrices N_{j,alpha}.
// Rows are indexed by I(m,d,(m/2)d-m-2), columns by I(m,d,d); every nonzero
// entry is an integer multiple of a variable x_k with k of degree
// (m/2+1)d-m-2.

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "ivhs/multiindex.hpp"

namespace ivhs {

/// Integer multiple of a variable; the canonical zero has coefficient 0 and
/// the sentinel index.
struct ScaledVar {
    int coefficient = 0;
    IndexOrZero index = IndexOrZero::zero();

    static ScaledVar zero() { return {}; }
    static ScaledVar var(MultiIndex k, int c = 1) {
        if (c == 0) return zero();
        return {c, IndexOrZero::of(std::move(k))};
    }
    bool is_zero() const { return coefficient == 0; }
    bool operator==(const ScaledVar&) const = default;
};

enum class MatrixKind { M, MCheck, N };

inline std::string kind_name(MatrixKind k) {
    switch (k) {
        case MatrixKind::M: return "M";
        case MatrixKind::MCheck: return "Mcheck";
        case MatrixKind::N: return "N";
    }
    return "?";
}

class IvhsMatrix {
public:
    IvhsMatrix(int m, int d, MatrixKind kind, IndexSet rows, IndexSet cols)
        : m_(m), d_(d), kind_(kind), rows_(std::move(rows)), cols_(std::move(cols)),
          entries_(rows_.size() * cols_.size()) {}

    int m() const { return m_; }
    int d() const { return d_; }
    MatrixKind kind() const { return kind_; }
    const IndexSet& rows() const { return rows_; }
    const IndexSet& cols() const { return cols_; }
    std::size_t row_count() const { return rows_.size(); }
    std::size_t col_count() const { return cols_.size(); }

    const MultiIndex& alpha() const {
        if (!alpha_) throw std::logic_error("matrix kind carries no alpha");
        return *alpha_;
    }
    const MultiIndex& replaced_column() const {
        if (!col_j_) throw std::logic_error("matrix kind carries no replaced column");
        return *col_j_;
    }

    const ScaledVar& entry(std::size_t r, std::size_t c) const {
        return entries_[r * cols_.size() + c];
    }
    ScaledVar& entry(std::size_t r, std::size_t c) {
        return entries_[r * cols_.size() + c];
    }

    /// Entry addressed by row/column indices rather than positions.
    const ScaledVar& at(const MultiIndex& i, const MultiIndex& j) const {
        auto r = rows_.position(i);
        auto c = cols_.position(j);
        if (!r || !c) throw std::invalid_argument("at: index not in row/column set");
        return entry(*r, *c);
    }

    bool is_zero() const {
        for (const auto& e : entries_)
            if (!e.is_zero()) return false;
        return true;
    }

    /// Asserted on construction by the builders: every nonzero entry carries
    /// a variable of the right degree inside the box.
    void check_degrees() const {
        const int want = variable_degree(m_, d_);
        for (const auto& e : entries_) {
            if (e.is_zero()) continue;
            const MultiIndex& k = e.index.index();
            if (k.degree() != want || !k.in_box(d_))
                throw std::logic_error("matrix entry with out-of-range variable " + k.to_string());
        }
    }

private:
    int m_, d_;
    MatrixKind kind_;
    IndexSet rows_, cols_;
    std::vector<ScaledVar> entries_;
    std::optional<MultiIndex> alpha_, col_j_;

    friend IvhsMatrix build_M(int, int);
    friend IvhsMatrix build_M_check(int, int, const MultiIndex&);
    friend IvhsMatrix build_N(int, int, const MultiIndex&, const MultiIndex&);
};

inline void check_in_I_d(const MultiIndex& v, int m, int d, const char* what) {
    if (v.size() != static_cast<std::size_t>(m + 2) || v.degree() != d || !v.in_box(d))
        throw std::invalid_argument(std::string(what) + " must lie in I_d, got " + v.to_string());
}

inline IvhsMatrix build_M(int m, int d) {
    check_hypothesis(m, d);
    IvhsMatrix M(m, d, MatrixKind::M, cached_index_set(m, d, row_degree(m, d)),
                 cached_index_set(m, d, d));
    for (std::size_t r = 0; r < M.row_count(); ++r) {
        const MultiIndex& i = M.rows()[r];
        for (std::size_t c = 0; c < M.col_count(); ++c) {
            IndexOrZero s = add(i, M.cols()[c], d);
            M.entry(r, c) = s.is_zero() ? ScaledVar::zero() : ScaledVar::var(s.index());
        }
    }
    M.check_degrees();
    return M;
}

inline IvhsMatrix build_M_check(int m, int d, const MultiIndex& alpha) {
    check_hypothesis(m, d);
    check_in_I_d(alpha, m, d, "alpha");
    IvhsMatrix Mc(m, d, MatrixKind::MCheck, cached_index_set(m, d, row_degree(m, d)),
                  cached_index_set(m, d, d));
    Mc.alpha_ = alpha;
    for (std::size_t r = 0; r < Mc.row_count(); ++r) {
        const MultiIndex& i = Mc.rows()[r];
        for (std::size_t c = 0; c < Mc.col_count(); ++c) {
            AddAlphaResult a = add_alpha(i, Mc.cols()[c], alpha, d);
            Mc.entry(r, c) = a.index.is_zero() ? ScaledVar::zero()
                                               : ScaledVar{a.coefficient, a.index};
        }
    }
    Mc.check_degrees();
    return Mc;
}

/// M with column j overwritten by the j-th column of Mcheck_alpha.
inline IvhsMatrix build_N(int m, int d, const MultiIndex& j, const MultiIndex& alpha) {
    check_hypothesis(m, d);
    check_in_I_d(j, m, d, "column j");
    check_in_I_d(alpha, m, d, "alpha");
    IvhsMatrix N = build_M(m, d);
    N.kind_ = MatrixKind::N;
    N.alpha_ = alpha;
    N.col_j_ = j;
    const std::size_t c = *N.cols().position(j);
    for (std::size_t r = 0; r < N.row_count(); ++r) {
        AddAlphaResult a = add_alpha(N.rows()[r], j, alpha, d);
        N.entry(r, c) = a.index.is_zero() ? ScaledVar::zero()
                                          : ScaledVar{a.coefficient, a.index};
    }
    N.check_degrees();
    return N;
}

/// One 1-form per row of M: row i contributes sum_j x_{i+j} dt_j; absent
/// terms are the overflowed (identically zero) sums.
struct FoliationForm {
    MultiIndex row;
    std::map<MultiIndex, MultiIndex> terms;  // column j -> variable index i+j
};

inline std::vector<FoliationForm> foliation_forms(int m, int d) {
    check_hypothesis(m, d);
    const IndexSet& rows = cached_index_set(m, d, row_degree(m, d));
    const IndexSet& cols = cached_index_set(m, d, d);
    std::vector<FoliationForm> forms;
    forms.reserve(rows.size());
    for (const MultiIndex& i : rows.members()) {
        FoliationForm f;
        f.row = i;
        for (const MultiIndex& j : cols.members()) {
            IndexOrZero s = add(i, j, d);
            if (!s.is_zero()) f.terms.emplace(j, s.index());
        }
        forms.push_back(std::move(f));
    }
    return forms;
}

// Case analysis of a product X^i * X^j in the deformed coordinate ring, to
// first order: a plain product when nothing overflows, a first-order list
// over all alpha when exactly one coordinate does, zero otherwise.
struct SiliFirstOrderTerm {
    MultiIndex alpha;
    int coefficient = 0;
    IndexOrZero index = IndexOrZero::zero();
};

struct SiliResult {
    enum class Case { Product, FirstOrder, Zero } kind = Case::Zero;
    std::optional<MultiIndex> product;            // Case::Product
    std::vector<SiliFirstOrderTerm> first_order;  // Case::FirstOrder, one per alpha in I_d
};

inline SiliResult sili_reduce(const MultiIndex& i, const MultiIndex& j, int d) {
    if (i.size() != j.size())
        throw std::invalid_argument("sili_reduce: length mismatch");
    int overflows = 0;
    for (std::size_t e = 0; e < i.size(); ++e)
        if (i[e] + j[e] >= d - 1) ++overflows;
    SiliResult res;
    if (overflows == 0) {
        res.kind = SiliResult::Case::Product;
        res.product = i.plus(j);
        return res;
    }
    if (overflows >= 2) return res;  // Case::Zero
    res.kind = SiliResult::Case::FirstOrder;
    const int m = static_cast<int>(i.size()) - 2;
    for (const MultiIndex& alpha : cached_index_set(m, d, d).members()) {
        AddAlphaResult a = add_alpha(i, j, alpha, d);
        res.first_order.push_back({alpha, a.coefficient, a.index});
    }
    return res;
}

}  // namespace ivhs
