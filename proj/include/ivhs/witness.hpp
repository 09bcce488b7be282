#pragma once

// Rank witnesses from the linear-cycle locus.  The cycle inside the Fermat
// hypersurface is cut by the m/2+1 pencils X_{2u} - zeta X_{2u+1} with
// zeta^d = -1; multiplying them by all monomials of degree d-1 and reducing
// modulo the Fermat Jacobian ideal (any exponent >= d-1 kills a monomial)
// spans the degree-d part of the cycle ideal inside the coordinate-ring
// basis.  A nonzero assignment x with M(x) annihilating that span plays the
// role of the cycle's period vector; its exact rank is the quantity the
// bounds are about, and the expected value is the critical rank.

#include <stdexcept>
#include <string>
#include <vector>

#include "ivhs/certificate.hpp"
#include "ivhs/cyclotomic.hpp"
#include "ivhs/linalg.hpp"
#include "ivhs/matrices.hpp"

namespace ivhs {

namespace detail {

/// All length-`len` tuples of nonnegative integers summing to `total`, in
/// increasing lex order (entries are not box-bounded here).
inline std::vector<MultiIndex> compositions(int len, int total) {
    std::vector<MultiIndex> out;
    std::vector<int> buf(static_cast<std::size_t>(len), 0);
    auto rec = [&](auto&& self, int pos, int remaining) -> void {
        if (pos == len - 1) {
            buf[static_cast<std::size_t>(pos)] = remaining;
            out.emplace_back(buf);
            return;
        }
        for (int e = 0; e <= remaining; ++e) {
            buf[static_cast<std::size_t>(pos)] = e;
            self(self, pos + 1, remaining - e);
        }
    };
    if (len > 0 && total >= 0) rec(rec, 0, total);
    return out;
}

}  // namespace detail

struct TangentVector {
    std::size_t pencil = 0;  // u: the factor X_{2u} - zeta X_{2u+1}
    MultiIndex monomial;     // the degree d-1 cofactor
    std::vector<CyclotomicField::Element> coords;  // over I_d, additive order
};

struct TangentBasis {
    int m = 0, d = 0;
    CyclotomicField field{2};
    IndexSet cols;                     // I_d
    std::vector<TangentVector> basis;  // linearly independent subset
    std::size_t generators_considered = 0;
};

/// Coordinates of one raw generator (X_{2u} - zeta X_{2u+1}) * X^e over the
/// monomial basis I_d, after the Jacobian reduction (exponent >= d-1 kills a
/// monomial).
inline std::vector<CyclotomicField::Element> cycle_generator_vector(
    int d, std::size_t u, const MultiIndex& e, const CyclotomicField& F, const IndexSet& cols) {
    if (e.degree() != d - 1)
        throw std::invalid_argument("cofactor monomial must have degree d-1");
    std::vector<CyclotomicField::Element> v(cols.size(), F.zero());
    std::vector<int> plus = e.entries();
    plus[2 * u] += 1;
    MultiIndex mono_plus{std::move(plus)};
    if (auto pos = cols.position(mono_plus)) {
        v[*pos] = F.add(v[*pos], F.one());
    }
    std::vector<int> minus = e.entries();
    minus[2 * u + 1] += 1;
    MultiIndex mono_minus{std::move(minus)};
    if (auto pos = cols.position(mono_minus)) {
        v[*pos] = F.sub(v[*pos], F.omega());
    }
    return v;
}

/// Degree-d part of the cycle ideal in the monomial basis, with a linearly
/// independent subset extracted by exact elimination (first new pivot wins).
inline TangentBasis cycle_tangent_space(int m, int d) {
    check_hypothesis(m, d);
    TangentBasis tb;
    tb.m = m;
    tb.d = d;
    tb.field = CyclotomicField(2 * d);
    tb.cols = cached_index_set(m, d, d);
    const CyclotomicField& F = tb.field;

    // incremental row echelon accumulator over the I_d coordinates
    std::vector<std::vector<CyclotomicField::Element>> echelon;
    std::vector<std::size_t> pivot_col;

    auto reduce = [&](std::vector<CyclotomicField::Element> v)
        -> std::vector<CyclotomicField::Element> {
        for (std::size_t r = 0; r < echelon.size(); ++r) {
            const std::size_t pc = pivot_col[r];
            if (F.is_zero(v[pc])) continue;
            auto f = v[pc];
            for (std::size_t c = 0; c < v.size(); ++c)
                v[c] = F.sub(v[c], F.mul(f, echelon[r][c]));
        }
        return v;
    };

    for (std::size_t u = 0; 2 * u + 1 < static_cast<std::size_t>(m + 2); ++u) {
        for (const MultiIndex& e : detail::compositions(m + 2, d - 1)) {
            ++tb.generators_considered;
            auto v = cycle_generator_vector(d, u, e, F, tb.cols);
            bool nonzero = false;
            for (const auto& c : v) nonzero = nonzero || !F.is_zero(c);
            if (!nonzero) continue;

            auto residue = reduce(v);
            std::size_t pc = 0;
            while (pc < residue.size() && F.is_zero(residue[pc])) ++pc;
            if (pc == residue.size()) continue;  // dependent on earlier rows
            auto inv = F.inv(residue[pc]);
            for (auto& c : residue) c = F.mul(c, inv);
            echelon.push_back(std::move(residue));
            pivot_col.push_back(pc);
            tb.basis.push_back(TangentVector{u, e, std::move(v)});
        }
    }
    return tb;
}

struct WitnessVector {
    int m = 0, d = 0;
    CyclotomicField field{2};
    IndexSet vars;  // the assignment is indexed by this set
    std::vector<CyclotomicField::Element> assignment;
    std::size_t rank = 0;                // exact rank of M at the assignment
    std::size_t solution_space_dim = 0;  // kernel dimension of the tangent system
    std::size_t free_column = 0;         // the pivoted free unknown
    bool annihilation_checked = false;
};

/// M evaluated at a cyclotomic assignment.
inline Matrix<CyclotomicField> evaluate_matrix(const IvhsMatrix& M, const CyclotomicField& F,
                                               const std::vector<CyclotomicField::Element>& x) {
    const IndexSet& vars = cached_index_set(M.m(), M.d(), variable_degree(M.m(), M.d()));
    Matrix<CyclotomicField> out(M.row_count(),
                                std::vector<CyclotomicField::Element>(M.col_count(), F.zero()));
    for (std::size_t r = 0; r < M.row_count(); ++r)
        for (std::size_t c = 0; c < M.col_count(); ++c) {
            const ScaledVar& e = M.entry(r, c);
            if (e.is_zero()) continue;
            out[r][c] = F.scale(x[*vars.position(e.index.index())], e.coefficient);
        }
    return out;
}

inline std::size_t rank_at(int m, int d, const CyclotomicField& F,
                           const std::vector<CyclotomicField::Element>& x) {
    return field_rank(F, evaluate_matrix(build_M(m, d), F, x));
}

inline std::size_t witness_rank(const WitnessVector& w) {
    return rank_at(w.m, w.d, w.field, w.assignment);
}

/// Exact check that M(x) kills every tangent vector.
inline bool witness_annihilates(int m, int d, const CyclotomicField& F,
                                const TangentBasis& tb,
                                const std::vector<CyclotomicField::Element>& x) {
    const IndexSet& rows = cached_index_set(m, d, row_degree(m, d));
    const IndexSet& vars = cached_index_set(m, d, variable_degree(m, d));
    for (const TangentVector& tv : tb.basis) {
        for (const MultiIndex& i : rows.members()) {
            auto acc = F.zero();
            for (std::size_t c = 0; c < tb.cols.size(); ++c) {
                if (F.is_zero(tv.coords[c])) continue;
                IndexOrZero sum = add(i, tb.cols[c], d);
                if (sum.is_zero()) continue;
                acc = F.add(acc, F.mul(tv.coords[c], x[*vars.position(sum.index())]));
            }
            if (!F.is_zero(acc)) return false;
        }
    }
    return true;
}

/// Solves the tangent-annihilation system for a nonzero assignment x: for
/// every tangent vector v and every row index i, sum_j v_j x_{i+j} = 0.
/// The unknowns are the x_k; the first free column of the reduced system is
/// pivoted to 1 so runs are reproducible.
inline WitnessVector solve_witness(int m, int d) {
    check_hypothesis(m, d);
    TangentBasis tb = cycle_tangent_space(m, d);
    const CyclotomicField& F = tb.field;
    const IndexSet& rows = cached_index_set(m, d, row_degree(m, d));
    const IndexSet& vars = cached_index_set(m, d, variable_degree(m, d));

    Matrix<CyclotomicField> A;
    A.reserve(tb.basis.size() * rows.size());
    for (const TangentVector& tv : tb.basis) {
        for (const MultiIndex& i : rows.members()) {
            std::vector<CyclotomicField::Element> eq(vars.size(), F.zero());
            bool nonzero = false;
            for (std::size_t c = 0; c < tb.cols.size(); ++c) {
                if (F.is_zero(tv.coords[c])) continue;
                IndexOrZero sum = add(i, tb.cols[c], d);
                if (sum.is_zero()) continue;
                auto& slot = eq[*vars.position(sum.index())];
                slot = F.add(slot, tv.coords[c]);
                nonzero = true;
            }
            if (nonzero) A.push_back(std::move(eq));
        }
    }

    auto sol = first_nullspace_vector(F, std::move(A));
    if (sol.solution.empty())
        throw std::runtime_error(
            "witness system overdetermined: only the zero assignment annihilates the "
            "cycle tangent space");

    WitnessVector w;
    w.m = m;
    w.d = d;
    w.field = F;
    w.vars = vars;
    w.assignment = std::move(sol.solution);
    w.solution_space_dim = vars.size() - sol.rank;
    w.free_column = sol.free_column;
    w.annihilation_checked = witness_annihilates(m, d, F, tb, w.assignment);
    if (!w.annihilation_checked)
        throw std::logic_error("solved witness fails re-verification");
    w.rank = witness_rank(w);
    return w;
}

/// Image of a witness under the Galois automorphism omega -> omega^u.
inline WitnessVector galois_witness(const WitnessVector& w, int u) {
    WitnessVector out = w;
    for (auto& c : out.assignment) c = w.field.galois(c, u);
    out.rank = witness_rank(out);
    out.annihilation_checked = false;  // annihilates the conjugate tangent space instead
    return out;
}

}  // namespace ivhs
