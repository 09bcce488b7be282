#pragma once

// Budgeted search for the largest s whose ideal variant has the origin as
// its only zero.  Lower bounds come from the elimination certificate (and,
// when it fits the budget, a pure-power Groebner run); upper bounds come
// from exact nonzero zeros: coordinate axes at low-count indices, the
// linear-cycle witness, or the empty-ideal range beyond min(a, r).  Every
// undecided s is reported as Inconclusive with the cap that stopped it;
// nothing is ever guessed.

#include <chrono>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ivhs/bounds.hpp"
#include "ivhs/certificate.hpp"
#include "ivhs/detideal.hpp"
#include "ivhs/fields.hpp"
#include "ivhs/groebner.hpp"
#include "ivhs/linalg.hpp"
#include "ivhs/probe.hpp"
#include "ivhs/witness.hpp"

namespace ivhs {

struct SearchBudget {
    int degree_cap = -1;            // -1: per-s default 2(s+1)
    double time_cap_seconds = 60;   // per basis run / extras scan
    long long probe_trials = 32;    // random rational assignments per s
    std::uint64_t seed = 0;
    std::size_t max_generators_for_gb = 20000;
};

namespace detail {

/// Division-free determinant of a small square matrix over any commutative
/// ring adapter (subset dynamic program, same expansion as det_expand).
/// An all-zero row or column settles it immediately; the inputs here are
/// sparse evaluations where that is the common case.
template <class Field>
typename Field::Element field_det(const Field& K, const Matrix<Field>& a) {
    const std::size_t n = a.size();
    if (n == 0) return K.one();
    for (std::size_t r = 0; r < n; ++r) {
        bool zero_row = true, zero_col = true;
        for (std::size_t c = 0; c < n && (zero_row || zero_col); ++c) {
            zero_row = zero_row && K.is_zero(a[r][c]);
            zero_col = zero_col && K.is_zero(a[c][r]);
        }
        if (zero_row || zero_col) return K.zero();
    }
    std::vector<typename Field::Element> D(std::size_t(1) << n, K.zero());
    D[0] = K.one();
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        const int q = __builtin_popcount(mask);
        const std::size_t row = n - static_cast<std::size_t>(q);
        auto acc = K.zero();
        int sign = 1;
        for (std::size_t c = 0; c < n; ++c) {
            if (!(mask & (1u << c))) continue;
            if (!K.is_zero(a[row][c])) {
                auto term = K.mul(a[row][c], D[mask & ~(1u << c)]);
                acc = sign > 0 ? K.add(acc, term) : K.sub(acc, term);
            }
            sign = -sign;
        }
        D[mask] = std::move(acc);
    }
    return D[(std::size_t(1) << n) - 1];
}

/// Numeric evaluation of every first-order sum generator at x, with a time
/// budget: true / false when decided, nullopt when the budget fired first.
/// Blocks are streamed (never materialized) with the correction matrices
/// hoisted, so memory stays flat however many selectors there are.
template <class Field>
std::optional<bool> first_order_sums_vanish(int m, int d, int s, const Field& K,
                                            const std::vector<typename Field::Element>& x,
                                            double time_cap_seconds) {
    using Clock = std::chrono::steady_clock;
    if (time_cap_seconds == 0) return std::nullopt;  // no budget left
    const auto t0 = Clock::now();
    auto expired = [&] {
        return time_cap_seconds >= 0 &&
               std::chrono::duration<double>(Clock::now() - t0).count() > time_cap_seconds;
    };

    const IvhsMatrix M = build_M(m, d);
    const IndexSet& vars = cached_index_set(m, d, variable_degree(m, d));
    const std::size_t size = static_cast<std::size_t>(s) + 1;
    const std::size_t a = M.row_count(), r = M.col_count();
    if (size > std::min(a, r)) return true;  // no minors at all

    auto value_at = [&](const IvhsMatrix& mat, std::size_t rr, std::size_t cc) {
        const ScaledVar& e = mat.entry(rr, cc);
        if (e.is_zero()) return K.zero();
        auto v = x[*vars.position(e.index.index())];
        return K.mul(K.from_mpq(mpq_class(e.coefficient)), v);
    };

    const IndexSet& alphas = cached_index_set(m, d, d);
    std::vector<IvhsMatrix> checks;
    checks.reserve(alphas.size());
    for (const MultiIndex& alpha : alphas.members()) checks.push_back(build_M_check(m, d, alpha));

    const auto outside = K.from_mpq(mpq_class(static_cast<long>(r - size)));
    bool all_vanish = true;
    bool out_of_time = false;
    Matrix<Field> slice(size, std::vector<typename Field::Element>(size, K.zero()));
    detail::for_each_combination(a, size, [&](const std::vector<std::size_t>& rows) {
        if (!all_vanish || out_of_time) return;
        detail::for_each_combination(r, size, [&](const std::vector<std::size_t>& cols) {
            if (!all_vanish || out_of_time) return;
            if (expired()) {
                out_of_time = true;
                return;
            }
            for (std::size_t rr = 0; rr < size; ++rr)
                for (std::size_t cc = 0; cc < size; ++cc)
                    slice[rr][cc] = value_at(M, rows[rr], cols[cc]);
            auto det_plain = field_det(K, slice);
            for (const IvhsMatrix& Mc : checks) {
                auto sum = K.mul(outside, det_plain);
                for (std::size_t cpos = 0; cpos < size; ++cpos) {
                    std::vector<typename Field::Element> saved(size);
                    for (std::size_t rr = 0; rr < size; ++rr) {
                        saved[rr] = slice[rr][cpos];
                        slice[rr][cpos] = value_at(Mc, rows[rr], cols[cpos]);
                    }
                    sum = K.add(sum, field_det(K, slice));
                    for (std::size_t rr = 0; rr < size; ++rr)
                        slice[rr][cpos] = std::move(saved[rr]);
                }
                if (!K.is_zero(sum)) {
                    all_vanish = false;
                    return;
                }
            }
        });
    });
    if (out_of_time) return std::nullopt;
    return all_vanish;
}

}  // namespace detail

struct SStatus {
    long long s = 0;
    enum class Verdict { ZeroCertified, NonzeroCertified, Inconclusive } verdict =
        Verdict::Inconclusive;
    std::string evidence;
};

struct SmaxSearchReport {
    int m = 0, d = 0;
    IdealVariant variant = IdealVariant::I0;
    long long smax0 = 0;
    long long certified_lower = -1;
    std::optional<long long> certified_upper;
    std::vector<SStatus> statuses;
    std::vector<std::string> notes;

    bool resolved() const { return certified_upper && *certified_upper == certified_lower; }
    bool has_inconclusive() const {
        for (const auto& st : statuses)
            if (st.verdict == SStatus::Verdict::Inconclusive) return true;
        return false;
    }
};

inline SmaxSearchReport smax_search(int m, int d, IdealVariant variant,
                                    const SearchBudget& budget = {}) {
    check_hypothesis(m, d);
    SmaxSearchReport rep;
    rep.m = m;
    rep.d = d;
    rep.variant = variant;
    rep.smax0 = smax0_formula(m, d);

    const HodgeDims h = hodge_dims(m, d);
    const long long min_ar = std::min(h.a, h.r);
    const IndexSet& vars = cached_index_set(m, d, variable_degree(m, d));
    const IndexSet& alphas = cached_index_set(m, d, d);

    // one certificate underwrites every s below the critical rank
    EliminationCertificate cert = elimination_certificate(m, d);
    CertificateVerification certv = verify_certificate(cert);
    if (!certv.ok) throw std::logic_error("internal certificate failed verification");

    bool mcheck_all_zero = true;
    for (const MultiIndex& alpha : alphas.members())
        if (!build_M_check(m, d, alpha).is_zero()) {
            mcheck_all_zero = false;
            break;
        }
    if (mcheck_all_zero)
        rep.notes.push_back(
            "all first-order correction matrices vanish identically at these parameters; "
            "the enlarged ideal adds only scalar multiples of the plain minors");

    // linear-cycle witness, shared across s
    WitnessVector w = solve_witness(m, d);
    const MadaramReport mada = madaram_min(m, d);

    RationalField Q;
    using Clock = std::chrono::steady_clock;
    for (long long s = 0; s <= min_ar; ++s) {
        // one shared wall-clock budget per s, split across all attempts
        const auto s_deadline =
            Clock::now() + std::chrono::duration_cast<Clock::duration>(
                               std::chrono::duration<double>(
                                   budget.time_cap_seconds < 0 ? 1e9 : budget.time_cap_seconds));
        auto remaining = [&]() -> double {
            double r = std::chrono::duration<double>(s_deadline - Clock::now()).count();
            return r > 0 ? r : 0.0;
        };
        // Any assignment of rank strictly below s zeroes every generator of
        // either variant without a scan: each summand minor of size s+1
        // retains at least s columns of M(x), which are dependent already.
        auto extras_vanish = [&](std::size_t rank_at_x,
                                 const std::function<std::optional<bool>()>& exact_scan)
            -> std::optional<bool> {
            if (variant == IdealVariant::I0) return true;
            if (static_cast<long long>(rank_at_x) < s) return true;
            return exact_scan();
        };
        SStatus st;
        st.s = s;
        if (s <= rep.smax0) {
            st.verdict = SStatus::Verdict::ZeroCertified;
            st.evidence = variant == IdealVariant::I0
                              ? "elimination certificate: rank <= " + std::to_string(rep.smax0) +
                                    " with some variable nonzero is impossible"
                              : "generators contain all plain minors, whose zero set is already "
                                "certified to be the origin (elimination certificate)";
            rep.certified_lower = std::max(rep.certified_lower, s);
            rep.statuses.push_back(std::move(st));
            continue;
        }
        if (s >= min_ar) {
            st.verdict = SStatus::Verdict::NonzeroCertified;
            st.evidence = "rank cannot exceed min(a, r) = " + std::to_string(min_ar) +
                          ", so no minors of size " + std::to_string(s + 1) +
                          " exist and every assignment is a zero of the (empty) ideal";
            if (!rep.certified_upper) rep.certified_upper = s - 1;
            rep.statuses.push_back(std::move(st));
            break;
        }

        // 1. the linear-cycle witness, the structural source of upper bounds
        if (static_cast<long long>(w.rank) <= s) {
            auto extras = extras_vanish(w.rank, [&]() {
                return detail::first_order_sums_vanish(m, d, static_cast<int>(s), w.field,
                                                       w.assignment, remaining());
            });
            if (extras && *extras) {
                st.verdict = SStatus::Verdict::NonzeroCertified;
                st.evidence = "linear-cycle witness of exact rank " + std::to_string(w.rank) +
                              " <= s is a nonzero zero of the ideal";
                if (!rep.certified_upper) rep.certified_upper = s - 1;
                rep.statuses.push_back(std::move(st));
                break;
            }
            std::string extra_note =
                !extras ? "first-order evaluation at the cycle witness hit the time cap"
                        : "the cycle witness does not kill the first-order sums, so it "
                          "gives no upper bound here";
            st.evidence = st.evidence.empty() ? extra_note : st.evidence + "; " + extra_note;
        }

        // 2. coordinate-axis witnesses at indices with few pair decompositions;
        // the rank at the axis of x_k equals the pair count of k
        std::optional<std::string> axis_evidence;
        if (mada.min_count <= s) {
            std::size_t attempts = 0;
            for (const MultiIndex& k : mada.argmin) {
                if (++attempts > 2 || (variant == IdealVariant::I1 && remaining() <= 0))
                    break;  // axes are permutation images of each other
                auto extras = extras_vanish(
                    static_cast<std::size_t>(mada.min_count), [&]() -> std::optional<bool> {
                        std::vector<mpq_class> x(vars.size(), 0);
                        x[*vars.position(k)] = 1;
                        return detail::first_order_sums_vanish(m, d, static_cast<int>(s), Q, x,
                                                               remaining());
                    });
                if (extras && *extras) {
                    axis_evidence = "coordinate axis x" + k.to_string() + " has rank " +
                                    std::to_string(mada.min_count) + " <= s" +
                                    (variant == IdealVariant::I1
                                         ? " and kills every first-order sum"
                                         : "");
                    break;
                }
            }
        }
        if (axis_evidence) {
            st.verdict = SStatus::Verdict::NonzeroCertified;
            st.evidence = *axis_evidence;
            if (!rep.certified_upper) rep.certified_upper = s - 1;
            rep.statuses.push_back(std::move(st));
            break;
        }

        // 3. random rational assignments (also re-checks the rank floor)
        bool probe_found = false;
        const IvhsMatrix M = build_M(m, d);
        for (long long t = 0; t < budget.probe_trials && !probe_found; ++t) {
            std::uint64_t state =
                budget.seed ^ (0xA0761D6478BD642Full * static_cast<std::uint64_t>(s * 1000 + t + 1));
            std::vector<mpq_class> x(vars.size());
            bool nonzero = false;
            for (auto& v : x) {
                long val = static_cast<long>(splitmix64(state) % 2001) - 1000;
                v = val;
                nonzero |= val != 0;
            }
            if (!nonzero) x[0] = 1;
            auto rank = rank_rational(M, x);
            if (static_cast<long long>(rank) <= rep.smax0)
                throw SoundnessViolation("random rational assignment fell below the certified rank floor");
            if (static_cast<long long>(rank) > s) continue;
            auto extras = extras_vanish(rank, [&]() {
                return detail::first_order_sums_vanish(m, d, static_cast<int>(s), Q, x, remaining());
            });
            if (!(extras && *extras)) continue;
            probe_found = true;
            st.verdict = SStatus::Verdict::NonzeroCertified;
            st.evidence = "random rational assignment of rank <= s (trial " + std::to_string(t) + ")";
        }
        if (probe_found) {
            if (!rep.certified_upper) rep.certified_upper = s - 1;
            rep.statuses.push_back(std::move(st));
            break;
        }

        // 4. capped basis computation
        const long long selector_count =
            binomial(h.a, s + 1) * binomial(h.r, s + 1) *
            (variant == IdealVariant::I1 ? 1 + static_cast<long long>(alphas.size()) : 1);
        if (selector_count <= static_cast<long long>(budget.max_generators_for_gb) &&
            remaining() > 0) {
            IdealSpec spec = make_ideal(m, d, static_cast<int>(s), variant);
            GroebnerCaps caps{budget.degree_cap >= 0 ? budget.degree_cap
                                                     : default_zero_dim_caps(static_cast<int>(s)).degree_cap,
                              remaining()};
            ZeroDimVerdict zv = groebner_zero_dim_test(spec, caps);
            if (zv.status == ZeroDimStatus::ZeroAtOriginOnly) {
                st.verdict = SStatus::Verdict::ZeroCertified;
                st.evidence = "basis run: " + zv.report;
                rep.certified_lower = std::max(rep.certified_lower, s);
                rep.statuses.push_back(std::move(st));
                continue;
            }
            if (zv.status == ZeroDimStatus::NontrivialZeroFound) {
                st.verdict = SStatus::Verdict::NonzeroCertified;
                st.evidence = "basis run witness: " + zv.report;
                if (!rep.certified_upper) rep.certified_upper = s - 1;
                rep.statuses.push_back(std::move(st));
                break;
            }
            st.verdict = SStatus::Verdict::Inconclusive;
            st.evidence = (st.evidence.empty() ? "" : st.evidence + "; ") + zv.report;
        } else if (selector_count > static_cast<long long>(budget.max_generators_for_gb)) {
            st.verdict = SStatus::Verdict::Inconclusive;
            st.evidence = (st.evidence.empty() ? "" : st.evidence + "; ") +
                          std::to_string(selector_count) +
                          " generators exceed the basis-engine budget of " +
                          std::to_string(budget.max_generators_for_gb);
        } else {
            st.verdict = SStatus::Verdict::Inconclusive;
            st.evidence = (st.evidence.empty() ? "" : st.evidence + "; ") +
                          "per-s time budget exhausted before a basis run";
        }
        rep.statuses.push_back(std::move(st));
    }
    return rep;
}

}  // namespace ivhs
