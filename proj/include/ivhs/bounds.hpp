#pragma once

// Closed-form dimension counts and bounds: the Hodge numbers (a, b, r), the
// certified maximum s for the minors-only ideal, the expected-codimension
// bound from the transversality inequality b <= (a-s)(r-s), the cubic
// Noether-Lefschetz specialization, and executable forms of the counting
// lemma and its injection.  Every ceiling decision is made by exact
// integer/rational comparison; no floating point enters any value.

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ivhs/certificate.hpp"
#include "ivhs/multiindex.hpp"
#include "ivhs/probe.hpp"

namespace ivhs {

struct HodgeDims {
    long long a = 0, b = 0, r = 0;
};

inline HodgeDims hodge_dims(int m, int d) {
    check_params(m, d);
    return {count(m, d, row_degree(m, d)), count(m, d, variable_degree(m, d)),
            count(m, d, d)};
}

/// The closed forms valid at m = 2 (surfaces in projective 3-space), used as
/// an independent cross-check of the counts.
struct SurfaceClosedForms {
    long long a, b, r;
};
inline SurfaceClosedForms surface_closed_forms(int d) {
    const long long dm1 = d - 1;
    return {binomial(dm1, 3),
            dm1 * dm1 * dm1 - dm1 * dm1 + dm1 - 2 * binomial(dm1, 3),
            binomial(d + 3, 3) - 16};
}

/// Certified maximum s for the minors-only ideal: one less than the critical
/// rank.  For m = 2 this equals d - 4.
inline long long smax0_formula(int m, int d) {
    check_hypothesis(m, d);
    return critical_rank(m, d) - 1;
}

namespace detail {

inline mpq_class q_of(long long v) { return mpq_class(static_cast<long>(v)); }

/// Smallest integer n with q + n >= sqrt(radicand), radicand >= 0 rational;
/// i.e. the ceiling of sqrt(radicand) - q under the convention
/// ceil(x) - 1 < x <= ceil(x), decided by exact comparisons.
inline long long ceil_sqrt_minus(const mpq_class& radicand, const mpq_class& q) {
    if (radicand < 0) throw std::invalid_argument("negative radicand");
    auto reaches = [&](long long n) {
        mpq_class lhs = q + q_of(n);
        if (lhs < 0) return false;           // sqrt >= 0 > lhs
        return lhs * lhs >= radicand;        // both sides nonnegative
    };
    long long n = 0;
    if (reaches(n)) {
        while (reaches(n - 1)) --n;
        return n;
    }
    while (!reaches(n + 1)) ++n;
    return n + 1;
}

}  // namespace detail

/// a - ceil( sqrt(((r-a)/2)^2 + b) - (r-a)/2 ), all exact.
inline long long smax_check_formula(int m, int d) {
    HodgeDims h = hodge_dims(m, d);
    mpq_class half = detail::q_of(h.r - h.a) / 2;
    mpq_class radicand = half * half + detail::q_of(h.b);
    return h.a - detail::ceil_sqrt_minus(radicand, half);
}

/// The degree-d surface specialization with explicit polynomial radicand:
/// (d-1)(d-2)(d-3)/6 - ceil( sqrt(d^4 + 2/3 d^3 - 16 d^2 + 7/3 d + 48) - (d^2-7) ).
inline long long nl_corollary(int d) {
    if (d < 4) throw std::invalid_argument("corollary requires d >= 4");
    const long long D = d;
    mpq_class radicand = detail::q_of(D * D * D * D) + detail::q_of(2 * D * D * D) / 3 -
                         detail::q_of(16 * D * D) + detail::q_of(7 * D) / 3 +
                         detail::q_of(48);
    mpq_class q = detail::q_of(D * D - 7);
    long long lead = (D - 1) * (D - 2) * (D - 3) / 6;
    return lead - detail::ceil_sqrt_minus(radicand, q);
}

inline bool transversality_inequality(int m, int d, long long s) {
    HodgeDims h = hodge_dims(m, d);
    return h.b <= (h.a - s) * (h.r - s);  // all integers, no overflow at desk scale
}

/// Display-only asymptotic for the quantity inside the ceiling at m = 2.
inline double nl_ceiling_asymptote(int d) { return d / 3.0 - 19.0 / 18.0; }

struct MadaramReport {
    long long min_count = 0;
    long long bound = 0;  // critical_rank(m, d)
    std::vector<MultiIndex> argmin;
    bool equality_flag = false;  // min == bound and every half-0 / half-(d-2)
                                 // index attains it
};

/// Exhaustive computation of #A_k over every variable index k.
inline MadaramReport madaram_min(int m, int d) {
    check_hypothesis(m, d);
    MadaramReport rep;
    rep.bound = critical_rank(m, d);
    const IndexSet& vars = cached_index_set(m, d, variable_degree(m, d));
    std::vector<long long> sizes;
    sizes.reserve(vars.size());
    rep.min_count = -1;
    for (const MultiIndex& k : vars.members()) {
        long long n = static_cast<long long>(overflow_free_pairs(m, d, k).size());
        sizes.push_back(n);
        if (rep.min_count < 0 || n < rep.min_count) rep.min_count = n;
    }
    for (std::size_t i = 0; i < vars.size(); ++i)
        if (sizes[i] == rep.min_count) rep.argmin.push_back(vars[i]);

    // the predicted minimizers: m/2+1 entries zero, the rest d-2
    bool all_special_attain = true;
    const int zeros_wanted = m / 2 + 1;
    for (std::size_t i = 0; i < vars.size(); ++i) {
        int zeros = 0, full = 0;
        for (int e : vars[i].entries()) {
            if (e == 0) ++zeros;
            else if (e == d - 2) ++full;
        }
        if (zeros == zeros_wanted && zeros + full == m + 2 && sizes[i] != rep.min_count)
            all_special_attain = false;
    }
    rep.equality_flag = (rep.min_count == rep.bound) && all_special_attain;
    return rep;
}

struct InjectionCheck {
    bool ok = false;  // image inside the target and pairwise distinct
    std::size_t source_size = 0, target_size = 0;
    std::string detail;
};

/// The explicit injection A_{(k0-1, k1+1, ...)} -> A_{(k0, k1, ...)} behind
/// the counting lemma: ((i0,i1,...),(j0,j1,...)) goes to
/// ((i0+1, i1-1, ...), j) when i1 != 0 and to ((0, i0, ...), (k0, k1-i0, ...))
/// when i1 = 0.  Verified by exhaustive enumeration.
inline InjectionCheck yekeshab_injection_check(int m, int d, const MultiIndex& k) {
    check_hypothesis(m, d);
    if (k.size() != static_cast<std::size_t>(m + 2))
        throw std::invalid_argument("k has the wrong length");
    if (k.degree() != variable_degree(m, d) || !k.in_box(d))
        throw std::invalid_argument("k is not a variable index");
    if (!(0 < k[0] && k[0] <= k[1] && k[1] < d - 2))
        throw std::invalid_argument(
            "k must satisfy 0 < k_0 <= k_1 < d-2 (normalize the first two coordinates)");

    std::vector<int> src_entries = k.entries();
    src_entries[0] -= 1;
    src_entries[1] += 1;
    const MultiIndex k_src{std::move(src_entries)};

    auto source = overflow_free_pairs(m, d, k_src);
    auto target = overflow_free_pairs(m, d, k);

    InjectionCheck out;
    out.source_size = source.size();
    out.target_size = target.size();

    std::vector<std::pair<MultiIndex, MultiIndex>> images;
    const IndexSet& rows = cached_index_set(m, d, row_degree(m, d));
    const IndexSet& cols = cached_index_set(m, d, d);
    for (const auto& [i, j] : source) {
        std::vector<int> ie = i.entries(), je = j.entries();
        if (i[1] != 0) {
            ie[0] += 1;
            ie[1] -= 1;
        } else {
            ie[1] = ie[0];
            ie[0] = 0;
            je[0] = k[0];
            je[1] = k[1] - i[0];
        }
        MultiIndex mi{std::move(ie)}, mj{std::move(je)};
        if (!rows.contains(mi) || !cols.contains(mj) || !(mi.plus(mj) == k)) {
            out.detail = "image of (" + i.to_string() + ", " + j.to_string() +
                         ") is not in the target pair set";
            return out;
        }
        images.emplace_back(std::move(mi), std::move(mj));
    }
    std::sort(images.begin(), images.end());
    if (std::adjacent_find(images.begin(), images.end()) != images.end()) {
        out.detail = "two source pairs collide";
        return out;
    }
    out.ok = true;
    out.detail = "#A_" + k_src.to_string() + " = " + std::to_string(out.source_size) +
                 " injects into #A_" + k.to_string() + " = " + std::to_string(out.target_size);
    return out;
}

struct BoundsReport {
    int m = 0, d = 0;
    long long a = 0, b = 0, r = 0;
    long long smax0 = 0;
    long long smax_check = 0;
    std::optional<long long> corollary_value;  // m = 2 only
    std::vector<std::pair<long long, bool>> transversality_table;  // s -> b <= (a-s)(r-s)
    MadaramReport madaram;
    long long c_estimate = 0;
    std::string c_provenance;  // "probe" or "exact"
    std::optional<double> y0_approx;  // display only, m = 2
};

inline BoundsReport make_bounds_report(int m, int d, long long probe_trials = 64,
                                       std::uint64_t prime = kDefaultProbePrime,
                                       std::uint64_t seed = 0, unsigned threads = 1) {
    check_hypothesis(m, d);
    BoundsReport rep;
    rep.m = m;
    rep.d = d;
    HodgeDims h = hodge_dims(m, d);
    rep.a = h.a;
    rep.b = h.b;
    rep.r = h.r;
    rep.smax0 = smax0_formula(m, d);
    rep.smax_check = smax_check_formula(m, d);
    if (m == 2 && d >= 4) {
        rep.corollary_value = nl_corollary(d);
        rep.y0_approx = nl_ceiling_asymptote(d);
    }
    for (long long s = 0; s <= std::min(h.a, h.r); ++s)
        rep.transversality_table.emplace_back(s, transversality_inequality(m, d, s));
    rep.madaram = madaram_min(m, d);
    RankProbeReport probe = random_rank_probe(m, d, probe_trials, prime, seed, threads,
                                              /*record_witnesses=*/false);
    rep.c_estimate = static_cast<long long>(probe.max_rank);
    rep.c_provenance =
        rep.c_estimate == std::min(h.a, h.r) ? "exact" : "probe";
    return rep;
}

}  // namespace ivhs
