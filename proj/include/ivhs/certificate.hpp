#pragma once

// Constructive certificates that the variety of the minor ideal of M is the
// origin alone, below the critical rank.  For every variable index k, taken
// in decreasing additive order, a square submatrix of M is selected whose
// entries on the diagonal are all x_k and whose entries above the diagonal
// carry indices strictly larger than k (or vanish outright).  Granting that
// all minors of the critical size vanish, the determinant of each selected
// submatrix collapses to a power of x_k once larger variables are known to
// be zero, and the decreasing induction kills every variable in turn.

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ivhs/multiindex.hpp"

namespace ivhs {

inline long long binomial(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    long long r = 1;
    for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

/// The critical rank C(m/2+d, d) - (m/2+1)^2 below which all variables must
/// vanish; one less than it is the certified maximum s for the minors-only
/// ideal.
inline long long critical_rank(int m, int d) {
    check_params(m, d);
    return binomial(m / 2 + d, d) -
           static_cast<long long>(m / 2 + 1) * (m / 2 + 1);
}

struct CertificateStep {
    MultiIndex k;
    long long pair_count = 0;        // full size of A_k = {(i,j) : i + j = k}
    std::vector<MultiIndex> rows;    // strictly decreasing, size = bound
    std::vector<MultiIndex> cols;    // rows[e] + cols[e] = k
};

struct EliminationCertificate {
    int m = 0, d = 0;
    long long bound = 0;  // critical_rank(m, d)
    std::vector<CertificateStep> steps;  // decreasing additive order of k
};

/// All pairs (i, j) with i in the row set, j in I_d and i + j = k, ordered by
/// decreasing i.
inline std::vector<std::pair<MultiIndex, MultiIndex>> overflow_free_pairs(
    int m, int d, const MultiIndex& k) {
    std::vector<std::pair<MultiIndex, MultiIndex>> pairs;
    const IndexSet& rows = cached_index_set(m, d, row_degree(m, d));
    for (auto it = rows.members().rbegin(); it != rows.members().rend(); ++it) {
        MultiIndex j = k.minus(*it);
        if (j.in_box(d)) pairs.emplace_back(*it, std::move(j));
    }
    return pairs;
}

struct CountingLemmaViolation : std::runtime_error {
    MultiIndex k;
    long long found, needed;
    CountingLemmaViolation(MultiIndex k_, long long found_, long long needed_)
        : std::runtime_error("counting lemma violated at k=" + k_.to_string() +
                             ": only " + std::to_string(found_) + " pairs, need " +
                             std::to_string(needed_)),
          k(std::move(k_)), found(found_), needed(needed_) {}
};

inline EliminationCertificate elimination_certificate(int m, int d) {
    check_hypothesis(m, d);
    EliminationCertificate cert;
    cert.m = m;
    cert.d = d;
    cert.bound = critical_rank(m, d);
    const IndexSet& vars = cached_index_set(m, d, variable_degree(m, d));
    cert.steps.reserve(vars.size());
    for (auto it = vars.members().rbegin(); it != vars.members().rend(); ++it) {
        auto pairs = overflow_free_pairs(m, d, *it);
        if (static_cast<long long>(pairs.size()) < cert.bound)
            throw CountingLemmaViolation(*it, static_cast<long long>(pairs.size()),
                                         cert.bound);
        CertificateStep step;
        step.k = *it;
        step.pair_count = static_cast<long long>(pairs.size());
        for (long long e = 0; e < cert.bound; ++e) {
            step.rows.push_back(pairs[static_cast<std::size_t>(e)].first);
            step.cols.push_back(pairs[static_cast<std::size_t>(e)].second);
        }
        cert.steps.push_back(std::move(step));
    }
    return cert;
}

struct CertificateViolation {
    MultiIndex k;
    std::size_t e = 0, e_prime = 0;
    std::string what;
};

struct CertificateVerification {
    bool ok = false;
    std::optional<CertificateViolation> violation;
    std::vector<std::string> chain;  // one conclusion per step, in order
    std::string summary;
};

/// Symbolic re-verification of a certificate: shape, step coverage,
/// decreasing rows, diagonal sums, and the triangularity that makes the
/// induction work: every entry above the diagonal must carry an index
/// larger than k in the additive order, or be an identically zero entry.
inline CertificateVerification verify_certificate(const EliminationCertificate& cert) {
    CertificateVerification out;
    const int m = cert.m, d = cert.d;
    std::ostringstream summary;

    auto fail = [&](const MultiIndex& k, std::size_t e, std::size_t ep,
                    const std::string& what) {
        out.ok = false;
        out.violation = CertificateViolation{k, e, ep, what};
        out.summary = "FAILED at k=" + k.to_string() + ": " + what;
        return out;
    };

    if (cert.bound != critical_rank(m, d))
        return fail(MultiIndex{}, 0, 0, "stored bound does not match the critical rank");

    const IndexSet& vars = cached_index_set(m, d, variable_degree(m, d));
    const IndexSet& rows = cached_index_set(m, d, row_degree(m, d));
    const IndexSet& cols = cached_index_set(m, d, d);
    if (cert.steps.size() != vars.size())
        return fail(MultiIndex{}, 0, 0, "step count differs from the variable count");

    for (std::size_t s = 0; s < cert.steps.size(); ++s) {
        const CertificateStep& step = cert.steps[s];
        const MultiIndex& k = step.k;
        // decreasing coverage of the variable set
        if (k != vars[vars.size() - 1 - s])
            return fail(k, 0, 0, "steps do not cover the variables in decreasing order");
        if (static_cast<long long>(step.rows.size()) != cert.bound ||
            static_cast<long long>(step.cols.size()) != cert.bound)
            return fail(k, 0, 0, "selection size differs from the bound");
        if (step.pair_count < cert.bound)
            return fail(k, 0, 0, "recorded pair count below the bound");
        for (std::size_t e = 0; e < step.rows.size(); ++e) {
            if (!rows.contains(step.rows[e]))
                return fail(k, e, e, "row index outside the row set");
            if (!cols.contains(step.cols[e]))
                return fail(k, e, e, "column index outside the column set");
            if (step.rows[e].plus(step.cols[e]) != k)
                return fail(k, e, e, "diagonal pair does not sum to k");
            if (e && !(step.rows[e] < step.rows[e - 1]))
                return fail(k, e - 1, e, "rows not strictly decreasing");
        }
        // above-diagonal entries: index must exceed k or leave the box
        for (std::size_t e = 0; e < step.rows.size(); ++e) {
            for (std::size_t ep = e + 1; ep < step.cols.size(); ++ep) {
                MultiIndex idx = step.rows[e].plus(step.cols[ep]);
                if (idx.in_box(d) && !(idx > k))
                    return fail(k, e, ep,
                                "above-diagonal entry " + idx.to_string() +
                                    " does not exceed k");
            }
        }
        out.chain.push_back(
            "k=" + k.to_string() + ": " + std::to_string(step.rows.size()) + "x" +
            std::to_string(step.cols.size()) +
            " submatrix triangular modulo larger variables; vanishing minors force "
            "x_k^" + std::to_string(cert.bound) + " = 0, hence x_" + k.to_string() +
            " = 0");
    }

    out.ok = true;
    summary << "verified: rank below " << cert.bound << " forces all "
            << vars.size() << " variables to vanish (m=" << m << ", d=" << d << ")";
    out.summary = summary.str();
    return out;
}

}  // namespace ivhs
