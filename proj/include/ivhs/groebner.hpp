#pragma once

// Capped Buchberger engine over the rationals in graded-lex order, plus the
// zero-dimensionality test built on it.  For homogeneous ideals the test is
// one-sided under caps: any basis element whose leading term is a pure power
// is a genuine element of the ideal, so covering every variable certifies
// that the zero set is the origin alone even when the run was truncated;
// deciding the converse requires an uncapped, completed basis.

#include <chrono>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "ivhs/detideal.hpp"
#include "ivhs/fields.hpp"
#include "ivhs/poly.hpp"

namespace ivhs {

struct GroebnerCaps {
    int degree_cap = -1;           // -1: uncapped
    double time_cap_seconds = -1;  // -1: uncapped
};

inline GroebnerCaps default_zero_dim_caps(int s) {
    return GroebnerCaps{2 * (s + 1), 60.0};
}

struct GroebnerRun {
    std::vector<SparsePoly> basis;  // monic
    bool complete = false;          // pair queue exhausted without any cap firing
    bool stopped_on_coverage = false;
    std::string cap_fired;
    std::vector<bool> covered;  // per variable: some LT is a pure power of it
    long long pairs_processed = 0;
    long long reductions_to_zero = 0;

    bool all_covered() const {
        for (bool c : covered)
            if (!c) return false;
        return !covered.empty();
    }
};

/// Full normal form: every term of p is reduced against the basis, first
/// matching reducer wins; deterministic and idempotent.
inline SparsePoly normal_form(SparsePoly p, const std::vector<SparsePoly>& basis) {
    SparsePoly remainder(p.nvars());
    while (!p.is_zero()) {
        const Monomial& lm = p.leading_monomial();
        const mpq_class lc = p.leading_coefficient();
        bool reduced = false;
        for (const SparsePoly& g : basis) {
            if (g.is_zero() || !g.leading_monomial().divides(lm)) continue;
            Monomial q = lm.divide(g.leading_monomial());
            mpq_class f = -lc / g.leading_coefficient();
            g.add_scaled_into(p, q, f);  // cancels the leading term of p
            reduced = true;
            break;
        }
        if (!reduced) {
            remainder.add_term(lm, lc);
            p.add_term(lm, -lc);
        }
    }
    return remainder;
}

inline SparsePoly s_polynomial(const SparsePoly& f, const SparsePoly& g) {
    Monomial lcm = f.leading_monomial().lcm(g.leading_monomial());
    SparsePoly s(f.nvars());
    f.add_scaled_into(s, lcm.divide(f.leading_monomial()), 1 / f.leading_coefficient());
    g.add_scaled_into(s, lcm.divide(g.leading_monomial()), -1 / g.leading_coefficient());
    return s;
}

inline GroebnerRun buchberger(std::vector<SparsePoly> gens, const GroebnerCaps& caps,
                              bool stop_when_covered = false) {
    using Clock = std::chrono::steady_clock;
    const auto t0 = Clock::now();
    auto expired = [&] {
        return caps.time_cap_seconds >= 0 &&
               std::chrono::duration<double>(Clock::now() - t0).count() > caps.time_cap_seconds;
    };

    GroebnerRun run;
    std::size_t nvars = gens.empty() ? 0 : gens[0].nvars();
    run.covered.assign(nvars, false);

    // canonical, deduplicated, monic starting basis
    std::set<SparsePoly> uniq;
    for (auto& g : gens)
        if (!g.is_zero()) uniq.insert(g.monic());
    std::vector<SparsePoly> basis;
    for (const auto& g : uniq) {
        SparsePoly h = normal_form(g, basis);
        if (!h.is_zero()) basis.push_back(h.monic());
    }

    auto note_coverage = [&](const SparsePoly& g) {
        if (auto v = g.leading_monomial().pure_power_variable()) run.covered[*v] = true;
    };
    for (const auto& g : basis) note_coverage(g);
    if (stop_when_covered && run.all_covered()) {
        run.basis = std::move(basis);
        run.stopped_on_coverage = true;
        return run;
    }

    // pair queue ordered by (lcm degree, i, j); "pending" mirrors membership
    std::set<std::tuple<int, std::size_t, std::size_t>> queue;
    std::set<std::pair<std::size_t, std::size_t>> pending;
    auto push_pair = [&](std::size_t i, std::size_t j) {
        Monomial lcm = basis[i].leading_monomial().lcm(basis[j].leading_monomial());
        queue.insert({lcm.degree(), i, j});
        pending.insert({i, j});
    };
    for (std::size_t j = 1; j < basis.size(); ++j)
        for (std::size_t i = 0; i < j; ++i) push_pair(i, j);

    while (!queue.empty()) {
        if (expired()) {
            run.cap_fired = "time cap (" + std::to_string(caps.time_cap_seconds) + " s)";
            run.basis = std::move(basis);
            return run;
        }
        auto [deg, i, j] = *queue.begin();
        if (caps.degree_cap >= 0 && deg > caps.degree_cap) {
            run.cap_fired = "degree cap (" + std::to_string(caps.degree_cap) + ")";
            run.basis = std::move(basis);
            return run;
        }
        queue.erase(queue.begin());
        pending.erase({i, j});
        ++run.pairs_processed;

        const Monomial& li = basis[i].leading_monomial();
        const Monomial& lj = basis[j].leading_monomial();
        if (li.coprime(lj)) continue;  // first criterion
        // second (chain) criterion
        Monomial lcm = li.lcm(lj);
        bool chained = false;
        for (std::size_t k = 0; k < basis.size() && !chained; ++k) {
            if (k == i || k == j) continue;
            if (!basis[k].leading_monomial().divides(lcm)) continue;
            auto p1 = std::minmax(i, k);
            auto p2 = std::minmax(j, k);
            if (!pending.count({p1.first, p1.second}) && !pending.count({p2.first, p2.second}))
                chained = true;
        }
        if (chained) continue;

        SparsePoly h = normal_form(s_polynomial(basis[i], basis[j]), basis);
        if (h.is_zero()) {
            ++run.reductions_to_zero;
            continue;
        }
        h = h.monic();
        note_coverage(h);
        basis.push_back(std::move(h));
        const std::size_t newest = basis.size() - 1;
        for (std::size_t e = 0; e < newest; ++e) push_pair(e, newest);
        if (stop_when_covered && run.all_covered()) {
            run.basis = std::move(basis);
            run.stopped_on_coverage = true;
            return run;
        }
    }
    run.complete = true;
    run.basis = std::move(basis);
    return run;
}

enum class ZeroDimStatus { ZeroAtOriginOnly, NontrivialZeroFound, Inconclusive };

inline std::string zero_dim_status_name(ZeroDimStatus s) {
    switch (s) {
        case ZeroDimStatus::ZeroAtOriginOnly: return "ZeroAtOriginOnly";
        case ZeroDimStatus::NontrivialZeroFound: return "NontrivialZeroFound";
        case ZeroDimStatus::Inconclusive: return "Inconclusive";
    }
    return "?";
}

struct ZeroDimVerdict {
    ZeroDimStatus status = ZeroDimStatus::Inconclusive;
    std::vector<mpq_class> witness;  // nonzero checked assignment, when found
    std::string report;
    bool basis_complete = false;
    long long basis_size = 0;
};

/// Checks an exact assignment against every generator.
inline bool annihilates_all(const std::vector<SparsePoly>& gens,
                            const std::vector<mpq_class>& x) {
    RationalField Q;
    for (const auto& g : gens)
        if (g.evaluate(Q, x) != 0) return false;
    return true;
}

inline ZeroDimVerdict groebner_zero_dim_test(const IdealSpec& spec,
                                             const GroebnerCaps& caps) {
    for (const auto& g : spec.generators) {
        if (!g.poly.is_homogeneous())
            throw std::invalid_argument("zero-dimensionality test requires homogeneous generators");
        if (!g.poly.is_zero() && g.poly.degree() == 0)
            throw std::invalid_argument("generators must have positive degree");
    }
    const std::size_t nvars = spec.vars.size();
    std::vector<SparsePoly> gens;
    gens.reserve(spec.generators.size());
    for (const auto& g : spec.generators)
        if (!g.poly.is_zero()) gens.push_back(g.poly);

    ZeroDimVerdict verdict;
    if (gens.empty()) {
        verdict.status = ZeroDimStatus::NontrivialZeroFound;
        verdict.witness.assign(nvars, 0);
        verdict.witness[0] = 1;
        verdict.report = "zero ideal: every assignment vanishes on it";
        return verdict;
    }

    GroebnerRun run = buchberger(gens, caps, /*stop_when_covered=*/true);
    verdict.basis_complete = run.complete;
    verdict.basis_size = static_cast<long long>(run.basis.size());
    if (run.all_covered()) {
        verdict.status = ZeroDimStatus::ZeroAtOriginOnly;
        verdict.report = "pure-power leading terms found for all " +
                         std::to_string(nvars) + " variables" +
                         (run.complete ? " (basis complete)" : " (early stop)");
        return verdict;
    }
    if (!run.complete) {
        verdict.status = ZeroDimStatus::Inconclusive;
        verdict.report = "cap fired before coverage: " + run.cap_fired;
        return verdict;
    }

    // Complete basis without coverage: the zero set is positive-dimensional
    // over the complex numbers.  A verdict still needs an exact witness;
    // coordinate axes are the cheap candidates.
    std::ostringstream missing;
    for (std::size_t v = 0; v < nvars; ++v)
        if (!run.covered[v]) missing << " x" << spec.vars[v].to_string();
    for (std::size_t v = 0; v < nvars; ++v) {
        std::vector<mpq_class> x(nvars, 0);
        x[v] = 1;
        if (annihilates_all(gens, x)) {
            verdict.status = ZeroDimStatus::NontrivialZeroFound;
            verdict.witness = std::move(x);
            verdict.report = "coordinate axis x" + spec.vars[v].to_string() +
                             " lies in the zero set (basis complete, no pure power for" +
                             missing.str() + ")";
            return verdict;
        }
    }
    verdict.status = ZeroDimStatus::Inconclusive;
    verdict.report =
        "basis complete and variables without pure-power leading terms remain (" +
        missing.str() +
        " ): the zero set is positive-dimensional over the complex numbers, but no "
        "rational witness was found on the coordinate axes";
    return verdict;
}

}  // namespace ivhs
