#pragma once

// Randomized rank probes of M over a prime field (or the rationals).  The
// maximum observed rank is a certified lower bound for the generic rank at
// the Fermat point, and every trial doubles as a soundness check against the
// elimination certificate: a nonzero assignment of rank below the critical
// rank would disprove it and aborts the run.

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "ivhs/certificate.hpp"
#include "ivhs/fields.hpp"
#include "ivhs/linalg.hpp"
#include "ivhs/matrices.hpp"

namespace ivhs {

inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

/// Deterministic per-trial assignment, independent of thread schedule.
inline std::vector<std::uint64_t> probe_assignment(std::uint64_t seed, long long trial,
                                                   std::size_t nvars, std::uint64_t p) {
    std::uint64_t state = seed ^ (0xD1B54A32D192ED03ull * static_cast<std::uint64_t>(trial + 1));
    std::vector<std::uint64_t> x(nvars);
    bool nonzero = false;
    for (auto& v : x) {
        v = splitmix64(state) % p;
        nonzero |= v != 0;
    }
    if (!nonzero) x[0] = 1;
    return x;
}

inline std::size_t rank_mod_p(const IvhsMatrix& M, const std::vector<std::uint64_t>& x,
                              const PrimeField& F) {
    const IndexSet& vars = cached_index_set(M.m(), M.d(), variable_degree(M.m(), M.d()));
    Matrix<PrimeField> num(M.row_count(),
                           std::vector<std::uint64_t>(M.col_count(), 0));
    for (std::size_t r = 0; r < M.row_count(); ++r) {
        for (std::size_t c = 0; c < M.col_count(); ++c) {
            const ScaledVar& e = M.entry(r, c);
            if (e.is_zero()) continue;
            std::uint64_t v = x[*vars.position(e.index.index())];
            std::uint64_t coeff = e.coefficient >= 0
                                      ? static_cast<std::uint64_t>(e.coefficient)
                                      : F.neg(static_cast<std::uint64_t>(-e.coefficient));
            num[r][c] = F.mul(coeff % F.modulus(), v);
        }
    }
    return field_rank(F, std::move(num));
}

struct SoundnessViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RankProbeReport {
    int m = 0, d = 0;
    long long trials = 0;
    std::string field;  // "Fp" or "Q"
    std::uint64_t prime = 0;
    std::uint64_t seed = 0;
    std::size_t max_rank = 0;
    std::map<std::size_t, long long> rank_histogram;
    // first trial attaining each rank, with its assignment
    std::map<std::size_t, std::pair<long long, std::vector<std::uint64_t>>> witnesses;
    long long critical = 0;  // certificate floor smax0 + 1
};

inline RankProbeReport random_rank_probe(int m, int d, long long trials,
                                         std::uint64_t prime, std::uint64_t seed,
                                         unsigned threads = 1,
                                         bool record_witnesses = true) {
    check_hypothesis(m, d);
    if (prime <= 2ull * d * (m + 2))
        throw std::invalid_argument("field prime must exceed 2*d*(m+2)");
    const PrimeField F(prime);
    const IvhsMatrix M = build_M(m, d);
    const std::size_t nvars = cached_index_set(m, d, variable_degree(m, d)).size();

    RankProbeReport rep;
    rep.m = m;
    rep.d = d;
    rep.trials = trials;
    rep.field = "Fp";
    rep.prime = prime;
    rep.seed = seed;
    rep.critical = critical_rank(m, d);

    struct Local {
        std::map<std::size_t, long long> hist;
        std::map<std::size_t, long long> first_trial;
        long long bad_trial = -1;
        std::size_t bad_rank = 0;
    };
    const unsigned nthreads = std::max(1u, threads);
    std::vector<Local> locals(nthreads);
    auto work = [&](unsigned tid) {
        Local& loc = locals[tid];
        for (long long t = tid; t < trials; t += nthreads) {
            auto x = probe_assignment(seed, t, nvars, prime);
            std::size_t rank = rank_mod_p(M, x, F);
            ++loc.hist[rank];
            if (!loc.first_trial.count(rank)) loc.first_trial[rank] = t;
            if (static_cast<long long>(rank) < rep.critical && loc.bad_trial < 0) {
                loc.bad_trial = t;
                loc.bad_rank = rank;
            }
        }
    };
    if (nthreads == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < nthreads; ++t) pool.emplace_back(work, t);
        for (auto& th : pool) th.join();
    }

    long long bad_trial = -1;
    std::size_t bad_rank = 0;
    std::map<std::size_t, long long> first_trial;
    for (const auto& loc : locals) {
        for (const auto& [rank, n] : loc.hist) rep.rank_histogram[rank] += n;
        for (const auto& [rank, t] : loc.first_trial) {
            auto it = first_trial.find(rank);
            if (it == first_trial.end() || t < it->second) first_trial[rank] = t;
        }
        if (loc.bad_trial >= 0 && (bad_trial < 0 || loc.bad_trial < bad_trial)) {
            bad_trial = loc.bad_trial;
            bad_rank = loc.bad_rank;
        }
    }
    if (bad_trial >= 0)
        throw SoundnessViolation(
            "FATAL: trial " + std::to_string(bad_trial) + " produced a nonzero assignment of rank " +
            std::to_string(bad_rank) + " below the certified floor " + std::to_string(rep.critical));
    for (const auto& [rank, n] : rep.rank_histogram) rep.max_rank = std::max(rep.max_rank, rank);
    if (record_witnesses)
        for (const auto& [rank, t] : first_trial)
            rep.witnesses[rank] = {t, probe_assignment(seed, t, nvars, prime)};
    return rep;
}

/// Exact rank of M at a rational assignment.
inline std::size_t rank_rational(const IvhsMatrix& M, const std::vector<mpq_class>& x) {
    const IndexSet& vars = cached_index_set(M.m(), M.d(), variable_degree(M.m(), M.d()));
    RationalField Q;
    Matrix<RationalField> num(M.row_count(), std::vector<mpq_class>(M.col_count(), 0));
    for (std::size_t r = 0; r < M.row_count(); ++r)
        for (std::size_t c = 0; c < M.col_count(); ++c) {
            const ScaledVar& e = M.entry(r, c);
            if (!e.is_zero())
                num[r][c] = mpq_class(e.coefficient) * x[*vars.position(e.index.index())];
        }
    return field_rank(Q, std::move(num));
}

}  // namespace ivhs
