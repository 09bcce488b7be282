#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "ivhs/probe.hpp"
#include "ivhs/witness.hpp"

using namespace ivhs;

TEST_CASE("Jacobian reduction drops monomials with an exponent >= d-1", "[witness]") {
    // at d = 5 with cofactor X_0^3 X_1: the X_0-branch reaches exponent 4 and
    // dies, the X_1-branch survives as -zeta X_0^3 X_1^2
    {
        CyclotomicField F(10);
        const IndexSet& cols = cached_index_set(2, 5, 5);
        auto v = cycle_generator_vector(5, 0, MultiIndex{3, 1, 0, 0}, F, cols);
        for (std::size_t c = 0; c < cols.size(); ++c) {
            if (cols[c] == MultiIndex{3, 2, 0, 0}) {
                REQUIRE(F.eq(v[c], F.neg(F.omega())));  // -zeta survives
            } else {
                REQUIRE(F.is_zero(v[c]));  // X_0^4 X_1 is gone
            }
        }
    }

    // at d = 4 the cofactor X_0^3 dies entirely: X_0^4 and X_0^3 X_1 both
    // carry an exponent >= d-1 = 3
    {
        CyclotomicField F(8);
        const IndexSet& cols = cached_index_set(2, 4, 4);
        auto v = cycle_generator_vector(4, 0, MultiIndex{3, 0, 0, 0}, F, cols);
        for (const auto& c : v) REQUIRE(F.is_zero(c));
    }

    // degree precondition
    CyclotomicField F(10);
    REQUIRE_THROWS_AS(
        cycle_generator_vector(5, 0, MultiIndex{3, 0, 0, 0}, F, cached_index_set(2, 5, 5)),
        std::invalid_argument);
}

TEST_CASE("tangent vectors are independent and bounded by the column count", "[witness]") {
    for (auto [m, d] : std::vector<std::pair<int, int>>{{2, 4}, {2, 5}, {4, 3}}) {
        TangentBasis tb = cycle_tangent_space(m, d);
        REQUIRE(tb.basis.size() <= tb.cols.size());
        REQUIRE(tb.basis.size() > 0);
        // re-run the elimination over the recorded subset: full rank expected
        Matrix<CyclotomicField> mat;
        for (const TangentVector& tv : tb.basis) mat.push_back(tv.coords);
        REQUIRE(field_rank(tb.field, mat) == tb.basis.size());
    }
}

TEST_CASE("witness ranks equal the critical rank at the worked pairs", "[witness]") {
    for (auto [m, d] : std::vector<std::pair<int, int>>{{2, 4}, {2, 5}, {4, 3}}) {
        WitnessVector w = solve_witness(m, d);
        REQUIRE(w.annihilation_checked);
        REQUIRE(w.rank == static_cast<std::size_t>(critical_rank(m, d)));
        bool nonzero = false;
        for (const auto& e : w.assignment) nonzero |= !w.field.is_zero(e);
        REQUIRE(nonzero);
    }
}

TEST_CASE("scaling a witness never changes the rank", "[witness]") {
    WitnessVector w = solve_witness(2, 5);
    const CyclotomicField& F = w.field;
    WitnessVector scaled = w;
    auto lambda = F.add(F.omega(), F.from_mpq(mpq_class(3, 2)));
    for (auto& e : scaled.assignment) e = F.mul(e, lambda);
    REQUIRE(witness_rank(scaled) == w.rank);
}

TEST_CASE("Galois conjugates are witnesses of the same rank", "[witness]") {
    WitnessVector w = solve_witness(2, 5);
    for (int u : {3, 7, 9}) {
        WitnessVector conj = galois_witness(w, u);
        REQUIRE(conj.rank == w.rank);
        // the conjugate annihilates the conjugated tangent space
        TangentBasis tb = cycle_tangent_space(2, 5);
        for (TangentVector& tv : tb.basis)
            for (auto& c : tv.coords) c = w.field.galois(c, u);
        REQUIRE(witness_annihilates(2, 5, w.field, tb, conj.assignment));
    }
}

TEST_CASE("random nonzero assignments never fall below the certified floor", "[witness]") {
    // the exact-rank companion of the prime-field probe
    const int m = 2, d = 5;
    IvhsMatrix M = build_M(m, d);
    const std::size_t nvars = cached_index_set(m, d, variable_degree(m, d)).size();
    std::mt19937_64 rng(79);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<mpq_class> x(nvars);
        bool nonzero = false;
        for (auto& v : x) {
            long val = long(rng() % 21) - 10;
            v = val;
            nonzero |= val != 0;
        }
        if (!nonzero) x[0] = 1;
        REQUIRE(rank_rational(M, x) >= static_cast<std::size_t>(critical_rank(m, d)));
    }
}

TEST_CASE("the witness solution space is one-dimensional at the worked pairs", "[witness]") {
    for (auto [m, d] : std::vector<std::pair<int, int>>{{2, 4}, {2, 5}, {4, 3}}) {
        WitnessVector w = solve_witness(m, d);
        REQUIRE(w.solution_space_dim == 1);
    }
}
