#include <catch2/catch_amalgamated.hpp>

#include "ivhs/probe.hpp"

using namespace ivhs;

TEST_CASE("single-row matrix probes at rank one", "[probe]") {
    RankProbeReport rep = random_rank_probe(2, 4, 200, kDefaultProbePrime, 1);
    REQUIRE(rep.max_rank == 1);
    long long total = 0;
    for (const auto& [rank, n] : rep.rank_histogram) {
        REQUIRE(rank == 1);  // nonzero assignments of a 1-row matrix
        total += n;
    }
    REQUIRE(total == 200);
}

TEST_CASE("generic rank at (2,5) reaches the full row count", "[probe]") {
    RankProbeReport rep = random_rank_probe(2, 5, 300, kDefaultProbePrime, 7);
    REQUIRE(rep.max_rank == 4);
    REQUIRE(rep.critical == 2);
}

TEST_CASE("same seed, same report; different seed, same maximum", "[probe]") {
    RankProbeReport a = random_rank_probe(2, 5, 100, kDefaultProbePrime, 42);
    RankProbeReport b = random_rank_probe(2, 5, 100, kDefaultProbePrime, 42);
    REQUIRE(a.rank_histogram == b.rank_histogram);
    REQUIRE(a.witnesses.size() == b.witnesses.size());
    for (const auto& [rank, tw] : a.witnesses) {
        REQUIRE(b.witnesses.count(rank) == 1);
        REQUIRE(b.witnesses.at(rank).first == tw.first);
        REQUIRE(b.witnesses.at(rank).second == tw.second);
    }
    RankProbeReport c = random_rank_probe(2, 5, 100, kDefaultProbePrime, 43);
    REQUIRE(c.max_rank == a.max_rank);
}

TEST_CASE("thread count does not change the report", "[probe]") {
    RankProbeReport a = random_rank_probe(2, 5, 128, kDefaultProbePrime, 5, 1);
    RankProbeReport b = random_rank_probe(2, 5, 128, kDefaultProbePrime, 5, 4);
    REQUIRE(a.rank_histogram == b.rank_histogram);
    for (const auto& [rank, tw] : a.witnesses)
        REQUIRE(b.witnesses.at(rank).first == tw.first);
}

TEST_CASE("recorded witnesses reproduce their rank", "[probe]") {
    RankProbeReport rep = random_rank_probe(4, 3, 100, kDefaultProbePrime, 3);
    const PrimeField F(kDefaultProbePrime);
    IvhsMatrix M = build_M(4, 3);
    for (const auto& [rank, tw] : rep.witnesses)
        REQUIRE(rank_mod_p(M, tw.second, F) == rank);
}

TEST_CASE("prime must clear the coefficient range", "[probe]") {
    REQUIRE_THROWS_AS(random_rank_probe(2, 5, 10, 37, 0), std::invalid_argument);
    REQUIRE_NOTHROW(random_rank_probe(2, 5, 10, 101, 0));
}

TEST_CASE("the rank floor holds across probes at several parameter pairs", "[probe]") {
    // a violation would throw SoundnessViolation from inside the probe
    for (auto [m, d] : std::vector<std::pair<int, int>>{{2, 4}, {2, 5}, {4, 3}, {2, 6}})
        REQUIRE_NOTHROW(random_rank_probe(m, d, 500, kDefaultProbePrime, 11, 2));
}
