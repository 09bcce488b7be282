#include <catch2/catch_amalgamated.hpp>

#include "ivhs/smax.hpp"

using namespace ivhs;

namespace {

SearchBudget quick_budget() {
    SearchBudget b;
    b.time_cap_seconds = 10;
    b.probe_trials = 8;
    return b;
}

}  // namespace

TEST_CASE("search resolves the minors variant at (2,4) on both sides", "[search]") {
    SmaxSearchReport rep = smax_search(2, 4, IdealVariant::I0, quick_budget());
    REQUIRE(rep.certified_lower == 0);
    REQUIRE(rep.certified_upper.has_value());
    REQUIRE(*rep.certified_upper == 0);
    REQUIRE(rep.resolved());
    bool noted = false;
    for (const std::string& n : rep.notes)
        noted |= n.find("first-order correction matrices vanish") != std::string::npos;
    REQUIRE(noted);
}

TEST_CASE("search resolves the minors variant at (2,5) to the formula value", "[search]") {
    SmaxSearchReport rep = smax_search(2, 5, IdealVariant::I0, quick_budget());
    REQUIRE(rep.certified_lower == 1);
    REQUIRE(rep.certified_upper.has_value());
    REQUIRE(*rep.certified_upper == 1);
    REQUIRE(rep.resolved());
    REQUIRE_FALSE(rep.has_inconclusive());
}

TEST_CASE("search at (4,3) resolves immediately", "[search]") {
    SmaxSearchReport rep = smax_search(4, 3, IdealVariant::I1, quick_budget());
    REQUIRE(rep.resolved());
    REQUIRE(rep.certified_lower == 0);
}

TEST_CASE("the enlarged variant at (2,5) stays honestly unresolved", "[search]") {
    SmaxSearchReport rep = smax_search(2, 5, IdealVariant::I1, quick_budget());
    REQUIRE(rep.certified_lower == 1);       // from the certificate
    REQUIRE(rep.certified_upper.has_value());
    REQUIRE(*rep.certified_upper >= 1);
    REQUIRE_FALSE(rep.resolved());           // the gap mirrors the open question
    REQUIRE(rep.has_inconclusive());
    // evidence rows exist for every s visited, in order
    for (std::size_t i = 0; i < rep.statuses.size(); ++i)
        REQUIRE(rep.statuses[i].s == static_cast<long long>(i));
    // everything below the certificate bound is zero-certified
    for (const SStatus& st : rep.statuses)
        if (st.s <= rep.smax0) REQUIRE(st.verdict == SStatus::Verdict::ZeroCertified);
}

TEST_CASE("a larger instance stays within its budget and memory", "[search]") {
    // (2,6) has ~1.2e10 candidate generators at s=3; the scan must stream
    // them against the wall clock instead of materializing anything
    SearchBudget b;
    b.time_cap_seconds = 5;
    b.probe_trials = 4;
    SmaxSearchReport rep = smax_search(2, 6, IdealVariant::I1, b);
    REQUIRE(rep.certified_lower == 2);
    REQUIRE(rep.certified_upper.has_value());
    REQUIRE(*rep.certified_upper == 3);  // witness rank 3 < s kills everything at s = 4
    REQUIRE_FALSE(rep.resolved());
    REQUIRE(rep.has_inconclusive());
}

TEST_CASE("verdict monotonicity: no nonzero-zero below a zero-certified s", "[search]") {
    for (auto variant : {IdealVariant::I0, IdealVariant::I1}) {
        SmaxSearchReport rep = smax_search(2, 5, variant, quick_budget());
        long long last_zero = -1, first_nonzero = std::numeric_limits<long long>::max();
        for (const SStatus& st : rep.statuses) {
            if (st.verdict == SStatus::Verdict::ZeroCertified) last_zero = std::max(last_zero, st.s);
            if (st.verdict == SStatus::Verdict::NonzeroCertified)
                first_nonzero = std::min(first_nonzero, st.s);
        }
        REQUIRE(last_zero < first_nonzero);
        REQUIRE(rep.certified_lower == last_zero);
    }
}
