#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "pap/io.hpp"
#include "pap/verify.hpp"

using namespace pap;

namespace {

const SubCheck* find_subcheck(const VerificationReport& r, std::string_view name) {
    for (const SubCheck& sc : r.subchecks) {
        if (sc.name == name) return &sc;
    }
    return nullptr;
}

}  // namespace

TEST_CASE("lemma1 scans exactly the canonical non-alternating permutations") {
    const auto r4 = verify_lemma1(4);
    CHECK(r4.pass);
    CHECK(r4.scanned == 4);  // 6 canonical permutations of S_4, 2 alternating
    CHECK(r4.total_counterexamples == 0);
    CHECK(r4.subchecks.size() == 4);
    for (const SubCheck& sc : r4.subchecks) {
        CHECK(sc.scanned == 4);
        CHECK(sc.failures == 0);
    }
    CHECK_FALSE(r4.note.empty());

    const auto r6 = verify_lemma1(6);
    CHECK(r6.pass);
    CHECK(r6.scanned == 108);

    CHECK_THROWS_AS(verify_lemma1(5), std::domain_error);
    CHECK_THROWS_AS(verify_lemma1(2), std::out_of_range);
}

TEST_CASE("lemma2 scans only inputs with an even first entry") {
    const auto r4 = verify_lemma2(4);
    CHECK(r4.pass);
    CHECK(r4.scanned == 2);

    const auto r6 = verify_lemma2(6);
    CHECK(r6.pass);
    CHECK(r6.scanned == 48);

    CHECK_THROWS_AS(verify_lemma2(7), std::domain_error);
}

TEST_CASE("theorem3 balance and signed-split") {
    for (int n = 1; n <= 8; ++n) {
        const auto r = verify_theorem3(n);
        CHECK(r.pass);
        CHECK(r.scanned == static_cast<std::uint64_t>(n));
        const SubCheck* balance = find_subcheck(r, "npap_even_equals_npap_odd");
        REQUIRE(balance != nullptr);
        CHECK(balance->scanned == static_cast<std::uint64_t>(n));
        const SubCheck* types = find_subcheck(r, "position_type_bijections");
        if (n % 2 == 0) {
            REQUIRE(types != nullptr);
            CHECK(types->scanned == static_cast<std::uint64_t>(3 * n));
            CHECK(types->failures == 0);
        } else {
            CHECK(types == nullptr);
        }
    }
    CHECK_THROWS_AS(verify_theorem3(11), std::out_of_range);
}

TEST_CASE("theorem4 recurrences") {
    for (int n = 2; n <= 8; n += 2) {
        const auto r = verify_theorem4(n);
        CHECK(r.pass);
        CHECK(r.scanned == static_cast<std::uint64_t>(n - 1));
    }
    CHECK_THROWS_AS(verify_theorem4(5), std::domain_error);
    CHECK_THROWS_AS(verify_theorem4(12), std::out_of_range);
}

TEST_CASE("theorem5 single instances") {
    const auto r = verify_theorem5(8, 2, 3, 2);
    CHECK(r.pass);
    CHECK(r.scanned == 1);
    CHECK(verify_theorem5(8, 2, 1, 4).pass);
    CHECK(verify_theorem5(6, 3, 1, 3).pass);

    CHECK_THROWS_AS(verify_theorem5(8, 2, 3, 3), std::domain_error);  // p does not divide k
    CHECK_THROWS_AS(verify_theorem5(6, 2, 2, 2), std::domain_error);  // p^m does not divide n
    CHECK_THROWS_AS(verify_theorem5(8, 4, 1, 4), std::domain_error);  // p not prime
    CHECK_THROWS_AS(verify_theorem5(7, 7, 1, 7), std::domain_error);  // odd n
}

TEST_CASE("theorem5 campaign") {
    const auto r = verify_theorem5_campaign(4);
    CHECK(r.pass);
    CHECK(r.scanned == 2);  // (4,2,1,2) and (4,2,2,2)
    const SubCheck* pside = find_subcheck(r, "pap_count_divisible");
    REQUIRE(pside != nullptr);
    CHECK(pside->scanned == 2);
    const SubCheck* alpha = find_subcheck(r, "alpha_vanishing_when_gcd_exceeds_one");
    REQUIRE(alpha != nullptr);
    CHECK(alpha->scanned == 4);  // k=2 with d in {1,2}, both sides
    CHECK(alpha->failures == 0);

    const auto r8 = verify_theorem5_campaign(8);
    CHECK(r8.pass);
    CHECK(r8.scanned == 2 + 3 + 9);  // tuples for n = 4, 6, 8

    const auto vac = verify_theorem5_campaign(2);
    CHECK(vac.pass);
    CHECK(vac.vacuous);
}

TEST_CASE("theorem6 period factorization") {
    const auto r4 = verify_theorem6(4);
    CHECK(r4.pass);
    CHECK(r4.scanned == 2);  // canonical alternating permutations of S_4: 1234, 3214
    const SubCheck* relation = find_subcheck(r4, "sigma_period_relation_when_ends_increasing");
    REQUIRE(relation != nullptr);
    CHECK(relation->scanned == 12);  // permutations of S_4 with a_1 < a_4

    const auto r6 = verify_theorem6(6);
    CHECK(r6.pass);
    CHECK(r6.scanned == 12);  // canonical alternating members = 3! * 2!

    CHECK_THROWS_AS(verify_theorem6(3), std::domain_error);
    CHECK_THROWS_AS(verify_theorem6(10), std::out_of_range);
}

TEST_CASE("eq8 census identities") {
    const auto r4 = verify_eq8(4);
    CHECK(r4.pass);
    CHECK(r4.scanned == 3);
    const SubCheck* per_orbit = find_subcheck(r4, "each_orbit_has_exactly_d_canonical_members");
    REQUIRE(per_orbit != nullptr);
    CHECK(per_orbit->scanned == 3);  // P-side orbits at k=1,3; N-side orbit at k=2
    const SubCheck* eq9 = find_subcheck(r4, "ends_increasing_pap_count_is_n_minus_k_times_previous");
    REQUIRE(eq9 != nullptr);
    CHECK(eq9->scanned == 4);
    CHECK(eq9->failures == 0);

    CHECK(verify_eq8(6).pass);
    CHECK_THROWS_AS(verify_eq8(7), std::domain_error);
}

TEST_CASE("subgroup closure") {
    const auto r4 = verify_subgroup(4);
    CHECK(r4.pass);
    const SubCheck* comp = find_subcheck(r4, "closed_under_composition");
    REQUIRE(comp != nullptr);
    CHECK(comp->scanned == 64);  // 8 members, all pairs
    const SubCheck* inv = find_subcheck(r4, "closed_under_inverse");
    REQUIRE(inv != nullptr);
    CHECK(inv->scanned == 8);

    const auto r7 = verify_subgroup(7);
    CHECK(r7.pass);
    const SubCheck* comp7 = find_subcheck(r7, "closed_under_composition");
    REQUIRE(comp7 != nullptr);
    CHECK(comp7->scanned == 100000);

    CHECK_THROWS_AS(verify_subgroup(9), std::out_of_range);
}

TEST_CASE("subgroup reports are reproducible") {
    const auto a = verify_subgroup(7);
    const auto b = verify_subgroup(7);
    CHECK(a.scanned == b.scanned);
    CHECK(a.pass == b.pass);
    CHECK(a.total_counterexamples == b.total_counterexamples);
}

TEST_CASE("campaign dispatch") {
    const auto all = run_campaign("all", 4);
    CHECK_FALSE(all.empty());
    CHECK(std::all_of(all.begin(), all.end(), [](const auto& r) { return r.pass; }));

    // deterministic report order: grouped by check name in catalog order
    std::vector<std::string> names;
    for (const auto& r : all) {
        if (names.empty() || names.back() != r.name) names.push_back(r.name);
    }
    CHECK(names == std::vector<std::string>{"lemma1", "lemma2", "theorem3", "theorem4", "theorem5",
                                            "theorem6", "eq8", "subgroup"});

    const auto single = run_campaign("theorem3", 5);
    CHECK(single.size() == 5);
    CHECK(single.front().params.at("n") == 1);
    CHECK(single.back().params.at("n") == 5);

    CHECK_THROWS_AS(run_campaign("nosuch", 6), std::invalid_argument);
    CHECK_THROWS_AS(run_campaign("all", 0), std::out_of_range);
}

TEST_CASE("report JSON schema") {
    const auto r = verify_theorem3(4);
    const auto j = to_json(r);
    CHECK(j.at("name") == "theorem3");
    CHECK(j.at("params").at("n") == 4);
    CHECK(j.at("pass") == true);
    CHECK(j.at("vacuous") == false);
    CHECK(j.at("scanned") == 4);
    CHECK(j.at("counterexamples").is_array());
    CHECK(j.at("subchecks").is_array());
    CHECK(j.at("millis").is_number());
}

TEST_CASE("failure reporting machinery") {
    VerificationReport r;
    r.name = "synthetic";
    for (int i = 0; i < 30; ++i) {
        r.fail("clause", "item" + std::to_string(i), "observed", "expected");
    }
    CHECK_FALSE(r.pass);
    CHECK(r.total_counterexamples == 30);
    CHECK(r.counterexamples.size() == VerificationReport::kCounterexampleCap);
}
