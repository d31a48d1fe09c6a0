#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <span>
#include <vector>

#include "pap/enumeration.hpp"
#include "pap/permutation.hpp"

using namespace pap;

namespace {

// Test-side oracle, kept independent of the library scan paths: statistics
// straight from the definitions on a plain vector.
int naive_ascents(const std::vector<int>& a) {
    int c = 0;
    for (std::size_t i = 0; i + 1 < a.size(); ++i) c += a[i] < a[i + 1];
    return c;
}

int naive_inversions(const std::vector<int>& a) {
    int c = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j) c += a[i] > a[j];
    return c;
}

bool naive_alternating(const std::vector<int>& a) {
    for (std::size_t i = 0; i + 1 < a.size(); ++i)
        if (a[i] % 2 == a[i + 1] % 2) return false;
    return true;
}

std::vector<int> random_perm(int n, std::mt19937_64& rng) {
    std::vector<int> a(static_cast<std::size_t>(n));
    std::iota(a.begin(), a.end(), 1);
    for (std::size_t i = a.size(); i > 1; --i) {
        std::swap(a[i - 1], a[static_cast<std::size_t>(rng() % i)]);
    }
    return a;
}

}  // namespace

TEST_CASE("construction validates the bijection") {
    CHECK_NOTHROW(Permutation({1}));
    CHECK_NOTHROW(Permutation({2, 1, 3}));
    CHECK_THROWS_AS(Permutation({}), std::invalid_argument);
    CHECK_THROWS_AS(Permutation({2, 2, 3}), std::invalid_argument);
    CHECK_THROWS_AS(Permutation({0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(Permutation({1, 5, 3}), std::invalid_argument);
    CHECK_THROWS_WITH(Permutation({2, 2, 3}), doctest::Contains("appears twice"));
    CHECK_THROWS_WITH(Permutation({2, 2, 3}), doctest::Contains("1 is missing"));

    std::vector<int> too_big(21);
    std::iota(too_big.begin(), too_big.end(), 1);
    CHECK_THROWS_AS(Permutation{too_big}, std::invalid_argument);

    std::vector<int> max_ok(20);
    std::iota(max_ok.begin(), max_ok.end(), 1);
    CHECK_NOTHROW(Permutation{max_ok});
}

TEST_CASE("parse accepts digits and space-separated forms") {
    CHECK(Permutation::parse("45316278").entries() == std::vector<int>{4, 5, 3, 1, 6, 2, 7, 8});
    CHECK(Permutation::parse("4 5 3 1 6 2 7 8") == Permutation::parse("45316278"));
    CHECK(Permutation::parse("10 3 1 2 4 5 6 7 8 9").size() == 10);
    CHECK(Permutation::parse("1").size() == 1);

    CHECK_THROWS_AS(Permutation::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(Permutation::parse("12x"), std::invalid_argument);
    CHECK_THROWS_AS(Permutation::parse("1 2 x"), std::invalid_argument);
    CHECK_THROWS_AS(Permutation::parse("122"), std::invalid_argument);   // duplicate
    CHECK_THROWS_AS(Permutation::parse("130"), std::invalid_argument);   // 0 out of range
}

TEST_CASE("str round trip") {
    CHECK(Permutation::parse("45316278").str() == "45316278");
    const Permutation big = Permutation::parse("10 9 8 7 6 5 4 3 2 1");
    CHECK(big.str() == "10 9 8 7 6 5 4 3 2 1");
    CHECK(Permutation::parse(big.str()) == big);
}

TEST_CASE("ascent count") {
    CHECK(ascent_count(Permutation::parse("1234")) == 3);
    CHECK(ascent_count(Permutation::parse("4321")) == 0);
    CHECK(ascent_count(Permutation::parse("1432")) == 1);
    CHECK(ascent_count(Permutation::parse("1")) == 0);
}

TEST_CASE("inversion count and parity") {
    CHECK(inversion_count(Permutation::parse("1234")) == 0);
    CHECK(inversion_count(Permutation::parse("4321")) == 6);
    CHECK(inversion_count(Permutation::parse("2134")) == 1);
    CHECK(parity(Permutation::parse("1234")) == Parity::even);
    CHECK(parity(Permutation::parse("2134")) == Parity::odd);
    CHECK(parity(Permutation::parse("4321")) == Parity::even);
}

TEST_CASE("parity alternation predicate") {
    CHECK(is_pap(Permutation::parse("72581634")));
    CHECK(is_pap(Permutation::parse("1476523")));
    CHECK_FALSE(is_pap(Permutation::parse("2517634")));
    CHECK(is_pap(Permutation::parse("1")));
}

TEST_CASE("canonical predicate") {
    CHECK(is_canonical(Permutation::parse("1436527")));
    CHECK_FALSE(is_canonical(Permutation::parse("4321")));
    CHECK(is_canonical(Permutation::parse("1")));
}

TEST_CASE("block decomposition of 45316278") {
    const Permutation p = Permutation::parse("45316278");
    const PapDecomposition d = decompose_pap(p);
    CHECK_FALSE(d.whole);
    CHECK(d.a_len() == 2);
    CHECK(d.b_len() == 3);
    CHECK(d.c_len() == 3);
    const auto& e = p.entries();
    CHECK(std::vector<int>(e.begin(), e.begin() + d.a_end) == std::vector<int>{4, 5});
    CHECK(std::vector<int>(e.begin() + d.a_end, e.begin() + d.c_begin) == std::vector<int>{3, 1, 6});
    CHECK(std::vector<int>(e.begin() + d.c_begin, e.end()) == std::vector<int>{2, 7, 8});
}

TEST_CASE("block decomposition degenerate and two-block cases") {
    const PapDecomposition whole = decompose_pap(Permutation::parse("1234"));
    CHECK(whole.whole);
    CHECK(whole.a_len() == 4);
    CHECK(whole.b_len() == 0);
    CHECK(whole.c_len() == 4);

    const PapDecomposition d = decompose_pap(Permutation::parse("2134"));
    CHECK_FALSE(d.whole);
    CHECK(d.a_len() == 2);
    CHECK(d.b_len() == 0);
    CHECK(d.c_len() == 2);
}

TEST_CASE("decomposition blocks are maximal and cover the permutation") {
    for (int n = 1; n <= 7; ++n) {
        for_each_permutation(n, [&](std::span<const int> a) {
            const PapDecomposition d = decompose_pap(a);
            if (d.whole) {
                CHECK(is_pap(a));
                return;
            }
            REQUIRE(0 < d.a_end);
            REQUIRE(d.a_end <= d.c_begin);
            REQUIRE(d.c_begin < d.n);
            CHECK(d.a_len() + d.b_len() + d.c_len() == n);
            // A and C alternate.
            CHECK(is_pap(a.subspan(0, static_cast<std::size_t>(d.a_end))));
            CHECK(is_pap(a.subspan(static_cast<std::size_t>(d.c_begin))));
            // A cannot extend one step right, C cannot extend one step left.
            CHECK_FALSE(is_pap(a.subspan(0, static_cast<std::size_t>(d.a_end) + 1)));
            CHECK_FALSE(is_pap(a.subspan(static_cast<std::size_t>(d.c_begin) - 1)));
        });
    }
}

TEST_CASE("compose, inverse, reverse basics") {
    const Permutation p = Permutation::parse("2413");
    CHECK(compose(Permutation::identity(4), p) == p);
    CHECK(compose(p, inverse(p)) == Permutation::identity(4));
    CHECK(compose(Permutation::parse("21"), Permutation::parse("21")) == Permutation::parse("12"));
    CHECK_THROWS_AS(compose(Permutation::parse("12"), Permutation::parse("123")),
                    std::invalid_argument);

    CHECK(reverse(Permutation::parse("1234")) == Permutation::parse("4321"));
    CHECK(reverse(Permutation::parse("45316278")) == Permutation::parse("87261354"));
    CHECK(reverse(reverse(p)) == p);
}

TEST_CASE("parity flips under one adjacent transposition") {
    std::mt19937_64 rng(12345);
    for (int trial = 0; trial < 400; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 9);  // 2..10
        std::vector<int> a = random_perm(n, rng);
        const int before = naive_inversions(a);
        const auto i = static_cast<std::size_t>(rng() % static_cast<std::uint64_t>(n - 1));
        std::swap(a[i], a[i + 1]);
        const Parity swapped = parity(Permutation(a));
        CHECK(swapped == (before % 2 == 0 ? Parity::odd : Parity::even));
    }
}

TEST_CASE("library statistics agree with the direct-definition oracle") {
    std::mt19937_64 rng(777);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 12);
        const std::vector<int> a = random_perm(n, rng);
        const Permutation p(a);
        CHECK(ascent_count(p) == naive_ascents(a));
        CHECK(inversion_count(p) == naive_inversions(a));
        CHECK(is_pap(p) == naive_alternating(a));
    }
}

TEST_CASE("reversal complements ascent count and keeps alternation") {
    for (int n = 1; n <= 7; ++n) {
        for_each_permutation(n, [&](std::span<const int> a) {
            const Permutation p{std::vector<int>(a.begin(), a.end())};
            const Permutation r = reverse(p);
            CHECK(ascent_count(p) + ascent_count(r) == n - 1);
            CHECK(is_pap(p) == is_pap(r));
        });
    }
}

TEST_CASE("alternating permutations are closed under composition and inverse") {
    CHECK(is_pap(inverse(Permutation::parse("72581634"))));

    // exhaustive n <= 6
    for (int n = 2; n <= 6; ++n) {
        std::vector<Permutation> members;
        for_each_permutation(n, [&](std::span<const int> a) {
            if (is_pap(a)) members.push_back(Permutation{std::vector<int>(a.begin(), a.end())});
        });
        CHECK(members.size() == pap_count_closed_form(n));
        for (const Permutation& p : members) {
            CHECK(is_pap(inverse(p)));
            for (const Permutation& q : members) {
                CHECK(is_pap(compose(p, q)));
            }
        }
    }

    // sampled n = 7, 8
    std::mt19937_64 rng(424242);
    for (int n = 7; n <= 8; ++n) {
        std::vector<Permutation> members;
        for_each_permutation(n, [&](std::span<const int> a) {
            if (is_pap(a)) members.push_back(Permutation{std::vector<int>(a.begin(), a.end())});
        });
        for (int trial = 0; trial < 2000; ++trial) {
            const Permutation& p = members[static_cast<std::size_t>(rng() % members.size())];
            const Permutation& q = members[static_cast<std::size_t>(rng() % members.size())];
            CHECK(is_pap(compose(p, q)));
            CHECK(is_pap(inverse(p)));
        }
    }
}
