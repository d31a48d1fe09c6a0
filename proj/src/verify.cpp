#include "pap/verify.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <numeric>
#include <random>
#include <stdexcept>

#include "pap/enumeration.hpp"
#include "pap/operators.hpp"

namespace pap {
namespace {

class Stopwatch {
public:
    double millis() const {
        const auto elapsed = std::chrono::steady_clock::now() - start_;
        return std::chrono::duration<double, std::milli>(elapsed).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void finalize(VerificationReport& report, const Stopwatch& sw) {
    report.vacuous = report.scanned == 0;
    report.pass = report.total_counterexamples == 0;
    report.millis = sw.millis();
}

void require_even(int n, const char* who) {
    if (n % 2 != 0) {
        throw std::domain_error(std::string(who) + " requires even n, got n = " + std::to_string(n));
    }
}

void require_between(int n, int lo, int hi, const char* who) {
    if (n < lo || n > hi) {
        throw std::out_of_range(std::string(who) + " supports " + std::to_string(lo) + " <= n <= " +
                                std::to_string(hi) + ", got n = " + std::to_string(n));
    }
}

std::string cell(int n, int k) {
    return "n=" + std::to_string(n) + " k=" + std::to_string(k);
}

void sub_fail(VerificationReport& report, SubCheck& sc, std::string item, std::string observed,
              std::string expected) {
    ++sc.failures;
    report.fail(sc.name, std::move(item), std::move(observed), std::move(expected));
}

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d) {
        if (p % d == 0) return false;
    }
    return true;
}

std::uint64_t pap_cell(const std::vector<ClassCounts>& counts, int k) {
    if (k < 0 || k >= static_cast<int>(counts.size())) return 0;
    return counts[static_cast<std::size_t>(k)].pap_total();
}

std::uint64_t npap_cell(const std::vector<ClassCounts>& counts, int k) {
    if (k < 0 || k >= static_cast<int>(counts.size())) return 0;
    return counts[static_cast<std::size_t>(k)].npap_total();
}

std::vector<int> divisors(int n) {
    std::vector<int> out;
    for (int d = 1; d <= n; ++d) {
        if (n % d == 0) out.push_back(d);
    }
    return out;
}

}  // namespace

void VerificationReport::fail(std::string clause, std::string item, std::string observed,
                              std::string expected) {
    pass = false;
    ++total_counterexamples;
    if (counterexamples.size() < kCounterexampleCap) {
        counterexamples.push_back(Counterexample{std::move(clause), std::move(item),
                                                 std::move(observed), std::move(expected)});
    }
}

VerificationReport verify_lemma1(int n) {
    require_even(n, "verify_lemma1");
    require_between(n, 4, 10, "verify_lemma1");
    Stopwatch sw;
    VerificationReport report;
    report.name = "lemma1";
    report.params = {{"n", n}};
    SubCheck run{"parity_constant_within_run"};
    SubCheck flip{"parity_flips_after_run"};
    SubCheck run_first{"run_first_entries_odd"};
    SubCheck flip_first{"first_entry_even_after_run"};

    for_each_canonical(n, [&](std::span<const int> a) {
        if (is_pap(a)) return;
        ++report.scanned;
        const std::string item = format_entries(a);
        const Parity base = parity(a);
        const int block = decompose_pap(a).c_len();

        Permutation q{std::vector<int>(a.begin(), a.end())};
        bool run_ok = true;
        bool run_first_ok = true;
        for (int t = 1; t <= block; ++t) {
            q = tau(q);
            if (t < block) {
                if (parity(q) != base) run_ok = false;
                if (q[0] % 2 == 0) run_first_ok = false;
            }
        }
        ++run.scanned;
        if (!run_ok) {
            sub_fail(report, run, item, "parity changed within the first " +
                     std::to_string(block - 1) + " steps", "parity of the start for every step");
        }
        ++flip.scanned;
        if (parity(q) == base) {
            sub_fail(report, flip, item, "parity unchanged after " + std::to_string(block) + " steps",
                     "opposite parity");
        }
        ++run_first.scanned;
        if (!run_first_ok) {
            sub_fail(report, run_first, item, "an even first entry within the run", "odd first entries");
        }
        ++flip_first.scanned;
        if (q[0] % 2 != 0) {
            sub_fail(report, flip_first, item, "first entry " + std::to_string(q[0]) + " after " +
                     std::to_string(block) + " steps", "an even first entry");
        }
    });

    report.subchecks = {run, flip, run_first, flip_first};
    report.note = "first-entry clauses scanned over every canonical non-PAP with no parity "
                  "restriction on the first entry of the input";
    finalize(report, sw);
    return report;
}

VerificationReport verify_lemma2(int n) {
    require_even(n, "verify_lemma2");
    require_between(n, 4, 10, "verify_lemma2");
    Stopwatch sw;
    VerificationReport report;
    report.name = "lemma2";
    report.params = {{"n", n}};
    SubCheck moved{"moved_block_is_first_maximal_block"};

    for_each_canonical(n, [&](std::span<const int> a) {
        if (is_pap(a) || a[0] % 2 != 0) return;
        ++report.scanned;
        const int block = decompose_pap(a).c_len();
        Permutation q{std::vector<int>(a.begin(), a.end())};
        for (int t = 0; t < block; ++t) q = tau(q);
        ++moved.scanned;
        const int first_block = decompose_pap(q).a_len();
        if (first_block != block) {
            sub_fail(report, moved, format_entries(a),
                     "first block of " + q.str() + " has length " + std::to_string(first_block),
                     "length " + std::to_string(block));
        }
    });

    report.subchecks = {moved};
    finalize(report, sw);
    return report;
}

VerificationReport verify_theorem3(int n, int jobs) {
    require_between(n, 1, 10, "verify_theorem3");
    Stopwatch sw;
    VerificationReport report;
    report.name = "theorem3";
    report.params = {{"n", n}};
    SubCheck balance{"npap_even_equals_npap_odd"};
    SubCheck from_pap{"signed_count_equals_pap_split"};

    const auto counts = classify(n, jobs);
    for (const ClassCounts& c : counts) {
        ++report.scanned;
        ++balance.scanned;
        if (c.npap_even != c.npap_odd) {
            sub_fail(report, balance, cell(n, c.k),
                     "npap_even=" + std::to_string(c.npap_even) + " npap_odd=" + std::to_string(c.npap_odd),
                     "equal counts");
        }
        ++from_pap.scanned;
        const std::int64_t from_split =
            static_cast<std::int64_t>(c.pap_even) - static_cast<std::int64_t>(c.pap_odd);
        const std::int64_t expected = signed_eulerian_recurrence(n, c.k);
        if (from_split != expected) {
            sub_fail(report, from_pap, cell(n, c.k), "pap_even - pap_odd = " + std::to_string(from_split),
                     "signed count " + std::to_string(expected));
        }
    }
    report.subchecks = {balance, from_pap};

    if (n % 2 == 0) {
        // Cardinality equalities between the even types (position of n) and
        // the odd types (position of 1) inside the non-alternating side.
        SubCheck types{"position_type_bijections"};
        std::vector<std::array<std::uint64_t, 6>> tc(static_cast<std::size_t>(n), {0, 0, 0, 0, 0, 0});
        for_each_permutation(n, [&](std::span<const int> a) {
            if (is_pap(a)) return;
            const auto k = static_cast<std::size_t>(ascent_count(a));
            if (parity(a) == Parity::even) {
                int pos = 0;
                while (a[static_cast<std::size_t>(pos)] != n) ++pos;
                tc[k][pos == n - 1 ? 1u : pos == 0 ? 2u : 0u] += 1;
            } else {
                int pos = 0;
                while (a[static_cast<std::size_t>(pos)] != 1) ++pos;
                tc[k][pos == 0 ? 4u : pos == n - 1 ? 5u : 3u] += 1;
            }
        });
        static constexpr std::array<std::array<unsigned, 2>, 3> kPairs{{{0, 3}, {1, 4}, {2, 5}}};
        static constexpr std::array<const char*, 3> kPairNames{
            "even with n interior vs odd with 1 interior",
            "even ending in n vs odd starting with 1",
            "even starting with n vs odd ending in 1"};
        for (int k = 0; k < n; ++k) {
            for (std::size_t t = 0; t < kPairs.size(); ++t) {
                ++types.scanned;
                const std::uint64_t lhs = tc[static_cast<std::size_t>(k)][kPairs[t][0]];
                const std::uint64_t rhs = tc[static_cast<std::size_t>(k)][kPairs[t][1]];
                if (lhs != rhs) {
                    sub_fail(report, types, cell(n, k),
                             std::string(kPairNames[t]) + ": " + std::to_string(lhs) + " vs " +
                                 std::to_string(rhs),
                             "equal cardinalities");
                }
            }
        }
        report.subchecks.push_back(types);
    }

    finalize(report, sw);
    return report;
}

VerificationReport verify_theorem4(int n, int jobs) {
    require_even(n, "verify_theorem4");
    require_between(n, 2, 10, "verify_theorem4");
    Stopwatch sw;
    VerificationReport report;
    report.name = "theorem4";
    report.params = {{"n", n}};
    SubCheck pside{"pap_census_recurrence"};
    SubCheck nside{"npap_census_recurrence"};

    const auto cur = classify(n, jobs);
    const auto prev = classify(n - 1, jobs);
    for (int k = 1; k <= n - 1; ++k) {
        ++report.scanned;
        ++pside.scanned;
        const std::uint64_t p_lhs = pap_cell(cur, k);
        const std::uint64_t p_rhs = static_cast<std::uint64_t>(n - k) * pap_cell(prev, k - 1) +
                                    static_cast<std::uint64_t>(k + 1) * pap_cell(prev, k);
        if (p_lhs != p_rhs) {
            sub_fail(report, pside, cell(n, k), "P = " + std::to_string(p_lhs),
                     "(n-k)P' + (k+1)P'' = " + std::to_string(p_rhs));
        }
        ++nside.scanned;
        const std::uint64_t n_lhs = npap_cell(cur, k);
        const std::uint64_t n_rhs = static_cast<std::uint64_t>(n - k) * npap_cell(prev, k - 1) +
                                    static_cast<std::uint64_t>(k + 1) * npap_cell(prev, k);
        if (n_lhs != n_rhs) {
            sub_fail(report, nside, cell(n, k), "N = " + std::to_string(n_lhs),
                     "(n-k)N' + (k+1)N'' = " + std::to_string(n_rhs));
        }
    }

    report.subchecks = {pside, nside};
    finalize(report, sw);
    return report;
}

namespace {

void require_theorem5_hypothesis(int n, int p, int m, int k) {
    require_even(n, "verify_theorem5");
    require_between(n, 2, 10, "verify_theorem5");
    if (!is_prime(p)) {
        throw std::domain_error("verify_theorem5 requires prime p, got p = " + std::to_string(p));
    }
    if (m < 1) {
        throw std::domain_error("verify_theorem5 requires m >= 1");
    }
    std::int64_t pm = 1;
    for (int i = 0; i < m; ++i) pm *= p;
    if (pm > n || n % pm != 0) {
        throw std::domain_error("verify_theorem5 requires p^m | n; " + std::to_string(pm) +
                                " does not divide " + std::to_string(n));
    }
    if (k < 1 || k > n - 1 || k % p != 0) {
        throw std::domain_error("verify_theorem5 requires 1 <= k <= n-1 with p | k, got k = " +
                                std::to_string(k));
    }
}

void check_theorem5_instance(VerificationReport& report, SubCheck& pside, SubCheck& nside,
                             const std::vector<ClassCounts>& prev, int n, int p, int m, int k) {
    std::uint64_t pm = 1;
    for (int i = 0; i < m; ++i) pm *= static_cast<std::uint64_t>(p);
    const std::string item = "n=" + std::to_string(n) + " p=" + std::to_string(p) +
                             " m=" + std::to_string(m) + " k=" + std::to_string(k);
    ++pside.scanned;
    const std::uint64_t pv = pap_cell(prev, k - 1);
    if (pv % pm != 0) {
        sub_fail(report, pside, item, "P_(n-1,k-1) = " + std::to_string(pv),
                 "divisible by " + std::to_string(pm));
    }
    ++nside.scanned;
    const std::uint64_t nv = npap_cell(prev, k - 1);
    if (nv % pm != 0) {
        sub_fail(report, nside, item, "N_(n-1,k-1) = " + std::to_string(nv),
                 "divisible by " + std::to_string(pm));
    }
}

void check_alpha_vanishing(VerificationReport& report, SubCheck& alpha, int n) {
    for (int k = 1; k <= n - 1; ++k) {
        for (const Side side : {Side::pap, Side::npap}) {
            const OrbitCensus census = orbit_census(n, k, side);
            for (const int d : divisors(n)) {
                if (std::gcd(k, n / d) <= 1) continue;
                ++alpha.scanned;
                const auto it = census.alpha.find(d);
                const std::uint64_t count = it == census.alpha.end() ? 0 : it->second;
                if (count != 0) {
                    sub_fail(report, alpha,
                             cell(n, k) + " side=" + to_string(side) + " d=" + std::to_string(d),
                             "alpha_d = " + std::to_string(count), "0");
                }
            }
        }
    }
}

}  // namespace

VerificationReport verify_theorem5(int n, int p, int m, int k, int jobs) {
    require_theorem5_hypothesis(n, p, m, k);
    Stopwatch sw;
    VerificationReport report;
    report.name = "theorem5";
    report.params = {{"n", n}, {"p", p}, {"m", m}, {"k", k}};
    SubCheck pside{"pap_count_divisible"};
    SubCheck nside{"npap_count_divisible"};
    const auto prev = classify(n - 1, jobs);
    check_theorem5_instance(report, pside, nside, prev, n, p, m, k);
    report.scanned = 1;
    report.subchecks = {pside, nside};
    finalize(report, sw);
    return report;
}

VerificationReport verify_theorem5_campaign(int max_n, int jobs) {
    Stopwatch sw;
    VerificationReport report;
    report.name = "theorem5";
    report.params = {{"max_n", max_n}};
    SubCheck pside{"pap_count_divisible"};
    SubCheck nside{"npap_count_divisible"};
    SubCheck alpha{"alpha_vanishing_when_gcd_exceeds_one"};

    for (int n = 4; n <= std::min(max_n, 10); n += 2) {
        const auto prev = classify(n - 1, jobs);
        for (int p = 2; p <= n; ++p) {
            if (!is_prime(p) || n % p != 0) continue;
            int pm = p;
            for (int m = 1; n % pm == 0; ++m, pm *= p) {
                for (int k = p; k <= n - 1; k += p) {
                    ++report.scanned;
                    check_theorem5_instance(report, pside, nside, prev, n, p, m, k);
                }
            }
        }
    }
    for (int n = 4; n <= std::min(max_n, 8); n += 2) {
        check_alpha_vanishing(report, alpha, n);
    }

    report.subchecks = {pside, nside, alpha};
    report.note = "scanned = number of (n, p, m, k) tuples with p prime, p^m | n, p | k, even n <= max_n";
    finalize(report, sw);
    return report;
}

VerificationReport verify_theorem6(int n) {
    require_even(n, "verify_theorem6");
    require_between(n, 4, 8, "verify_theorem6");
    Stopwatch sw;
    VerificationReport report;
    report.name = "theorem6";
    report.params = {{"n", n}};
    SubCheck factor{"sigma_period_is_tau_period_times_n_minus_k"};
    SubCheck gcd_check{"tau_period_equals_gcd_of_n_and_sigma_period"};
    SubCheck relation{"sigma_period_relation_when_ends_increasing"};

    for_each_canonical(n, [&](std::span<const int> a) {
        if (!is_pap(a)) return;
        ++report.scanned;
        Permutation xi{std::vector<int>(a.begin(), a.end())};
        const int k = ascent_count(a);
        const std::uint64_t sigma_period = period_sigma(xi).period;
        const std::uint64_t tau_period = period_tau(xi).period;
        ++factor.scanned;
        if (sigma_period != static_cast<std::uint64_t>(n - k) * tau_period) {
            sub_fail(report, factor, xi.str(),
                     "sigma period " + std::to_string(sigma_period) + ", tau period " +
                         std::to_string(tau_period),
                     "sigma period = (n-k) * tau period = " +
                         std::to_string(static_cast<std::uint64_t>(n - k) * tau_period));
        }
        ++gcd_check.scanned;
        const auto d = std::gcd(static_cast<std::uint64_t>(n), sigma_period);
        if (d != tau_period) {
            sub_fail(report, gcd_check, xi.str(), "gcd(n, sigma period) = " + std::to_string(d),
                     "tau period " + std::to_string(tau_period));
        }
    });

    // The period relation itself, over every permutation with a_1 < a_n.
    for_each_permutation(n, [&](std::span<const int> a) {
        if (a[0] >= a[a.size() - 1]) return;
        ++relation.scanned;
        Permutation xi{std::vector<int>(a.begin(), a.end())};
        const std::uint64_t period = period_sigma(xi).period;
        const int k = ascent_count(a);
        const std::uint64_t expected =
            static_cast<std::uint64_t>(n - k) * std::gcd(static_cast<std::uint64_t>(n), period);
        if (period != expected) {
            sub_fail(report, relation, xi.str(), "period " + std::to_string(period),
                     "(n-k)*gcd(n, period) = " + std::to_string(expected));
        }
    });

    report.subchecks = {factor, gcd_check, relation};
    finalize(report, sw);
    return report;
}

VerificationReport verify_eq8(int n, int jobs) {
    require_even(n, "verify_eq8");
    require_between(n, 4, 10, "verify_eq8");
    Stopwatch sw;
    VerificationReport report;
    report.name = "eq8";
    report.params = {{"n", n}};
    SubCheck sum_p{"census_sum_matches_pap_count"};
    SubCheck sum_n{"census_sum_matches_npap_count"};
    SubCheck per_orbit{"each_orbit_has_exactly_d_canonical_members"};
    SubCheck eq9{"ends_increasing_pap_count_is_n_minus_k_times_previous"};
    SubCheck eq10{"ends_increasing_pap_count_complement_is_k_plus_1_times_previous"};

    const auto prev = classify(n - 1, jobs);

    // Direct count of parity-alternating permutations with a_1 < a_n, by k.
    std::vector<std::uint64_t> lhd_pap(static_cast<std::size_t>(n), 0);
    for_each_permutation(n, [&](std::span<const int> a) {
        if (a[0] < a[a.size() - 1] && is_pap(a)) {
            lhd_pap[static_cast<std::size_t>(ascent_count(a))] += 1;
        }
    });

    for (int k = 1; k <= n - 1; ++k) {
        ++report.scanned;
        for (const Side side : {Side::pap, Side::npap}) {
            SubCheck& sum_check = side == Side::pap ? sum_p : sum_n;
            const std::uint64_t expected =
                side == Side::pap ? pap_cell(prev, k - 1) : npap_cell(prev, k - 1);
            try {
                const OrbitCensus census = orbit_census(n, k, side);
                ++sum_check.scanned;
                if (census.canonical_total() != expected) {
                    sub_fail(report, sum_check, cell(n, k) + " side=" + to_string(side),
                             "sum of d*alpha_d = " + std::to_string(census.canonical_total()),
                             std::to_string(expected));
                }
                for (const OrbitCensusEntry& orbit : census.orbits) {
                    ++per_orbit.scanned;
                    if (!orbit.record.divisor_d ||
                        orbit.record.canonical_count !=
                            static_cast<std::uint64_t>(*orbit.record.divisor_d)) {
                        sub_fail(report, per_orbit, orbit.representative.str(),
                                 std::to_string(orbit.record.canonical_count) + " canonical members",
                                 "gcd(n, period) of them");
                    }
                }
            } catch (const std::logic_error& e) {
                ++sum_check.scanned;
                sub_fail(report, sum_check, cell(n, k) + " side=" + to_string(side), e.what(),
                         "a well-formed orbit census");
            }
        }
    }

    for (int k = 0; k <= n - 1; ++k) {
        ++eq9.scanned;
        const std::uint64_t direct = lhd_pap[static_cast<std::size_t>(k)];
        const std::uint64_t via_prev = static_cast<std::uint64_t>(n - k) * pap_cell(prev, k - 1);
        if (direct != via_prev) {
            sub_fail(report, eq9, cell(n, k), "direct count " + std::to_string(direct),
                     "(n-k) * P_(n-1,k-1) = " + std::to_string(via_prev));
        }
        ++eq10.scanned;
        const std::uint64_t direct_c = lhd_pap[static_cast<std::size_t>(n - k - 1)];
        const std::uint64_t via_prev_c = static_cast<std::uint64_t>(k + 1) * pap_cell(prev, k);
        if (direct_c != via_prev_c) {
            sub_fail(report, eq10, cell(n, n - k - 1), "direct count " + std::to_string(direct_c),
                     "(k+1) * P_(n-1,k) = " + std::to_string(via_prev_c));
        }
    }

    report.subchecks = {sum_p, sum_n, per_orbit, eq9, eq10};
    finalize(report, sw);
    return report;
}

namespace {

// Deterministic Fisher-Yates; std::shuffle sequences are implementation
// defined, which would break reproducible reports.
void shuffle_values(std::vector<int>& values, std::mt19937_64& rng) {
    for (std::size_t i = values.size(); i > 1; --i) {
        std::swap(values[i - 1], values[static_cast<std::size_t>(rng() % i)]);
    }
}

Permutation random_pap(int n, std::mt19937_64& rng) {
    std::vector<int> odds;
    std::vector<int> evens;
    for (int v = 1; v <= n; ++v) {
        (v % 2 == 1 ? odds : evens).push_back(v);
    }
    shuffle_values(odds, rng);
    shuffle_values(evens, rng);
    // Odd n forces odd values on the odd positions; even n allows either slot
    // pattern.
    const bool odd_first = n % 2 == 1 ? true : (rng() & 1) == 0;
    std::vector<int> entries(static_cast<std::size_t>(n));
    std::size_t oi = 0;
    std::size_t ei = 0;
    for (int pos = 0; pos < n; ++pos) {
        const bool odd_slot = (pos % 2 == 0) == odd_first;
        entries[static_cast<std::size_t>(pos)] = odd_slot ? odds[oi++] : evens[ei++];
    }
    return Permutation(std::move(entries));
}

}  // namespace

VerificationReport verify_subgroup(int n) {
    require_between(n, 1, 8, "verify_subgroup");
    Stopwatch sw;
    VerificationReport report;
    report.name = "subgroup";
    report.params = {{"n", n}};
    SubCheck identity_member{"identity_is_member"};
    SubCheck composition{"closed_under_composition"};
    SubCheck inverses{"closed_under_inverse"};

    ++identity_member.scanned;
    if (!is_pap(Permutation::identity(n))) {
        sub_fail(report, identity_member, Permutation::identity(n).str(), "not parity alternating",
                 "member of the subgroup");
    }

    if (n <= 6) {
        std::vector<Permutation> members;
        for_each_permutation(n, [&](std::span<const int> a) {
            if (is_pap(a)) members.push_back(Permutation{std::vector<int>(a.begin(), a.end())});
        });
        for (const Permutation& p : members) {
            for (const Permutation& q : members) {
                ++composition.scanned;
                if (!is_pap(compose(p, q))) {
                    sub_fail(report, composition, p.str() + " * " + q.str(),
                             compose(p, q).str() + " is not parity alternating", "a member");
                }
            }
            ++inverses.scanned;
            if (!is_pap(inverse(p))) {
                sub_fail(report, inverses, p.str(), inverse(p).str() + " is not parity alternating",
                         "a member");
            }
        }
        report.note = "exhaustive over all member pairs";
    } else {
        constexpr int kSamples = 100000;
        std::mt19937_64 rng(0xC0FFEEull + static_cast<std::uint64_t>(n));
        for (int i = 0; i < kSamples; ++i) {
            const Permutation p = random_pap(n, rng);
            const Permutation q = random_pap(n, rng);
            ++composition.scanned;
            if (!is_pap(compose(p, q))) {
                sub_fail(report, composition, p.str() + " * " + q.str(),
                         compose(p, q).str() + " is not parity alternating", "a member");
            }
            ++inverses.scanned;
            if (!is_pap(inverse(p))) {
                sub_fail(report, inverses, p.str(), inverse(p).str() + " is not parity alternating",
                         "a member");
            }
        }
        report.note = "fixed-seed sample of 100000 pairs";
    }

    report.scanned = identity_member.scanned + composition.scanned + inverses.scanned;
    report.subchecks = {identity_member, composition, inverses};
    finalize(report, sw);
    return report;
}

const std::vector<std::string>& verifier_names() {
    static const std::vector<std::string> names = {"lemma1",   "lemma2",   "theorem3", "theorem4",
                                                   "theorem5", "theorem6", "eq8",      "subgroup"};
    return names;
}

std::vector<VerificationReport> run_campaign(std::string_view check, int max_n, int jobs) {
    if (max_n < 1) {
        throw std::out_of_range("run_campaign requires max_n >= 1");
    }
    const auto& names = verifier_names();
    if (check != "all" && std::find(names.begin(), names.end(), check) == names.end()) {
        throw std::invalid_argument("unknown check '" + std::string(check) + "'");
    }
    const auto want = [&](std::string_view name) { return check == "all" || check == name; };

    std::vector<VerificationReport> out;
    if (want("lemma1")) {
        for (int n = 4; n <= std::min(max_n, 10); n += 2) out.push_back(verify_lemma1(n));
    }
    if (want("lemma2")) {
        for (int n = 4; n <= std::min(max_n, 10); n += 2) out.push_back(verify_lemma2(n));
    }
    if (want("theorem3")) {
        for (int n = 1; n <= std::min(max_n, 10); ++n) out.push_back(verify_theorem3(n, jobs));
    }
    if (want("theorem4")) {
        for (int n = 2; n <= std::min(max_n, 10); n += 2) out.push_back(verify_theorem4(n, jobs));
    }
    if (want("theorem5")) {
        out.push_back(verify_theorem5_campaign(std::min(max_n, 10), jobs));
    }
    if (want("theorem6")) {
        for (int n = 4; n <= std::min(max_n, 8); n += 2) out.push_back(verify_theorem6(n));
    }
    if (want("eq8")) {
        for (int n = 4; n <= std::min(max_n, 10); n += 2) out.push_back(verify_eq8(n, jobs));
    }
    if (want("subgroup")) {
        for (int n = 1; n <= std::min(max_n, 8); ++n) out.push_back(verify_subgroup(n));
    }
    return out;
}

}  // namespace pap
