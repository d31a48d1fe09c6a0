#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "pap/permutation.hpp"

namespace pap {

/// One independently scanned clause of a check.
struct SubCheck {
    std::string name;
    std::uint64_t scanned = 0;
    std::uint64_t failures = 0;
};

struct Counterexample {
    std::string clause;    ///< which clause or equality failed
    std::string item;      ///< offending permutation or (n,k) cell
    std::string observed;
    std::string expected;
};

/// Machine-readable outcome of one verification check. `scanned` is the
/// total number of instances examined across all clauses; a report with
/// scanned == 0 is flagged as vacuous. The counterexample list is capped;
/// total_counterexamples always carries the full count.
struct VerificationReport {
    static constexpr std::size_t kCounterexampleCap = 20;

    std::string name;
    std::map<std::string, std::int64_t> params;
    std::uint64_t scanned = 0;
    bool pass = true;
    bool vacuous = false;
    std::uint64_t total_counterexamples = 0;
    std::vector<Counterexample> counterexamples;
    std::vector<SubCheck> subchecks;
    std::string note;
    double millis = 0.0;

    void fail(std::string clause, std::string item, std::string observed, std::string expected);
};

/// Parity-run behaviour of the tau operator over every canonical non-PAP of
/// S_n: the parity is constant for the first <C> - 1 steps, flips at step <C>,
/// and the first entries are odd within the run and even at the flip.
/// Each clause is scanned and reported separately. Requires even n in 4..10.
VerificationReport verify_lemma1(int n);

/// For every canonical non-PAP with even first entry: after <C> tau steps the
/// first maximal parity-alternating block has length exactly <C>.
/// Requires even n in 4..10.
VerificationReport verify_lemma2(int n);

/// Even/odd balance of the non-alternating side: npap_even = npap_odd for
/// every k, and the signed count D_{n,k} equals pap_even - pap_odd. For even
/// n the three position-of-n/position-of-1 type bijections are checked as
/// separate cardinality equalities. Requires 1 <= n <= 10.
VerificationReport verify_theorem3(int n, int jobs = 1);

/// Census recurrences P_{n,k} = (n-k)P_{n-1,k-1} + (k+1)P_{n-1,k} and the
/// N-side analog, for k = 1..n-1 with exhaustively computed counts.
/// Requires even n in 2..10.
VerificationReport verify_theorem4(int n, int jobs = 1);

/// Divisibility: when p^m | n and p | k, both P_{n-1,k-1} and N_{n-1,k-1}
/// are divisible by p^m. Hypothesis violations throw std::domain_error.
VerificationReport verify_theorem5(int n, int p, int m, int k, int jobs = 1);

/// Every valid (n, p, m, k) tuple with even n <= max_n, plus the census
/// sub-check alpha_d = 0 whenever gcd(k, n/d) > 1 for n in {4, 6, 8}.
VerificationReport verify_theorem5_campaign(int max_n, int jobs = 1);

/// Period factorization for canonical parity-alternating permutations:
/// sigma period = (n-k) * tau period, with gcd(n, sigma period) = tau period;
/// also checks period = (n-k)*gcd(n, period) for every permutation with
/// a_1 < a_n. Requires even n in 4..8.
VerificationReport verify_theorem6(int n);

/// Orbit-census sum identities: sum over d|n of d*alpha_d reproduces
/// P_{n-1,k-1} (and N_{n-1,k-1}), each orbit carries exactly d canonical
/// members, and the direct counts |{a_1 < a_n} ∩ P_n| with k resp. n-k-1
/// ascents equal (n-k)P_{n-1,k-1} resp. (k+1)P_{n-1,k}.
/// Requires even n in 4..10.
VerificationReport verify_eq8(int n, int jobs = 1);

/// Closure of the parity-alternating permutations under composition and
/// inverse, with the identity as member. Exhaustive pair check for n <= 6,
/// fixed-seed sample of 100000 pairs for n in {7, 8}. Requires 1 <= n <= 8.
VerificationReport verify_subgroup(int n);

/// The check names understood by run_campaign, in report order.
const std::vector<std::string>& verifier_names();

/// Runs one named check (or "all") over every n that is valid for it with
/// n <= max_n. Unknown names throw std::invalid_argument.
std::vector<VerificationReport> run_campaign(std::string_view check, int max_n, int jobs = 1);

}  // namespace pap
