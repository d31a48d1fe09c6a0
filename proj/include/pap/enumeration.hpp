#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "pap/operators.hpp"
#include "pap/permutation.hpp"

namespace pap {

/// Hard ceiling for exhaustive scans of S_n (12! ~ 479M).
inline constexpr int kMaxEnumerationN = 12;

/// Throws std::out_of_range unless 1 <= n <= kMaxEnumerationN.
void require_enumerable(int n);

/// n! for 0 <= n <= 20.
std::uint64_t factorial(int n);

/// Calls fn(std::span<const int>) for every permutation of [n] in
/// lexicographic order. The span is only valid during the call.
template <typename Fn>
void for_each_permutation(int n, Fn&& fn) {
    require_enumerable(n);
    std::vector<int> a(static_cast<std::size_t>(n));
    std::iota(a.begin(), a.end(), 1);
    do {
        fn(std::span<const int>(a));
    } while (std::next_permutation(a.begin(), a.end()));
}

/// Visits the permutations whose first entry is `first`, in lexicographic
/// order. The n chunks for first = 1..n partition S_n deterministically.
template <typename Fn>
void for_each_permutation_first(int n, int first, Fn&& fn) {
    require_enumerable(n);
    std::vector<int> a;
    a.reserve(static_cast<std::size_t>(n));
    a.push_back(first);
    for (int v = 1; v <= n; ++v) {
        if (v != first) a.push_back(v);
    }
    do {
        fn(std::span<const int>(a));
    } while (std::next_permutation(a.begin() + 1, a.end()));
}

/// Visits the canonical permutations of [n] (those ending in n), i.e. every
/// permutation of [n-1] with n appended, in lexicographic order.
template <typename Fn>
void for_each_canonical(int n, Fn&& fn) {
    require_enumerable(n);
    std::vector<int> a(static_cast<std::size_t>(n));
    std::iota(a.begin(), a.end(), 1);
    do {
        fn(std::span<const int>(a));
    } while (std::next_permutation(a.begin(), a.end() - 1));
}

/// Exact census of one ascent class E(n,k): totals split by permutation
/// parity and by parity-alternating membership.
struct ClassCounts {
    int n = 0;
    int k = 0;
    std::uint64_t total = 0;
    std::uint64_t even_count = 0;
    std::uint64_t odd_count = 0;
    std::uint64_t pap_even = 0;
    std::uint64_t pap_odd = 0;
    std::uint64_t npap_even = 0;
    std::uint64_t npap_odd = 0;

    std::uint64_t pap_total() const { return pap_even + pap_odd; }
    std::uint64_t npap_total() const { return npap_even + npap_odd; }

    friend bool operator==(const ClassCounts&, const ClassCounts&) = default;
};

/// Full census of S_n by exhaustive scan, one ClassCounts per k = 0..n-1.
/// `jobs` > 1 fans out over the n first-entry chunks; the merged result is
/// bit-identical for any jobs value.
std::vector<ClassCounts> classify(int n, int jobs = 1);

/// |E(n,k)| by the standard two-term recurrence; 0 when k is outside 0..n-1.
std::uint64_t eulerian_number(int n, int k);

/// Even-minus-odd count within E(n,k) by the parity-split recurrence
/// (base case n = 1); 0 when k is outside 0..n-1.
std::int64_t signed_eulerian_recurrence(int n, int k);

/// Even-minus-odd count within E(n,k) from the exhaustive census.
std::int64_t signed_eulerian_bruteforce(int n, int k, int jobs = 1);

/// Number of parity-alternating permutations of [n] in closed form:
/// 2((n/2)!)^2 for even n, ((n+1)/2)!((n-1)/2)! for odd n.
std::uint64_t pap_count_closed_form(int n);

/// Same quantity by exhaustive scan.
std::uint64_t pap_count_bruteforce(int n, int jobs = 1);

/// A labeled integer triangle: rows[i] holds the n = i+1 row with cells
/// k = 0..n-1. Cells are exact 64-bit integers.
struct Triangle {
    std::string name;
    int min_n = 1;
    std::vector<std::vector<std::int64_t>> rows;

    std::int64_t at(int n, int k) const;  ///< 0 outside the stored range
};

Triangle eulerian_triangle(int max_n);
Triangle signed_triangle(int max_n);
Triangle signed_triangle_bruteforce(int max_n, int jobs = 1);
Triangle pap_triangle(int max_n, int jobs = 1);   ///< P_{n,k} = |P(n,k)|
Triangle npap_triangle(int max_n, int jobs = 1);  ///< N_{n,k} = |N(n,k)|

/// Which side of the parity-alternating split a census walks.
enum class Side { pap, npap };

const char* to_string(Side side);

struct OrbitCensusEntry {
    Permutation representative;  ///< lexicographically least canonical member
    OrbitRecord record;
};

/// Classification into sigma orbits of the canonical permutations with
/// a_1 < a_n, k ascents, and the chosen side of the parity-alternating split.
/// alpha maps each divisor d of n to the number of orbits of period d(n-k).
struct OrbitCensus {
    int n = 0;
    int k = 0;
    Side side = Side::pap;
    std::map<int, std::uint64_t> alpha;
    std::vector<OrbitCensusEntry> orbits;

    /// Sum of d * alpha_d = number of canonical permutations classified.
    std::uint64_t canonical_total() const;
};

/// Walks every sigma orbit through the canonical members of the chosen class.
/// Requires even n with 4 <= n <= 10 and 1 <= k <= n-1. Violations of the
/// period relation period = (n-k)*gcd(n, period) or of the exactly-d-canonical
/// -members-per-orbit fact would be reported as std::logic_error; they are
/// hard failures, not reachable states.
OrbitCensus orbit_census(int n, int k, Side side);

}  // namespace pap
