#pragma once

#include <cstdint>
#include <optional>

#include "pap/permutation.hpp"

namespace pap {

enum class OperatorKind { sigma, tau };

const char* to_string(OperatorKind kind);

/// The shift operator: add one to every entry, with n+1 wrapping to 1; when n
/// sits at either end it is removed and 1 placed at the opposite end instead.
/// Preserves the ascent count. n = 1 is a fixed point.
Permutation sigma(const Permutation& p);

/// Raw-buffer form of sigma for tight enumeration loops. `in` must be a valid
/// permutation; `out` must have the same length and not alias `in`.
void sigma_into(std::span<const int> in, std::span<int> out);

Permutation sigma_pow(Permutation p, std::uint64_t count);

/// Change in inversion count of one sigma step when n is interior at 1-based
/// position i (2 <= i <= n-1): 2i - (n+1). When n sits at either end the
/// inversion count is unchanged and this function throws std::domain_error.
int inversion_delta_interior(const Permutation& p);

/// The canonical-permutation operator: sigma applied n - a_{n-1} times to a
/// permutation ending in n, yielding another one ending in n. Implemented in
/// closed form: b_1 = n - a_{n-1}, b_i = a_{i-1} + (n - a_{n-1}) reduced
/// mod n into 1..n. Requires a canonical input with n >= 2.
Permutation tau(const Permutation& p);

/// Same contract as tau, but by literal sigma iteration. Kept as an
/// independent route so the closed form can be cross-checked.
Permutation tau_by_sigma(const Permutation& p);

/// True iff a_1 < a_n. This class is closed under sigma.
bool ends_increasing(const Permutation& p);

/// Orbit summary of a permutation under one of the operators.
struct OrbitRecord {
    OperatorKind op = OperatorKind::sigma;
    std::uint64_t period = 0;           ///< minimal l > 0 with op^l(p) = p
    std::uint64_t members = 0;          ///< distinct permutations in the orbit (= period)
    std::uint64_t canonical_count = 0;  ///< members ending in n
    /// gcd(n, period) when the base permutation has a_1 < a_n (sigma), or the
    /// tau period itself when it divides n; absent otherwise.
    std::optional<int> divisor_d;
};

/// Walks the sigma orbit. Iteration is capped at n*n steps; exceeding the cap
/// is an internal error (std::logic_error), not a reachable state.
OrbitRecord period_sigma(const Permutation& p);

/// Walks the tau orbit of a canonical permutation with even n; the period
/// always divides n. Other inputs throw std::domain_error.
OrbitRecord period_tau(const Permutation& p);

}  // namespace pap
