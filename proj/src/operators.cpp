#include "pap/operators.hpp"

#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace pap {
namespace {

void require_canonical(const Permutation& p, const char* who) {
    if (p.size() < 2) {
        throw std::domain_error(std::string(who) + " requires n >= 2");
    }
    if (!is_canonical(p)) {
        throw std::domain_error(std::string(who) + " requires a canonical permutation (a_n = n), got " +
                                p.str());
    }
}

}  // namespace

const char* to_string(OperatorKind kind) {
    return kind == OperatorKind::sigma ? "sigma" : "tau";
}

void sigma_into(std::span<const int> in, std::span<int> out) {
    const int n = static_cast<int>(in.size());
    if (n == 1) {
        out[0] = 1;
        return;
    }
    if (in[static_cast<std::size_t>(n) - 1] == n) {
        // n at the right end: drop it, put 1 at the left.
        out[0] = 1;
        for (int i = 0; i + 1 < n; ++i) out[static_cast<std::size_t>(i) + 1] = in[static_cast<std::size_t>(i)] + 1;
        return;
    }
    if (in[0] == n) {
        // n at the left end: drop it, put 1 at the right.
        for (int i = 1; i < n; ++i) out[static_cast<std::size_t>(i) - 1] = in[static_cast<std::size_t>(i)] + 1;
        out[static_cast<std::size_t>(n) - 1] = 1;
        return;
    }
    for (int i = 0; i < n; ++i) {
        const int v = in[static_cast<std::size_t>(i)];
        out[static_cast<std::size_t>(i)] = v == n ? 1 : v + 1;
    }
}

Permutation sigma(const Permutation& p) {
    std::vector<int> out(static_cast<std::size_t>(p.size()));
    sigma_into(p.span(), out);
    return Permutation(std::move(out));
}

Permutation sigma_pow(Permutation p, std::uint64_t count) {
    const auto n = static_cast<std::size_t>(p.size());
    std::vector<int> cur(p.entries());
    std::vector<int> next(n);
    for (std::uint64_t i = 0; i < count; ++i) {
        sigma_into(cur, next);
        cur.swap(next);
    }
    return Permutation(std::move(cur));
}

int inversion_delta_interior(const Permutation& p) {
    const int n = p.size();
    int pos = 0;  // 1-based position of n
    for (int i = 0; i < n; ++i) {
        if (p[i] == n) { pos = i + 1; break; }
    }
    if (pos <= 1 || pos >= n) {
        throw std::domain_error("entry n is at an end position; the inversion count is unchanged there");
    }
    return 2 * pos - (n + 1);
}

Permutation tau(const Permutation& p) {
    require_canonical(p, "tau");
    const int n = p.size();
    const int shift = n - p[n - 2];
    std::vector<int> out(static_cast<std::size_t>(n));
    out[0] = shift;
    for (int i = 1; i + 1 < n; ++i) {
        int v = (p[i - 1] + shift) % n;
        out[static_cast<std::size_t>(i)] = v == 0 ? n : v;
    }
    out[static_cast<std::size_t>(n) - 1] = n;
    return Permutation(std::move(out));
}

Permutation tau_by_sigma(const Permutation& p) {
    require_canonical(p, "tau");
    const int n = p.size();
    return sigma_pow(p, static_cast<std::uint64_t>(n - p[n - 2]));
}

bool ends_increasing(const Permutation& p) {
    return p[0] < p[p.size() - 1];
}

OrbitRecord period_sigma(const Permutation& p) {
    const int n = p.size();
    const auto cap = static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n);
    std::vector<int> cur(p.entries());
    std::vector<int> next(static_cast<std::size_t>(n));
    std::uint64_t steps = 0;
    std::uint64_t canonical = 0;
    do {
        sigma_into(cur, next);
        cur.swap(next);
        ++steps;
        if (cur[static_cast<std::size_t>(n) - 1] == n) ++canonical;
        if (steps > cap) {
            throw std::logic_error("sigma orbit of " + p.str() + " did not close within n*n = " +
                                   std::to_string(cap) + " steps");
        }
    } while (cur != p.entries());
    OrbitRecord rec;
    rec.op = OperatorKind::sigma;
    rec.period = steps;
    rec.members = steps;
    rec.canonical_count = canonical;
    if (ends_increasing(p)) {
        rec.divisor_d = static_cast<int>(std::gcd(static_cast<std::uint64_t>(n), steps));
    }
    return rec;
}

OrbitRecord period_tau(const Permutation& p) {
    require_canonical(p, "period_tau");
    const int n = p.size();
    if (n % 2 != 0) {
        throw std::domain_error("period_tau requires even n, got n = " + std::to_string(n));
    }
    Permutation cur = tau(p);
    std::uint64_t steps = 1;
    while (cur != p) {
        cur = tau(cur);
        ++steps;
        if (steps > static_cast<std::uint64_t>(n)) {
            throw std::logic_error("tau orbit of " + p.str() + " did not close within n = " +
                                   std::to_string(n) + " steps");
        }
    }
    OrbitRecord rec;
    rec.op = OperatorKind::tau;
    rec.period = steps;
    rec.members = steps;
    rec.canonical_count = steps;  // tau maps canonical permutations to canonical ones
    if (static_cast<std::uint64_t>(n) % steps == 0) {
        rec.divisor_d = static_cast<int>(steps);
    }
    return rec;
}

}  // namespace pap
