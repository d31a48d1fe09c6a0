#include "pap/enumeration.hpp"

#include <array>
#include <atomic>
#include <numeric>
#include <stdexcept>
#include <thread>
#include <unordered_set>

namespace pap {
namespace {

// Packs a permutation with n <= 16 into a 64-bit key (4 bits per entry).
std::uint64_t pack_key(std::span<const int> entries) {
    std::uint64_t key = 0;
    for (int v : entries) {
        key = (key << 4) | static_cast<std::uint64_t>(v - 1);
    }
    return key;
}

// Per-k counters of one classification chunk:
// [pap_even, pap_odd, npap_even, npap_odd].
using ChunkCounts = std::vector<std::array<std::uint64_t, 4>>;

ChunkCounts classify_chunk(int n, int first) {
    ChunkCounts acc(static_cast<std::size_t>(n), {0, 0, 0, 0});
    std::vector<int> a;
    a.reserve(static_cast<std::size_t>(n));
    a.push_back(first);
    for (int v = 1; v <= n; ++v) {
        if (v != first) a.push_back(v);
    }
    do {
        int ascents = 0;
        bool alternating = true;
        for (int i = 0; i + 1 < n; ++i) {
            const int x = a[static_cast<std::size_t>(i)];
            const int y = a[static_cast<std::size_t>(i) + 1];
            ascents += x < y;
            alternating = alternating && (((x ^ y) & 1) != 0);
        }
        unsigned odd_inversions = 0;
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                odd_inversions ^= a[static_cast<std::size_t>(i)] > a[static_cast<std::size_t>(j)];
            }
        }
        acc[static_cast<std::size_t>(ascents)][(alternating ? 0u : 2u) + odd_inversions] += 1;
    } while (std::next_permutation(a.begin() + 1, a.end()));
    return acc;
}

int clamp_jobs(int jobs) {
    return std::clamp(jobs, 1, 64);
}

}  // namespace

void require_enumerable(int n) {
    if (n < 1 || n > kMaxEnumerationN) {
        throw std::out_of_range("exhaustive enumeration supports 1 <= n <= " +
                                std::to_string(kMaxEnumerationN) + ", got n = " + std::to_string(n));
    }
}

std::uint64_t factorial(int n) {
    if (n < 0 || n > 20) {
        throw std::out_of_range("factorial supports 0 <= n <= 20");
    }
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
}

std::vector<ClassCounts> classify(int n, int jobs) {
    require_enumerable(n);
    jobs = clamp_jobs(jobs);

    std::vector<ChunkCounts> chunks(static_cast<std::size_t>(n));
    if (jobs == 1 || n == 1) {
        for (int first = 1; first <= n; ++first) {
            chunks[static_cast<std::size_t>(first) - 1] = classify_chunk(n, first);
        }
    } else {
        std::atomic<int> next_chunk{1};
        auto worker = [&] {
            for (;;) {
                const int first = next_chunk.fetch_add(1);
                if (first > n) return;
                chunks[static_cast<std::size_t>(first) - 1] = classify_chunk(n, first);
            }
        };
        std::vector<std::thread> pool;
        const int threads = std::min(jobs, n);
        pool.reserve(static_cast<std::size_t>(threads));
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    // Merge in fixed chunk order; integer sums make the result independent of
    // scheduling.
    std::vector<ClassCounts> out(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        ClassCounts& c = out[static_cast<std::size_t>(k)];
        c.n = n;
        c.k = k;
        for (const ChunkCounts& chunk : chunks) {
            c.pap_even += chunk[static_cast<std::size_t>(k)][0];
            c.pap_odd += chunk[static_cast<std::size_t>(k)][1];
            c.npap_even += chunk[static_cast<std::size_t>(k)][2];
            c.npap_odd += chunk[static_cast<std::size_t>(k)][3];
        }
        c.even_count = c.pap_even + c.npap_even;
        c.odd_count = c.pap_odd + c.npap_odd;
        c.total = c.even_count + c.odd_count;
    }
    return out;
}

std::uint64_t eulerian_number(int n, int k) {
    if (n < 1) {
        throw std::out_of_range("eulerian_number requires n >= 1");
    }
    if (n > Permutation::kMaxN) {
        throw std::out_of_range("eulerian_number supports n <= 20");
    }
    if (k < 0 || k >= n) return 0;
    // Row-by-row table; cheap enough to rebuild per call and thread-safe.
    std::vector<std::uint64_t> row{1};
    for (int m = 2; m <= n; ++m) {
        std::vector<std::uint64_t> next(static_cast<std::size_t>(m), 0);
        for (int j = 0; j < m; ++j) {
            const std::uint64_t left = j > 0 ? row[static_cast<std::size_t>(j) - 1] : 0;
            const std::uint64_t same = j < m - 1 ? row[static_cast<std::size_t>(j)] : 0;
            next[static_cast<std::size_t>(j)] =
                static_cast<std::uint64_t>(m - j) * left + static_cast<std::uint64_t>(j + 1) * same;
        }
        row.swap(next);
    }
    return row[static_cast<std::size_t>(k)];
}

std::int64_t signed_eulerian_recurrence(int n, int k) {
    if (n < 1) {
        throw std::out_of_range("signed_eulerian_recurrence requires n >= 1");
    }
    if (n > Permutation::kMaxN) {
        throw std::out_of_range("signed_eulerian_recurrence supports n <= 20");
    }
    if (k < 0 || k >= n) return 0;
    std::vector<std::int64_t> row{1};
    for (int m = 2; m <= n; ++m) {
        std::vector<std::int64_t> next(static_cast<std::size_t>(m), 0);
        for (int j = 0; j < m; ++j) {
            const std::int64_t left = j > 0 ? row[static_cast<std::size_t>(j) - 1] : 0;
            const std::int64_t same = j < m - 1 ? row[static_cast<std::size_t>(j)] : 0;
            next[static_cast<std::size_t>(j)] =
                m % 2 == 1 ? static_cast<std::int64_t>(m - j) * left + static_cast<std::int64_t>(j + 1) * same
                           : left - same;
        }
        row.swap(next);
    }
    return row[static_cast<std::size_t>(k)];
}

std::int64_t signed_eulerian_bruteforce(int n, int k, int jobs) {
    require_enumerable(n);
    if (k < 0 || k >= n) return 0;
    const auto counts = classify(n, jobs);
    const ClassCounts& c = counts[static_cast<std::size_t>(k)];
    return static_cast<std::int64_t>(c.even_count) - static_cast<std::int64_t>(c.odd_count);
}

std::uint64_t pap_count_closed_form(int n) {
    if (n < 1 || n > Permutation::kMaxN) {
        throw std::out_of_range("pap_count_closed_form supports 1 <= n <= 20");
    }
    if (n % 2 == 0) {
        const std::uint64_t half = factorial(n / 2);
        return 2 * half * half;
    }
    return factorial((n + 1) / 2) * factorial((n - 1) / 2);
}

std::uint64_t pap_count_bruteforce(int n, int jobs) {
    std::uint64_t total = 0;
    for (const ClassCounts& c : classify(n, jobs)) {
        total += c.pap_total();
    }
    return total;
}

std::int64_t Triangle::at(int n, int k) const {
    const int idx = n - min_n;
    if (idx < 0 || idx >= static_cast<int>(rows.size())) return 0;
    const auto& row = rows[static_cast<std::size_t>(idx)];
    if (k < 0 || k >= static_cast<int>(row.size())) return 0;
    return row[static_cast<std::size_t>(k)];
}

namespace {

template <typename Cell>
Triangle build_triangle(std::string name, int max_n, Cell&& cell) {
    if (max_n < 1) {
        throw std::out_of_range("triangle requires max_n >= 1");
    }
    Triangle t;
    t.name = std::move(name);
    t.rows.reserve(static_cast<std::size_t>(max_n));
    for (int n = 1; n <= max_n; ++n) {
        std::vector<std::int64_t> row(static_cast<std::size_t>(n));
        for (int k = 0; k < n; ++k) {
            row[static_cast<std::size_t>(k)] = cell(n, k);
        }
        t.rows.push_back(std::move(row));
    }
    return t;
}

template <typename Pick>
Triangle census_triangle(std::string name, int max_n, int jobs, Pick&& pick) {
    if (max_n < 1) {
        throw std::out_of_range("triangle requires max_n >= 1");
    }
    Triangle t;
    t.name = std::move(name);
    for (int n = 1; n <= max_n; ++n) {
        const auto counts = classify(n, jobs);
        std::vector<std::int64_t> row(static_cast<std::size_t>(n));
        for (int k = 0; k < n; ++k) {
            row[static_cast<std::size_t>(k)] = pick(counts[static_cast<std::size_t>(k)]);
        }
        t.rows.push_back(std::move(row));
    }
    return t;
}

}  // namespace

Triangle eulerian_triangle(int max_n) {
    return build_triangle("eulerian", max_n, [](int n, int k) {
        return static_cast<std::int64_t>(eulerian_number(n, k));
    });
}

Triangle signed_triangle(int max_n) {
    return build_triangle("signed", max_n, signed_eulerian_recurrence);
}

Triangle signed_triangle_bruteforce(int max_n, int jobs) {
    return census_triangle("signed_bruteforce", max_n, jobs, [](const ClassCounts& c) {
        return static_cast<std::int64_t>(c.even_count) - static_cast<std::int64_t>(c.odd_count);
    });
}

Triangle pap_triangle(int max_n, int jobs) {
    return census_triangle("pap", max_n, jobs, [](const ClassCounts& c) {
        return static_cast<std::int64_t>(c.pap_total());
    });
}

Triangle npap_triangle(int max_n, int jobs) {
    return census_triangle("npap", max_n, jobs, [](const ClassCounts& c) {
        return static_cast<std::int64_t>(c.npap_total());
    });
}

const char* to_string(Side side) {
    return side == Side::pap ? "P" : "N";
}

std::uint64_t OrbitCensus::canonical_total() const {
    std::uint64_t sum = 0;
    for (const auto& [d, count] : alpha) {
        sum += static_cast<std::uint64_t>(d) * count;
    }
    return sum;
}

OrbitCensus orbit_census(int n, int k, Side side) {
    if (n % 2 != 0) {
        throw std::domain_error("orbit_census requires even n, got n = " + std::to_string(n));
    }
    if (n < 4 || n > 10) {
        throw std::out_of_range("orbit_census supports 4 <= n <= 10, got n = " + std::to_string(n));
    }
    if (k < 1 || k > n - 1) {
        throw std::out_of_range("orbit_census requires 1 <= k <= n-1, got k = " + std::to_string(k));
    }

    // Canonical members of the class, in lexicographic order. Canonical
    // permutations end in n, so a_1 < a_n holds automatically.
    std::vector<std::vector<int>> members;
    const bool want_pap = side == Side::pap;
    for_each_canonical(n, [&](std::span<const int> a) {
        if (ascent_count(a) == k && is_pap(a) == want_pap) {
            members.emplace_back(a.begin(), a.end());
        }
    });

    std::unordered_set<std::uint64_t> member_keys;
    member_keys.reserve(members.size() * 2);
    for (const auto& m : members) member_keys.insert(pack_key(m));

    OrbitCensus census;
    census.n = n;
    census.k = k;
    census.side = side;

    std::unordered_set<std::uint64_t> visited;
    visited.reserve(members.size() * 2);
    const auto cap = static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n);
    std::vector<int> next(static_cast<std::size_t>(n));

    for (const auto& m : members) {
        if (visited.contains(pack_key(m))) continue;
        std::vector<int> cur = m;
        std::uint64_t steps = 0;
        std::uint64_t canonical = 0;
        do {
            sigma_into(cur, next);
            cur.swap(next);
            ++steps;
            if (cur[static_cast<std::size_t>(n) - 1] == n) {
                ++canonical;
                const std::uint64_t key = pack_key(cur);
                if (!member_keys.contains(key)) {
                    throw std::logic_error("sigma left the class: orbit of " + format_entries(m) +
                                           " contains the out-of-class canonical permutation " +
                                           format_entries(cur));
                }
                visited.insert(key);
            }
            if (steps > cap) {
                throw std::logic_error("sigma orbit of " + format_entries(m) +
                                       " did not close within n*n steps");
            }
        } while (cur != m);

        const int d = static_cast<int>(std::gcd(static_cast<std::uint64_t>(n), steps));
        if (steps != static_cast<std::uint64_t>(n - k) * static_cast<std::uint64_t>(d)) {
            throw std::logic_error("orbit of " + format_entries(m) + " has period " +
                                   std::to_string(steps) + ", violating period = (n-k)*gcd(n, period)");
        }
        if (canonical != static_cast<std::uint64_t>(d)) {
            throw std::logic_error("orbit of " + format_entries(m) + " with period " +
                                   std::to_string(steps) + " contains " + std::to_string(canonical) +
                                   " canonical members, expected d = " + std::to_string(d));
        }

        census.alpha[d] += 1;
        OrbitRecord rec;
        rec.op = OperatorKind::sigma;
        rec.period = steps;
        rec.members = steps;
        rec.canonical_count = canonical;
        rec.divisor_d = d;
        census.orbits.push_back(OrbitCensusEntry{Permutation(m), rec});
    }
    return census;
}

}  // namespace pap
