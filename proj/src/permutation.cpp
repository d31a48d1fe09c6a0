#include "pap/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace pap {

const char* to_string(Parity parity) {
    return parity == Parity::even ? "even" : "odd";
}

Permutation::Permutation(std::vector<int> entries) : entries_(std::move(entries)) {
    const int n = size();
    if (n < 1) {
        throw std::invalid_argument("permutation must have at least one entry");
    }
    if (n > kMaxN) {
        throw std::invalid_argument("permutation size " + std::to_string(n) +
                                    " exceeds the supported maximum " + std::to_string(kMaxN));
    }
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    for (int value : entries_) {
        if (value < 1 || value > n) {
            throw std::invalid_argument("entry " + std::to_string(value) +
                                        " is outside 1.." + std::to_string(n));
        }
        if (seen[static_cast<std::size_t>(value)]) {
            // Name the missing value too; a duplicate always implies one.
            int missing = 0;
            std::vector<char> present(static_cast<std::size_t>(n) + 1, 0);
            for (int v : entries_) {
                if (v >= 1 && v <= n) present[static_cast<std::size_t>(v)] = 1;
            }
            for (int v = 1; v <= n; ++v) {
                if (!present[static_cast<std::size_t>(v)]) { missing = v; break; }
            }
            throw std::invalid_argument("value " + std::to_string(value) +
                                        " appears twice (" + std::to_string(missing) +
                                        " is missing)");
        }
        seen[static_cast<std::size_t>(value)] = 1;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> e(static_cast<std::size_t>(n));
    std::iota(e.begin(), e.end(), 1);
    return Permutation(std::move(e));
}

Permutation Permutation::parse(std::string_view text) {
    std::vector<int> entries;
    const bool has_space = text.find_first_of(" \t") != std::string_view::npos;
    if (has_space) {
        std::istringstream in{std::string(text)};
        std::string token;
        while (in >> token) {
            int value = 0;
            auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
            if (ec != std::errc{} || ptr != token.data() + token.size()) {
                throw std::invalid_argument("invalid permutation token '" + token + "'");
            }
            entries.push_back(value);
        }
    } else {
        for (char ch : text) {
            if (!std::isdigit(static_cast<unsigned char>(ch))) {
                throw std::invalid_argument(std::string("invalid character '") + ch +
                                            "' in permutation literal");
            }
            entries.push_back(ch - '0');
        }
    }
    if (entries.empty()) {
        throw std::invalid_argument("empty permutation text");
    }
    return Permutation(std::move(entries));
}

std::string Permutation::str() const {
    return format_entries(entries_);
}

std::ostream& operator<<(std::ostream& os, const Permutation& p) {
    return os << p.str();
}

std::string format_entries(std::span<const int> entries) {
    std::string out;
    const bool compact = entries.size() <= 9;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (!compact && i > 0) out += ' ';
        out += std::to_string(entries[i]);
    }
    return out;
}

int ascent_count(std::span<const int> entries) {
    int count = 0;
    for (std::size_t i = 0; i + 1 < entries.size(); ++i) {
        count += entries[i] < entries[i + 1];
    }
    return count;
}

int inversion_count(std::span<const int> entries) {
    int count = 0;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        for (std::size_t j = i + 1; j < entries.size(); ++j) {
            count += entries[i] > entries[j];
        }
    }
    return count;
}

Parity parity(std::span<const int> entries) {
    return inversion_count(entries) % 2 == 0 ? Parity::even : Parity::odd;
}

bool is_pap(std::span<const int> entries) {
    for (std::size_t i = 0; i + 1 < entries.size(); ++i) {
        if (((entries[i] ^ entries[i + 1]) & 1) == 0) return false;
    }
    return true;
}

bool is_canonical(std::span<const int> entries) {
    return entries.back() == static_cast<int>(entries.size());
}

int ascent_count(const Permutation& p) { return ascent_count(p.span()); }
int inversion_count(const Permutation& p) { return inversion_count(p.span()); }
Parity parity(const Permutation& p) { return parity(p.span()); }
bool is_pap(const Permutation& p) { return is_pap(p.span()); }
bool is_canonical(const Permutation& p) { return is_canonical(p.span()); }

Permutation compose(const Permutation& p, const Permutation& q) {
    if (p.size() != q.size()) {
        throw std::invalid_argument("compose: size mismatch (" + std::to_string(p.size()) +
                                    " vs " + std::to_string(q.size()) + ")");
    }
    std::vector<int> r(static_cast<std::size_t>(p.size()));
    for (int i = 0; i < p.size(); ++i) {
        r[static_cast<std::size_t>(i)] = p[q[i] - 1];
    }
    return Permutation(std::move(r));
}

Permutation inverse(const Permutation& p) {
    std::vector<int> r(static_cast<std::size_t>(p.size()));
    for (int i = 0; i < p.size(); ++i) {
        r[static_cast<std::size_t>(p[i] - 1)] = i + 1;
    }
    return Permutation(std::move(r));
}

Permutation reverse(const Permutation& p) {
    std::vector<int> r(p.entries().rbegin(), p.entries().rend());
    return Permutation(std::move(r));
}

PapDecomposition decompose_pap(std::span<const int> entries) {
    const int n = static_cast<int>(entries.size());
    PapDecomposition d;
    d.n = n;
    int first_break = -1;  // break between positions i and i+1
    int last_break = -1;
    for (int i = 0; i + 1 < n; ++i) {
        if (((entries[static_cast<std::size_t>(i)] ^
              entries[static_cast<std::size_t>(i) + 1]) & 1) == 0) {
            if (first_break < 0) first_break = i;
            last_break = i;
        }
    }
    if (first_break < 0) {
        d.whole = true;
        d.a_end = n;
        d.c_begin = 0;
        return d;
    }
    d.whole = false;
    d.a_end = first_break + 1;
    d.c_begin = last_break + 1;
    return d;
}

PapDecomposition decompose_pap(const Permutation& p) { return decompose_pap(p.span()); }

}  // namespace pap
