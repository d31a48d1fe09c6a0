#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pap {

/// Parity of a permutation: even/odd according to its inversion count.
enum class Parity { even, odd };

const char* to_string(Parity parity);

/// A permutation of {1, ..., n} in one-line notation a_1 a_2 ... a_n.
/// Entries are 1-based values; positions are addressed with 0-based indices.
/// Construction validates the bijection property, so a Permutation value is
/// always well formed. Values are immutable and freely shareable.
class Permutation {
public:
    /// Exactness ceiling: n! and all derived counts fit in 64 bits up to here.
    static constexpr int kMaxN = 20;

    /// Validates that `entries` is a bijection on {1,...,n} with 1 <= n <= kMaxN.
    /// Throws std::invalid_argument with a diagnostic naming the duplicated or
    /// missing value otherwise.
    explicit Permutation(std::vector<int> entries);

    static Permutation identity(int n);

    /// Accepts contiguous digits ("45316278", n <= 9) or space-separated
    /// integers ("10 3 1 ..."), mirroring how the one-line literals are written.
    static Permutation parse(std::string_view text);

    int size() const { return static_cast<int>(entries_.size()); }

    /// Entry at 0-based position `pos`.
    int operator[](int pos) const { return entries_[static_cast<std::size_t>(pos)]; }

    const std::vector<int>& entries() const { return entries_; }
    std::span<const int> span() const { return entries_; }

    /// Contiguous digits for n <= 9, space-separated otherwise.
    std::string str() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> entries_;
};

std::ostream& operator<<(std::ostream& os, const Permutation& p);

/// Formats a raw entry span the same way Permutation::str does.
std::string format_entries(std::span<const int> entries);

// Per-permutation statistics. The span overloads exist for enumeration loops
// that work on raw buffers; the Permutation overloads forward to them.

/// Number of positions i with a_i < a_{i+1}.
int ascent_count(std::span<const int> entries);
int ascent_count(const Permutation& p);

/// Number of pairs i < j with a_i > a_j.
int inversion_count(std::span<const int> entries);
int inversion_count(const Permutation& p);

Parity parity(std::span<const int> entries);
Parity parity(const Permutation& p);

/// True iff adjacent entries alternate between even and odd values
/// (parity alternating); vacuously true for n = 1.
bool is_pap(std::span<const int> entries);
bool is_pap(const Permutation& p);

/// True iff a_n = n.
bool is_canonical(std::span<const int> entries);
bool is_canonical(const Permutation& p);

/// Group composition r_i = p_{q_i}; requires equal sizes.
Permutation compose(const Permutation& p, const Permutation& q);
Permutation inverse(const Permutation& p);

/// Entries in reverse order: a_n ... a_2 a_1. Sends ascent count k to n-1-k
/// and preserves the parity-alternating property.
Permutation reverse(const Permutation& p);

/// Split of a permutation into A.B.C where A is the longest parity-alternating
/// prefix, C the longest parity-alternating suffix and B the remainder between
/// them. For a permutation that is itself parity alternating there is no break
/// anywhere; that degenerate case is a single block covering everything and is
/// marked with `whole` so callers cannot confuse the two shapes.
struct PapDecomposition {
    bool whole = false;
    int n = 0;
    int a_end = 0;    ///< A = positions [0, a_end)      (ignored when whole)
    int c_begin = 0;  ///< C = positions [c_begin, n)    (ignored when whole)

    int a_len() const { return whole ? n : a_end; }
    int b_len() const { return whole ? 0 : c_begin - a_end; }
    int c_len() const { return whole ? n : n - c_begin; }
};

PapDecomposition decompose_pap(std::span<const int> entries);
PapDecomposition decompose_pap(const Permutation& p);

}  // namespace pap
