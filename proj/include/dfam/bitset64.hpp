#pragma once
// Bitmask representation of subsets of [n] = {1,...,n}, n <= 64.
// Element i is present iff bit (i-1) is set.  All set algebra is
// single-word; the canonical order on sets is numeric order of the mask.

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace dfam {

using Mask = std::uint64_t;

constexpr int MAX_GROUND = 64;

inline int popcount(Mask m) { return std::popcount(m); }

// All of [n] as a mask.  n = 64 needs the shift guard.
inline Mask full_mask(int n) {
    if (n < 0 || n > MAX_GROUND) throw std::invalid_argument("ground set size out of range");
    return n == 64 ? ~Mask{0} : ((Mask{1} << n) - 1);
}

inline Mask bit_of(int element) {
    if (element < 1 || element > MAX_GROUND) throw std::invalid_argument("element out of range");
    return Mask{1} << (element - 1);
}

inline bool has_element(Mask m, int element) { return (m & bit_of(element)) != 0; }

inline Mask mask_of(const std::vector<int>& elements) {
    Mask m = 0;
    for (int e : elements) m |= bit_of(e);
    return m;
}

// Elements of a mask in increasing order, 1-based.
inline std::vector<int> elements_of(Mask m) {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(popcount(m)));
    while (m) {
        int b = std::countr_zero(m);
        out.push_back(b + 1);
        m &= m - 1;
    }
    return out;
}

// "1 4 7" style rendering; the empty set prints as "-".
inline std::string format_set(Mask m) {
    if (m == 0) return "-";
    std::string s;
    for (int e : elements_of(m)) {
        if (!s.empty()) s += ' ';
        s += std::to_string(e);
    }
    return s;
}

// Next k-subset mask in numeric order (Gosper's hack).  The caller bounds the
// iteration count; past the last k-subset of [n] the result is meaningless.
inline Mask next_ksubset(Mask m) {
    Mask c = m & (~m + 1);
    Mask r = m + c;
    return (((r ^ m) >> 2) / c) | r;
}

} // namespace dfam
