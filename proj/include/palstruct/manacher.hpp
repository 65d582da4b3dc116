#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

namespace palstruct {

// Length array over the centers of a string of n characters.  Centers are
// counted in the interleaved view "c0 | c1 | c2 ...": index c with
// 0 <= c < 2n-1 is the character c/2 when c is even and the gap between
// characters (c-1)/2 and (c+1)/2 when c is odd.  lengths[c] is the length,
// in characters, of the longest palindrome centered there, so even centers
// carry odd lengths >= 1 and odd centers carry even lengths >= 0.
struct pal_array {
    size_t n = 0;                   // characters in the source string
    std::vector<uint32_t> lengths;  // 2n-1 entries, empty when n == 0

    size_t centers() const { return n == 0 ? 0 : 2 * n - 1; }
    uint32_t operator[](size_t c) const { return lengths[c]; }

    // distance from center c to the nearest edge of the interleaved view;
    // the longest length a palindrome at c can have is cap(c) + 1
    uint32_t cap(size_t c) const;

    // throws invalid_array_error when the shape, parity or bounds are off
    void validate() const;

    bool operator==(const pal_array&) const = default;
};

// Radius of center c in the interleaved view.  A palindrome of length len
// spans min(len, cap) interleaved positions on each side of c; len == cap
// cannot happen because the two always differ in parity, which is what makes
// the conversion below exact.
uint32_t radius_from_length(uint32_t len, uint32_t cap);
uint32_t length_from_radius(uint32_t r, uint32_t cap);

// character span [start, end] of the palindrome of length len > 0 at center c
inline size_t span_start(size_t c, uint32_t len) { return (c + 1 - len) / 2; }
inline size_t span_end(size_t c, uint32_t len) { return (c - 1 + len) / 2; }

// O(n) length array (works on arbitrary bytes, including '\0')
pal_array manacher(std::string_view text);

// quadratic reference: every center grown character by character
pal_array brute_force_pals(std::string_view text);
// same answers; centers are shared out across OpenMP threads when available
pal_array brute_force_pals_parallel(std::string_view text);

// One record of the change list of longest palindromic suffixes: walking the
// interleaved view left to right, the suffix-palindrome center of the prefix
// ending at position p only ever moves right; `pos` is a p where it moved.
struct change_rec {
    uint32_t pos;
    uint32_t center;
    bool operator==(const change_rec&) const = default;
};

// Change list computed from the length array alone.  For the prefix ending
// at interleaved position p the center of its longest palindromic suffix is
// the smallest c >= ceil(p/2) whose palindrome reaches p; both sides of that
// condition are monotone in p, so one forward sweep suffices.
std::vector<change_rec> change_list(const pal_array& a);

// convenience wrapper: manacher() + change_list()
std::vector<change_rec> mps_change_list(std::string_view text);

}  // namespace palstruct
