#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "palstruct/manacher.hpp"

namespace palstruct {

// A maximal periodic stretch of the text, anchored to the largest span of
// whole periods that shares the discovering palindrome's alignment (the
// "covered" span).  covered = (q0 q1)^reps q0 with both factors palindromic
// and |q0 q1| the minimal period.  ext_left/ext_right are the sub-period
// overhangs the full stretch keeps outside the covered span, and ext_center
// counts the character pairs that keep matching beyond the stretch around
// its exact middle (only meaningful when that middle is a centric center).
struct pal_run {
    uint32_t start;       // first character of the covered span
    uint32_t q0_len;
    uint32_t q1_len;
    uint32_t reps;
    uint32_t ext_left;
    uint32_t ext_right;
    uint32_t ext_center;

    uint32_t period() const { return q0_len + q1_len; }
    uint32_t covered() const { return reps * period() + q0_len; }

    bool operator==(const pal_run&) const = default;
};

// smallest p with s[i] == s[i+p] wherever both sides exist (border rule)
uint32_t minimal_period(std::string_view s);

// Every maximal periodic stretch discovered from some center whose maximal
// palindrome is at least twice its minimal period; one descriptor per
// (stretch start, period) pair.
std::vector<pal_run> detect_runs(std::string_view text, const pal_array& a);

// The centers this run is responsible for: an arithmetic progression with
// step = period across the covered span.  Its palindromes sweep through the
// stretch one period at a time, which is exactly what pins the phase.
bool is_centric(const pal_run& run, size_t c);
std::vector<uint32_t> centric_centers(const pal_run& run);

// Exact palindrome length at a centric center of a text of n characters:
// both arms grow together until one hits the stretch edge (overhangs
// included); dead center, the whole stretch plus its outside matches.
// Throws contract_error for centers the run is not responsible for.
uint32_t run_length_at(const pal_run& run, size_t c, size_t n);

}  // namespace palstruct
