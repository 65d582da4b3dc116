#include "palstruct/manacher.hpp"

#include <algorithm>
#include <string>

#include "palstruct/errors.hpp"

namespace palstruct {

uint32_t pal_array::cap(size_t c) const {
    return uint32_t(std::min(c, 2 * n - 2 - c));
}

void pal_array::validate() const {
    if (lengths.size() != centers())
        throw invalid_array_error("length array has " + std::to_string(lengths.size()) +
                                  " entries, expected " + std::to_string(centers()));
    for (size_t c = 0; c < lengths.size(); ++c) {
        const uint32_t len = lengths[c];
        if ((len & 1) == (c & 1))
            throw invalid_array_error("length " + std::to_string(len) + " at center " +
                                      std::to_string(c) + " has the wrong parity");
        // odd parity at even centers already forces len >= 1 there
        if (len > cap(c) + 1)
            throw invalid_array_error("length " + std::to_string(len) + " at center " +
                                      std::to_string(c) + " sticks out of the text");
    }
}

uint32_t radius_from_length(uint32_t len, uint32_t cap) {
    return std::min(len, cap);
}

uint32_t length_from_radius(uint32_t r, uint32_t cap) {
    // r == cap means the palindrome is flush against a text edge, where the
    // interleaved view cuts off the outermost character pair's worth of span
    return r + (r == cap ? 1 : 0);
}

pal_array manacher(std::string_view text) {
    const size_t n = text.size();
    pal_array a;
    a.n = n;
    if (n == 0) return a;

    // Virtual separator-padded string of length 2n+1; position j holds
    // text[(j-1)/2] when odd, a separator when even.  Compared positions
    // always share a parity (their distance is even), so separators never
    // meet characters and no sentinel byte has to be reserved.
    const size_t m = 2 * n + 1;
    auto same = [&](size_t x, size_t y) {
        return (x & 1) == 0 || text[(x - 1) / 2] == text[(y - 1) / 2];
    };

    std::vector<uint32_t> rad(m, 0);
    size_t center = 0, right = 0;  // palindrome with the furthest right edge
    for (size_t j = 1; j < m; ++j) {
        size_t r = j < right ? std::min(size_t(rad[2 * center - j]), right - j) : 0;
        while (j > r && j + r + 1 < m && same(j - r - 1, j + r + 1)) ++r;
        rad[j] = uint32_t(r);
        if (j + r > right) {
            center = j;
            right = j + r;
        }
    }

    // the radius around padded position c+1 is exactly the palindrome length
    // in characters at center c
    a.lengths.assign(2 * n - 1, 0);
    for (size_t c = 0; c + 1 < m - 1; ++c) a.lengths[c] = rad[c + 1];
    return a;
}

namespace {

uint32_t grow_center(std::string_view text, ptrdiff_t c) {
    const ptrdiff_t n = ptrdiff_t(text.size());
    ptrdiff_t lo = (c + 1) / 2, hi = c / 2;  // empty span when c is odd
    while (lo > 0 && hi + 1 < n && text[size_t(lo - 1)] == text[size_t(hi + 1)]) {
        --lo;
        ++hi;
    }
    return uint32_t(hi - lo + 1);
}

}  // namespace

pal_array brute_force_pals(std::string_view text) {
    pal_array a;
    a.n = text.size();
    if (a.n == 0) return a;
    a.lengths.resize(2 * a.n - 1);
    for (ptrdiff_t c = 0; c < ptrdiff_t(a.lengths.size()); ++c)
        a.lengths[size_t(c)] = grow_center(text, c);
    return a;
}

pal_array brute_force_pals_parallel(std::string_view text) {
    pal_array a;
    a.n = text.size();
    if (a.n == 0) return a;
    a.lengths.resize(2 * a.n - 1);
    const ptrdiff_t total = ptrdiff_t(a.lengths.size());
#pragma omp parallel for schedule(dynamic, 512)
    for (ptrdiff_t c = 0; c < total; ++c)
        a.lengths[size_t(c)] = grow_center(text, c);
    return a;
}

std::vector<change_rec> change_list(const pal_array& a) {
    std::vector<change_rec> out;
    const size_t total = a.centers();
    size_t c = 0;
    for (size_t p = 0; p < total; ++p) {
        // smallest center >= ceil(p/2) that reaches p; never moves left
        c = std::max(c, (p + 1) / 2);
        while (c + radius_from_length(a[c], a.cap(c)) < p) ++c;
        if (p == 0 || out.back().center != c)
            out.push_back({uint32_t(p), uint32_t(c)});
    }
    return out;
}

std::vector<change_rec> mps_change_list(std::string_view text) {
    return change_list(manacher(text));
}

}  // namespace palstruct
