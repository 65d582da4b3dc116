#include "palstruct/reconstruct.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "palstruct/errors.hpp"

namespace palstruct {

std::string reconstruct_min(const pal_array& a) {
    a.validate();
    const size_t n = a.n;
    std::string out(n, '\0');
    if (n == 0) return out;

    // exclusions[i] lists positions j < i whose symbol must differ from the
    // one at i: each maximal palindrome [j + 1, i - 1] would grow otherwise.
    // Palindromes touching either text edge constrain nothing.
    std::vector<std::vector<uint32_t>> exclusions(n);
    for (uint32_t c = 0; c < a.centers(); ++c) {
        const size_t s = span_start(c, a[c]);
        const size_t e = span_end(c, a[c]);
        if (s >= 1 && e + 1 <= n - 1) exclusions[e + 1].push_back(uint32_t(s - 1));
    }

    // Rightmost character reached by any palindrome centered strictly left
    // of the position being decided; that palindrome pins the position to
    // its mirror image.
    size_t best_end = 0;
    uint32_t best_center = 0;
    bool have_cover = false;
    uint32_t scanned = 0;

    std::vector<int64_t> stamp(256, -1);
    for (size_t i = 0; i < n; ++i) {
        while (scanned < 2 * i) {
            if (a[scanned] > 0) {
                const size_t e = span_end(scanned, a[scanned]);
                if (!have_cover || e > best_end) {
                    best_end = e;
                    best_center = scanned;
                    have_cover = true;
                }
            }
            ++scanned;
        }
        if (have_cover && best_end >= i) {
            const char chosen = out[best_center - i];
            for (const uint32_t j : exclusions[i])
                if (out[j] == chosen)
                    throw invalid_array_error("no text matches: position " + std::to_string(i) +
                                              " is pinned to an excluded symbol");
            out[i] = chosen;
            continue;
        }
        for (const uint32_t j : exclusions[i]) stamp[(unsigned char)out[j]] = int64_t(i);
        unsigned sym = 'a';
        while (sym < 256 && stamp[sym] == int64_t(i)) ++sym;
        if (sym >= 256)
            throw invalid_array_error("no text matches: every symbol is excluded at position " +
                                      std::to_string(i));
        out[i] = char(sym);
    }

    // The greedy pass only enforces local constraints; the full table is
    // the final authority.
    if (manacher(out) != a) throw invalid_array_error("no text matches this palindrome table");
    return out;
}

std::string zimin_pal(const std::vector<std::string>& parts) {
    if (parts.empty()) throw validation_error("at least one part is required");
    uint64_t total = 0;
    for (const auto& p : parts) {
        if (p.empty()) throw validation_error("parts must be nonempty");
        if (!std::equal(p.begin(), p.end(), p.rbegin()))
            throw validation_error("parts must be palindromes");
    }
    for (size_t i = 0; i < parts.size(); ++i) {
        total = (i == 0 ? 0 : 2 * total) + parts[i].size();
        if (total > (uint64_t(1) << 28)) throw bounds_error("result would exceed 2^28 characters");
    }
    std::string w = parts[0];
    for (size_t i = 1; i < parts.size(); ++i) {
        std::string next;
        next.reserve(2 * w.size() + parts[i].size());
        next += w;
        next += parts[i];
        next += w;
        w = std::move(next);
    }
    return w;
}

uint64_t ipf(uint32_t k) {
    if (k == 0) throw validation_error("degree starts at 1");
    if (k == 1) return 1;
    if (k > 62) throw bounds_error("ipf(" + std::to_string(k) + ") does not fit in 64 bits");
    return (uint64_t(1) << (k - 2)) + 1;
}

uint32_t zp_prefix_degree(const std::string& text, size_t len) {
    if (len > text.size()) throw bounds_error("prefix length exceeds the text");
    if (len == 0) return 0;
    const pal_array a = manacher(text.substr(0, len));
    // The suffix of length m ends at character len - 1, so it is centered
    // at 2*len - m - 1; it is palindromic when the maximal palindrome there
    // covers it.  Greedily extending the chain with the smallest admissible
    // suffix is optimal: a smaller link never tightens a later threshold.
    uint32_t deg = 0;
    uint64_t next_ok = 1;
    for (uint64_t m = 1; m <= len; ++m) {
        if (m < next_ok) continue;
        if (a[size_t(2 * len - m - 1)] >= m) {
            ++deg;
            next_ok = std::max(m + 1, 2 * m - 1);
        }
    }
    return deg;
}

std::vector<bridging_pal> shortest_bridging_pals(const std::string& t, size_t pos) {
    if (pos == 0 || pos > t.size()) throw bounds_error("position must lie in [1, n]");
    const pal_array a = manacher(t);
    for (uint32_t c = 0; c < 2 * pos && c < a.centers(); ++c)
        if (a[c] > 0 && span_end(c, a[c]) >= pos)
            throw contract_error("position is reached by an earlier palindrome");

    std::vector<bridging_pal> out;
    bool seen[256] = {};
    for (size_t l = 0; l < pos; ++l) {
        // stretch [pos - l, pos - 1]; its center is 2*pos - l - 1, except
        // that the empty stretch needs no lookup at all
        if (l > 0 && a[2 * pos - l - 1] < l) continue;
        const unsigned char sym = (unsigned char)t[pos - 1 - l];
        if (!seen[sym]) {
            seen[sym] = true;
            out.push_back({t[pos - 1 - l], uint32_t(l)});
        }
    }
    return out;
}

}  // namespace palstruct
