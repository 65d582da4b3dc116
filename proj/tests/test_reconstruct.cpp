#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "palstruct/errors.hpp"
#include "palstruct/manacher.hpp"
#include "palstruct/reconstruct.hpp"
#include "test_util.hpp"

using namespace palstruct;

namespace {

pal_array arr(std::vector<uint32_t> lengths) {
    pal_array a;
    a.n = (lengths.size() + 1) / 2;
    a.lengths = std::move(lengths);
    return a;
}

uint32_t brute_degree(const std::string& s) {
    std::vector<uint64_t> pals;
    for (size_t m = 1; m <= s.size(); ++m) {
        const std::string p = s.substr(s.size() - m, m);
        if (std::equal(p.begin(), p.end(), p.rbegin())) pals.push_back(m);
    }
    uint32_t best = 0;
    const std::function<void(size_t, uint64_t, uint32_t)> go = [&](size_t idx, uint64_t last,
                                                                   uint32_t depth) {
        best = std::max(best, depth);
        for (size_t j = idx; j < pals.size(); ++j)
            if (pals[j] > last && pals[j] + 1 >= 2 * last) go(j + 1, pals[j], depth + 1);
    };
    go(0, 0, 0);
    return best;
}

std::vector<bridging_pal> brute_bridges(const std::string& t, size_t pos) {
    std::vector<bridging_pal> out;
    std::set<char> seen;
    for (size_t l = 0; l < pos; ++l) {
        const std::string stretch = t.substr(pos - l, l);
        if (!std::equal(stretch.begin(), stretch.end(), stretch.rbegin())) continue;
        const char sym = t[pos - 1 - l];
        if (seen.insert(sym).second) out.push_back({sym, uint32_t(l)});
    }
    return out;
}

// true when no palindrome centered left of pos reaches pos
bool independent_at(const std::string& t, size_t pos) {
    const pal_array a = manacher(t);
    for (uint32_t c = 0; c < 2 * pos && c < a.centers(); ++c)
        if (a[c] > 0 && span_end(c, a[c]) >= pos) return false;
    return true;
}

}  // namespace

TEST_CASE("worked reconstructions") {
    CHECK(reconstruct_min(arr({})) == "");
    CHECK(reconstruct_min(arr({1})) == "a");
    CHECK(reconstruct_min(arr({1, 2, 1})) == "aa");
    CHECK(reconstruct_min(arr({1, 0, 1})) == "ab");
    CHECK(reconstruct_min(arr({1, 0, 3, 0, 1, 0, 1})) == "abac");
    CHECK(reconstruct_min(arr({1, 0, 3, 0, 1, 0, 7, 0, 1, 0, 3, 0, 1})) == "abacaba");
}

TEST_CASE("rebuild matches the smallest witness on every short pattern") {
    for (size_t n = 1; n <= 9; ++n) {
        // canonical enumeration runs in lexicographic order, so the first
        // witness of each table is the smallest one
        std::map<std::vector<uint32_t>, std::string> smallest;
        testutil::for_each_canonical(n, n, [&](const std::string& s) {
            smallest.emplace(manacher(s).lengths, s);
        });
        for (const auto& [lengths, expect] : smallest)
            CHECK(reconstruct_min(arr(lengths)) == expect);
    }
}

TEST_CASE("well-shaped but impossible tables are refused") {
    // adjacent equalities force S[0] == S[2], the middle 1 forbids it
    CHECK_THROWS_AS(reconstruct_min(arr({1, 2, 1, 2, 1})), invalid_array_error);

    // sweep every parity- and bound-respecting table: it either rebuilds to
    // a string with exactly that table or is refused
    for (size_t n = 2; n <= 6; ++n) {
        std::set<std::vector<uint32_t>> realizable;
        testutil::for_each_canonical(n, n, [&](const std::string& s) {
            realizable.insert(manacher(s).lengths);
        });
        std::vector<uint32_t> lengths(2 * n - 1);
        const std::function<void(size_t)> sweep = [&](size_t c) {
            if (c == lengths.size()) {
                if (realizable.count(lengths)) {
                    CHECK(manacher(reconstruct_min(arr(lengths))).lengths == lengths);
                } else {
                    CHECK_THROWS_AS(reconstruct_min(arr(lengths)), invalid_array_error);
                }
                return;
            }
            const uint32_t cap = uint32_t(std::min(c, 2 * n - 2 - c));
            for (uint32_t len = (c % 2 == 0) ? 1 : 0; len <= cap + 1; len += 2) {
                lengths[c] = len;
                sweep(c + 1);
            }
        };
        sweep(0);
    }
}

TEST_CASE("malformed tables fail validation before any rebuild") {
    CHECK_THROWS_AS(reconstruct_min(arr({2})), invalid_array_error);
    CHECK_THROWS_AS(reconstruct_min(arr({1, 4, 1})), invalid_array_error);
}

TEST_CASE("random round trips stay exact and never grow the text") {
    testutil::xorshift64s rng(987654321);
    for (int sigma : {1, 2, 3, 4, 26}) {
        for (int rep = 0; rep < 5; ++rep) {
            const auto s = testutil::random_string(rng, 200 + rng.below(2000), sigma);
            const auto a = manacher(s);
            const auto r = reconstruct_min(a);
            CHECK(manacher(r) == a);
            CHECK(r <= s);
        }
    }
}

TEST_CASE("rebuilt text respects the alphabet growth bound") {
    testutil::xorshift64s rng(1122334455);
    for (int rep = 0; rep < 12; ++rep) {
        const size_t n = 64 + rng.below(4000);
        const auto s = testutil::random_string(rng, n, 1 + rng.below(4));
        const auto r = reconstruct_min(manacher(s));
        const std::set<char> distinct(r.begin(), r.end());
        // floor(log2 n) + 2
        size_t bound = 2;
        for (size_t m = n; m > 1; m >>= 1) ++bound;
        CHECK(distinct.size() <= bound);
    }
}

TEST_CASE("nested palindrome words") {
    CHECK(zimin_pal({"a"}) == "a");
    CHECK(zimin_pal({"a", "b"}) == "aba");
    CHECK(zimin_pal({"a", "b", "c"}) == "abacaba");
    CHECK(zimin_pal({"aa", "b"}) == "aabaa");
    CHECK(zimin_pal({"a", "bab"}) == "ababa");
    CHECK_THROWS_AS(zimin_pal({}), validation_error);
    CHECK_THROWS_AS(zimin_pal({"a", ""}), validation_error);
    CHECK_THROWS_AS(zimin_pal({"ab"}), validation_error);
}

TEST_CASE("shortest text for each nesting degree") {
    CHECK_THROWS_AS(ipf(0), validation_error);
    CHECK(ipf(1) == 1);
    CHECK(ipf(2) == 2);
    CHECK(ipf(3) == 3);
    CHECK(ipf(4) == 5);
    CHECK(ipf(5) == 9);
    CHECK(ipf(10) == 257);
    CHECK_THROWS_AS(ipf(63), bounds_error);

    // exhaustive search over short patterns reproduces the closed form
    std::map<uint32_t, size_t> first_len;
    for (size_t n = 1; n <= 6; ++n) {
        testutil::for_each_canonical(n, 5, [&](const std::string& s) {
            first_len.emplace(zp_prefix_degree(s, s.size()), s.size());
        });
    }
    for (uint32_t k = 1; k <= 4; ++k) CHECK(first_len.at(k) == ipf(k));
}

TEST_CASE("nesting degree of prefixes") {
    CHECK(zp_prefix_degree("abacaba", 0) == 0);
    CHECK(zp_prefix_degree("abacaba", 1) == 1);
    CHECK(zp_prefix_degree("abacaba", 2) == 1);
    CHECK(zp_prefix_degree("abacaba", 3) == 2);
    CHECK(zp_prefix_degree("abacaba", 7) == 3);
    CHECK(zp_prefix_degree("abc", 2) == 1);
    CHECK(zp_prefix_degree("aa", 2) == 2);
    CHECK(zp_prefix_degree("aaaa", 4) == 3);
    CHECK(zp_prefix_degree("aaaaa", 5) == 4);
    CHECK_THROWS_AS(zp_prefix_degree("ab", 3), bounds_error);

    for (size_t n = 1; n <= 8; ++n) {
        testutil::for_each_canonical(n, 3, [](const std::string& s) {
            CHECK(zp_prefix_degree(s, s.size()) == brute_degree(s));
        });
    }
    testutil::xorshift64s rng(4242);
    for (int rep = 0; rep < 40; ++rep) {
        const auto s = testutil::random_string(rng, 1 + rng.below(60), 1 + rng.below(3));
        CHECK(zp_prefix_degree(s, s.size()) == brute_degree(s));
    }
}

TEST_CASE("a fresh symbol needs the degree built up first") {
    // in smallest-witness strings the k-th distinct symbol (0-based) can
    // only appear once the prefix before it has degree at least k - 1: the
    // exclusions that push past 'a'+k-1 are bridging stretches, and those
    // more than double
    for (size_t n = 2; n <= 10; ++n) {
        std::set<std::vector<uint32_t>> done;
        testutil::for_each_canonical(n, 4, [&](const std::string& s) {
            if (!done.insert(manacher(s).lengths).second) return;
            const std::string r = reconstruct_min(manacher(s));
            char top = 'a';
            for (size_t pos = 1; pos < r.size(); ++pos) {
                if (r[pos] <= top) continue;
                top = r[pos];
                const uint32_t k = uint32_t(top - 'a');
                if (k >= 2) CHECK(zp_prefix_degree(r, pos) >= k - 1);
            }
        });
    }
}

TEST_CASE("bridging palindromes at an uncovered position") {
    CHECK(shortest_bridging_pals("ab", 1) == std::vector<bridging_pal>{{'a', 0}});
    CHECK(shortest_bridging_pals("abc", 2) == std::vector<bridging_pal>{{'b', 0}, {'a', 1}});
    CHECK(shortest_bridging_pals("cabacaba", 8) ==
          std::vector<bridging_pal>{{'a', 0}, {'b', 1}, {'c', 3}});

    CHECK_THROWS_AS(shortest_bridging_pals("aba", 2), contract_error);
    CHECK_THROWS_AS(shortest_bridging_pals("ab", 0), bounds_error);
    CHECK_THROWS_AS(shortest_bridging_pals("ab", 3), bounds_error);
}

TEST_CASE("bridging stretches more than double") {
    size_t checked = 0;
    for (size_t n = 1; n <= 8; ++n) {
        testutil::for_each_canonical(n, 3, [&](const std::string& s) {
            for (size_t pos = 1; pos <= s.size(); ++pos) {
                if (!independent_at(s, pos)) continue;
                const auto got = shortest_bridging_pals(s, pos);
                CHECK(got == brute_bridges(s, pos));
                for (size_t k = 0; k + 1 < got.size(); ++k)
                    CHECK(2 * uint64_t(got[k].len) < got[k + 1].len);
                ++checked;
            }
        });
    }
    CHECK(checked > 1000);
}
