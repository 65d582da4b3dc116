#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "doctest.h"
#include "palstruct/errors.hpp"
#include "palstruct/index.hpp"
#include "palstruct/manacher.hpp"
#include "test_util.hpp"

using namespace palstruct;

namespace {

void check_index(const std::string& text) {
    const pal_array a = manacher(text);
    const pal_index ix = pal_index::build(text, a);
    CHECK(ix.decode_all() == a);
}

size_t max_hops(const pal_index& ix) {
    size_t worst = 0;
    for (size_t c = 0; c < ix.centers(); ++c) {
        size_t h = 0;
        ix.length_at(uint32_t(c), &h);
        worst = std::max(worst, h);
    }
    return worst;
}

// payload position and length of each top-level section
std::map<std::string, std::pair<size_t, size_t>> section_map(const std::vector<uint8_t>& bytes) {
    std::map<std::string, std::pair<size_t, size_t>> out;
    byte_reader r(bytes);
    r.raw(4);
    r.u8();
    r.u64();
    while (!r.done()) {
        const std::string tag(reinterpret_cast<const char*>(r.raw(4)), 4);
        const uint64_t len = r.u64();
        out[tag] = {r.pos, size_t(len)};
        r.raw(size_t(len));
    }
    return out;
}

}  // namespace

TEST_CASE("every center answers exactly on short patterns") {
    for (size_t n = 0; n <= 10; ++n) {
        testutil::for_each_canonical(n, 3, [](const std::string& s) { check_index(s); });
    }
    check_index("");
    check_index("a");
    check_index("aabaabaa");
    check_index("abaabaaba");
    check_index("bbaaabb");
}

TEST_CASE("every center answers exactly on random and structured texts") {
    testutil::xorshift64s rng(20260816);
    for (int sigma : {1, 2, 3, 4, 26}) {
        for (int rep = 0; rep < 3; ++rep) {
            check_index(testutil::random_string(rng, 500 + rng.below(4000), sigma));
        }
    }
    check_index(std::string(10000, 'z'));
    std::string alt;
    for (int i = 0; i < 6000; ++i) alt += (i % 2 ? 'b' : 'a');
    check_index(alt);
    std::string fib = "b", prev = "a";
    while (fib.size() < 8000) {
        std::string next = fib + prev;
        prev = std::move(fib);
        fib = std::move(next);
    }
    check_index(fib);
}

TEST_CASE("queries stay within the hop budget") {
    testutil::xorshift64s rng(777);
    for (int sigma : {1, 2, 4}) {
        const auto s = testutil::random_string(rng, 3000 + rng.below(3000), sigma);
        CHECK(max_hops(pal_index::build(s)) <= 10);
    }
    CHECK(max_hops(pal_index::build(std::string(5000, 'x'))) <= 10);
}

TEST_CASE("exceptions stay rare") {
    testutil::xorshift64s rng(31337);
    for (int sigma : {2, 3, 26}) {
        const auto s = testutil::random_string(rng, 20000, sigma);
        const pal_index ix = pal_index::build(s);
        const auto st = ix.stats();
        CHECK(st.exceptions * 100 <= st.centers);
    }
}

TEST_CASE("stats add up") {
    const std::string s = "aabaabaa";
    const pal_index ix = pal_index::build(s);
    const auto st = ix.stats();
    CHECK(st.n == 8);
    CHECK(st.centers == 15);
    CHECK(st.stretch_records == 2);
    CHECK(st.centric_centers == 7);  // {0,1,2} plus {1,4,7,10,13}
    CHECK(st.plain_entries + st.period_entries + st.exceptions >= st.centers - st.centric_centers);
    CHECK(st.space_bits > 0);
}

TEST_CASE("space stays bounded and flat") {
    testutil::xorshift64s rng(99);
    double per_n[2] = {0, 0};
    const size_t sizes[2] = {4096, 8192};
    for (int i = 0; i < 2; ++i) {
        const auto s = testutil::random_string(rng, sizes[i], 2);
        const auto st = pal_index::build(s).stats();
        per_n[i] = double(st.space_bits) / double(st.n);
        CHECK(per_n[i] <= 640.0);
    }
    CHECK(per_n[0] / per_n[1] > 0.95);
    CHECK(per_n[0] / per_n[1] < 1.05);
}

TEST_CASE("serialized index round-trips byte for byte") {
    testutil::xorshift64s rng(5150);
    for (const std::string& s :
         {std::string("aabaabaa"), std::string(""), std::string("q"),
          testutil::random_string(rng, 2500, 2), testutil::random_string(rng, 1777, 26)}) {
        const pal_index ix = pal_index::build(s);
        const auto bytes = ix.save();
        REQUIRE(bytes.size() >= 13);
        CHECK(std::string(bytes.begin(), bytes.begin() + 4) == "PALZ");
        CHECK(bytes[4] == 0x01);
        uint64_t n = 0;
        for (int i = 0; i < 8; ++i) n |= uint64_t(bytes[5 + size_t(i)]) << (8 * i);
        CHECK(n == s.size());

        const pal_index back = pal_index::load(bytes);
        CHECK(back.save() == bytes);
        CHECK(back.decode_all() == manacher(s));
        CHECK(back.stats().exceptions == ix.stats().exceptions);
    }
}

TEST_CASE("corrupt index streams are rejected") {
    const pal_index ix = pal_index::build(std::string("aabaabaa"));
    const auto good = ix.save();

    SUBCASE("any truncation fails") {
        for (size_t cut = 0; cut < good.size(); ++cut) {
            const std::vector<uint8_t> part(good.begin(), good.begin() + ptrdiff_t(cut));
            CHECK_THROWS_AS(pal_index::load(part), corrupt_stream_error);
        }
    }
    SUBCASE("wrong magic") {
        auto bad = good;
        bad[0] ^= 0x20;
        CHECK_THROWS_AS(pal_index::load(bad), corrupt_stream_error);
    }
    SUBCASE("unknown version") {
        auto bad = good;
        bad[4] = 0x02;
        CHECK_THROWS_AS(pal_index::load(bad), corrupt_stream_error);
    }
    SUBCASE("header length disagrees with the stores") {
        auto bad = good;
        bad[5] = 9;  // claims n = 9 over structures built for n = 8
        CHECK_THROWS_AS(pal_index::load(bad), corrupt_stream_error);
    }
    SUBCASE("section tag destroyed") {
        auto bad = good;
        const auto sections = section_map(good);
        bad[sections.at("CFPD").first - 12] = 'X';
        CHECK_THROWS_AS(pal_index::load(bad), corrupt_stream_error);
    }
    SUBCASE("mark classes out of order") {
        auto bad = good;
        const auto sections = section_map(good);
        // first class id byte sits right after the u32 class count
        bad[sections.at("CLSV").first + 4] = 1;
        CHECK_THROWS_AS(pal_index::load(bad), corrupt_stream_error);
    }
    SUBCASE("record field width of zero") {
        auto bad = good;
        const auto sections = section_map(good);
        bad[sections.at("PPDT").first + 5] = 0;
        CHECK_THROWS_AS(pal_index::load(bad), corrupt_stream_error);
    }
    SUBCASE("exception count with no payload") {
        auto bad = good;
        const auto sections = section_map(good);
        bad[sections.at("EXCP").first] = 1;
        CHECK_THROWS_AS(pal_index::load(bad), corrupt_stream_error);
    }
    SUBCASE("trailing garbage") {
        auto bad = good;
        bad.push_back(0);
        CHECK_THROWS_AS(pal_index::load(bad), corrupt_stream_error);
    }
}

TEST_CASE("index bounds and build preconditions") {
    const pal_index ix = pal_index::build(std::string("abc"));
    CHECK_THROWS_AS(ix.length_at(5), bounds_error);
    const pal_index empty = pal_index::build(std::string(""));
    CHECK(empty.centers() == 0);
    CHECK_THROWS_AS(empty.length_at(0), bounds_error);
    CHECK_THROWS_AS(pal_index::build("ab", manacher("abc")), validation_error);
}
