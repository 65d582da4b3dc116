#include "palstruct/bitvec.hpp"

#include <vector>

#include "doctest.h"
#include "palstruct/errors.hpp"
#include "test_util.hpp"

using namespace palstruct;

namespace {

std::vector<bool> random_bits(testutil::xorshift64s& rng, size_t n, uint64_t one_in) {
    std::vector<bool> bits(n);
    for (size_t i = 0; i < n; ++i) bits[i] = rng.below(one_in) == 0;
    return bits;
}

void check_against_naive(const std::vector<bool>& bits) {
    const auto v = rs_bitvector::from_bools(bits);
    REQUIRE(v.size() == bits.size());
    size_t count = 0;
    for (size_t i = 0; i < bits.size(); ++i) {
        REQUIRE(v.rank1(i) == count);
        REQUIRE(v.get(i) == bits[i]);
        if (bits[i]) {
            ++count;
            REQUIRE(v.select1(count) == i);
        }
    }
    REQUIRE(v.rank1(bits.size()) == count);
    REQUIRE(v.ones() == count);
}

}  // namespace

TEST_CASE("rank and select on a worked example") {
    const auto v = rs_bitvector::from_bools({1, 0, 1, 1, 0, 1});
    CHECK(v.rank1(0) == 0);
    CHECK(v.rank1(3) == 2);
    CHECK(v.rank1(6) == 4);
    CHECK(v.select1(1) == 0);
    CHECK(v.select1(2) == 2);
    CHECK(v.select1(3) == 3);
    CHECK(v.select1(4) == 5);
    CHECK(v.ones() == 4);
}

TEST_CASE("empty and degenerate vectors") {
    const rs_bitvector empty;
    CHECK(empty.size() == 0);
    CHECK(empty.rank1(0) == 0);
    CHECK_THROWS_AS(empty.get(0), bounds_error);
    CHECK_THROWS_AS(empty.select1(1), bounds_error);

    check_against_naive(std::vector<bool>(777, false));
    check_against_naive(std::vector<bool>(777, true));
    check_against_naive({true});
    check_against_naive({false});
}

TEST_CASE("matches a naive counter across densities and sizes") {
    testutil::xorshift64s rng(31337);
    for (size_t n : {63, 64, 65, 511, 512, 513, 1000, 5000}) {
        for (uint64_t one_in : {1, 2, 7, 64, 501}) {
            check_against_naive(random_bits(rng, n, one_in));
        }
    }
}

TEST_CASE("bounds checks") {
    const auto v = rs_bitvector::from_bools({1, 0, 1});
    CHECK_THROWS_AS(v.rank1(4), bounds_error);
    CHECK_THROWS_AS(v.get(3), bounds_error);
    CHECK_THROWS_AS(v.select1(0), bounds_error);
    CHECK_THROWS_AS(v.select1(3), bounds_error);
}

TEST_CASE("construction rejects inconsistent input") {
    CHECK_THROWS_AS(rs_bitvector(10, std::vector<uint64_t>{}), validation_error);
    // bit 10 set on a 10-bit vector
    CHECK_THROWS_AS(rs_bitvector(10, std::vector<uint64_t>{1u << 10}), validation_error);
}

TEST_CASE("serialization round-trips and is validated on load") {
    testutil::xorshift64s rng(5);
    const auto v = rs_bitvector::from_bools(random_bits(rng, 2000, 3));
    byte_writer w;
    v.save(w);

    byte_reader r(w.out);
    const auto back = rs_bitvector::load(r);
    CHECK(r.done());
    CHECK(back == v);
    CHECK(back.rank1(2000) == v.rank1(2000));
    CHECK(back.select1(1) == v.select1(1));

    SUBCASE("truncated words") {
        auto bytes = w.out;
        bytes.resize(bytes.size() - 3);
        byte_reader rr(bytes);
        CHECK_THROWS_AS(rs_bitvector::load(rr), corrupt_stream_error);
    }
    SUBCASE("oversized bit count") {
        auto bytes = w.out;
        bytes[5] = 0xFF;  // blow up the nbits field
        byte_reader rr(bytes);
        CHECK_THROWS_AS(rs_bitvector::load(rr), corrupt_stream_error);
    }
    SUBCASE("stray bits past the size") {
        auto bytes = w.out;
        bytes.back() |= 0x80;  // 2000 % 64 = 16, so the last word has slack
        byte_reader rr(bytes);
        CHECK_THROWS_AS(rs_bitvector::load(rr), corrupt_stream_error);
    }
}

TEST_CASE("directories stay within the advertised overhead") {
    testutil::xorshift64s rng(6);
    for (size_t n : {4096, 100000}) {
        for (uint64_t one_in : {1, 2, 100}) {
            const auto v = rs_bitvector::from_bools(random_bits(rng, n, one_in));
            CHECK(v.space_bits() - n <= n);  // directories under one bit per bit
        }
    }
}
