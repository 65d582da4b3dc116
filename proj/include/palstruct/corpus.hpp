#pragma once

#include <cstdint>
#include <string>

namespace palstruct {

// Deterministic generator behind `gen random` and the benchmarks: xorshift64*
// with the 0x2545F4914F6CDD1D multiplier. Same streams on every platform.
struct corpus_rng {
    uint64_t state;

    explicit corpus_rng(uint64_t seed) : state(seed ? seed : 0x9E3779B97F4A7C15ull) {}

    uint64_t next() {
        state ^= state >> 12;
        state ^= state << 25;
        state ^= state >> 27;
        return state * 0x2545F4914F6CDD1Dull;
    }
    uint64_t below(uint64_t m) { return next() % m; }
};

// n characters drawn uniformly from 'a'..'a'+sigma-1.
// Throws validation_error unless 1 <= sigma <= 26.
std::string gen_random(size_t n, unsigned sigma, uint64_t seed);

// (q0 q1)^reps q0. q0 must be a nonempty palindrome and q1 a (possibly
// empty) palindrome, reps >= 1; throws validation_error otherwise.
std::string gen_periodic(const std::string& q0, const std::string& q1, uint32_t reps);

// The nested word of degree k built from single-letter parts 'a', 'b', ...
// (length 2^k - 1). Throws bounds_error unless 1 <= k <= 16.
std::string gen_zimin(unsigned k);

// Prefix of length len of a Fibonacci-style iteration w[i+1] = w[i] w[i-1]
// whose two starting letters are drawn from {a, b} by the seeded generator.
std::string gen_fibonacci(size_t len, uint64_t seed);

}  // namespace palstruct
