#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

// fixed-width fields packed LSB-first into u64 words, straddling allowed
namespace palstruct {

inline uint64_t get_bits(const std::vector<uint64_t>& words, size_t off, unsigned width) {
    if (width == 0) return 0;
    const size_t word = off / 64, shift = off % 64;
    uint64_t v = words[word] >> shift;
    if (shift + width > 64) v |= words[word + 1] << (64 - shift);
    return width == 64 ? v : v & ((uint64_t(1) << width) - 1);
}

inline void set_bits(std::vector<uint64_t>& words, size_t off, unsigned width, uint64_t value) {
    if (width == 0) return;
    const uint64_t mask = width == 64 ? ~uint64_t(0) : (uint64_t(1) << width) - 1;
    value &= mask;
    const size_t word = off / 64, shift = off % 64;
    words[word] = (words[word] & ~(mask << shift)) | (value << shift);
    if (shift + width > 64) {
        const unsigned spill = unsigned(shift + width - 64);
        const uint64_t hi_mask = (uint64_t(1) << spill) - 1;
        words[word + 1] = (words[word + 1] & ~hi_mask) | (value >> (64 - shift));
    }
}

// words needed so that any field ending at bit `bits` can straddle safely
inline size_t packed_words(size_t bits) { return bits / 64 + 2; }

}  // namespace palstruct
