#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "palstruct/errors.hpp"

// MSB-first bit streams and Elias gamma, the codec's wire encoding
namespace palstruct {

struct bit_writer {
    std::vector<uint8_t> bytes;
    uint64_t bits = 0;

    void push_bit(bool b) {
        if (bits % 8 == 0) bytes.push_back(0);
        if (b) bytes.back() |= uint8_t(0x80u >> (bits % 8));
        ++bits;
    }

    // value's low `width` bits, most significant first
    void push(uint64_t value, unsigned width) {
        while (width--) push_bit((value >> width) & 1);
    }

    // gamma(v): bit_width(v)-1 zeros, then v itself starting at its top bit
    void push_gamma(uint64_t v) {
        if (v == 0) throw validation_error("gamma cannot encode zero");
        const unsigned w = unsigned(std::bit_width(v));
        push(0, w - 1);
        push(v, w);
    }
};

struct bit_reader {
    const uint8_t* data;
    uint64_t bit_len;
    uint64_t pos = 0;

    bool done() const { return pos == bit_len; }

    bool read_bit() {
        if (pos == bit_len) throw corrupt_stream_error("bit stream ends early");
        const bool b = (data[pos / 8] >> (7 - pos % 8)) & 1;
        ++pos;
        return b;
    }

    uint64_t read(unsigned width) {
        uint64_t v = 0;
        while (width--) v = (v << 1) | uint64_t(read_bit());
        return v;
    }

    uint64_t read_gamma() {
        unsigned zeros = 0;
        while (!read_bit())
            if (++zeros > 63) throw corrupt_stream_error("gamma prefix too long");
        uint64_t v = 1;
        while (zeros--) v = (v << 1) | uint64_t(read_bit());
        return v;
    }
};

}  // namespace palstruct
