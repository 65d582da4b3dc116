#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "palstruct/errors.hpp"

// little-endian byte-level plumbing shared by the on-disk formats
namespace palstruct {

struct byte_writer {
    std::vector<uint8_t> out;

    void u8(uint8_t v) { out.push_back(v); }
    void u16(uint16_t v) {
        for (int i = 0; i < 2; ++i) out.push_back(uint8_t(v >> (8 * i)));
    }
    void u32(uint32_t v) {
        for (int i = 0; i < 4; ++i) out.push_back(uint8_t(v >> (8 * i)));
    }
    void u64(uint64_t v) {
        for (int i = 0; i < 8; ++i) out.push_back(uint8_t(v >> (8 * i)));
    }
    void raw(const void* p, size_t k) {
        const auto* b = static_cast<const uint8_t*>(p);
        out.insert(out.end(), b, b + k);
    }
    void tag(const char (&m)[5]) { raw(m, 4); }
};

struct byte_reader {
    const uint8_t* data = nullptr;
    size_t size = 0;
    size_t pos = 0;

    byte_reader(const uint8_t* d, size_t s) : data(d), size(s) {}
    explicit byte_reader(const std::vector<uint8_t>& v) : data(v.data()), size(v.size()) {}

    void need(size_t k) const {
        if (size - pos < k) throw corrupt_stream_error("input ends mid-field");
    }
    bool done() const { return pos == size; }
    size_t left() const { return size - pos; }

    uint8_t u8() {
        need(1);
        return data[pos++];
    }
    uint16_t u16() { return uint16_t(le(2)); }
    uint32_t u32() { return uint32_t(le(4)); }
    uint64_t u64() { return le(8); }

    const uint8_t* raw(size_t k) {
        need(k);
        const uint8_t* p = data + pos;
        pos += k;
        return p;
    }
    void expect_tag(const char (&m)[5]) {
        const uint8_t* p = raw(4);
        if (!std::equal(p, p + 4, m))
            throw corrupt_stream_error(std::string("missing '") + m + "' tag");
    }

  private:
    uint64_t le(int k) {
        need(size_t(k));
        uint64_t v = 0;
        for (int i = 0; i < k; ++i) v |= uint64_t(data[pos + size_t(i)]) << (8 * i);
        pos += size_t(k);
        return v;
    }
};

}  // namespace palstruct
