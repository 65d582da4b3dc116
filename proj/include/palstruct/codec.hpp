#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "palstruct/manacher.hpp"

namespace palstruct {

// a length array squeezed down to its change list, gamma coded
struct compact_stream {
    size_t n = 0;             // characters in the source text
    uint64_t bit_length = 0;  // meaningful payload bits
    std::vector<uint8_t> payload;  // MSB-first, zero padded to a whole byte

    bool operator==(const compact_stream&) const = default;
};

// Each change record becomes gamma(pos gap) gamma(center gap), with both
// running values starting at -1 so the opening (0,0) record costs two
// one-bit gammas.  The array is validated up front and the stream is decoded
// again before being returned; any disagreement throws validation_error.
compact_stream encode_compact(const pal_array& a);

// Rebuilds the full array from the change list: between consecutive suffix
// centers every skipped center is the mirror of an already-known one, capped
// by the distance to the position where the suffix center moved on.  Any
// stream encode_compact could not have produced throws corrupt_stream_error.
pal_array decode_compact(const compact_stream& s);

// container format: "PCPL" | u64 n | u64 bit_length | payload bytes
std::vector<uint8_t> to_pcpl_bytes(const compact_stream& s);
compact_stream from_pcpl_bytes(const uint8_t* data, size_t size);
compact_stream from_pcpl_bytes(const std::vector<uint8_t>& bytes);

}  // namespace palstruct
