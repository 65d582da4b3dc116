#include "palstruct/codec.hpp"

#include <algorithm>
#include <string>

#include "palstruct/bitstream.hpp"
#include "palstruct/errors.hpp"
#include "palstruct/serial.hpp"

namespace palstruct {

compact_stream encode_compact(const pal_array& a) {
    a.validate();
    const auto recs = change_list(a);

    bit_writer w;
    int64_t prev_pos = -1, prev_center = -1;  // so the (0,0) record costs "11"
    for (const auto& rec : recs) {
        w.push_gamma(uint64_t(int64_t(rec.pos) - prev_pos));
        w.push_gamma(uint64_t(int64_t(rec.center) - prev_center));
        prev_pos = rec.pos;
        prev_center = rec.center;
    }

    compact_stream s;
    s.n = a.n;
    s.bit_length = w.bits;
    s.payload = std::move(w.bytes);

    // decode what we just wrote; the stream is only worth returning if it
    // reproduces the input bit for bit
    pal_array back;
    try {
        back = decode_compact(s);
    } catch (const error& e) {
        throw validation_error(std::string("self-check could not decode the stream: ") +
                               e.what());
    }
    if (!(back == a)) throw validation_error("self-check decoded a different array");
    return s;
}

pal_array decode_compact(const compact_stream& s) {
    pal_array out;
    out.n = s.n;
    if (s.n == 0) {
        if (s.bit_length != 0)
            throw corrupt_stream_error("empty text cannot carry payload bits");
        return out;
    }
    if (s.n > (uint64_t(1) << 31))
        throw corrupt_stream_error("text length out of range");
    if (s.payload.size() != size_t((s.bit_length + 7) / 8))
        throw corrupt_stream_error("payload size disagrees with the bit length");
    if (s.bit_length % 8 != 0) {
        const uint8_t pad_mask = uint8_t((1u << (8 - s.bit_length % 8)) - 1);
        if (s.payload.back() & pad_mask)
            throw corrupt_stream_error("padding bits are not zero");
    }

    const size_t total = 2 * s.n - 1;
    bit_reader r{s.payload.data(), s.bit_length};
    std::vector<change_rec> recs;
    int64_t pos = -1, center = -1;
    while (!r.done()) {
        const uint64_t dp = r.read_gamma();
        const uint64_t dc = r.read_gamma();
        if (dp > total || dc > total)
            throw corrupt_stream_error("record gap larger than the text");
        pos += int64_t(dp);
        center += int64_t(dc);
        if (pos >= int64_t(total))
            throw corrupt_stream_error("record position past the end");
        if (center > pos) throw corrupt_stream_error("suffix center right of its position");
        if (2 * center < pos)
            throw corrupt_stream_error("suffix center left of the span midpoint");
        recs.push_back({uint32_t(pos), uint32_t(center)});
    }
    if (recs.empty() || recs[0].pos != 0 || recs[0].center != 0)
        throw corrupt_stream_error("stream must open with the zero record");

    // radii first: each record pins its own center's radius by how far the
    // suffix center survived, and every center skipped in between mirrors an
    // earlier one inside that palindrome
    std::vector<uint32_t> rad(total, 0);
    size_t assigned = 0;
    for (size_t k = 0; k < recs.size(); ++k) {
        const size_t ck = recs[k].center;
        const bool last = k + 1 == recs.size();
        const size_t ep = last ? total - 1 : size_t(recs[k + 1].pos) - 1;
        const size_t stop = last ? total : recs[k + 1].center;
        if (ep - ck > out.cap(ck))
            throw corrupt_stream_error("suffix radius exceeds the text edge");
        rad[ck] = uint32_t(ep - ck);
        ++assigned;
        for (size_t c = ck + 1; c < stop; ++c) {
            rad[c] = std::min(rad[2 * ck - c], uint32_t(ep - c));
            ++assigned;
        }
    }
    if (assigned != total)
        throw corrupt_stream_error("stream leaves centers unassigned");

    out.lengths.resize(total);
    for (size_t c = 0; c < total; ++c)
        out.lengths[c] = length_from_radius(rad[c], out.cap(c));
    try {
        out.validate();
    } catch (const invalid_array_error& e) {
        throw corrupt_stream_error(std::string("decoded lengths are inconsistent: ") +
                                   e.what());
    }
    return out;
}

std::vector<uint8_t> to_pcpl_bytes(const compact_stream& s) {
    byte_writer w;
    w.tag("PCPL");
    w.u64(s.n);
    w.u64(s.bit_length);
    w.raw(s.payload.data(), s.payload.size());
    return std::move(w.out);
}

compact_stream from_pcpl_bytes(const uint8_t* data, size_t size) {
    byte_reader r(data, size);
    r.expect_tag("PCPL");
    compact_stream s;
    s.n = size_t(r.u64());
    s.bit_length = r.u64();
    if (s.bit_length > 8 * uint64_t(r.left()))
        throw corrupt_stream_error("bit length larger than the payload");
    if (size_t((s.bit_length + 7) / 8) != r.left())
        throw corrupt_stream_error("payload has trailing bytes");
    const size_t nbytes = r.left();
    const uint8_t* p = r.raw(nbytes);
    s.payload.assign(p, p + nbytes);
    return s;
}

compact_stream from_pcpl_bytes(const std::vector<uint8_t>& bytes) {
    return from_pcpl_bytes(bytes.data(), bytes.size());
}

}  // namespace palstruct
