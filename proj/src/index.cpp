#include "palstruct/index.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <string>

#include "palstruct/errors.hpp"
#include "palstruct/packed.hpp"
#include "palstruct/serial.hpp"

namespace palstruct {

namespace {

// Greedy density filter: big values stake their claim first, anything that
// would land too close to an accepted neighbor is dropped.  Survivors obey
// the leveled-array rule pairwise, because a later entry is never larger
// than the ones it is checked against.
std::vector<cf_entry> filter_dense(std::vector<cf_entry> entries) {
    std::sort(entries.begin(), entries.end(), [](const cf_entry& x, const cf_entry& y) {
        return x.value != y.value ? x.value > y.value : x.index < y.index;
    });
    std::set<size_t> taken;
    std::vector<cf_entry> kept;
    for (const cf_entry& e : entries) {
        const size_t need = e.value / 8;
        bool ok = true;
        if (need > 0) {
            const auto next = taken.lower_bound(e.index);
            if (next != taken.end() && *next - e.index < need) ok = false;
            if (ok && next != taken.begin() && e.index - *std::prev(next) < need) ok = false;
        }
        if (!ok) continue;
        taken.insert(e.index);
        kept.push_back(e);
    }
    std::sort(kept.begin(), kept.end(),
              [](const cf_entry& x, const cf_entry& y) { return x.index < y.index; });
    return kept;
}

constexpr char section_tags[6][5] = {"CFPL", "CFPD", "CNTR", "CLSV", "PPDT", "EXCP"};

}  // namespace

pal_index pal_index::build(std::string_view text) { return build(text, manacher(text)); }

pal_index pal_index::build(std::string_view text, const pal_array& a) {
    if (a.n != text.size()) throw validation_error("table does not belong to the text");
    if (text.size() > (size_t(1) << 31)) throw bounds_error("text longer than 2^31 characters");
    pal_index ix;
    ix.n_ = text.size();
    const size_t centers = ix.centers();
    if (centers == 0) {
        ix.plain_ = leveled_array::build(0, {});
        ix.period_ = leveled_array::build(0, {});
        ix.centric_ = rs_bitvector(0, {});
        return ix;
    }

    std::vector<pal_run> runs = detect_runs(text, a);
    std::sort(runs.begin(), runs.end(), [](const pal_run& x, const pal_run& y) {
        return x.start != y.start ? x.start < y.start : x.period() < y.period();
    });

    // One anchor per class and block: a stretch whose anchor falls into a
    // block that an earlier stretch of the same class already marked cannot
    // be addressed, so it is dropped; its centers end up in the plain store
    // or the exception list.
    std::array<std::set<uint64_t>, class_count> used_blocks;
    std::vector<pal_run> kept;
    for (const pal_run& r : runs) {
        const unsigned t = unsigned(std::bit_width(r.period())) - 1;
        const uint64_t block = (2 * uint64_t(r.start)) >> t;
        if (!used_blocks[t].insert(block).second) continue;
        kept.push_back(r);
        ix.records_[t].push_back(r);
    }

    // claim centric centers, later stretches overriding earlier ones
    std::vector<uint32_t> claim(centers, 0);
    for (const pal_run& r : kept)
        for (const uint32_t c : centric_centers(r)) claim[c] = r.period();

    std::vector<bool> centric_bits(centers, false);
    std::vector<cf_entry> period_entries, plain_entries;
    for (size_t c = 0; c < centers; ++c) {
        if (claim[c]) {
            centric_bits[c] = true;
            period_entries.push_back({c, claim[c]});
        } else {
            plain_entries.push_back({c, a[uint32_t(c)]});
        }
    }
    ix.centric_ = rs_bitvector::from_bools(centric_bits);
    ix.period_ = leveled_array::build(centers, filter_dense(std::move(period_entries)));
    ix.plain_ = leveled_array::build(centers, filter_dense(std::move(plain_entries)));

    for (unsigned t = 0; t < class_count; ++t) {
        if (ix.records_[t].empty()) continue;
        const size_t bits = (centers + ((size_t(1) << t) - 1)) >> t;
        std::vector<bool> anchor(bits, false);
        for (const pal_run& r : ix.records_[t]) anchor[(2 * uint64_t(r.start)) >> t] = true;
        ix.marks_[t] = rs_bitvector::from_bools(anchor);
    }

    // final audit: whatever the fast path cannot reproduce exactly is
    // pinned down as an exception, so queries never have to guess
    for (size_t c = 0; c < centers; ++c) {
        size_t hops = 0;
        const auto got = ix.resolve_raw(uint32_t(c), hops);
        if (!got || *got != a[uint32_t(c)]) ix.exceptions_.push_back({uint32_t(c), a[uint32_t(c)]});
    }
    return ix;
}

std::optional<uint32_t> pal_index::resolve_raw(uint32_t c, size_t& hops) const {
    ++hops;  // centric bit
    if (!centric_.get(c)) return plain_.find(c, &hops);
    const auto p = period_.find(c, &hops);
    if (!p || *p == 0) return std::nullopt;
    const unsigned t = unsigned(std::bit_width(*p)) - 1;
    ++hops;  // anchor rank
    const rs_bitvector& marks = marks_[t];
    const uint64_t block = uint64_t(c) >> t;
    if (block + 1 > marks.size()) return std::nullopt;
    const size_t k = marks.rank1(size_t(block) + 1);
    if (k == 0 || k > records_[t].size()) return std::nullopt;
    ++hops;  // record fetch and prediction
    const pal_run& run = records_[t][k - 1];
    if (!is_centric(run, c)) return std::nullopt;
    return run_length_at(run, c, size_t(n_));
}

uint32_t pal_index::length_at(uint32_t c, size_t* hops) const {
    if (uint64_t(c) >= centers())
        throw bounds_error("center " + std::to_string(c) + " out of range");
    size_t h = 1;  // exception lookup
    const auto it = std::lower_bound(
        exceptions_.begin(), exceptions_.end(), c,
        [](const std::pair<uint32_t, uint32_t>& e, uint32_t v) { return e.first < v; });
    if (it != exceptions_.end() && it->first == c) {
        if (hops) *hops = h;
        return it->second;
    }
    const auto got = resolve_raw(c, h);
    if (hops) *hops = h;
    if (!got) throw error("index cannot resolve center " + std::to_string(c));
    return *got;
}

pal_array pal_index::decode_all() const {
    pal_array a;
    a.n = size_t(n_);
    a.lengths.resize(centers());
    for (size_t c = 0; c < a.lengths.size(); ++c) a.lengths[c] = length_at(uint32_t(c));
    a.validate();
    return a;
}

index_stats pal_index::stats() const {
    index_stats s;
    s.n = n_;
    s.centers = centers();
    for (const auto& v : records_) s.stretch_records += v.size();
    s.centric_centers = centric_.ones();
    s.plain_entries = plain_.entry_count();
    s.period_entries = period_.entry_count();
    s.exceptions = exceptions_.size();
    s.bits_plain = plain_.space_bits();
    s.bits_period = period_.space_bits();
    s.bits_centric = centric_.space_bits();
    for (const auto& m : marks_) s.bits_marks += m.space_bits();
    s.bits_records = s.stretch_records * sizeof(pal_run) * 8;
    s.bits_exceptions = uint64_t(exceptions_.size()) * 64;
    s.space_bits = s.bits_plain + s.bits_period + s.bits_centric + s.bits_marks +
                   s.bits_records + s.bits_exceptions;
    return s;
}

std::vector<uint8_t> pal_index::save() const {
    byte_writer w;
    w.tag("PALZ");
    w.u8(0x01);
    w.u64(n_);
    const auto section = [&w](const char (&tag)[5], const byte_writer& body) {
        w.tag(tag);
        w.u64(body.out.size());
        w.raw(body.out.data(), body.out.size());
    };
    {
        byte_writer b;
        plain_.save(b);
        section(section_tags[0], b);
    }
    {
        byte_writer b;
        period_.save(b);
        section(section_tags[1], b);
    }
    {
        byte_writer b;
        centric_.save(b);
        section(section_tags[2], b);
    }
    {
        byte_writer b;
        uint32_t present = 0;
        for (const auto& m : marks_)
            if (m.size() > 0) ++present;
        b.u32(present);
        for (unsigned t = 0; t < class_count; ++t) {
            if (marks_[t].size() == 0) continue;
            b.u8(uint8_t(t));
            marks_[t].save(b);
        }
        section(section_tags[3], b);
    }
    {
        byte_writer b;
        uint32_t present = 0;
        for (const auto& v : records_)
            if (!v.empty()) ++present;
        b.u32(present);
        for (unsigned t = 0; t < class_count; ++t) {
            const auto& recs = records_[t];
            if (recs.empty()) continue;
            b.u8(uint8_t(t));
            uint32_t field_max[7] = {};
            for (const pal_run& r : recs) {
                const uint32_t f[7] = {r.start,    r.q0_len,    r.q1_len,   r.reps,
                                       r.ext_left, r.ext_right, r.ext_center};
                for (int i = 0; i < 7; ++i) field_max[i] = std::max(field_max[i], f[i]);
            }
            unsigned width[7], record_bits = 0;
            for (int i = 0; i < 7; ++i) {
                width[i] = std::max(1u, unsigned(std::bit_width(field_max[i])));
                record_bits += width[i];
                b.u8(uint8_t(width[i]));
            }
            b.u64(recs.size());
            const size_t total_bits = recs.size() * record_bits;
            std::vector<uint64_t> words(packed_words(total_bits), 0);
            size_t off = 0;
            for (const pal_run& r : recs) {
                const uint32_t f[7] = {r.start,    r.q0_len,    r.q1_len,   r.reps,
                                       r.ext_left, r.ext_right, r.ext_center};
                for (int i = 0; i < 7; ++i) {
                    set_bits(words, off, width[i], f[i]);
                    off += width[i];
                }
            }
            b.u64(words.size());
            for (const uint64_t word : words) b.u64(word);
        }
        section(section_tags[4], b);
    }
    {
        byte_writer b;
        b.u64(exceptions_.size());
        for (const auto& [c, len] : exceptions_) {
            b.u32(c);
            b.u32(len);
        }
        section(section_tags[5], b);
    }
    return std::move(w.out);
}

pal_index pal_index::load(const std::vector<uint8_t>& bytes) {
    return load(bytes.data(), bytes.size());
}

pal_index pal_index::load(const uint8_t* data, size_t size) {
    byte_reader r(data, size);
    r.expect_tag("PALZ");
    if (r.u8() != 0x01) throw corrupt_stream_error("unsupported version");
    pal_index ix;
    ix.n_ = r.u64();
    if (ix.n_ > (uint64_t(1) << 31)) throw corrupt_stream_error("text length out of range");
    const size_t centers = ix.centers();

    const auto open = [&r](const char (&tag)[5]) {
        r.expect_tag(tag);
        const uint64_t len = r.u64();
        if (len > r.left()) throw corrupt_stream_error("section length overruns the input");
        return byte_reader(r.raw(size_t(len)), size_t(len));
    };
    const auto close = [](byte_reader& b, const char* what) {
        if (!b.done()) throw corrupt_stream_error(std::string("trailing bytes in ") + what);
    };

    {
        auto b = open(section_tags[0]);
        ix.plain_ = leveled_array::load(b);
        close(b, "the plain store");
    }
    {
        auto b = open(section_tags[1]);
        ix.period_ = leveled_array::load(b);
        close(b, "the period store");
    }
    {
        auto b = open(section_tags[2]);
        ix.centric_ = rs_bitvector::load(b);
        close(b, "the centric bits");
    }
    {
        auto b = open(section_tags[3]);
        const uint32_t present = b.u32();
        if (present > class_count) throw corrupt_stream_error("too many mark classes");
        int prev = -1;
        for (uint32_t i = 0; i < present; ++i) {
            const uint8_t t = b.u8();
            if (int(t) <= prev || t >= class_count)
                throw corrupt_stream_error("mark classes out of order");
            prev = int(t);
            ix.marks_[t] = rs_bitvector::load(b);
        }
        close(b, "the anchor marks");
    }
    {
        auto b = open(section_tags[4]);
        const uint32_t present = b.u32();
        if (present > class_count) throw corrupt_stream_error("too many record classes");
        int prev = -1;
        for (uint32_t i = 0; i < present; ++i) {
            const uint8_t t = b.u8();
            if (int(t) <= prev || t >= class_count)
                throw corrupt_stream_error("record classes out of order");
            prev = int(t);
            unsigned width[7], record_bits = 0;
            for (int f = 0; f < 7; ++f) {
                width[f] = b.u8();
                if (width[f] == 0 || width[f] > 32)
                    throw corrupt_stream_error("record field width out of range");
                record_bits += width[f];
            }
            const uint64_t cnt = b.u64();
            if (cnt == 0 || cnt > centers) throw corrupt_stream_error("record count out of range");
            const size_t total_bits = size_t(cnt) * record_bits;
            const uint64_t nwords = b.u64();
            if (nwords != packed_words(total_bits))
                throw corrupt_stream_error("record words disagree with the count");
            std::vector<uint64_t> words(static_cast<size_t>(nwords));
            for (auto& word : words) word = b.u64();
            // everything past the last record must be zero filler
            for (size_t bit = total_bits; bit < words.size() * 64; ++bit)
                if ((words[bit / 64] >> (bit % 64)) & 1)
                    throw corrupt_stream_error("stray bits after the record area");
            size_t off = 0;
            auto& recs = ix.records_[t];
            recs.reserve(size_t(cnt));
            for (uint64_t k = 0; k < cnt; ++k) {
                uint32_t f[7];
                for (int i = 0; i < 7; ++i) {
                    f[i] = uint32_t(get_bits(words, off, width[i]));
                    off += width[i];
                }
                recs.push_back({f[0], f[1], f[2], f[3], f[4], f[5], f[6]});
            }
        }
        close(b, "the stretch records");
    }
    {
        auto b = open(section_tags[5]);
        const uint64_t cnt = b.u64();
        if (cnt > centers) throw corrupt_stream_error("exception count out of range");
        ix.exceptions_.reserve(size_t(cnt));
        int64_t prev = -1;
        for (uint64_t k = 0; k < cnt; ++k) {
            const uint32_t c = b.u32();
            const uint32_t len = b.u32();
            if (int64_t(c) <= prev || c >= centers)
                throw corrupt_stream_error("exception centers out of order");
            prev = int64_t(c);
            const uint64_t cap = std::min<uint64_t>(c, 2 * ix.n_ - 2 - c);
            if (((len ^ c) & 1) == 0 || len > cap + 1)
                throw corrupt_stream_error("exception length impossible at its center");
            ix.exceptions_.push_back({c, len});
        }
        close(b, "the exception list");
    }
    if (!r.done()) throw corrupt_stream_error("trailing bytes after the last section");
    ix.check_cross_sections();
    return ix;
}

void pal_index::check_cross_sections() const {
    const size_t centers = this->centers();
    if (plain_.universe() != centers || period_.universe() != centers)
        throw corrupt_stream_error("store universe disagrees with the text length");
    if (centric_.size() != centers)
        throw corrupt_stream_error("centric bits disagree with the text length");
    if (period_.entry_count() > centric_.ones() ||
        plain_.entry_count() > centers - centric_.ones())
        throw corrupt_stream_error("store sizes disagree with the centric bits");
    for (unsigned t = 0; t < class_count; ++t) {
        const auto& recs = records_[t];
        if ((marks_[t].size() == 0) != recs.empty())
            throw corrupt_stream_error("anchor marks and records do not pair up");
        if (recs.empty()) continue;
        const size_t expect_bits = centers == 0 ? 0 : (centers + ((size_t(1) << t) - 1)) >> t;
        if (marks_[t].size() != expect_bits)
            throw corrupt_stream_error("anchor marks have the wrong span");
        if (marks_[t].ones() != recs.size())
            throw corrupt_stream_error("anchor marks and records disagree in number");
        for (size_t k = 0; k < recs.size(); ++k) {
            const pal_run& r = recs[k];
            if (r.period() == 0 || unsigned(std::bit_width(r.period())) - 1 != t)
                throw corrupt_stream_error("record period is in the wrong class");
            if (r.reps < 2 || r.start >= n_ ||
                uint64_t(r.reps) * r.period() + r.q0_len > n_ - r.start)
                throw corrupt_stream_error("record does not fit the text");
            if (marks_[t].select1(k + 1) != (2 * uint64_t(r.start)) >> t)
                throw corrupt_stream_error("record anchor is not where its mark says");
        }
    }
}

}  // namespace palstruct
