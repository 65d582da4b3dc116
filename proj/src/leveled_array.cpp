#include "palstruct/leveled_array.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <string>

#include "palstruct/errors.hpp"
#include "palstruct/packed.hpp"

namespace palstruct {

void cf_check_constraint(size_t n, const std::vector<cf_entry>& entries) {
    std::vector<cf_entry> by_value(entries);
    std::sort(by_value.begin(), by_value.end(),
              [](const cf_entry& a, const cf_entry& b) { return a.value > b.value; });

    // Walking downward in value means the entry at hand is the minimum of
    // every pair it forms with the ones already placed, so only its nearest
    // placed neighbors can be too close.
    std::set<size_t> placed;
    for (const auto& e : by_value) {
        if (e.index >= n)
            throw validation_error("entry index " + std::to_string(e.index) +
                                   " outside universe of " + std::to_string(n));
        const auto [it, fresh] = placed.insert(e.index);
        if (!fresh)
            throw validation_error("duplicate entry index " + std::to_string(e.index));
        const size_t sep = e.value / 8;
        if (sep == 0) continue;
        if (const auto nxt = std::next(it); nxt != placed.end() && *nxt - e.index < sep)
            throw density_error("entries too close for their values", e.index, *nxt);
        if (it != placed.begin()) {
            if (const auto prv = std::prev(it); e.index - *prv < sep)
                throw density_error("entries too close for their values", *prv, e.index);
        }
    }
}

size_t leveled_array::slots_at(unsigned k) const {
    return size_t((16 * uint64_t(n_) + ((uint64_t(1) << k) - 1)) >> k) + 1;
}

size_t leveled_array::slot_of(size_t i, unsigned k) const {
    return size_t((unsigned __int128)i * slots_at(k) / n_);
}

uint64_t leveled_array::read_slot(unsigned k, size_t j) const {
    return get_bits(levels_[k], j * (k + 3), k + 3);
}

void leveled_array::write_slot(unsigned k, size_t j, uint64_t encoded) {
    set_bits(levels_[k], j * (k + 3), k + 3, encoded);
}

void leveled_array::allocate() {
    for (unsigned k = 0; k < level_count; ++k)
        levels_[k].assign(packed_words(slots_at(k) * (k + 3)), 0);
}

// slot encoding, width k+3: low bit valid, payload above it.  Valid slots
// carry the value minus 2^k (the value itself on level 0); invalid nonzero
// slots park a pointer to a deeper level; all-zero means untouched.
void leveled_array::insert(size_t i, uint32_t v) {
    const unsigned home = v <= 1 ? 0 : unsigned(std::bit_width(v)) - 1;
    unsigned k = 0;
    while (k != home) {
        // the pointer payload at level k tops out at 2^(k+2)-1, which is
        // what makes 3 the universal first hub
        const unsigned next_hub =
            unsigned(std::min<uint64_t>(home, (uint64_t(1) << (k + 2)) - 1));
        const size_t j = slot_of(i, k);
        const uint64_t want = uint64_t(next_hub) << 1;
        const uint64_t cur = read_slot(k, j);
        if (cur == 0) {
            write_slot(k, j, want);
            k = next_hub;
        } else if (cur == want) {
            k = next_hub;
        } else if ((cur & 1) == 0) {
            // Competing pointers resolve toward the lower target.  Adopting
            // an existing lower route is sound; lowering an existing pointer
            // would strand every chain already routed through it, so that
            // direction is reported instead of silently corrupting.
            const unsigned other = unsigned(cur >> 1);
            if (other < next_hub)
                k = other;
            else
                throw conflict_error("pointer slot fought over at level " +
                                     std::to_string(k));
        } else {
            throw conflict_error("pointer needed where level " + std::to_string(k) +
                                 " already holds a value");
        }
    }
    const size_t j = slot_of(i, home);
    const uint64_t enc =
        (uint64_t(home == 0 ? v : v - (uint32_t(1) << home)) << 1) | 1;
    const uint64_t cur = read_slot(home, j);
    if (cur == 0) {
        write_slot(home, j, enc);
        ++count_;
    } else if (cur != enc) {
        throw conflict_error("two entries fought over a value slot at level " +
                             std::to_string(home));
    }
    // an exact duplicate of an already-placed pair merges silently
}

leveled_array leveled_array::build(size_t n, const std::vector<cf_entry>& entries,
                                   bool validate) {
    if (validate) cf_check_constraint(n, entries);
    leveled_array a;
    a.n_ = n;
    a.allocate();
    for (const auto& e : entries) {
        if (e.index >= n)
            throw validation_error("entry index " + std::to_string(e.index) +
                                   " outside universe of " + std::to_string(n));
        a.insert(e.index, e.value);
    }
    return a;
}

std::optional<uint32_t> leveled_array::find(size_t i, size_t* hops) const {
    if (i >= n_) throw bounds_error("index " + std::to_string(i) + " out of range");
    unsigned k = 0;
    for (;;) {
        const uint64_t cur = read_slot(k, slot_of(i, k));
        if (hops) ++*hops;
        if (cur == 0) return std::nullopt;
        if (cur & 1) {
            const uint64_t payload = cur >> 1;
            return uint32_t(k == 0 ? payload : payload + (uint64_t(1) << k));
        }
        const unsigned next = unsigned(cur >> 1);
        if (next <= k || next >= level_count)
            throw error("pointer chain corrupted at level " + std::to_string(k));
        k = next;
    }
}

void leveled_array::save(byte_writer& w) const {
    w.tag("CFAR");
    w.u64(n_);
    w.u64(count_);
    for (const auto& level : levels_)
        for (uint64_t word : level) w.u64(word);
}

leveled_array leveled_array::load(byte_reader& r) {
    r.expect_tag("CFAR");
    leveled_array a;
    const uint64_t n = r.u64();
    if (n > (uint64_t(1) << 31)) throw corrupt_stream_error("universe size out of range");
    a.n_ = size_t(n);
    a.count_ = size_t(r.u64());
    a.allocate();
    for (auto& level : a.levels_)
        for (auto& word : level) word = r.u64();
    a.check_well_formed();
    return a;
}

void leveled_array::check_well_formed() const {
    size_t values = 0;
    for (unsigned k = 0; k < level_count; ++k) {
        const size_t m = slots_at(k);
        for (size_t j = 0; j < m; ++j) {
            const uint64_t cur = read_slot(k, j);
            if (cur == 0) continue;
            const uint64_t payload = cur >> 1;
            if (cur & 1) {
                ++values;
                const uint64_t limit = k == 0 ? 2 : uint64_t(1) << k;
                if (payload >= limit)
                    throw corrupt_stream_error("value payload out of range at level " +
                                               std::to_string(k));
            } else if (payload <= k || payload >= level_count) {
                throw corrupt_stream_error("pointer target out of range at level " +
                                           std::to_string(k));
            }
        }
        // bits past the last slot must stay zero
        const size_t used = m * (k + 3);
        size_t w = used / 64;
        bool stray = used % 64 != 0 && (levels_[k][w] >> (used % 64)) != 0;
        for (w += used % 64 ? 1 : 0; !stray && w < levels_[k].size(); ++w)
            stray = levels_[k][w] != 0;
        if (stray)
            throw corrupt_stream_error("stray bits after the slots of level " +
                                       std::to_string(k));
    }
    if (values != count_)
        throw corrupt_stream_error("value slot count disagrees with the header");
}

size_t leveled_array::space_bits() const {
    size_t words = 0;
    for (const auto& level : levels_) words += level.size();
    return 64 * words;
}

}  // namespace palstruct
