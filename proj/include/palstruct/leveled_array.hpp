#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "palstruct/serial.hpp"

namespace palstruct {

struct cf_entry {
    size_t index;
    uint32_t value;
    bool operator==(const cf_entry&) const = default;
};

// The density rule the structure relies on: two entries may sit closer than
// floor(min(values)/8) positions apart only if that floor is zero.  Exact
// check: entries visited by decreasing value, so each one only has to look
// at its nearest already-accepted neighbors.  Throws density_error naming
// the offending pair, validation_error on duplicate or out-of-range indices.
void cf_check_constraint(size_t n, const std::vector<cf_entry>& entries);

// Static map from sparse indices to values under the density rule.  Level k
// stores values with bit width k+1 (level 0 keeps 0 and 1 whole); a slot is
// a valid bit plus k+2 payload bits, and index i hashes to slot
// floor(i*slots/n).  Levels 0..4 have more slots than indices, so walks
// start private; deeper levels get exponentially narrower, which the density
// rule exactly offsets.  Entry chains hop 0 -> 3 -> home, pointers parked in
// the payload of invalid slots, so a lookup costs at most 3 probes here and
// an absent index is settled in one.
class leveled_array {
  public:
    leveled_array() = default;

    // validate=true runs cf_check_constraint first; slot collisions throw
    // conflict_error regardless (they cannot happen once the check passes)
    static leveled_array build(size_t n, const std::vector<cf_entry>& entries,
                               bool validate = true);

    size_t universe() const { return n_; }
    size_t entry_count() const { return count_; }

    // value at index i, empty if absent; probe count added to *hops if given
    std::optional<uint32_t> find(size_t i, size_t* hops = nullptr) const;

    void save(byte_writer& w) const;
    static leveled_array load(byte_reader& r);

    size_t space_bits() const;

    bool operator==(const leveled_array& o) const {
        return n_ == o.n_ && count_ == o.count_ && levels_ == o.levels_;
    }

  private:
    static constexpr unsigned level_count = 32;

    size_t n_ = 0;
    size_t count_ = 0;
    std::array<std::vector<uint64_t>, level_count> levels_;

    size_t slots_at(unsigned k) const;
    size_t slot_of(size_t i, unsigned k) const;
    uint64_t read_slot(unsigned k, size_t j) const;
    void write_slot(unsigned k, size_t j, uint64_t encoded);
    void insert(size_t i, uint32_t v);
    void allocate();
    void check_well_formed() const;  // slot-level scan used after load
};

}  // namespace palstruct
