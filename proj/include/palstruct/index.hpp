#pragma once
// Compressed random-access view of the maximal-palindrome table.  Periodic
// stretches answer most centers from a handful of records; everything else
// sits in two leveled arrays, with a short exception list catching the
// centers the fast path cannot serve.

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "palstruct/bitvec.hpp"
#include "palstruct/leveled_array.hpp"
#include "palstruct/manacher.hpp"
#include "palstruct/runs.hpp"

namespace palstruct {

struct index_stats {
    uint64_t n = 0;
    uint64_t centers = 0;
    uint64_t stretch_records = 0;
    uint64_t centric_centers = 0;
    uint64_t plain_entries = 0;
    uint64_t period_entries = 0;
    uint64_t exceptions = 0;
    // per-component in-memory footprints of the query structures
    uint64_t bits_plain = 0;
    uint64_t bits_period = 0;
    uint64_t bits_centric = 0;
    uint64_t bits_marks = 0;
    uint64_t bits_records = 0;
    uint64_t bits_exceptions = 0;
    uint64_t space_bits = 0;  // sum of the six components above
};

class pal_index {
  public:
    pal_index() = default;

    // builds the table on the way; the second form reuses one the caller
    // already has (it must belong to the text)
    static pal_index build(std::string_view text);
    static pal_index build(std::string_view text, const pal_array& a);

    uint64_t text_length() const { return n_; }
    size_t centers() const { return n_ == 0 ? 0 : size_t(2 * n_ - 1); }

    // maximal palindrome length at center c; *hops, if given, receives the
    // number of structure probes the answer took
    uint32_t length_at(uint32_t c, size_t* hops = nullptr) const;

    // the whole table, one query per center
    pal_array decode_all() const;

    index_stats stats() const;

    // "PALZ" | u8 version | u64 n | six tagged sections
    std::vector<uint8_t> save() const;
    static pal_index load(const uint8_t* data, size_t size);
    static pal_index load(const std::vector<uint8_t>& bytes);

  private:
    static constexpr unsigned class_count = 32;

    uint64_t n_ = 0;
    leveled_array plain_;   // non-centric center -> its length
    leveled_array period_;  // centric center -> period of the claiming stretch
    rs_bitvector centric_;
    // period class t = floor(log2 p); one mark per 2^t centers, set in the
    // block holding a stretch anchor, in step with records_[t]
    std::array<rs_bitvector, class_count> marks_;
    std::array<std::vector<pal_run>, class_count> records_;
    std::vector<std::pair<uint32_t, uint32_t>> exceptions_;  // (center, length)

    // the fast path alone: empty when it cannot serve the center exactly
    std::optional<uint32_t> resolve_raw(uint32_t c, size_t& hops) const;
    void check_cross_sections() const;
};

}  // namespace palstruct
