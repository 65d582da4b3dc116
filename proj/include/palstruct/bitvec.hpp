#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "palstruct/serial.hpp"

namespace palstruct {

// Plain bit vector with rank/select directories: a cumulative u64 per
// 512-bit superblock, a u16 prefix per word inside it, and the position of
// every 512th one as a select starting point.  Directories cost about half
// the raw bits and are rebuilt rather than serialized.
class rs_bitvector {
  public:
    rs_bitvector() = default;
    rs_bitvector(size_t nbits, std::vector<uint64_t> words);
    static rs_bitvector from_bools(const std::vector<bool>& bits);

    size_t size() const { return nbits_; }
    size_t ones() const { return size_t(ones_); }
    bool get(size_t i) const;

    // ones among the first i bits; i may equal size()
    size_t rank1(size_t i) const;
    // position of the k-th one, counting from k = 1
    size_t select1(size_t k) const;

    // "RSBV" | u64 nbits | raw words, little endian
    void save(byte_writer& w) const;
    static rs_bitvector load(byte_reader& r);

    // everything held in memory, directories included
    size_t space_bits() const;

    bool operator==(const rs_bitvector& o) const {
        return nbits_ == o.nbits_ && words_ == o.words_;
    }

  private:
    size_t nbits_ = 0;
    uint64_t ones_ = 0;
    std::vector<uint64_t> words_;
    std::vector<uint64_t> super_;
    std::vector<uint16_t> word_prefix_;
    std::vector<uint64_t> select_sample_;

    void build_directories();
};

}  // namespace palstruct
