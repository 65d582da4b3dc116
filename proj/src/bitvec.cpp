#include "palstruct/bitvec.hpp"

#include <bit>
#include <string>

#include "palstruct/errors.hpp"

namespace palstruct {

rs_bitvector::rs_bitvector(size_t nbits, std::vector<uint64_t> words)
    : nbits_(nbits), words_(std::move(words)) {
    if (words_.size() != (nbits_ + 63) / 64)
        throw validation_error("word count disagrees with the bit count");
    if (nbits_ % 64 != 0 && !words_.empty() && (words_.back() >> (nbits_ % 64)) != 0)
        throw validation_error("bits set past the advertised size");
    build_directories();
}

rs_bitvector rs_bitvector::from_bools(const std::vector<bool>& bits) {
    std::vector<uint64_t> words((bits.size() + 63) / 64, 0);
    for (size_t i = 0; i < bits.size(); ++i)
        if (bits[i]) words[i / 64] |= uint64_t(1) << (i % 64);
    return rs_bitvector(bits.size(), std::move(words));
}

void rs_bitvector::build_directories() {
    super_.assign((words_.size() + 7) / 8, 0);
    word_prefix_.assign(words_.size(), 0);
    select_sample_.clear();
    uint64_t count = 0;
    for (size_t w = 0; w < words_.size(); ++w) {
        if (w % 8 == 0) super_[w / 8] = count;
        word_prefix_[w] = uint16_t(count - super_[w / 8]);
        uint64_t word = words_[w];
        while (word) {
            if (count % 512 == 0)
                select_sample_.push_back(w * 64 + size_t(std::countr_zero(word)));
            ++count;
            word &= word - 1;
        }
    }
    ones_ = count;
}

bool rs_bitvector::get(size_t i) const {
    if (i >= nbits_) throw bounds_error("bit " + std::to_string(i) + " out of range");
    return (words_[i / 64] >> (i % 64)) & 1;
}

size_t rs_bitvector::rank1(size_t i) const {
    if (i > nbits_) throw bounds_error("rank index " + std::to_string(i) + " out of range");
    const size_t w = i / 64;
    if (w == words_.size()) return size_t(ones_);
    const uint64_t below = (uint64_t(1) << (i % 64)) - 1;  // i % 64 == 0 gives none
    return size_t(super_[w / 8]) + word_prefix_[w] +
           size_t(std::popcount(words_[w] & below));
}

size_t rs_bitvector::select1(size_t k) const {
    if (k == 0 || k > ones_)
        throw bounds_error("select rank " + std::to_string(k) + " out of range");
    const size_t sample = (k - 1) / 512;
    const size_t start = select_sample_[sample];
    size_t need = k - sample * 512;  // ones wanted from `start` on, inclusive
    size_t w = start / 64;
    uint64_t word = words_[w] & ~((uint64_t(1) << (start % 64)) - 1);
    for (;;) {
        const size_t here = size_t(std::popcount(word));
        if (need <= here) {
            while (--need) word &= word - 1;
            return w * 64 + size_t(std::countr_zero(word));
        }
        need -= here;
        word = words_[++w];
    }
}

void rs_bitvector::save(byte_writer& w) const {
    w.tag("RSBV");
    w.u64(nbits_);
    for (uint64_t word : words_) w.u64(word);
}

rs_bitvector rs_bitvector::load(byte_reader& r) {
    r.expect_tag("RSBV");
    const uint64_t nbits = r.u64();
    if (nbits > 8 * uint64_t(r.left()))
        throw corrupt_stream_error("bit vector longer than the remaining bytes");
    std::vector<uint64_t> words((size_t(nbits) + 63) / 64);
    for (auto& word : words) word = r.u64();
    try {
        return rs_bitvector(size_t(nbits), std::move(words));
    } catch (const validation_error& e) {
        throw corrupt_stream_error(e.what());
    }
}

size_t rs_bitvector::space_bits() const {
    return 64 * (words_.size() + super_.size() + select_sample_.size()) +
           16 * word_prefix_.size();
}

}  // namespace palstruct
