#include "palstruct/corpus.hpp"

#include <algorithm>
#include <vector>

#include "palstruct/errors.hpp"
#include "palstruct/reconstruct.hpp"

namespace palstruct {

namespace {

bool is_pal(const std::string& s) {
    return std::equal(s.begin(), s.begin() + ptrdiff_t(s.size() / 2), s.rbegin());
}

}  // namespace

std::string gen_random(size_t n, unsigned sigma, uint64_t seed) {
    if (sigma < 1 || sigma > 26) throw validation_error("alphabet size must be between 1 and 26");
    corpus_rng rng(seed);
    std::string out(n, 'a');
    if (sigma > 1)
        for (auto& ch : out) ch = char('a' + rng.below(sigma));
    return out;
}

std::string gen_periodic(const std::string& q0, const std::string& q1, uint32_t reps) {
    if (q0.empty() || !is_pal(q0)) throw validation_error("q0 must be a nonempty palindrome");
    if (!is_pal(q1)) throw validation_error("q1 must be a palindrome");
    if (reps < 1) throw validation_error("need at least one repetition");
    std::string out;
    out.reserve(size_t(reps) * (q0.size() + q1.size()) + q0.size());
    for (uint32_t i = 0; i < reps; ++i) {
        out += q0;
        out += q1;
    }
    out += q0;
    return out;
}

std::string gen_zimin(unsigned k) {
    if (k < 1 || k > 16) throw bounds_error("nesting degree must be between 1 and 16");
    std::vector<std::string> parts;
    for (unsigned i = 0; i < k; ++i) parts.push_back(std::string(1, char('a' + i)));
    return zimin_pal(parts);
}

std::string gen_fibonacci(size_t len, uint64_t seed) {
    corpus_rng rng(seed);
    std::string prev(1, char('a' + rng.below(2)));
    std::string cur(1, char('a' + rng.below(2)));
    if (len <= 1) return cur.substr(0, len);
    while (cur.size() < len) {
        std::string next = cur + prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    cur.resize(len);
    return cur;
}

}  // namespace palstruct
