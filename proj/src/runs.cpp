#include "palstruct/runs.hpp"

#include <set>
#include <string>
#include <utility>

#include "palstruct/errors.hpp"

namespace palstruct {

uint32_t minimal_period(std::string_view s) {
    const size_t len = s.size();
    if (len == 0) return 0;
    std::vector<uint32_t> fail(len, 0);
    for (size_t i = 1; i < len; ++i) {
        uint32_t k = fail[i - 1];
        while (k > 0 && s[i] != s[k]) k = fail[k - 1];
        if (s[i] == s[k]) ++k;
        fail[i] = k;
    }
    return uint32_t(len) - fail[len - 1];
}

namespace {

int64_t phase_of(const pal_run& run) {
    const int64_t p = run.period();
    return ((2 * int64_t(run.start) + int64_t(run.q0_len) - 1) % p + p) % p;
}

pal_run make_run(std::string_view text, const pal_array& arr, size_t s, size_t e,
                 uint32_t p, size_t rs, size_t re) {
    // align the covered span to whole periods, keeping the span's own phase
    const size_t s0 = s - p * ((s - rs) / p);
    const size_t e0 = e + p * ((re - e) / p);
    const size_t len0 = e0 - s0 + 1;

    // span [x, x+len) is a palindrome iff its center's entry reaches len
    auto is_pal = [&](size_t x, size_t len) {
        return len == 0 || arr[2 * x + len - 1] >= len;
    };

    // factor the covered span into (q0 q1)^reps q0: either a whole period
    // leads, or the remainder of len0 against the period does
    const uint32_t a_mod = uint32_t(len0 % p);
    uint32_t q0 = 0, reps = 0;
    bool ok = false;
    if (a_mod == 0 && len0 / p >= 3 && is_pal(s0, p)) {
        q0 = p;
        reps = uint32_t(len0 / p - 1);
        ok = true;
    }
    if (!ok && is_pal(s0, a_mod) && is_pal(s0 + a_mod, p - a_mod)) {
        q0 = a_mod;
        reps = uint32_t((len0 - a_mod) / p);
        ok = true;
    }
    if (!ok)
        throw error("internal: periodic span at " + std::to_string(s0) +
                    " refused both factorizations");

    pal_run run{uint32_t(s0), q0, p - q0, reps, uint32_t(s0 - rs), uint32_t(re - e0), 0};
    const size_t middle = rs + re;  // the stretch's own center
    if (is_centric(run, middle)) {
        uint32_t t = 0;
        size_t lo = rs, hi = re;
        while (lo > 0 && hi + 1 < text.size() && text[lo - 1] == text[hi + 1]) {
            --lo;
            ++hi;
            ++t;
        }
        run.ext_center = t;
    }
    return run;
}

}  // namespace

std::vector<pal_run> detect_runs(std::string_view text, const pal_array& a) {
    const size_t n = text.size();
    std::vector<pal_run> out;
    if (n == 0) return out;
    std::vector<bool> served(a.centers(), false);
    std::set<std::pair<uint32_t, uint32_t>> seen;  // (stretch start, period)
    for (size_t c = 0; c < a.centers(); ++c) {
        if (served[c]) continue;
        const uint32_t len = a[c];
        if (len < 2) continue;
        const size_t s = span_start(c, len), e = span_end(c, len);
        const uint32_t p = minimal_period(text.substr(s, len));
        if (2 * p > len) continue;
        size_t rs = s, re = e;
        while (rs > 0 && text[rs - 1] == text[rs - 1 + p]) --rs;
        while (re + 1 < n && text[re + 1] == text[re + 1 - p]) ++re;
        if (!seen.insert({uint32_t(rs), p}).second) continue;
        out.push_back(make_run(text, a, s, e, p, rs, re));
        // a run's palindromes answer for all its centric centers, so no
        // other center of the progression needs to rediscover it
        for (const uint32_t cc : centric_centers(out.back())) served[cc] = true;
    }
    return out;
}

bool is_centric(const pal_run& run, size_t c) {
    const size_t lo = 2 * size_t(run.start);
    const size_t hi = 2 * size_t(run.start + run.covered() - 1);
    return c >= lo && c <= hi && int64_t(c % run.period()) == phase_of(run);
}

std::vector<uint32_t> centric_centers(const pal_run& run) {
    const size_t lo = 2 * size_t(run.start);
    const size_t hi = 2 * size_t(run.start + run.covered() - 1);
    const uint32_t p = run.period();
    size_t c = lo + size_t((phase_of(run) - int64_t(lo % p) + p) % p);
    std::vector<uint32_t> out;
    for (; c <= hi; c += p) out.push_back(uint32_t(c));
    return out;
}

uint32_t run_length_at(const pal_run& run, size_t c, size_t n) {
    if (!is_centric(run, c))
        throw contract_error("center " + std::to_string(c) +
                             " is not a centric center of this run");
    const size_t lo = 2 * size_t(run.start);
    const size_t hi = 2 * size_t(run.start + run.covered() - 1);
    const size_t lhs = (c - lo) + 2 * run.ext_left;
    const size_t rhs = (hi - c) + 2 * run.ext_right;
    if (lhs == rhs) {
        // dead center of the whole stretch: everything matches through both
        // edges, plus whatever pairs continue outside it
        const size_t chars = run.covered() + run.ext_left + run.ext_right;
        return uint32_t(chars + 2 * run.ext_center);
    }
    const uint32_t cap = uint32_t(std::min(c, 2 * n - 2 - c));
    const uint32_t r = uint32_t(std::min<size_t>(std::min(lhs, rhs) + 1, cap));
    return length_from_radius(r, cap);
}

}  // namespace palstruct
