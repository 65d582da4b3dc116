#pragma once
// Rebuilding text from a maximal-palindrome table, plus structural helpers
// (nested palindrome words, nesting degree, bridging palindromes) used by
// the generators and the alphabet-growth tests.

#include <cstdint>
#include <string>
#include <vector>

#include "palstruct/manacher.hpp"

namespace palstruct {

// Lexicographically smallest string (alphabet 'a', 'b', ...) whose
// maximal-palindrome table equals `a`.  Throws invalid_array_error when
// the table is malformed or no string fits it.
std::string reconstruct_min(const pal_array& a);

// Nested palindrome word from explicit parts: w_1 = parts[0],
// w_i = w_{i-1} + parts[i] + w_{i-1}.  Every part must be a nonempty
// palindrome; "a","b","c" gives "abacaba".
std::string zimin_pal(const std::vector<std::string>& parts);

// Length of the shortest string whose nesting degree (see
// zp_prefix_degree) reaches k: 1 for k = 1, then 2^(k-2) + 1.
uint64_t ipf(uint32_t k);

// Nesting degree of the prefix text[0, len): the longest chain of
// palindromic suffix lengths l_1 < l_2 < ... of that prefix with
// l_{i+1} >= 2*l_i - 1.  Each chain member is automatically a border of
// the next (palindromes mirror their suffixes), so the chain witnesses
// nested "u pal u" structure stacked up against position len.
uint32_t zp_prefix_degree(const std::string& text, size_t len);

// One bridging palindrome at a queried position: the palindromic stretch
// [pos - len, pos - 1] together with the symbol sitting just before it.
// Writing that symbol at pos would close a palindrome of length len + 2.
struct bridging_pal {
    char symbol;   // t[pos - 1 - len]
    uint32_t len;  // stretch length; 0 is the empty stretch
    bool operator==(const bridging_pal&) const = default;
};

// All bridging palindromes at `pos`, one per distinct preceding symbol
// (keeping the shortest stretch), sorted by stretch length.  Requires
// 1 <= pos <= |t| and that no palindrome centered left of pos reaches pos;
// violations raise bounds_error / contract_error.
std::vector<bridging_pal> shortest_bridging_pals(const std::string& t, size_t pos);

}  // namespace palstruct
