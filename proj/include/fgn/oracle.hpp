#pragma once

#include "fgn/symbols.hpp"

#include <cstdint>
#include <vector>

// Naive reference enumeration used to validate the recursive generators and
// the counting formulas. Deliberately shares nothing with the generator: it
// walks all k^l raw words, filters, canonicalizes and sorts.

namespace fgn {

enum class OracleKind { Necklace, Bracelet, Lyndon, PrimeBracelet };

struct CanonicalSet {
    OracleKind kind;
    std::vector<Word> words; // sorted, duplicate-free
};

inline constexpr std::uint64_t kDefaultOracleBudget = 10'000'000;

// True iff w equals u^m for some proper divisor period |u|, m >= 2.
bool is_proper_power(std::span<const Symbol> w);

// Enumerate the canonical set for (kind, g, len). Throws std::invalid_argument
// when k^len exceeds `budget` raw words.
CanonicalSet brute_enumerate(OracleKind kind, int g, int len,
                             std::uint64_t budget = kDefaultOracleBudget);

} // namespace fgn
