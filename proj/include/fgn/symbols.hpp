#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

// Alphabet encoding and word arithmetic for the free group F_g.
//
// Symbols are the integers 0..k-1 with k = 2g: even values are generators,
// odd values their inverses (2m+1 is the inverse of 2m). Words are symbol
// sequences; the empty word is the group identity.

namespace fgn {

using Symbol = int;
using Word = std::vector<Symbol>;

struct GroupContext {
    int g; // rank (number of generators)
    int k; // alphabet size, always 2g

    explicit GroupContext(int rank) : g(rank), k(2 * rank) {
        if (rank < 1)
            throw std::invalid_argument("GroupContext: rank must be >= 1");
    }

    bool valid_symbol(Symbol s) const { return s >= 0 && s < k; }
};

inline bool are_inverses(Symbol x, Symbol y) {
    if (x % 2 == 0)
        return x + 1 == y;
    return x == y + 1;
}

inline Symbol inverse_symbol(Symbol x) {
    if (x % 2 == 0)
        return x + 1;
    return x - 1;
}

// Reverse the word and map every symbol to its inverse; the result is the
// group inverse of w.
Word invert_word(std::span<const Symbol> w);

// Delete adjacent inverse pairs until none remain (single stack scan).
Word free_reduce(std::span<const Symbol> w);

// Strip mutually-inverse (first, last) pairs. Input must be freely reduced.
Word cyclic_reduce(std::span<const Symbol> w);

struct ReductionStatus {
    bool freely_reduced;
    bool cyclically_reduced;
};

ReductionStatus reduction_status(std::span<const Symbol> w);

// free_reduce(r^-1 . w . r)
Word conjugate(std::span<const Symbol> w, Symbol r);

// Lexicographically least rotation (Booth's algorithm). Rejects the empty word.
Word least_rotation(std::span<const Symbol> w);

// min over the rotations of w and of its inverse; the bracelet-class
// representative. Input must be nonempty and freely and cyclically reduced.
Word canonical_bracelet(std::span<const Symbol> w);

enum class WordFormat { Letters, Ints };

// "letters": generator 2m is the m-th lowercase Latin letter, its inverse the
// uppercase one; only usable for g <= 26. "ints": comma-separated values.
std::string format_word(std::span<const Symbol> w, WordFormat style);

Word parse_word(const std::string& text, const GroupContext& ctx, WordFormat style);

} // namespace fgn
