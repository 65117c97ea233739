#pragma once

#include "fgn/symbols.hpp"

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

// Recursive generation of reduced necklaces and bracelets in F_g, in
// increasing lexicographic order. The recursion extends freely reduced
// prenecklaces one symbol at a time, skipping extensions that would create an
// adjacent inverse pair and, at the last position, extensions that would make
// the word cyclically reducible. Work counters record every recursive call
// and loop iteration so that amortized cost can be measured exactly.

namespace fgn {

enum class GenKind { Necklace, Bracelet };

struct WorkCounters {
    std::uint64_t calls = 0;          // generator procedure invocations
    std::uint64_t loop_iters = 0;     // embedded for-loop iterations
    std::uint64_t checkinv_iters = 0; // inverse-comparison loop iterations (bracelets)
    std::uint64_t checkinv_zeroes = 0; // "equal" results; never hit on reduced input
    std::uint64_t outputs = 0;        // words emitted
    bool non_cat = false;             // set for g = 1, where amortized cost is O(l)

    WorkCounters& operator+=(const WorkCounters& o);
};

// Receives a read-only view of the shared generation buffer. The view is
// invalidated when the callback returns; copy it to keep it.
using Visitor = std::function<void(std::span<const Symbol>)>;

// Emit every reduced necklace (aperiodic = false) or reduced Lyndon word
// (aperiodic = true) of length `len` over 2g symbols, in lexicographic order.
WorkCounters generate_necklaces(int g, int len, bool aperiodic, const Visitor& visit);

// Emit every reduced bracelet of length `len`, lexicographic order; with
// aperiodic = true only the aperiodic ones.
WorkCounters generate_bracelets(int g, int len, bool aperiodic, const Visitor& visit);

// Compare the slice a_i..a_t of `word` (1-indexed positions) against its
// inverse: -1 if the slice precedes it, +1 if the inverse precedes the slice,
// 0 if equal. `iters`, when given, accumulates loop iterations.
int check_inv(std::span<const Symbol> word, int t, int i, std::uint64_t* iters = nullptr);

// The depth-level frontier of the recursion tree: every length-`depth` prefix
// the generator would extend or emit, in lexicographic order.
std::vector<Word> split_prefixes(int g, int len, int depth, GenKind kind);

// Resume the enumeration below one frontier prefix: emits exactly the words
// of the full run that begin with `prefix`, in order. The recursion
// parameters are reconstructed from the prefix itself, so prefixes are
// portable work units; the union over a full frontier is the full run.
// Throws std::invalid_argument for a prefix not on the frontier.
WorkCounters generate_from_prefix(std::span<const Symbol> prefix, int g, int len,
                                  bool aperiodic, GenKind kind, const Visitor& visit);

} // namespace fgn
