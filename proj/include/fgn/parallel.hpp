#pragma once

#include "fgn/generate.hpp"

// OpenMP front end over the prefix-sharded enumeration. The recursion tree is
// cut at a fixed depth and the subtrees below the frontier prefixes run as
// independent work units, each with its own buffer and counters; counters are
// summed afterwards. The serial generators in generate.hpp stay the reference
// implementation the tests compare against.

namespace fgn {

// Count the enumeration with subtrees running in parallel. Equivalent to a
// serial run with a counting visitor, up to the calls/loop work spent above
// the cut (which a sharded run does not perform).
WorkCounters parallel_count(GenKind kind, int g, int len, bool aperiodic, int depth);

// Full parallel enumeration with ordered delivery: subtree outputs are
// buffered per prefix and the visitor is invoked in prefix order, so the
// word sequence is identical to the serial run. Buffers the outputs, so the
// memory cost is proportional to the words below the largest subtree times
// the shard count; use the serial generators when streaming matters.
WorkCounters parallel_generate(GenKind kind, int g, int len, bool aperiodic, int depth,
                               const Visitor& visit);

} // namespace fgn
