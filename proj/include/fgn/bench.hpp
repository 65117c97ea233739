#pragma once

#include "fgn/counting.hpp"
#include "fgn/generate.hpp"

#include <cstdint>
#include <ostream>
#include <vector>

// Amortized-work measurement: one row per word length, with the exact
// integer work and output counters and their ratio. Work is counted, not
// timed: necklaces cost calls + for-loop iterations, bracelets additionally
// the inverse-comparison loop iterations. The visitor only counts, so
// downstream processing is excluded from the measure.

namespace fgn {

struct WorkRow {
    GenKind kind;
    int g;
    int len;
    BigCount outputs;
    BigCount work;
    double ratio; // work / outputs
};

inline constexpr std::uint64_t kDefaultBenchBudget = 10'000'000; // predicted outputs

// One row per length in [len_min, len_max]; lengths whose predicted output
// count exceeds `budget` are skipped. Output counts are cross-checked
// against the counting formulas; a mismatch throws std::logic_error.
std::vector<WorkRow> measure(GenKind kind, int g, int len_min, int len_max,
                             std::uint64_t budget = kDefaultBenchBudget);

// CSV with header "kind,g,len,outputs,work,ratio"; ratio to 6 decimal places.
void write_csv(std::ostream& os, const std::vector<WorkRow>& rows, bool header = true);

} // namespace fgn
