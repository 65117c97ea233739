// Compares the serial generators against the OpenMP prefix-sharded runner:
// wall time, counted work and output totals for a few (g, l) points.

#include "fgn/counting.hpp"
#include "fgn/parallel.hpp"

#include <chrono>
#include <cstdio>

#include <omp.h>

using namespace fgn;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

void compare(GenKind kind, int g, int len, int depth) {
    Visitor counting_only = [](std::span<const Symbol>) {};

    auto t0 = Clock::now();
    WorkCounters serial = kind == GenKind::Necklace
                              ? generate_necklaces(g, len, false, counting_only)
                              : generate_bracelets(g, len, false, counting_only);
    double ts = seconds_since(t0);

    t0 = Clock::now();
    WorkCounters par = parallel_count(kind, g, len, false, depth);
    double tp = seconds_since(t0);

    const char* name = kind == GenKind::Necklace ? "necklace" : "bracelet";
    std::printf("%-8s g=%d l=%-2d depth=%d  outputs=%llu  serial %.3fs  parallel %.3fs  "
                "speedup %.2fx  %s\n",
                name, g, len, depth, static_cast<unsigned long long>(serial.outputs), ts, tp,
                ts / tp, serial.outputs == par.outputs ? "ok" : "MISMATCH");
}

} // namespace

int main() {
    std::printf("threads: %d\n", omp_get_max_threads());
    compare(GenKind::Necklace, 2, 18, 4);
    compare(GenKind::Necklace, 3, 12, 3);
    compare(GenKind::Bracelet, 2, 18, 4);
    compare(GenKind::Bracelet, 3, 12, 3);
    return 0;
}
