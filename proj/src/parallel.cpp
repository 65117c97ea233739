#include "fgn/parallel.hpp"

namespace fgn {

WorkCounters parallel_count(GenKind kind, int g, int len, bool aperiodic, int depth) {
    const std::vector<Word> prefixes = split_prefixes(g, len, depth, kind);
    const int n = static_cast<int>(prefixes.size());
    std::vector<WorkCounters> partial(n);
    Visitor counting_only = [](std::span<const Symbol>) {};
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < n; ++i)
        partial[i] = generate_from_prefix(prefixes[i], g, len, aperiodic, kind, counting_only);
    WorkCounters total;
    for (const auto& c : partial)
        total += c;
    return total;
}

WorkCounters parallel_generate(GenKind kind, int g, int len, bool aperiodic, int depth,
                               const Visitor& visit) {
    const std::vector<Word> prefixes = split_prefixes(g, len, depth, kind);
    const int n = static_cast<int>(prefixes.size());
    std::vector<WorkCounters> partial(n);
    std::vector<std::vector<Word>> buckets(n);
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < n; ++i) {
        auto& bucket = buckets[i];
        Visitor collect = [&bucket](std::span<const Symbol> w) {
            bucket.emplace_back(w.begin(), w.end());
        };
        partial[i] = generate_from_prefix(prefixes[i], g, len, aperiodic, kind, collect);
    }
    WorkCounters total;
    for (int i = 0; i < n; ++i) {
        total += partial[i];
        for (const auto& w : buckets[i])
            visit(w);
    }
    return total;
}

} // namespace fgn
