#include "fgn/bench.hpp"

#include <cstdio>
#include <stdexcept>

namespace fgn {

std::vector<WorkRow> measure(GenKind kind, int g, int len_min, int len_max,
                             std::uint64_t budget) {
    if (len_min < 1 || len_max < len_min)
        throw std::invalid_argument("measure: need 1 <= len_min <= len_max");
    const CountKind ck = kind == GenKind::Necklace ? CountKind::Necklaces : CountKind::Bracelets;
    std::vector<WorkRow> rows;
    for (int len = len_min; len <= len_max; ++len) {
        BigCount expected = count(ck, g, len);
        if (expected > BigCount(budget))
            continue;
        Visitor counting_only = [](std::span<const Symbol>) {};
        WorkCounters c = kind == GenKind::Necklace
                             ? generate_necklaces(g, len, false, counting_only)
                             : generate_bracelets(g, len, false, counting_only);
        if (BigCount(c.outputs) != expected)
            throw std::logic_error("measure: generator output count disagrees with formula");
        std::uint64_t work = c.calls + c.loop_iters;
        if (kind == GenKind::Bracelet)
            work += c.checkinv_iters;
        rows.push_back({kind, g, len, BigCount(c.outputs), BigCount(work),
                        static_cast<double>(work) / static_cast<double>(c.outputs)});
    }
    return rows;
}

void write_csv(std::ostream& os, const std::vector<WorkRow>& rows, bool header) {
    if (header)
        os << "kind,g,len,outputs,work,ratio\n";
    char buf[32];
    for (const auto& r : rows) {
        std::snprintf(buf, sizeof buf, "%.6f", r.ratio);
        os << (r.kind == GenKind::Necklace ? "necklace" : "bracelet") << ',' << r.g << ','
           << r.len << ',' << r.outputs.get_str() << ',' << r.work.get_str() << ',' << buf
           << '\n';
    }
}

} // namespace fgn
