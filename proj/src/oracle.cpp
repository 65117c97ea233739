#include "fgn/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace fgn {

bool is_proper_power(std::span<const Symbol> w) {
    const size_t n = w.size();
    for (size_t period = 1; period <= n / 2; ++period) {
        if (n % period != 0)
            continue;
        bool ok = true;
        for (size_t i = period; i < n && ok; ++i)
            ok = (w[i] == w[i - period]);
        if (ok)
            return true;
    }
    return false;
}

CanonicalSet brute_enumerate(OracleKind kind, int g, int len, std::uint64_t budget) {
    if (g < 1 || len < 1)
        throw std::invalid_argument("brute_enumerate: g and length must be >= 1");
    const int k = 2 * g;
    std::uint64_t total = 1;
    for (int i = 0; i < len; ++i) {
        total *= static_cast<std::uint64_t>(k);
        if (total > budget)
            throw std::invalid_argument("brute_enumerate: k^len exceeds budget");
    }

    const bool aperiodic = (kind == OracleKind::Lyndon || kind == OracleKind::PrimeBracelet);
    const bool bracelet = (kind == OracleKind::Bracelet || kind == OracleKind::PrimeBracelet);

    std::vector<Word> canon;
    Word w(len, 0);
    for (std::uint64_t code = 0; code < total; ++code) {
        std::uint64_t c = code;
        for (int i = 0; i < len; ++i) {
            w[i] = static_cast<Symbol>(c % k);
            c /= k;
        }
        auto st = reduction_status(w);
        if (!st.freely_reduced || !st.cyclically_reduced)
            continue;
        if (aperiodic && is_proper_power(w))
            continue;
        canon.push_back(bracelet ? canonical_bracelet(w) : least_rotation(w));
    }
    std::sort(canon.begin(), canon.end());
    canon.erase(std::unique(canon.begin(), canon.end()), canon.end());
    return {kind, std::move(canon)};
}

} // namespace fgn
