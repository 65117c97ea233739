#include "fgn/symbols.hpp"

#include <algorithm>
#include <sstream>

namespace fgn {

Word invert_word(std::span<const Symbol> w) {
    Word out;
    out.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it)
        out.push_back(inverse_symbol(*it));
    return out;
}

Word free_reduce(std::span<const Symbol> w) {
    Word stack;
    stack.reserve(w.size());
    for (Symbol s : w) {
        if (!stack.empty() && are_inverses(stack.back(), s))
            stack.pop_back();
        else
            stack.push_back(s);
    }
    return stack;
}

Word cyclic_reduce(std::span<const Symbol> w) {
    for (size_t i = 0; i + 1 < w.size(); ++i)
        if (are_inverses(w[i], w[i + 1]))
            throw std::invalid_argument("cyclic_reduce: input is not freely reduced");
    size_t lo = 0, hi = w.size();
    while (hi - lo >= 2 && are_inverses(w[lo], w[hi - 1])) {
        ++lo;
        --hi;
    }
    return Word(w.begin() + lo, w.begin() + hi);
}

ReductionStatus reduction_status(std::span<const Symbol> w) {
    bool free_ok = true;
    for (size_t i = 0; i + 1 < w.size(); ++i)
        if (are_inverses(w[i], w[i + 1])) {
            free_ok = false;
            break;
        }
    bool cyc_ok = w.size() < 2 || !are_inverses(w.front(), w.back());
    return {free_ok, cyc_ok};
}

Word conjugate(std::span<const Symbol> w, Symbol r) {
    Word tmp;
    tmp.reserve(w.size() + 2);
    tmp.push_back(inverse_symbol(r));
    tmp.insert(tmp.end(), w.begin(), w.end());
    tmp.push_back(r);
    return free_reduce(tmp);
}

Word least_rotation(std::span<const Symbol> w) {
    if (w.empty())
        throw std::invalid_argument("least_rotation: empty word");
    // Booth's algorithm on the doubled word.
    const size_t n = w.size();
    auto at = [&](size_t i) { return w[i % n]; };
    std::vector<ptrdiff_t> f(2 * n, -1);
    size_t start = 0;
    for (size_t j = 1; j < 2 * n; ++j) {
        Symbol sj = at(j);
        ptrdiff_t i = f[j - start - 1];
        while (i != -1 && sj != at(start + i + 1)) {
            if (sj < at(start + i + 1))
                start = j - i - 1;
            i = f[i];
        }
        if (sj != at(start + i + 1)) {
            if (sj < at(start)) // i == -1 here
                start = j;
            f[j - start] = -1;
        } else {
            f[j - start] = i + 1;
        }
    }
    Word out;
    out.reserve(n);
    for (size_t i = 0; i < n; ++i)
        out.push_back(at(start + i));
    return out;
}

Word canonical_bracelet(std::span<const Symbol> w) {
    auto st = reduction_status(w);
    if (w.empty() || !st.freely_reduced || !st.cyclically_reduced)
        throw std::invalid_argument("canonical_bracelet: input must be nonempty and reduced");
    Word a = least_rotation(w);
    Word b = least_rotation(invert_word(w));
    return std::min(a, b);
}

std::string format_word(std::span<const Symbol> w, WordFormat style) {
    std::string out;
    if (style == WordFormat::Letters) {
        for (Symbol s : w) {
            int gen = s / 2;
            if (gen >= 26)
                throw std::invalid_argument("format_word: letters style needs g <= 26");
            out.push_back(static_cast<char>((s % 2 == 0 ? 'a' : 'A') + gen));
        }
    } else {
        for (size_t i = 0; i < w.size(); ++i) {
            if (i)
                out.push_back(',');
            out += std::to_string(w[i]);
        }
    }
    return out;
}

Word parse_word(const std::string& text, const GroupContext& ctx, WordFormat style) {
    Word out;
    if (style == WordFormat::Letters) {
        for (char c : text) {
            Symbol s;
            if (c >= 'a' && c <= 'z')
                s = 2 * (c - 'a');
            else if (c >= 'A' && c <= 'Z')
                s = 2 * (c - 'A') + 1;
            else
                throw std::invalid_argument(std::string("parse_word: bad character '") + c + "'");
            if (!ctx.valid_symbol(s))
                throw std::invalid_argument(std::string("parse_word: symbol '") + c +
                                            "' out of range for rank " + std::to_string(ctx.g));
            out.push_back(s);
        }
    } else {
        if (text.empty())
            return out;
        std::stringstream ss(text);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            size_t pos = 0;
            int v;
            try {
                v = std::stoi(tok, &pos);
            } catch (const std::exception&) {
                throw std::invalid_argument("parse_word: bad integer token '" + tok + "'");
            }
            if (pos != tok.size() || v < 0 || !ctx.valid_symbol(v))
                throw std::invalid_argument("parse_word: bad symbol value '" + tok + "'");
            out.push_back(v);
        }
    }
    return out;
}

} // namespace fgn
