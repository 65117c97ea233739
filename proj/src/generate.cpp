#include "fgn/generate.hpp"

#include <cassert>
#include <stdexcept>

namespace fgn {

WorkCounters& WorkCounters::operator+=(const WorkCounters& o) {
    calls += o.calls;
    loop_iters += o.loop_iters;
    checkinv_iters += o.checkinv_iters;
    checkinv_zeroes += o.checkinv_zeroes;
    outputs += o.outputs;
    non_cat = non_cat || o.non_cat;
    return *this;
}

int check_inv(std::span<const Symbol> word, int t, int i, std::uint64_t* iters) {
    for (int j = i; j <= t; ++j) {
        if (iters)
            ++*iters;
        Symbol x = word[j - 1];
        Symbol y = inverse_symbol(word[t - j]);
        if (x < y)
            return -1;
        if (x > y)
            return +1;
    }
    return 0;
}

namespace {

// Shared state of one enumeration run. The buffer is 1-indexed (a[0] unused)
// to keep the index arithmetic of the recursion untranslated.
struct Gen {
    int len, k;
    bool aperiodic;
    Symbol aoi = 0; // inverse of a[1]
    std::vector<Symbol> a;
    const Visitor* visit = nullptr;
    WorkCounters c;

    // When stop > 0 the recursion halts at that depth and records the
    // frontier instead of emitting words.
    int stop = 0;
    std::vector<Word>* frontier = nullptr;

    Gen(int g, int l, bool ap) : len(l), k(2 * g), aperiodic(ap), a(l + 1, 0) {
        if (g < 1)
            throw std::invalid_argument("generate: g must be >= 1");
        if (l < 1)
            throw std::invalid_argument("generate: length must be >= 1");
        c.non_cat = (g == 1);
    }

    bool emit_test(int p) const { return aperiodic ? len == p : len % p == 0; }

    void record(int p) {
        if (stop == len && len % p != 0)
            return;
        frontier->emplace_back(a.begin() + 1, a.begin() + 1 + stop);
    }

    void emit() {
        ++c.outputs;
        if (visit)
            (*visit)(std::span<const Symbol>(a.data() + 1, static_cast<size_t>(len)));
    }

    int checked_inv(int t, int i) {
        int r = check_inv(std::span<const Symbol>(a.data() + 1, static_cast<size_t>(t)), t, i,
                          &c.checkinv_iters);
        if (r == 0)
            ++c.checkinv_zeroes;
        return r;
    }

    void gen_neck(int t, int p) {
        ++c.calls;
        if (stop && t > stop) {
            record(p);
            return;
        }
        if (t > len) {
            if (emit_test(p))
                emit();
            return;
        }
        int j = a[t - p];
        if (!are_inverses(a[t - 1], j) && (t < len || j != aoi)) {
            a[t] = j;
            gen_neck(t + 1, p);
        }
        for (j = a[t - p] + 1; j < k; ++j) {
            ++c.loop_iters;
            if (!are_inverses(a[t - 1], j) && (t < len || j != aoi)) {
                a[t] = j;
                gen_neck(t + 1, t);
            }
        }
    }

    void gen_brace(int t, int p, int u, int v) {
        ++c.calls;
        if (stop && t > stop) {
            record(p);
            return;
        }
        if (t > len) {
            if (emit_test(p))
                emit();
            return;
        }
        const int vv = v;
        int j = a[t - p];
        if (j == a[1]) {
            v = 0;
            if (u == t - 1)
                u = u + 1;
        } else if (j == aoi) {
            v = v + 1;
        } else {
            v = 0;
        }
        if (!are_inverses(a[t - 1], j) && (t < len || j != aoi)) {
            a[t] = j;
            if (u == v) {
                if (checked_inv(t, u + 1) < 0)
                    gen_brace(t + 1, p, u, v);
            } else if (u > v) {
                gen_brace(t + 1, p, u, v);
            }
        }
        if (u == t)
            u = u - 1;
        for (j = a[t - p] + 1; j < k; ++j) {
            ++c.loop_iters;
            if (!are_inverses(a[t - 1], j) && (t < len || j != aoi)) {
                v = (j == aoi) ? vv + 1 : 0;
                a[t] = j;
                if (u == v) {
                    if (checked_inv(t, u + 1) < 0)
                        gen_brace(t + 1, t, u, v);
                } else if (u > v) {
                    gen_brace(t + 1, t, u, v);
                }
            }
        }
    }

    void run_necklaces() {
        for (int j = 0; j < k; ++j) {
            a[1] = j;
            aoi = inverse_symbol(j);
            gen_neck(2, 1);
        }
    }

    void run_bracelets() {
        for (int j = 0; j <= k - 2; j += 2) {
            a[1] = j;
            aoi = inverse_symbol(j);
            gen_brace(2, 1, 1, 0);
        }
    }
};

// Recursion parameters at the node reached by consuming `prefix`; computed by
// replaying the generator's own admission checks symbol by symbol.
struct ResumePoint {
    int p; // longest Lyndon-prefix length
    int u; // leading copies of a_1
    int v; // trailing copies of a_1^-1
};

ResumePoint reconstruct(std::span<const Symbol> prefix, int len, int k, GenKind kind) {
    const int m = static_cast<int>(prefix.size());
    if (m < 1 || m > len)
        throw std::invalid_argument("prefix length must be in 1..length");
    for (Symbol s : prefix)
        if (s < 0 || s >= k)
            throw std::invalid_argument("prefix contains an out-of-range symbol");
    if (kind == GenKind::Bracelet && prefix[0] % 2 != 0)
        throw std::invalid_argument("bracelet prefixes cannot start with a generator inverse");

    const Symbol aoi = inverse_symbol(prefix[0]);
    ResumePoint r{1, 1, 0};
    for (int t = 2; t <= m; ++t) {
        Symbol j = prefix[t - 1];
        Symbol floor_sym = prefix[t - 1 - r.p];
        if (j < floor_sym)
            throw std::invalid_argument("prefix is not a prenecklace");
        if (are_inverses(prefix[t - 2], j) || (t == len && j == aoi))
            throw std::invalid_argument("prefix is not freely/cyclically admissible");
        if (j != floor_sym)
            r.p = t;
        if (j == prefix[0]) {
            r.v = 0;
            if (r.u == t - 1)
                r.u = t;
        } else if (j == aoi) {
            r.v += 1;
        } else {
            r.v = 0;
        }
        if (kind == GenKind::Bracelet) {
            if (r.u < r.v)
                throw std::invalid_argument("prefix exceeds its inverse; pruned subtree");
            if (r.u == r.v && check_inv(prefix.subspan(0, t), t, r.u + 1) >= 0)
                throw std::invalid_argument("prefix exceeds its inverse; pruned subtree");
        }
    }
    return r;
}

} // namespace

WorkCounters generate_necklaces(int g, int len, bool aperiodic, const Visitor& visit) {
    Gen gen(g, len, aperiodic);
    gen.visit = &visit;
    gen.run_necklaces();
    return gen.c;
}

WorkCounters generate_bracelets(int g, int len, bool aperiodic, const Visitor& visit) {
    Gen gen(g, len, aperiodic);
    gen.visit = &visit;
    gen.run_bracelets();
    return gen.c;
}

std::vector<Word> split_prefixes(int g, int len, int depth, GenKind kind) {
    if (depth < 1 || depth > len)
        throw std::invalid_argument("split_prefixes: depth must be in 1..length");
    Gen gen(g, len, /*aperiodic=*/false);
    std::vector<Word> out;
    gen.stop = depth;
    gen.frontier = &out;
    if (kind == GenKind::Necklace)
        gen.run_necklaces();
    else
        gen.run_bracelets();
    return out;
}

WorkCounters generate_from_prefix(std::span<const Symbol> prefix, int g, int len,
                                  bool aperiodic, GenKind kind, const Visitor& visit) {
    Gen gen(g, len, aperiodic);
    ResumePoint r = reconstruct(prefix, len, gen.k, kind);
    gen.visit = &visit;
    std::copy(prefix.begin(), prefix.end(), gen.a.begin() + 1);
    gen.aoi = inverse_symbol(prefix[0]);
    const int t = static_cast<int>(prefix.size()) + 1;
    if (kind == GenKind::Necklace)
        gen.gen_neck(t, r.p);
    else
        gen.gen_brace(t, r.p, r.u, r.v);
    return gen.c;
}

} // namespace fgn
