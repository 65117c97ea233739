#include "fgn/counting.hpp"
#include "fgn/generate.hpp"
#include "fgn/oracle.hpp"

#include <doctest.h>

#include <algorithm>

using namespace fgn;

namespace {

std::vector<Word> collect_necklaces(int g, int len, bool aperiodic,
                                    WorkCounters* counters = nullptr) {
    std::vector<Word> out;
    WorkCounters c = generate_necklaces(g, len, aperiodic, [&](std::span<const Symbol> w) {
        out.emplace_back(w.begin(), w.end());
    });
    if (counters)
        *counters = c;
    return out;
}

std::vector<Word> collect_bracelets(int g, int len, bool aperiodic,
                                    WorkCounters* counters = nullptr) {
    std::vector<Word> out;
    WorkCounters c = generate_bracelets(g, len, aperiodic, [&](std::span<const Symbol> w) {
        out.emplace_back(w.begin(), w.end());
    });
    if (counters)
        *counters = c;
    return out;
}

} // namespace

TEST_CASE("necklaces, small instances") {
    CHECK(collect_necklaces(2, 1, false) == std::vector<Word>{{0}, {1}, {2}, {3}});
    CHECK(collect_necklaces(2, 2, false) ==
          std::vector<Word>{{0, 0}, {0, 2}, {0, 3}, {1, 1}, {1, 2}, {1, 3}, {2, 2}, {3, 3}});
    CHECK(collect_necklaces(2, 2, true) ==
          std::vector<Word>{{0, 2}, {0, 3}, {1, 2}, {1, 3}});
    CHECK(collect_necklaces(2, 3, false).size() == 12);
}

TEST_CASE("bracelets, small instances") {
    CHECK(collect_bracelets(2, 2, false) ==
          std::vector<Word>{{0, 0}, {0, 2}, {0, 3}, {2, 2}});
    CHECK(collect_bracelets(2, 1, false) == std::vector<Word>{{0}, {2}});
    CHECK(collect_bracelets(2, 3, false).size() == 6);
}

TEST_CASE("invalid sizes are rejected") {
    Visitor nop = [](std::span<const Symbol>) {};
    CHECK_THROWS_AS(generate_necklaces(2, 0, false, nop), std::invalid_argument);
    CHECK_THROWS_AS(generate_bracelets(2, 0, false, nop), std::invalid_argument);
    CHECK_THROWS_AS(generate_necklaces(0, 3, false, nop), std::invalid_argument);
}

TEST_CASE("g=1 runs but is flagged non-CAT") {
    WorkCounters c;
    auto words = collect_necklaces(1, 5, false, &c);
    CHECK(c.non_cat);
    CHECK(words == std::vector<Word>{{0, 0, 0, 0, 0}, {1, 1, 1, 1, 1}});
    words = collect_bracelets(1, 5, false, &c);
    CHECK(c.non_cat);
    CHECK(words == std::vector<Word>{{0, 0, 0, 0, 0}});
}

TEST_CASE("check_inv") {
    CHECK(check_inv(Word{0, 2}, 2, 1) == -1);
    CHECK(check_inv(Word{2, 1}, 2, 1) == +1);
    CHECK(check_inv(Word{0, 1}, 2, 1) == 0);
    std::uint64_t iters = 0;
    CHECK(check_inv(Word{0, 2, 2, 3}, 4, 2) != 0);
    check_inv(Word{0, 2}, 2, 1, &iters);
    CHECK(iters == 1);
}

TEST_CASE("oracle equivalence on the small grid") {
    for (int g = 2; g <= 3; ++g)
        for (int len = 1; len <= 6; ++len) {
            WorkCounters c;
            CHECK(collect_necklaces(g, len, false, &c) ==
                  brute_enumerate(OracleKind::Necklace, g, len).words);
            CHECK(collect_necklaces(g, len, true) ==
                  brute_enumerate(OracleKind::Lyndon, g, len).words);
            CHECK(collect_bracelets(g, len, false, &c) ==
                  brute_enumerate(OracleKind::Bracelet, g, len).words);
            CHECK(c.checkinv_zeroes == 0);
            CHECK(collect_bracelets(g, len, true) ==
                  brute_enumerate(OracleKind::PrimeBracelet, g, len).words);
        }
}

TEST_CASE("emitted words are canonical, ordered and counted") {
    for (int g = 2; g <= 3; ++g)
        for (int len = 2; len <= 6; ++len) {
            WorkCounters c;
            auto necks = collect_necklaces(g, len, false, &c);
            CHECK(BigCount(c.outputs) == count(CountKind::Necklaces, g, len));
            CHECK(c.calls >= c.outputs);
            CHECK(std::is_sorted(necks.begin(), necks.end()));
            CHECK(std::adjacent_find(necks.begin(), necks.end()) == necks.end());
            for (const Word& w : necks) {
                auto st = reduction_status(w);
                CHECK(st.freely_reduced);
                CHECK(st.cyclically_reduced);
                CHECK(least_rotation(w) == w);
            }
            auto braces = collect_bracelets(g, len, false);
            CHECK(BigCount(braces.size()) == count(CountKind::Bracelets, g, len));
            for (const Word& w : braces)
                CHECK(canonical_bracelet(w) == w);
            // every non-bracelet necklace pairs with an emitted bracelet
            for (const Word& w : necks)
                CHECK(std::binary_search(braces.begin(), braces.end(), canonical_bracelet(w)));
        }
}

TEST_CASE("aperiodic outputs are Lyndon words") {
    for (int g = 2; g <= 3; ++g)
        for (int len = 1; len <= 6; ++len)
            for (const Word& w : collect_necklaces(g, len, true)) {
                Word rot = w;
                for (size_t i = 1; i < w.size(); ++i) {
                    std::rotate(rot.begin(), rot.begin() + 1, rot.end());
                    CHECK(w < rot);
                }
            }
}

TEST_CASE("counters are deterministic") {
    WorkCounters a, b;
    collect_necklaces(3, 6, false, &a);
    collect_necklaces(3, 6, false, &b);
    CHECK(a.calls == b.calls);
    CHECK(a.loop_iters == b.loop_iters);
    CHECK(a.outputs == b.outputs);
    collect_bracelets(3, 6, false, &a);
    collect_bracelets(3, 6, false, &b);
    CHECK(a.calls == b.calls);
    CHECK(a.loop_iters == b.loop_iters);
    CHECK(a.checkinv_iters == b.checkinv_iters);
}

TEST_CASE("split_prefixes") {
    CHECK(split_prefixes(2, 2, 1, GenKind::Necklace) ==
          std::vector<Word>{{0}, {1}, {2}, {3}});
    CHECK(split_prefixes(2, 2, 1, GenKind::Bracelet) == std::vector<Word>{{0}, {2}});
    CHECK_THROWS_AS(split_prefixes(2, 2, 3, GenKind::Necklace), std::invalid_argument);

    // Depth-2 necklace frontier equals the brute-force prenecklace filter:
    // freely reduced, a1 <= a2, and extendable past the cyclic-reduction test.
    auto frontier = split_prefixes(2, 3, 2, GenKind::Necklace);
    std::vector<Word> expected;
    for (Symbol a = 0; a < 4; ++a)
        for (Symbol b = a; b < 4; ++b)
            if (!are_inverses(a, b))
                expected.push_back({a, b});
    CHECK(frontier == expected);
    CHECK(std::is_sorted(frontier.begin(), frontier.end()));
}

TEST_CASE("generate_from_prefix resumes a subtree") {
    auto run = [](const Word& p, int g, int len, GenKind kind) {
        std::vector<Word> out;
        generate_from_prefix(p, g, len, false, kind,
                             [&](std::span<const Symbol> w) { out.emplace_back(w.begin(), w.end()); });
        return out;
    };
    CHECK(run({0}, 2, 2, GenKind::Necklace) == std::vector<Word>{{0, 0}, {0, 2}, {0, 3}});
    CHECK(run({3}, 2, 2, GenKind::Necklace) == std::vector<Word>{{3, 3}});

    Visitor nop = [](std::span<const Symbol>) {};
    CHECK_THROWS_AS(generate_from_prefix(Word{1}, 2, 4, false, GenKind::Bracelet, nop),
                    std::invalid_argument);
    CHECK_THROWS_AS(generate_from_prefix(Word{2, 0}, 2, 4, false, GenKind::Necklace, nop),
                    std::invalid_argument); // not a prenecklace
    CHECK_THROWS_AS(generate_from_prefix(Word{0, 1}, 2, 4, false, GenKind::Necklace, nop),
                    std::invalid_argument); // not freely reduced
    CHECK_THROWS_AS(generate_from_prefix(Word{}, 2, 4, false, GenKind::Necklace, nop),
                    std::invalid_argument);
}

TEST_CASE("sharded union reproduces the full enumeration") {
    struct Conf {
        GenKind kind;
        bool aperiodic;
    };
    const Conf confs[] = {{GenKind::Necklace, false},
                          {GenKind::Necklace, true},
                          {GenKind::Bracelet, false},
                          {GenKind::Bracelet, true}};
    for (const auto& conf : confs)
        for (int len : {5, 7})
            for (int depth : {1, 2, 3}) {
                const int g = 2;
                std::vector<Word> whole;
                Visitor collect = [&](std::span<const Symbol> w) {
                    whole.emplace_back(w.begin(), w.end());
                };
                if (conf.kind == GenKind::Necklace)
                    generate_necklaces(g, len, conf.aperiodic, collect);
                else
                    generate_bracelets(g, len, conf.aperiodic, collect);

                std::vector<Word> sharded;
                Visitor append = [&](std::span<const Symbol> w) {
                    sharded.emplace_back(w.begin(), w.end());
                };
                for (const Word& p : split_prefixes(g, len, depth, conf.kind))
                    generate_from_prefix(p, g, len, conf.aperiodic, conf.kind, append);
                CHECK(sharded == whole);
            }
}
