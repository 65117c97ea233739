#include "fgn/bench.hpp"
#include "fgn/counting.hpp"
#include "fgn/generate.hpp"
#include "fgn/oracle.hpp"
#include "fgn/symbols.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>

namespace {

using namespace fgn;

const std::map<std::string, CountKind> kCountKinds = {
    {"reduced-words", CountKind::ReducedWords}, {"necklaces", CountKind::Necklaces},
    {"bracelets", CountKind::Bracelets},        {"prime-words", CountKind::PrimeWords},
    {"lyndon", CountKind::Lyndon},              {"prime-bracelets", CountKind::PrimeBracelets},
};

std::ostream& open_output(const std::string& path, std::ofstream& file) {
    if (path.empty())
        return std::cout;
    file.open(path);
    if (!file)
        throw CLI::ValidationError("--output", "cannot open '" + path + "'");
    return file;
}

int run_count(const std::string& kind, int g, int len) {
    std::cout << count(kCountKinds.at(kind), g, len).get_str() << '\n';
    return 0;
}

int run_gen(const std::string& kind_str, int g, int len, bool aperiodic,
            const std::string& format_str, bool count_only, const std::string& prefix_str,
            bool list_prefixes, int depth, const std::string& out_path) {
    const GenKind kind = kind_str == "necklace" ? GenKind::Necklace : GenKind::Bracelet;
    const GroupContext ctx(g);
    WordFormat fmt;
    if (format_str == "letters")
        fmt = WordFormat::Letters;
    else if (format_str == "ints")
        fmt = WordFormat::Ints;
    else
        fmt = g <= 26 ? WordFormat::Letters : WordFormat::Ints;

    std::ofstream file;
    std::ostream& os = open_output(out_path, file);

    if (list_prefixes) {
        if (depth <= 0)
            throw CLI::ValidationError("--list-prefixes", "requires --depth");
        for (const Word& p : split_prefixes(g, len, depth, kind))
            os << format_word(p, fmt) << '\n';
        return 0;
    }

    Visitor emit = [&](std::span<const Symbol> w) { os << format_word(w, fmt) << '\n'; };
    Visitor drop = [](std::span<const Symbol>) {};
    const Visitor& visit = count_only ? drop : emit;

    WorkCounters c;
    if (!prefix_str.empty()) {
        Word prefix = parse_word(prefix_str, ctx, fmt);
        if (depth > 0 && depth != static_cast<int>(prefix.size()))
            throw CLI::ValidationError("--depth", "does not match the prefix length");
        c = generate_from_prefix(prefix, g, len, aperiodic, kind, visit);
    } else if (kind == GenKind::Necklace) {
        c = generate_necklaces(g, len, aperiodic, visit);
    } else {
        c = generate_bracelets(g, len, aperiodic, visit);
    }
    if (count_only)
        os << c.outputs << '\n';
    return 0;
}

int run_bench(const std::string& kind_str, int g, int lmin, int lmax, std::uint64_t budget,
              const std::string& out_path) {
    const GenKind kind = kind_str == "necklace" ? GenKind::Necklace : GenKind::Bracelet;
    std::ofstream file;
    std::ostream& os = open_output(out_path, file);
    write_csv(os, measure(kind, g, lmin, lmax, budget));
    return 0;
}

int run_verify(int g, int lmax, std::uint64_t budget) {
    struct Case {
        GenKind kind;
        bool aperiodic;
        OracleKind okind;
        CountKind ckind;
        const char* name;
    };
    const Case cases[] = {
        {GenKind::Necklace, false, OracleKind::Necklace, CountKind::Necklaces, "necklace"},
        {GenKind::Necklace, true, OracleKind::Lyndon, CountKind::Lyndon, "lyndon"},
        {GenKind::Bracelet, false, OracleKind::Bracelet, CountKind::Bracelets, "bracelet"},
        {GenKind::Bracelet, true, OracleKind::PrimeBracelet, CountKind::PrimeBracelets,
         "prime-bracelet"},
    };
    bool all_ok = true;
    for (int len = 1; len <= lmax; ++len) {
        for (const Case& c : cases) {
            std::vector<Word> got;
            Visitor collect = [&](std::span<const Symbol> w) { got.emplace_back(w.begin(), w.end()); };
            WorkCounters wc = c.kind == GenKind::Necklace
                                  ? generate_necklaces(g, len, c.aperiodic, collect)
                                  : generate_bracelets(g, len, c.aperiodic, collect);
            CanonicalSet oracle;
            try {
                oracle = brute_enumerate(c.okind, g, len, budget);
            } catch (const std::invalid_argument& e) {
                std::cerr << "fgn: " << e.what() << '\n';
                return 1;
            }
            bool ok = got == oracle.words && BigCount(wc.outputs) == count(c.ckind, g, len) &&
                      wc.checkinv_zeroes == 0;
            std::printf("%s %-14s g=%d l=%-2d (%zu words)\n", ok ? "PASS" : "FAIL", c.name, g,
                        len, got.size());
            all_ok = all_ok && ok;
        }
    }
    return all_ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Reduced necklaces and bracelets in free groups"};
    app.require_subcommand(1);

    std::string kind, format, prefix, output;
    int g = 2, len = 0, lmin = 1, lmax = 0, depth = 0;
    bool aperiodic = false, count_only = false, list_prefixes = false;
    std::uint64_t budget = fgn::kDefaultOracleBudget;

    auto* cnt = app.add_subcommand("count", "Print an exact count");
    cnt->add_option("--kind", kind, "Count kind")
        ->required()
        ->check(CLI::IsMember({"reduced-words", "necklaces", "bracelets", "prime-words",
                               "lyndon", "prime-bracelets"}));
    cnt->add_option("-g", g, "Rank (number of generators)")->required()->check(CLI::PositiveNumber);
    cnt->add_option("-l", len, "Word length")->required()->check(CLI::PositiveNumber);

    auto* gen = app.add_subcommand("gen", "Stream words in lexicographic order");
    gen->add_option("--kind", kind, "necklace or bracelet")
        ->required()
        ->check(CLI::IsMember({"necklace", "bracelet"}));
    gen->add_option("-g", g, "Rank")->required()->check(CLI::PositiveNumber);
    gen->add_option("-l", len, "Word length")->required()->check(CLI::PositiveNumber);
    gen->add_flag("--aperiodic", aperiodic, "Only aperiodic (prime) words");
    gen->add_option("--format", format, "letters or ints (default: letters for g <= 26)")
        ->check(CLI::IsMember({"letters", "ints"}));
    gen->add_flag("--count-only", count_only, "Suppress words, print the total");
    gen->add_option("--prefix", prefix, "Restrict to one subtree (prefix in the selected format)");
    gen->add_option("--depth", depth, "Subtree depth")->check(CLI::PositiveNumber);
    gen->add_flag("--list-prefixes", list_prefixes,
                  "Print the subtree prefixes at --depth instead of words");
    gen->add_option("-o,--output", output, "Write to a file instead of standard output");

    auto* bench = app.add_subcommand("bench", "Emit the work-per-output CSV");
    bench->add_option("--kind", kind, "necklace or bracelet")
        ->required()
        ->check(CLI::IsMember({"necklace", "bracelet"}));
    bench->add_option("-g", g, "Rank")->required()->check(CLI::PositiveNumber);
    bench->add_option("--lmin", lmin, "Smallest length")->check(CLI::PositiveNumber);
    bench->add_option("--lmax", lmax, "Largest length")->required()->check(CLI::PositiveNumber);
    bench->add_option("--budget", budget, "Skip lengths with more outputs than this");
    bench->add_option("-o,--output", output, "Write to a file instead of standard output");

    auto* verify = app.add_subcommand("verify", "Cross-check generators against the brute-force oracle");
    verify->add_option("-g", g, "Rank")->required()->check(CLI::PositiveNumber);
    verify->add_option("--lmax", lmax, "Largest length")->required()->check(CLI::PositiveNumber);
    verify->add_option("--budget", budget, "Raw-word budget for the oracle");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (cnt->parsed())
            return run_count(kind, g, len);
        if (gen->parsed())
            return run_gen(kind, g, len, aperiodic, format, count_only, prefix, list_prefixes,
                           depth, output);
        if (bench->parsed())
            return run_bench(kind, g, lmin, lmax, budget, output);
        return run_verify(g, lmax, budget);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "fgn: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "fgn: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "fgn: " << e.what() << '\n';
        return 1;
    }
}
