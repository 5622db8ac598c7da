#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "ramsey/extend.hpp"
#include "ramsey/feasibility.hpp"
#include "ramsey/io.hpp"
#include "ramsey/search.hpp"
#include "ramsey/verify.hpp"

namespace {

using namespace ramsey;

std::ostream& open_output(const std::string& path, std::ofstream& file) {
    if (path.empty() || path == "-") return std::cout;
    file.open(path);
    if (!file) throw std::runtime_error("cannot write " + path);
    return file;
}

int cmd_gen(const std::string& mode, int n, int blocks, int colors, const std::string& avoid,
            std::uint64_t split, std::uint64_t part, const std::string& out_path,
            const std::string& format) {
    SearchJob job;
    job.n = n;
    job.k = (mode == "block") ? blocks : 1;
    job.c = colors;
    job.patterns = parse_pattern_list(avoid);
    job.split_modulus = split;
    job.split_residue = part;

    if (format == "g6" && colors != 2)
        throw std::runtime_error("graph6 output carries only 2-color graphs");

    std::ofstream file;
    std::ostream& out = open_output(out_path, file);
    SearchStats stats;
    if (mode == "circ") {
        enumerate_circulant(
            job,
            [&](const CirculantColoring& c) {
                if (format == "g6")
                    out << encode_graph6(realize_circulant(c)) << "\n";
                else
                    out << emit_circ(c) << "\n";
            },
            &stats);
    } else if (mode == "block") {
        if (blocks < 2) throw std::runtime_error("--mode block needs --blocks >= 2");
        enumerate_block_circulant(
            job,
            [&](const BlockCirculantColoring& b) {
                if (format == "g6")
                    out << encode_graph6(realize_block(b)) << "\n";
                else
                    out << emit_blockcirc(b) << "\n";
            },
            &stats);
    } else {
        throw std::runtime_error("--mode must be circ or block");
    }
    std::cerr << "gen: " << stats.emitted << " colorings, " << stats.nodes << " search nodes\n";
    return 0;
}

int cmd_verify(const std::string& avoid, const std::string& in_path) {
    auto patterns = parse_pattern_list(avoid);
    auto records = read_graph_file(in_path);
    bool all_valid = true;
    std::size_t index = 0;
    for (const auto& rec : records) {
        ColoredCompleteGraph g = realize_record(rec);
        if (static_cast<int>(patterns.size()) != g.colors())
            throw std::runtime_error("pattern count does not match graph colors");
        VerifyResult res = verify_ramsey(g, patterns);
        if (res.valid) {
            std::cout << "graph " << index << " n=" << g.order() << " VALID\n";
        } else {
            all_valid = false;
            std::cout << "graph " << index << " n=" << g.order() << " INVALID color="
                      << res.witness_color << " pattern="
                      << patterns[res.witness_color - 1].text() << " witness=";
            for (std::size_t i = 0; i < res.witness.size(); ++i)
                std::cout << (i ? "," : "") << res.witness[i];
            std::cout << "\n";
        }
        ++index;
    }
    return all_valid ? 0 : 1;
}

int cmd_canon(const std::string& in_path, const std::string& out_path) {
    auto records = read_graph_file(in_path);
    std::ofstream file;
    std::ostream& out = open_output(out_path, file);
    for (auto& rec : records) {
        if (std::holds_alternative<CirculantColoring>(rec))
            out << emit_circ(unit_canonical_form(std::get<CirculantColoring>(rec))) << "\n";
        else if (std::holds_alternative<BlockCirculantColoring>(rec))
            out << emit_blockcirc(canonicalize_block(std::get<BlockCirculantColoring>(rec)))
                << "\n";
        else
            throw std::runtime_error("canon operates on circ/blockcirc records");
    }
    return 0;
}

int cmd_dedupe(const std::string& in_path, const std::string& out_path) {
    auto records = read_graph_file(in_path);
    std::vector<ColoredCompleteGraph> kept;
    std::vector<std::size_t> kept_records;
    for (std::size_t i = 0; i < records.size(); ++i) {
        ColoredCompleteGraph g = realize_record(records[i]);
        bool fresh = true;
        for (const auto& h : kept)
            if (h.order() == g.order() && h.colors() == g.colors() && are_isomorphic(h, g)) {
                fresh = false;
                break;
            }
        if (fresh) {
            kept.push_back(std::move(g));
            kept_records.push_back(i);
        }
    }
    std::ofstream file;
    std::ostream& out = open_output(out_path, file);
    for (std::size_t i : kept_records) {
        out << emit_record(records[i]);
        if (!std::holds_alternative<ColoredCompleteGraph>(records[i])) out << "\n";
    }
    std::cerr << "dedupe: " << records.size() << " -> " << kept_records.size() << " graphs\n";
    return 0;
}

int cmd_extend(const std::string& in_path, const std::string& avoid, int remove_t, int add_s,
               const std::string& out_path) {
    auto patterns = parse_pattern_list(avoid);
    auto records = read_graph_file(in_path);
    std::ofstream file;
    std::ostream& out = open_output(out_path, file);
    std::uint64_t produced = 0;
    for (const auto& rec : records) {
        ColoredCompleteGraph g = realize_record(rec);
        if (g.colors() != 2) throw std::runtime_error("extend emits graph6: 2-color inputs only");
        auto sink = [&](const ColoredCompleteGraph& h) {
            out << encode_graph6(h) << "\n";
            ++produced;
        };
        if (remove_t == 0)
            extend_by_one(g, patterns, sink);
        else
            local_search(g, patterns, remove_t, add_s, sink);
    }
    std::cerr << "extend: " << produced << " graphs\n";
    return 0;
}

int cmd_feas(const std::string& avoid, int n, const std::string& tables_path) {
    auto patterns = parse_pattern_list(avoid);
    if (patterns.size() != 2) throw std::runtime_error("feas works on two-color problems");
    FeasibilityTables tables;
    if (!tables_path.empty()) {
        std::ifstream in(tables_path);
        if (!in) throw std::runtime_error("cannot open " + tables_path);
        tables = parse_tables(in);
    } else if (avoid == "J5,J6") {
        tables = builtin_j5j6_tables();
    } else {
        throw std::runtime_error("built-in tables exist only for --avoid J5,J6; use --tables");
    }

    FeasibilityVerdict v = feasibility_verdict(n, tables);
    std::cout << "feasibility n=" << n << " avoid=" << avoid << "\n";
    std::cout << "degree window: " << v.ledger.degree_lo << ".." << v.ledger.degree_hi << "\n";
    std::cout << "constant " << format_rational(v.ledger.constant) << "\n";
    for (int d = v.ledger.degree_lo; d <= v.ledger.degree_hi; ++d)
        std::cout << "coefficient " << d << " " << format_rational(v.ledger.coefficient(d))
                  << "\n";
    Rational best = v.ledger.constant + Rational(n, 1) * v.ledger.max_coefficient;
    std::cout << "max coefficient " << format_rational(v.ledger.max_coefficient) << " at degree";
    for (int d : v.ledger.argmax_degrees) std::cout << " " << d;
    std::cout << "\n";
    std::cout << "deficiency sum at best degree sequence: " << format_rational(best) << "\n";

    switch (v.reason) {
    case FeasibilityReason::NegativeSum:
        std::cout << "verdict: INFEASIBLE (negative deficiency sum)\n";
        return 0;
    case FeasibilityReason::PositiveSlack:
        std::cout << "verdict: OPEN (positive slack)\n";
        return 2;
    case FeasibilityReason::TieNotForced:
        std::cout << "verdict: OPEN (zero sum not forced to one degree)\n";
        return 2;
    case FeasibilityReason::Divisibility: {
        std::cout << "verdict: TIGHT at degree " << v.tight_degree << "\n";
        long long e = v.divisibility_color == 1 ? tables.e1.at(v.tight_degree)
                                                : tables.e2.at(n - 1 - v.tight_degree);
        std::cout << "forced color-" << v.divisibility_color << " triangle count: " << n << "*" << e
                  << "/3 = " << format_rational(v.forced_triangles) << " (not an integer)\n";
        std::cout << "verdict: INFEASIBLE (divisibility)\n";
        return 0;
    }
    case FeasibilityReason::DivisibilityPasses:
        std::cout << "verdict: TIGHT at degree " << v.tight_degree << "\n";
        std::cout << "verdict: OPEN (forced triangle counts are integral)\n";
        return 2;
    }
    return 2;
}

int cmd_count_small(const std::string& avoid, int max_n) {
    auto patterns = parse_pattern_list(avoid);
    SmallCensus census = enumerate_all_small(patterns, max_n);
    for (const auto& [key, count] : census.counts)
        std::cout << key.first << " " << key.second << " " << count << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"circulant and block-circulant Ramsey graph toolkit"};
    app.require_subcommand(1);

    std::string mode = "circ", avoid, in_path, out_path, format = "bc", tables_path;
    int n = 0, blocks = 0, colors = 2, remove_t = 0, add_s = 1, max_n = 7;
    std::uint64_t split = 1, part = 0;

    auto* gen = app.add_subcommand("gen", "enumerate Ramsey colorings");
    gen->add_option("--mode", mode, "circ or block")->required();
    gen->add_option("--n", n, "vertex count")->required();
    gen->add_option("--blocks", blocks, "block count (block mode)");
    gen->add_option("--colors", colors, "number of colors");
    gen->add_option("--avoid", avoid, "forbidden patterns, one per color")->required();
    gen->add_option("--split", split, "workload split modulus");
    gen->add_option("--part", part, "workload split residue");
    gen->add_option("--out", out_path, "output file (default stdout)");
    gen->add_option("--format", format, "bc (native text) or g6");

    auto* verify = app.add_subcommand("verify", "independently check Ramsey graphs");
    verify->add_option("--avoid", avoid)->required();
    verify->add_option("--in", in_path)->required();

    auto* canon = app.add_subcommand("canon", "canonicalize circ/blockcirc records");
    canon->add_option("--in", in_path)->required();
    canon->add_option("--out", out_path);

    auto* dedupe = app.add_subcommand("dedupe", "drop isomorphic duplicates");
    dedupe->add_option("--in", in_path)->required();
    dedupe->add_option("--out", out_path);

    auto* extend = app.add_subcommand("extend", "one-vertex extension / local search");
    extend->add_option("--in", in_path)->required();
    extend->add_option("--avoid", avoid)->required();
    extend->add_option("--remove", remove_t, "vertices to remove (local search)");
    extend->add_option("--add", add_s, "vertices to add back");
    extend->add_option("--out", out_path);

    auto* feas = app.add_subcommand("feas", "deficiency-sum feasibility verdict");
    feas->add_option("--avoid", avoid)->required();
    feas->add_option("--n", n)->required();
    feas->add_option("--tables", tables_path, "edge-max table file");

    auto* count = app.add_subcommand("count-small", "census of small Ramsey colorings");
    count->add_option("--avoid", avoid)->required();
    count->add_option("--max-n", max_n)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) return cmd_gen(mode, n, blocks, colors, avoid, split, part, out_path,
                                          format);
        if (verify->parsed()) return cmd_verify(avoid, in_path);
        if (canon->parsed()) return cmd_canon(in_path, out_path);
        if (dedupe->parsed()) return cmd_dedupe(in_path, out_path);
        if (extend->parsed()) return cmd_extend(in_path, avoid, remove_t, add_s, out_path);
        if (feas->parsed()) return cmd_feas(avoid, n, tables_path);
        if (count->parsed()) return cmd_count_small(avoid, max_n);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
