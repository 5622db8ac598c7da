#include "ramsey/io.hpp"

#include <cctype>
#include <fstream>
#include <istream>
#include <sstream>

namespace ramsey {

namespace {
constexpr int kG6Offset = 63;
} // namespace

std::string encode_graph6(const ColoredCompleteGraph& g, int color) {
    int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kG6Offset));
    } else {
        out.push_back(126);
        out.push_back(static_cast<char>(((n >> 12) & 0x3f) + kG6Offset));
        out.push_back(static_cast<char>(((n >> 6) & 0x3f) + kG6Offset));
        out.push_back(static_cast<char>((n & 0x3f) + kG6Offset));
    }
    int acc = 0, nbits = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.color_of(i, j) == color ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(acc + kG6Offset));
                acc = 0;
                nbits = 0;
            }
        }
    if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + kG6Offset));
    return out;
}

ColoredCompleteGraph decode_graph6(const std::string& line) {
    std::size_t pos = 0;
    auto need = [&](std::size_t k) {
        if (pos + k > line.size()) throw ParseError("truncated graph6 line", line.size());
    };
    auto sixbits = [&]() {
        need(1);
        unsigned char ch = static_cast<unsigned char>(line[pos]);
        if (ch < kG6Offset || ch > 126) throw ParseError("invalid graph6 character", pos);
        ++pos;
        return static_cast<int>(ch - kG6Offset);
    };
    need(1);
    long long n;
    if (static_cast<unsigned char>(line[0]) == 126) {
        ++pos;
        need(1);
        if (static_cast<unsigned char>(line[1]) == 126)
            throw ParseError("graph6 orders above 258047 not supported", 1);
        long long a = sixbits(), b = sixbits(), c = sixbits();
        n = (a << 12) | (b << 6) | c;
    } else {
        n = sixbits();
    }
    if (n < 1 || n > kMaxVertices)
        throw ParseError("graph order out of range: " + std::to_string(n), 0);

    ColoredCompleteGraph g(static_cast<int>(n), 2);
    int acc = 0, nbits = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            if (nbits == 0) {
                acc = sixbits();
                nbits = 6;
            }
            g.set_color(i, j, (acc >> (nbits - 1)) & 1 ? 1 : 2);
            --nbits;
        }
    if (pos != line.size()) throw ParseError("trailing bytes after graph6 data", pos);
    return g;
}

PatternSpec parse_pattern(const std::string& text) {
    if (text.empty()) throw ParseError("empty pattern", 0);
    char kind = text[0];
    std::size_t pos = 1;
    auto number = [&]() {
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) throw ParseError("pattern parameter expected", start);
        return std::stoi(text.substr(start, pos - start));
    };
    try {
        int k = number();
        if (kind == 'K' && pos < text.size() && text[pos] == ',') {
            ++pos;
            int b = number();
            if (pos != text.size()) throw ParseError("trailing pattern text", pos);
            return PatternSpec::bipartite(k, b);
        }
        if (pos != text.size()) throw ParseError("trailing pattern text", pos);
        switch (kind) {
        case 'K': return PatternSpec::clique(k);
        case 'J': return PatternSpec::almost_clique(k);
        case 'C': return PatternSpec::cycle(k);
        case 'W': return PatternSpec::wheel(k);
        default: throw ParseError(std::string("unknown pattern kind '") + kind + "'", 0);
        }
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception& e) {
        throw ParseError(e.what(), 0);
    }
}

std::vector<PatternSpec> parse_pattern_list(const std::string& text) {
    std::vector<std::string> tokens;
    std::string cur;
    for (char ch : text) {
        if (ch == ',') {
            tokens.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    tokens.push_back(cur);
    // re-join numeric continuations: "K3,5" arrives as ["K3","5"]
    std::vector<std::string> merged;
    for (const auto& tok : tokens) {
        if (!tok.empty() && std::isdigit(static_cast<unsigned char>(tok[0])) && !merged.empty())
            merged.back() += "," + tok;
        else
            merged.push_back(tok);
    }
    std::vector<PatternSpec> out;
    for (const auto& tok : merged) out.push_back(parse_pattern(tok));
    return out;
}

// ---- circulant text ---------------------------------------------------------

std::string emit_circ(const CirculantColoring& c) {
    std::ostringstream out;
    out << "circ n=" << c.modulus() << " c=" << c.colors() << "\n";
    for (int t = 1; t <= c.colors(); ++t) {
        std::string reps;
        for (int d = 1; d <= c.num_classes(); ++d)
            if (c.color_of_class(d) == t) reps += " " + std::to_string(d);
        if (!reps.empty()) out << t << " :" << reps << "\n";
    }
    return out.str();
}

namespace {

// "key=value" tokens of a record header
int header_value(const std::string& line, const std::string& key, std::size_t offset) {
    std::istringstream in(line);
    std::string tok;
    while (in >> tok)
        if (tok.rfind(key + "=", 0) == 0) {
            try {
                return std::stoi(tok.substr(key.size() + 1));
            } catch (const std::exception&) {
                throw ParseError("bad value for header field " + key, offset);
            }
        }
    throw ParseError("missing header field " + key, offset);
}

struct SetLine {
    std::vector<int> nums; // leading indices before ':'
    std::vector<int> diffs;
};

SetLine parse_set_line(const std::string& line, std::size_t offset) {
    auto colon = line.find(':');
    if (colon == std::string::npos) throw ParseError("expected ':' in set line", offset);
    SetLine out;
    std::istringstream left(line.substr(0, colon)), right(line.substr(colon + 1));
    int v;
    while (left >> v) out.nums.push_back(v);
    while (right >> v) out.diffs.push_back(v);
    std::string junk;
    if (left >> junk || right >> junk) throw ParseError("malformed set line", offset);
    return out;
}

} // namespace

CirculantColoring parse_circ(const std::vector<std::string>& lines, std::size_t base_offset) {
    if (lines.empty()) throw ParseError("empty circ record", base_offset);
    int n = header_value(lines[0], "n", base_offset);
    int c = header_value(lines[0], "c", base_offset);
    CirculantColoring col(n, c);
    for (std::size_t li = 1; li < lines.size(); ++li) {
        SetLine sl = parse_set_line(lines[li], base_offset + li);
        if (sl.nums.size() != 1 || sl.nums[0] < 1 || sl.nums[0] > c)
            throw ParseError("expected '<color> : reps' line", base_offset + li);
        for (int d : sl.diffs) {
            int rep = col.class_of(d);
            int prev = col.color_of_class(rep);
            if (prev != kUncolored && prev != sl.nums[0])
                throw ParseError("class " + std::to_string(rep) + " assigned twice",
                                 base_offset + li);
            col.set_class(rep, sl.nums[0]);
        }
    }
    return col;
}

// ---- block-circulant text ----------------------------------------------------

std::string emit_blockcirc(const BlockCirculantColoring& b) {
    std::ostringstream out;
    out << "blockcirc n=" << b.order() << " k=" << b.blocks() << " c=" << b.colors() << "\n";
    for (int i = 1; i <= b.blocks(); ++i)
        for (int j = i; j <= b.blocks(); ++j)
            for (int t = 1; t <= b.colors(); ++t) {
                auto set = b.generating_set(i, j, t);
                if (set.empty()) continue;
                out << i << " " << j << " " << t << " :";
                for (int d : set) out << " " << d;
                out << "\n";
            }
    return out.str();
}

BlockCirculantColoring parse_blockcirc(const std::vector<std::string>& lines,
                                       std::size_t base_offset) {
    if (lines.empty()) throw ParseError("empty blockcirc record", base_offset);
    int n = header_value(lines[0], "n", base_offset);
    int k = header_value(lines[0], "k", base_offset);
    int c = header_value(lines[0], "c", base_offset);
    BlockCirculantColoring b(n, k, c);
    int m = b.block_size();
    for (std::size_t li = 1; li < lines.size(); ++li) {
        SetLine sl = parse_set_line(lines[li], base_offset + li);
        if (sl.nums.size() != 3) throw ParseError("expected 'i j color : diffs'", base_offset + li);
        int i = sl.nums[0], j = sl.nums[1], t = sl.nums[2];
        if (i < 1 || j < i || j > k || t < 1 || t > c)
            throw ParseError("bad block or color index", base_offset + li);
        for (int d : sl.diffs) {
            if (d < 0 || d >= m || (i == j && d == 0))
                throw ParseError("difference out of range", base_offset + li);
            int prev = b.color_at(i, j, d);
            if (prev != kUncolored && prev != t)
                throw ParseError("difference " + std::to_string(d) + " of block (" +
                                     std::to_string(i) + "," + std::to_string(j) +
                                     ") assigned twice",
                                 base_offset + li);
            b.set_diff(i, j, d, t);
        }
    }
    return b;
}

// ---- mixed streams ----------------------------------------------------------

ColoredCompleteGraph realize_record(const GraphRecord& r) {
    if (std::holds_alternative<ColoredCompleteGraph>(r)) return std::get<ColoredCompleteGraph>(r);
    if (std::holds_alternative<CirculantColoring>(r))
        return realize_circulant(std::get<CirculantColoring>(r));
    return realize_block(std::get<BlockCirculantColoring>(r));
}

std::string emit_record(const GraphRecord& r) {
    if (std::holds_alternative<ColoredCompleteGraph>(r))
        return encode_graph6(std::get<ColoredCompleteGraph>(r)) + "\n";
    if (std::holds_alternative<CirculantColoring>(r))
        return emit_circ(std::get<CirculantColoring>(r));
    return emit_blockcirc(std::get<BlockCirculantColoring>(r));
}

std::vector<GraphRecord> read_graph_stream(std::istream& in) {
    std::vector<GraphRecord> out;
    std::vector<std::string> record;
    bool in_block = false, is_circ = false;
    std::size_t lineno = 0;
    auto flush = [&]() {
        if (!in_block) return;
        if (is_circ)
            out.emplace_back(parse_circ(record, lineno - record.size()));
        else
            out.emplace_back(parse_blockcirc(record, lineno - record.size()));
        record.clear();
        in_block = false;
    };
    std::string line;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::size_t first = line.find_first_not_of(" \t");
        if (first == std::string::npos || line[first] == '#') continue;
        if (line.rfind("circ ", first) == first || line.rfind("blockcirc ", first) == first) {
            flush();
            in_block = true;
            is_circ = line.rfind("circ ", first) == first;
            record.push_back(line);
        } else if (in_block && std::isdigit(static_cast<unsigned char>(line[first]))) {
            record.push_back(line);
        } else {
            flush();
            out.emplace_back(decode_graph6(line.substr(first)));
        }
    }
    flush();
    return out;
}

std::vector<GraphRecord> read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_graph_stream(in);
}

} // namespace ramsey
