#ifndef RAMSEY_IO_HPP
#define RAMSEY_IO_HPP

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "ramsey/block_circulant.hpp"
#include "ramsey/circulant.hpp"
#include "ramsey/colored_graph.hpp"
#include "ramsey/pattern.hpp"

namespace ramsey {

struct ParseError : std::runtime_error {
    ParseError(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " (byte " + std::to_string(offset) + ")"), offset(offset) {}
    std::size_t offset;
};

// graph6 line for the colour-`color` graph (header bytes + 6-bit groups of the
// upper-triangle bit string, offset 63).
std::string encode_graph6(const ColoredCompleteGraph& g, int color = 1);

// Decodes a graph6 line into a 2-colour graph: colour 1 = edges, colour 2 =
// complement.
ColoredCompleteGraph decode_graph6(const std::string& line);

PatternSpec parse_pattern(const std::string& text);
// comma-separated list; a bare number continues a K{a,b} pattern
std::vector<PatternSpec> parse_pattern_list(const std::string& text);

std::string emit_circ(const CirculantColoring& c);
CirculantColoring parse_circ(const std::vector<std::string>& lines, std::size_t base_offset = 0);

std::string emit_blockcirc(const BlockCirculantColoring& b);
BlockCirculantColoring parse_blockcirc(const std::vector<std::string>& lines,
                                       std::size_t base_offset = 0);

// One graph in any of the three interchange forms.
using GraphRecord = std::variant<ColoredCompleteGraph, CirculantColoring, BlockCirculantColoring>;

ColoredCompleteGraph realize_record(const GraphRecord& r);
std::string emit_record(const GraphRecord& r);

// Reads a whole stream: graph6 lines, `circ` records and `blockcirc` records
// may be mixed; blank lines and '#' comments are skipped.
std::vector<GraphRecord> read_graph_stream(std::istream& in);
std::vector<GraphRecord> read_graph_file(const std::string& path);

} // namespace ramsey

#endif
