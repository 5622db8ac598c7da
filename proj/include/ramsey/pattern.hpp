#ifndef RAMSEY_PATTERN_HPP
#define RAMSEY_PATTERN_HPP

#include <string>
#include <vector>

#include "ramsey/colored_graph.hpp"

namespace ramsey {

enum class PatternKind : std::uint8_t {
    Clique,       // K_k
    AlmostClique, // J_k = K_k minus one edge
    Cycle,        // C_k, length exactly k
    Wheel,        // W_k = hub joined to a C_{k-1}
    Bipartite,    // K_{a,b}
};

struct PatternSpec {
    PatternKind kind = PatternKind::Clique;
    int k = 0;        // order for K/J/C/W
    int a = 0, b = 0; // part sizes for K_{a,b}

    static PatternSpec clique(int k);
    static PatternSpec almost_clique(int k);
    static PatternSpec cycle(int k);
    static PatternSpec wheel(int k);
    static PatternSpec bipartite(int a, int b);

    int order() const { return kind == PatternKind::Bipartite ? a + b : k; }
    std::string text() const; // "K5", "J6", "C4", "W7", "K3,5"

    bool operator==(const PatternSpec&) const = default;
};

// Subgraph (not induced) containment in the colour-i graph. Works on partial
// colourings; only edges already carrying colour i count.
bool contains_pattern(const ColoredCompleteGraph& g, int color, const PatternSpec& p);

// True iff some copy of p in colour i uses the edge {u,v}, which must already
// have colour i. This is the incremental check run after a colouring decision.
bool contains_pattern_through_edge(const ColoredCompleteGraph& g, int color, const PatternSpec& p,
                                   int u, int v);

// Total colouring avoiding patterns[i-1] in every colour i.
bool is_ramsey_graph(const ColoredCompleteGraph& g, const std::vector<PatternSpec>& patterns);

} // namespace ramsey

#endif
