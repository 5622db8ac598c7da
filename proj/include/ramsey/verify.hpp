#ifndef RAMSEY_VERIFY_HPP
#define RAMSEY_VERIFY_HPP

#include <map>
#include <vector>

#include "ramsey/colored_graph.hpp"
#include "ramsey/pattern.hpp"

namespace ramsey {

struct VerifyResult {
    bool valid = true;
    int witness_color = 0;
    std::vector<int> witness; // vertices of the monochromatic copy when invalid
};

// Second, deliberately simple checker: plain subset/path scans over the colour
// matrix, sharing no detection code with the pattern module.
VerifyResult verify_ramsey(const ColoredCompleteGraph& g, const std::vector<PatternSpec>& patterns);

// Colour-preserving isomorphism via invariant screening plus backtracking.
bool are_isomorphic(const ColoredCompleteGraph& a, const ColoredCompleteGraph& b);

// One representative per isomorphism class, first occurrence kept.
std::vector<ColoredCompleteGraph> dedupe_nonisomorphic(const std::vector<ColoredCompleteGraph>& in);

struct SmallCensus {
    // (n, colour-1 edge count) -> number of isomorphism classes
    std::map<std::pair<int, long long>, long long> counts;
    std::vector<std::vector<ColoredCompleteGraph>> reps; // reps[n] = classes of order n
};

// Exhaustive census of Ramsey colourings for n = 1..max_n via iterated
// one-vertex extension and dedup. Desk scale: max_n <= 8.
SmallCensus enumerate_all_small(const std::vector<PatternSpec>& patterns, int max_n);

} // namespace ramsey

#endif
