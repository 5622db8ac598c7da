#ifndef RAMSEY_EXTEND_HPP
#define RAMSEY_EXTEND_HPP

#include <functional>
#include <vector>

#include "ramsey/colored_graph.hpp"
#include "ramsey/pattern.hpp"

namespace ramsey {

// All total colourings on n+1 vertices extending g that avoid the patterns;
// the new vertex's edges are assigned by backtracking with anchored pruning.
// g must be total and itself a Ramsey colouring.
void extend_by_one(const ColoredCompleteGraph& g, const std::vector<PatternSpec>& patterns,
                   const std::function<void(const ColoredCompleteGraph&)>& emit);

// Remove every remove_t-subset, then re-grow by add_s vertices in all ways;
// emits the resulting Ramsey colourings (duplicates across deletion sets are
// not suppressed; copies isomorphic to g itself are, when sizes match).
void local_search(const ColoredCompleteGraph& g, const std::vector<PatternSpec>& patterns,
                  int remove_t, int add_s,
                  const std::function<void(const ColoredCompleteGraph&)>& emit);

} // namespace ramsey

#endif
