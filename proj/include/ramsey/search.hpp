#ifndef RAMSEY_SEARCH_HPP
#define RAMSEY_SEARCH_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "ramsey/block_circulant.hpp"
#include "ramsey/circulant.hpp"
#include "ramsey/pattern.hpp"

namespace ramsey {

struct SearchJob {
    int n = 0;
    int k = 1; // 1 = plain circulant
    int c = 2;
    std::vector<PatternSpec> patterns; // one per colour
    // deterministic workload partition: worker `split_residue` explores the
    // decision prefixes whose index is congruent to it mod `split_modulus`
    std::uint64_t split_modulus = 1;
    std::uint64_t split_residue = 0;
};

struct SearchStats {
    std::uint64_t nodes = 0;
    std::uint64_t emitted = 0;
};

// Every total circulant Ramsey colouring for the job, one unit-canonical
// representative per unit class, in deterministic order.
void enumerate_circulant(const SearchJob& job,
                         const std::function<void(const CirculantColoring&)>& emit,
                         SearchStats* stats = nullptr);

// Every total block-circulant Ramsey colouring passing the canonical-prefix
// criteria (complete up to isomorphism; structurally isomorphic duplicates may
// remain and are removed by graph-level dedup downstream).
// `canonical_pruning` exists for the superset cross-check in tests.
void enumerate_block_circulant(const SearchJob& job,
                               const std::function<void(const BlockCirculantColoring&)>& emit,
                               SearchStats* stats = nullptr, bool canonical_pruning = true);

} // namespace ramsey

#endif
