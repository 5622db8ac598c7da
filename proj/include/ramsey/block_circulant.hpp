#ifndef RAMSEY_BLOCK_CIRCULANT_HPP
#define RAMSEY_BLOCK_CIRCULANT_HPP

#include <cstdint>
#include <vector>

#include "ramsey/colored_graph.hpp"

namespace ramsey {

// Colouring of K_n whose adjacency matrix splits into k x k circulant blocks
// of size m = n/k. Only the upper-triangle blocks are stored; the lower ones
// are the transposes (generating set negated mod m). Diagonal blocks are kept
// symmetric: difference d and m-d always carry the same colour.
class BlockCirculantColoring {
public:
    BlockCirculantColoring(int n, int k, int c);

    int order() const { return n_; }
    int blocks() const { return k_; }
    int block_size() const { return m_; }
    int colors() const { return c_; }

    // colour of difference d in block (i,j); i,j are 1-based and may come in
    // either order (the transpose is resolved here)
    int color_at(int i, int j, int d) const;

    // assign a difference of an upper-triangle block; for i == j the whole
    // class {d, m-d} is set
    void set_diff(int i, int j, int d, int color);

    bool is_total() const;

    // colour word of block (i,j): position d holds the colour of difference d
    std::vector<std::uint8_t> block_word(int i, int j) const;

    std::vector<int> generating_set(int i, int j, int color) const;

    bool operator==(const BlockCirculantColoring&) const = default;

private:
    int n_, k_, m_, c_;
    std::vector<std::uint8_t> data_;
    std::vector<int> pair_base_; // k*k lookup of block start offsets, -1 for lower triangle
    int base(int i, int j) const { return pair_base_[(i - 1) * k_ + (j - 1)]; }
};

ColoredCompleteGraph realize_block(const BlockCirculantColoring& b);

// Smallest r such that the left-rotation of `word` by r is lexicographically
// minimal among all rotations.
int lyndon_rotation(const std::vector<std::uint8_t>& word);

// Structure-preserving transformations; each realizes an isomorphic graph.
BlockCirculantColoring apply_block_permutation(const BlockCirculantColoring& b,
                                               const std::vector<int>& pi); // pi[i-1] in 1..k
BlockCirculantColoring apply_column_rotation(const BlockCirculantColoring& b, int col, int r);
BlockCirculantColoring apply_unit_multiplication(const BlockCirculantColoring& b, int q);

// Four-step canonical labelling: unit multiplication minimising the diagonal,
// diagonal sort, column rotations to minimal-rotation form, then the optional
// global -1 flip. Output realizes a graph isomorphic to the input.
BlockCirculantColoring canonicalize_block(const BlockCirculantColoring& b);

// Three-way compare under the block ordering (blocks in (i,j) order, per
// colour the sorted generating sets, colour 1 first).
int compare_block_colorings(const BlockCirculantColoring& a, const BlockCirculantColoring& b);

// ---- search-facing prefix machinery ----------------------------------------

struct BlockSlot {
    int i, j; // 1-based block pair, i <= j
    int d;    // difference; class representative when i == j
    bool last_of_block;
};

// Decision order of the enumeration: columns left to right, the diagonal
// block first within its column, differences increasing inside a block.
std::vector<BlockSlot> block_fill_order(int k, int m);

// Incremental canonicity test used by the enumeration. push() is called right
// after the slot's colour has been written into the colouring; a false return
// means no completion of the prefix can satisfy the canonicity criteria (the
// assignment must then be undone without calling pop()).
class CanonicalPrefixChecker {
public:
    explicit CanonicalPrefixChecker(const BlockCirculantColoring& b);
    bool push(const BlockSlot& s);
    void pop(const BlockSlot& s);

private:
    const BlockCirculantColoring* b_;
    std::vector<int> units_, unit_inverse_;
    std::vector<std::vector<std::vector<int>>> survivors_; // per column: stack of shift sets
    std::vector<int> all_shifts_;
    mutable std::vector<std::uint8_t> wa_, wb_;            // scratch words

    void load_word(int i, int j, std::vector<std::uint8_t>& out) const;
    bool check_diagonal(const BlockSlot& s) const;
    bool check_unit_minimality() const;
    bool check_column(const BlockSlot& s, std::vector<int>* completed_survivors) const;
};

// Prefix form of the canonicity criteria: false iff the filled prefix (in
// block_fill_order) already rules out every canonical completion.
bool is_canonical_prefix(const BlockCirculantColoring& b);

} // namespace ramsey

#endif
