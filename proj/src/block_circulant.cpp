#include "ramsey/block_circulant.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "ramsey/circulant.hpp" // units_mod
#include "word_order.hpp"

namespace ramsey {

using detail::POrd;
using detail::compare_partial_words;
using detail::exact_compare;
using detail::inverse_mod;
using detail::minimal_shift_word;
using detail::negated_word;
using detail::shift_proven_smaller;
using detail::shifted_word;
using detail::unit_word;

BlockCirculantColoring::BlockCirculantColoring(int n, int k, int c)
    : n_(n), k_(k), m_(k > 0 ? n / k : 0), c_(c) {
    if (k < 1 || n < 1 || n > kMaxVertices || n % k != 0)
        throw std::invalid_argument("block count must divide the order");
    if (c < 2 || c > kMaxColors) throw std::invalid_argument("color count out of range");
    pair_base_.assign(k_ * k_, -1);
    int off = 0;
    for (int i = 1; i <= k_; ++i)
        for (int j = i; j <= k_; ++j) {
            pair_base_[(i - 1) * k_ + (j - 1)] = off;
            off += m_;
        }
    data_.assign(off, 0);
}

int BlockCirculantColoring::color_at(int i, int j, int d) const {
    d %= m_;
    if (d < 0) d += m_;
    if (i < 1 || j < 1 || i > k_ || j > k_) throw std::invalid_argument("bad block index");
    if (i <= j) return data_[base(i, j) + d];
    return data_[base(j, i) + (m_ - d) % m_];
}

void BlockCirculantColoring::set_diff(int i, int j, int d, int color) {
    if (i < 1 || j < 1 || i > k_ || j > k_ || i > j)
        throw std::invalid_argument("need an upper-triangle block");
    if (color < 0 || color > c_) throw std::invalid_argument("bad color");
    d %= m_;
    if (d < 0) d += m_;
    if (i == j) {
        if (d == 0) throw std::invalid_argument("difference 0 is a self-loop");
        data_[base(i, i) + d] = static_cast<std::uint8_t>(color);
        data_[base(i, i) + (m_ - d) % m_] = static_cast<std::uint8_t>(color);
    } else {
        data_[base(i, j) + d] = static_cast<std::uint8_t>(color);
    }
}

bool BlockCirculantColoring::is_total() const {
    for (int i = 1; i <= k_; ++i)
        for (int j = i; j <= k_; ++j)
            for (int d = (i == j) ? 1 : 0; d < m_; ++d)
                if (data_[base(i, j) + d] == kUncolored) return false;
    return true;
}

std::vector<std::uint8_t> BlockCirculantColoring::block_word(int i, int j) const {
    std::vector<std::uint8_t> w(m_);
    for (int d = 0; d < m_; ++d) w[d] = static_cast<std::uint8_t>(color_at(i, j, d));
    return w;
}

std::vector<int> BlockCirculantColoring::generating_set(int i, int j, int color) const {
    std::vector<int> out;
    for (int d = (i == j) ? 1 : 0; d < m_; ++d)
        if (color_at(i, j, d) == color) out.push_back(d);
    return out;
}

ColoredCompleteGraph realize_block(const BlockCirculantColoring& b) {
    int n = b.order(), m = b.block_size();
    ColoredCompleteGraph g(n, b.colors());
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            int bi = u / m + 1, bj = v / m + 1;
            int col = b.color_at(bi, bj, (v % m) - (u % m));
            if (col != kUncolored) g.set_color(u, v, col);
        }
    return g;
}

int lyndon_rotation(const std::vector<std::uint8_t>& word) {
    int L = static_cast<int>(word.size());
    if (L == 0) throw std::invalid_argument("empty word");
    int best = 0;
    for (int r = 1; r < L; ++r)
        for (int x = 0; x < L; ++x) {
            std::uint8_t a = word[(x + r) % L], b = word[(x + best) % L];
            if (a != b) {
                if (a < b) best = r;
                break;
            }
        }
    return best;
}

// ----------------------------------------------------------------------------

BlockCirculantColoring apply_block_permutation(const BlockCirculantColoring& b,
                                               const std::vector<int>& pi) {
    int k = b.blocks(), m = b.block_size();
    if (static_cast<int>(pi.size()) != k) throw std::invalid_argument("permutation size mismatch");
    std::vector<bool> seen(k + 1, false);
    for (int v : pi) {
        if (v < 1 || v > k || seen[v]) throw std::invalid_argument("not a permutation of 1..k");
        seen[v] = true;
    }
    BlockCirculantColoring out(b.order(), k, b.colors());
    for (int i = 1; i <= k; ++i)
        for (int j = i; j <= k; ++j)
            for (int d = (i == j) ? 1 : 0; d < m; ++d) {
                int col = b.color_at(pi[i - 1], pi[j - 1], d);
                if (col != kUncolored) out.set_diff(i, j, d, col);
            }
    return out;
}

BlockCirculantColoring apply_column_rotation(const BlockCirculantColoring& b, int col, int r) {
    int k = b.blocks(), m = b.block_size();
    if (col < 1 || col > k) throw std::invalid_argument("bad column");
    r = (r % m + m) % m;
    BlockCirculantColoring out(b.order(), k, b.colors());
    for (int i = 1; i <= k; ++i)
        for (int j = i; j <= k; ++j)
            for (int d = (i == j) ? 1 : 0; d < m; ++d) {
                int col_of = b.color_at(i, j, d);
                if (col_of == kUncolored) continue;
                int nd = d;
                if (i != j && j == col) nd = (d + r) % m;      // block above the diagonal
                else if (i != j && i == col) nd = (d - r + m) % m; // row block, rotated back
                out.set_diff(i, j, nd, col_of);
            }
    return out;
}

BlockCirculantColoring apply_unit_multiplication(const BlockCirculantColoring& b, int q) {
    int k = b.blocks(), m = b.block_size();
    int qq = (q % m + m) % m;
    if (std::gcd(m == 1 ? 1 : qq, m) != 1) throw std::invalid_argument("q not coprime to m");
    BlockCirculantColoring out(b.order(), k, b.colors());
    for (int i = 1; i <= k; ++i)
        for (int j = i; j <= k; ++j)
            for (int d = (i == j) ? 1 : 0; d < m; ++d) {
                int col = b.color_at(i, j, d);
                if (col != kUncolored) out.set_diff(i, j, (qq * d) % m, col);
            }
    return out;
}

int compare_block_colorings(const BlockCirculantColoring& a, const BlockCirculantColoring& b) {
    if (a.order() != b.order() || a.blocks() != b.blocks() || a.colors() != b.colors())
        throw std::invalid_argument("mismatched block structures");
    for (int i = 1; i <= a.blocks(); ++i)
        for (int j = i; j <= a.blocks(); ++j) {
            int cmp = exact_compare(a.block_word(i, j), b.block_word(i, j), a.colors(),
                                    i == j ? 1 : 0);
            if (cmp != 0) return cmp;
        }
    return 0;
}

namespace {

// step 3: rotate every column so that its above-diagonal blocks form the
// minimal tuple; ties cascade down the column, the smallest shift wins last
BlockCirculantColoring rotate_columns_minimal(BlockCirculantColoring b) {
    int k = b.blocks(), m = b.block_size(), c = b.colors();
    for (int j = 2; j <= k; ++j) {
        std::vector<int> shifts(m);
        std::iota(shifts.begin(), shifts.end(), 0);
        for (int i = 1; i < j && shifts.size() > 1; ++i) {
            auto w = b.block_word(i, j);
            std::vector<int> keep;
            std::vector<std::uint8_t> best;
            for (int s : shifts) {
                auto ws = shifted_word(w, s);
                if (keep.empty()) {
                    best = std::move(ws);
                    keep = {s};
                    continue;
                }
                int cmp = exact_compare(ws, best, c, 0);
                if (cmp < 0) {
                    best = std::move(ws);
                    keep = {s};
                } else if (cmp == 0) {
                    keep.push_back(s);
                }
            }
            shifts = std::move(keep);
        }
        if (shifts.front() != 0) b = apply_column_rotation(b, j, shifts.front());
    }
    return b;
}

bool step4_flip_wanted(const BlockCirculantColoring& b) {
    if (b.blocks() < 2) return false;
    auto w = b.block_word(1, 2);
    auto vmin = minimal_shift_word(negated_word(w), b.colors());
    return exact_compare(w, vmin, b.colors(), 0) > 0;
}

// all permutations (as pi vectors) sorting the diagonal keys non-decreasingly;
// capped when repeated diagonal blocks would blow the count up
std::vector<std::vector<int>> sorting_permutations(const std::vector<std::vector<std::uint8_t>>& keys,
                                                   int c) {
    int k = static_cast<int>(keys.size());
    std::vector<int> order(k);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
        return exact_compare(keys[x], keys[y], c, 1) < 0;
    });
    // group boundaries of equal keys
    std::vector<std::pair<int, int>> groups;
    long long count = 1;
    for (int s = 0; s < k;) {
        int e = s + 1;
        while (e < k && exact_compare(keys[order[s]], keys[order[e]], c, 1) == 0) ++e;
        groups.emplace_back(s, e);
        for (int f = 2; f <= e - s; ++f) count *= f;
        s = e;
    }
    std::vector<std::vector<int>> out;
    if (count > 720) {
        out.push_back(order);
    } else {
        std::vector<int> cur = order;
        // recursively permute within each tie group
        auto rec = [&](auto&& self, std::size_t gi) -> void {
            if (gi == groups.size()) {
                out.push_back(cur);
                return;
            }
            auto [s, e] = groups[gi];
            std::sort(cur.begin() + s, cur.begin() + e);
            do self(self, gi + 1);
            while (std::next_permutation(cur.begin() + s, cur.begin() + e));
        };
        rec(rec, 0);
    }
    for (auto& pi : out)
        for (int& v : pi) ++v; // 1-based block labels
    return out;
}

} // namespace

BlockCirculantColoring canonicalize_block(const BlockCirculantColoring& b) {
    if (!b.is_total()) throw std::invalid_argument("canonicalize needs a total coloring");
    int k = b.blocks(), m = b.block_size(), c = b.colors();

    std::vector<std::vector<std::uint8_t>> diag(k);
    for (int i = 1; i <= k; ++i) diag[i - 1] = b.block_word(i, i);

    // step 1: units whose diagonal multiset is minimal (several may tie;
    // every tied branch is carried through and the smallest end result wins)
    std::vector<int> tied_units;
    std::vector<std::vector<std::uint8_t>> best_key;
    for (int q : units_mod(m)) {
        int inv = inverse_mod(q, m);
        std::vector<std::vector<std::uint8_t>> key(k);
        for (int i = 0; i < k; ++i) key[i] = unit_word(diag[i], inv);
        std::sort(key.begin(), key.end(),
                  [&](const auto& x, const auto& y) { return exact_compare(x, y, c, 1) < 0; });
        int cmp = 0;
        if (!tied_units.empty()) {
            for (int i = 0; i < k && cmp == 0; ++i) cmp = exact_compare(key[i], best_key[i], c, 1);
        }
        if (tied_units.empty() || cmp < 0) {
            best_key = std::move(key);
            tied_units = {q};
        } else if (cmp == 0) {
            tied_units.push_back(q);
        }
    }

    bool have = false;
    BlockCirculantColoring best(b.order(), k, c);
    for (int q : tied_units) {
        BlockCirculantColoring bq = apply_unit_multiplication(b, q);
        std::vector<std::vector<std::uint8_t>> keys(k);
        for (int i = 1; i <= k; ++i) keys[i - 1] = bq.block_word(i, i);
        for (const auto& pi : sorting_permutations(keys, c)) {
            BlockCirculantColoring cand = rotate_columns_minimal(apply_block_permutation(bq, pi));
            if (step4_flip_wanted(cand))
                cand = rotate_columns_minimal(apply_unit_multiplication(cand, m - 1));
            if (!have || compare_block_colorings(cand, best) < 0) {
                best = std::move(cand);
                have = true;
            }
        }
    }
    return best;
}

// ----------------------------------------------------------------------------

std::vector<BlockSlot> block_fill_order(int k, int m) {
    std::vector<BlockSlot> order;
    for (int j = 1; j <= k; ++j) {
        for (int d = 1; d <= m / 2; ++d) order.push_back({j, j, d, d == m / 2});
        for (int i = 1; i < j; ++i)
            for (int d = 0; d < m; ++d) order.push_back({i, j, d, d == m - 1});
    }
    return order;
}

CanonicalPrefixChecker::CanonicalPrefixChecker(const BlockCirculantColoring& b)
    : b_(&b), units_(units_mod(b.block_size())), survivors_(b.blocks() + 1) {
    unit_inverse_.reserve(units_.size());
    for (int q : units_) unit_inverse_.push_back(inverse_mod(q, b.block_size()));
    wa_.resize(b.block_size());
    wb_.resize(b.block_size());
    all_shifts_.resize(b.block_size());
    std::iota(all_shifts_.begin(), all_shifts_.end(), 0);
}

void CanonicalPrefixChecker::load_word(int i, int j, std::vector<std::uint8_t>& out) const {
    for (int d = 0; d < b_->block_size(); ++d)
        out[d] = static_cast<std::uint8_t>(b_->color_at(i, j, d));
}

bool CanonicalPrefixChecker::check_diagonal(const BlockSlot& s) const {
    int c = b_->colors();
    if (s.i > 1) {
        load_word(s.i - 1, s.i - 1, wa_);
        load_word(s.i, s.i, wb_);
        if (compare_partial_words(wa_, wb_, c, 1) == POrd::Greater) return false;
    }
    return check_unit_minimality();
}

bool CanonicalPrefixChecker::check_unit_minimality() const {
    int k = b_->blocks(), c = b_->colors(), m = b_->block_size();
    for (std::size_t ui = 0; ui < units_.size(); ++ui) {
        if (units_[ui] == 1) continue;
        int inv = unit_inverse_[ui];
        for (int i = 1; i <= k; ++i) {
            load_word(i, i, wa_);
            for (int x = 0; x < m; ++x)
                wb_[x] = wa_[(static_cast<long long>(inv) * x) % m]; // word of q*D
            POrd o = compare_partial_words(wb_, wa_, c, 1);
            if (o == POrd::Less) return false; // a unit multiple is strictly smaller
            if (o != POrd::Equal) break;
        }
    }
    return true;
}

bool CanonicalPrefixChecker::check_column(const BlockSlot& s,
                                          std::vector<int>* completed_survivors) const {
    int c = b_->colors();
    const std::vector<std::vector<int>>& stack = survivors_[s.j];
    const std::vector<int>* live = stack.empty() ? &all_shifts_ : &stack.back();
    if (!s.last_of_block) {
        if (c == 2) {
            load_word(s.i, s.j, wa_);
            for (int sh : *live)
                if (sh != 0 && shift_proven_smaller(wa_, sh)) return false;
        }
        return true;
    }
    auto w = b_->block_word(s.i, s.j);
    std::vector<int> keep;
    for (int sh : *live) {
        if (sh == 0) {
            keep.push_back(0);
            continue;
        }
        int cmp = exact_compare(shifted_word(w, sh), w, c, 0);
        if (cmp < 0) return false;
        if (cmp == 0) keep.push_back(sh);
    }
    if (s.i == 1 && s.j == 2) {
        // accept the smaller of the colouring and its -1 image
        auto vmin = minimal_shift_word(negated_word(w), c);
        if (exact_compare(w, vmin, c, 0) > 0) return false;
    }
    *completed_survivors = std::move(keep);
    return true;
}

bool CanonicalPrefixChecker::push(const BlockSlot& s) {
    if (s.i == s.j) return check_diagonal(s);
    std::vector<int> keep;
    if (!check_column(s, &keep)) return false;
    if (s.last_of_block) survivors_[s.j].push_back(std::move(keep));
    return true;
}

void CanonicalPrefixChecker::pop(const BlockSlot& s) {
    if (s.i != s.j && s.last_of_block) survivors_[s.j].pop_back();
}

bool is_canonical_prefix(const BlockCirculantColoring& b) {
    CanonicalPrefixChecker checker(b);
    for (const BlockSlot& s : block_fill_order(b.blocks(), b.block_size())) {
        if (b.color_at(s.i, s.j, s.d) == kUncolored) break;
        if (!checker.push(s)) return false;
    }
    return true;
}

} // namespace ramsey
