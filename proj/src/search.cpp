#include "ramsey/search.hpp"

#include <stdexcept>

#include "word_order.hpp"

namespace ramsey {

namespace {

constexpr int kSplitFrontierDepth = 12;

void validate(const SearchJob& job) {
    if (static_cast<int>(job.patterns.size()) != job.c)
        throw std::invalid_argument("one pattern per color required");
    if (job.split_modulus < 1 || job.split_residue >= job.split_modulus)
        throw std::invalid_argument("need 0 <= split_residue < split_modulus");
}

// ---- circulant --------------------------------------------------------------

struct CirculantSearch {
    const SearchJob& job;
    const std::function<void(const CirculantColoring&)>& emit;
    SearchStats& stats;
    int n, num_classes, frontier_depth;
    std::uint64_t frontier_counter = 0;
    CirculantColoring coloring;
    ColoredCompleteGraph graph;
    std::vector<int> units;
    std::vector<std::vector<std::pair<int, int>>> class_edges;

    CirculantSearch(const SearchJob& j, const std::function<void(const CirculantColoring&)>& e,
                    SearchStats& st)
        : job(j), emit(e), stats(st), n(j.n), num_classes(j.n / 2),
          frontier_depth(std::min(num_classes, kSplitFrontierDepth)), coloring(j.n, j.c),
          graph(j.n, j.c), units(units_mod(j.n)) {
        class_edges.resize(num_classes + 1);
        for (int d = 1; d <= num_classes; ++d) {
            int reps = (2 * d == n) ? n / 2 : n;
            for (int v = 0; v < reps; ++v) class_edges[d].push_back({v, (v + d) % n});
        }
    }

    // conservative prefix test: prune when some unit image is already proven
    // smaller than the current assignment under the set order
    bool unit_prefix_ok() const {
        std::vector<std::uint8_t> cur(n, 0), img(n, 0);
        for (int e = 1; e < n; ++e)
            cur[e] = static_cast<std::uint8_t>(coloring.color_of_class(coloring.class_of(e)));
        for (int q : units) {
            if (q == 1) continue;
            for (int e = 1; e < n; ++e)
                img[e] = static_cast<std::uint8_t>(
                    coloring.color_of_class(coloring.class_of(q * e % n)));
            if (detail::compare_partial_words(img, cur, job.c, 1) == detail::POrd::Less)
                return false;
        }
        return true;
    }

    void dfs(int d) {
        ++stats.nodes;
        if (d - 1 == frontier_depth)
            if (frontier_counter++ % job.split_modulus != job.split_residue) return;
        if (d > num_classes) {
            if (unit_canonical_form(coloring) == coloring) {
                ++stats.emitted;
                emit(coloring);
            }
            return;
        }
        for (int t = 1; t <= job.c; ++t) {
            coloring.set_class(d, t);
            for (auto [u, v] : class_edges[d]) graph.set_color(u, v, t);
            if (!contains_pattern_through_edge(graph, t, job.patterns[t - 1], 0, d) &&
                unit_prefix_ok())
                dfs(d + 1);
            for (auto [u, v] : class_edges[d]) graph.set_color(u, v, kUncolored);
            coloring.set_class(d, kUncolored);
        }
    }
};

// ---- block-circulant ---------------------------------------------------------

struct BlockSearch {
    const SearchJob& job;
    const std::function<void(const BlockCirculantColoring&)>& emit;
    SearchStats& stats;
    bool canonical_pruning;
    int m, frontier_depth;
    std::uint64_t frontier_counter = 0;
    BlockCirculantColoring coloring;
    ColoredCompleteGraph graph;
    std::vector<BlockSlot> slots;
    std::vector<std::vector<std::pair<int, int>>> slot_edges;
    std::vector<std::pair<int, int>> rep_edge;
    CanonicalPrefixChecker checker;

    BlockSearch(const SearchJob& j, const std::function<void(const BlockCirculantColoring&)>& e,
                SearchStats& st, bool canon)
        : job(j), emit(e), stats(st), canonical_pruning(canon), m(j.n / j.k),
          coloring(j.n, j.k, j.c), graph(j.n, j.c), slots(block_fill_order(j.k, m)),
          checker(coloring) {
        frontier_depth = std::min<int>(static_cast<int>(slots.size()), kSplitFrontierDepth);
        for (const BlockSlot& s : slots) {
            std::vector<std::pair<int, int>> edges;
            int bu = (s.i - 1) * m, bv = (s.j - 1) * m;
            int reps = (s.i == s.j && 2 * s.d == m) ? m / 2 : m;
            for (int a = 0; a < reps; ++a) edges.push_back({bu + a, bv + (a + s.d) % m});
            rep_edge.push_back(edges.front());
            slot_edges.push_back(std::move(edges));
        }
    }

    void dfs(std::size_t idx) {
        ++stats.nodes;
        if (static_cast<int>(idx) == frontier_depth)
            if (frontier_counter++ % job.split_modulus != job.split_residue) return;
        if (idx == slots.size()) {
            ++stats.emitted;
            emit(coloring);
            return;
        }
        const BlockSlot& s = slots[idx];
        for (int t = 1; t <= job.c; ++t) {
            coloring.set_diff(s.i, s.j, s.d, t);
            for (auto [u, v] : slot_edges[idx]) graph.set_color(u, v, t);
            if (!contains_pattern_through_edge(graph, t, job.patterns[t - 1], rep_edge[idx].first,
                                               rep_edge[idx].second)) {
                if (!canonical_pruning) {
                    dfs(idx + 1);
                } else if (checker.push(s)) {
                    dfs(idx + 1);
                    checker.pop(s);
                }
            }
            for (auto [u, v] : slot_edges[idx]) graph.set_color(u, v, kUncolored);
            coloring.set_diff(s.i, s.j, s.d, kUncolored);
        }
    }
};

} // namespace

void enumerate_circulant(const SearchJob& job,
                         const std::function<void(const CirculantColoring&)>& emit,
                         SearchStats* stats) {
    validate(job);
    if (job.k != 1) throw std::invalid_argument("enumerate_circulant needs k = 1");
    if (job.n < 3) throw std::invalid_argument("need n >= 3");
    SearchStats local;
    CirculantSearch search(job, emit, stats ? *stats : local);
    search.dfs(1);
}

void enumerate_block_circulant(const SearchJob& job,
                               const std::function<void(const BlockCirculantColoring&)>& emit,
                               SearchStats* stats, bool canonical_pruning) {
    validate(job);
    if (job.k < 2) throw std::invalid_argument("enumerate_block_circulant needs k >= 2");
    if (job.n % job.k != 0) throw std::invalid_argument("block count must divide the order");
    SearchStats local;
    BlockSearch search(job, emit, stats ? *stats : local, canonical_pruning);
    search.dfs(0);
}

} // namespace ramsey
