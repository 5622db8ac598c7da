#include <doctest.h>

#include <random>
#include <stdexcept>

#include "ramsey/block_circulant.hpp"
#include "ramsey/verify.hpp"
#include "test_helpers.hpp"

using namespace ramsey;
using namespace test_helpers;

TEST_SUITE_BEGIN("block_circulant");

namespace {

BlockCirculantColoring random_block(int k, int m, std::mt19937& rng, int c = 2) {
    BlockCirculantColoring b(k * m, k, c);
    std::uniform_int_distribution<int> color(1, c);
    for (int i = 1; i <= k; ++i)
        for (int j = i; j <= k; ++j)
            for (int d = (i == j) ? 1 : 0; d < m; ++d) b.set_diff(i, j, d, color(rng));
    return b;
}

std::vector<int> random_permutation(int k, std::mt19937& rng) {
    std::vector<int> pi(k);
    for (int i = 0; i < k; ++i) pi[i] = i + 1;
    std::shuffle(pi.begin(), pi.end(), rng);
    return pi;
}

// random sequence of the three isomorphism-preserving transformations
BlockCirculantColoring random_transform(const BlockCirculantColoring& b, std::mt19937& rng) {
    auto cur = b;
    int m = b.block_size(), k = b.blocks();
    std::uniform_int_distribution<int> which(0, 2), rot(0, m - 1), col(1, k);
    auto units = units_mod(m);
    std::uniform_int_distribution<std::size_t> ui(0, units.size() - 1);
    for (int step = 0; step < 4; ++step) {
        switch (which(rng)) {
        case 0: cur = apply_block_permutation(cur, random_permutation(k, rng)); break;
        case 1: cur = apply_column_rotation(cur, col(rng), rot(rng)); break;
        default: cur = apply_unit_multiplication(cur, units[ui(rng)]); break;
        }
    }
    return cur;
}

} // namespace

TEST_CASE("realize the 27-vertex 3-block representation") {
    auto b = a1_coloring();
    auto g = realize_block(b);
    CHECK(g.order() == 27);
    CHECK(g.is_total());
    for (int v = 0; v < 27; ++v) CHECK(g.degree(1, v) == 10); // 4 + 3 + 3
    CHECK(is_ramsey_graph(g, avoid(PatternSpec::almost_clique(4), PatternSpec::almost_clique(7))));
}

TEST_CASE("one block is exactly a circulant") {
    std::mt19937 rng(3);
    for (int rep = 0; rep < 10; ++rep) {
        int n = 5 + rep;
        BlockCirculantColoring b(n, 1, 2);
        CirculantColoring c(n, 2);
        std::uniform_int_distribution<int> color(1, 2);
        for (int d = 1; d <= n / 2; ++d) {
            int t = color(rng);
            b.set_diff(1, 1, d, t);
            c.set_class(d, t);
        }
        CHECK(realize_block(b) == realize_circulant(c));
    }
}

TEST_CASE("perfect matching from a cross block") {
    BlockCirculantColoring b(4, 2, 2);
    b.set_diff(1, 2, 0, 1);
    auto g = realize_block(b);
    CHECK(g.color_of(0, 2) == 1);
    CHECK(g.color_of(1, 3) == 1);
    CHECK(g.edge_count(1) == 2);
}

TEST_CASE("lyndon rotation") {
    auto rot = [](const std::vector<std::uint8_t>& w, int r) {
        std::vector<std::uint8_t> out(w.size());
        for (std::size_t x = 0; x < w.size(); ++x) out[x] = w[(x + r) % w.size()];
        return out;
    };
    std::vector<std::uint8_t> w = {0, 1, 1, 0};
    CHECK(rot(w, lyndon_rotation(w)) == std::vector<std::uint8_t>{0, 0, 1, 1});

    std::vector<std::uint8_t> zeros = {0, 0, 0, 0};
    CHECK(lyndon_rotation(zeros) == 0);

    std::vector<std::uint8_t> v = {1, 0, 1, 1, 0, 1};
    int r = lyndon_rotation(v);
    CHECK(rot(v, r) == std::vector<std::uint8_t>{0, 1, 1, 0, 1, 1});
    CHECK(r == 1); // smallest rotation amount among the tied minima
}

TEST_CASE("block permutation sorts the diagonal of the fixture") {
    auto b = a1_coloring();
    auto p = apply_block_permutation(b, {3, 2, 1});
    CHECK(p.generating_set(1, 1, 1) == std::vector<int>{1, 3, 6, 8});
    CHECK(p.generating_set(2, 2, 1) == std::vector<int>{2, 3, 6, 7});
    CHECK(p.generating_set(3, 3, 1) == std::vector<int>{3, 4, 5, 6});
    CHECK(are_isomorphic(realize_block(b), realize_block(p)));
    CHECK_THROWS_AS(apply_block_permutation(b, {1, 1, 2}), std::invalid_argument);
}

TEST_CASE("column rotation identities") {
    std::mt19937 rng(5);
    auto b = random_block(3, 6, rng);
    CHECK(apply_column_rotation(b, 2, 0) == b);
    CHECK(apply_column_rotation(b, 2, 6) == b);
    auto fwd = apply_column_rotation(b, 3, 2);
    CHECK(apply_column_rotation(fwd, 3, 4) == b); // r then m-r
}

TEST_CASE("unit multiplication identities") {
    std::mt19937 rng(7);
    auto b = random_block(2, 9, rng);
    CHECK(apply_unit_multiplication(b, 1) == b);
    // q = -1 fixes every diagonal block
    auto neg = apply_unit_multiplication(b, 8);
    CHECK(neg.generating_set(1, 1, 1) == b.generating_set(1, 1, 1));
    CHECK(neg.generating_set(2, 2, 1) == b.generating_set(2, 2, 1));
    CHECK_THROWS_AS(apply_unit_multiplication(b, 3), std::invalid_argument);
}

TEST_CASE("the three transformations preserve the realized graph") {
    std::mt19937 rng(11);
    for (int rep = 0; rep < 12; ++rep) {
        int k = 2 + rep % 2, m = 3 + rep % 4;
        auto b = random_block(k, m, rng);
        auto g = realize_block(b);
        CHECK(are_isomorphic(g, realize_block(apply_block_permutation(b, random_permutation(k, rng)))));
        std::uniform_int_distribution<int> rot(0, m - 1), col(1, k);
        CHECK(are_isomorphic(g, realize_block(apply_column_rotation(b, col(rng), rot(rng)))));
        auto units = units_mod(m);
        std::uniform_int_distribution<std::size_t> ui(0, units.size() - 1);
        CHECK(are_isomorphic(g, realize_block(apply_unit_multiplication(b, units[ui(rng)]))));
    }
}

TEST_CASE("canonicalization maps the fixture to its canonical form") {
    auto canon = canonicalize_block(a1_coloring());
    CHECK(canon == a1_star_coloring());
    CHECK(canonicalize_block(a1_star_coloring()) == a1_star_coloring()); // fixed point
    CHECK(are_isomorphic(realize_block(canon), realize_block(a1_coloring())));
}

TEST_CASE("canonicalization with one block agrees with the circulant form") {
    std::mt19937 rng(13);
    for (int rep = 0; rep < 20; ++rep) {
        int n = 5 + rep % 14;
        BlockCirculantColoring b(n, 1, 2);
        CirculantColoring c(n, 2);
        std::uniform_int_distribution<int> color(1, 2);
        for (int d = 1; d <= n / 2; ++d) {
            int t = color(rng);
            b.set_diff(1, 1, d, t);
            c.set_class(d, t);
        }
        CHECK(realize_block(canonicalize_block(b)) == realize_circulant(unit_canonical_form(c)));
    }
}

TEST_CASE("canonicalization soundness and idempotence") {
    std::mt19937 rng(17);
    for (int rep = 0; rep < 60; ++rep) {
        int k = 2 + rep % 2, m = 2 + rep % 7;
        if (k * m > 24) continue;
        auto b = random_block(k, m, rng);
        auto canon = canonicalize_block(b);
        CHECK(are_isomorphic(realize_block(b), realize_block(canon)));
        CHECK(canonicalize_block(canon) == canon);
    }
}

TEST_CASE("canonicalization is stable under the structural transformations") {
    std::mt19937 rng(19);
    int degenerate = 0;
    for (int rep = 0; rep < 60; ++rep) {
        int k = 2 + rep % 2, m = 3 + rep % 5;
        auto b = random_block(k, m, rng);
        auto canon = canonicalize_block(b);
        // degenerate inputs (equal diagonal blocks or rotation-stabilized
        // columns) only promise isomorphism
        bool clean = true;
        for (int i = 1; i <= k && clean; ++i)
            for (int j = i + 1; j <= k && clean; ++j)
                if (canon.generating_set(i, i, 1) == canon.generating_set(j, j, 1)) clean = false;
        for (int j = 2; j <= k && clean; ++j)
            for (int s = 1; s < m && clean; ++s) {
                bool fixes_all = true;
                for (int i = 1; i < j && fixes_all; ++i) {
                    auto w = canon.block_word(i, j);
                    std::vector<std::uint8_t> ws(m);
                    for (int x = 0; x < m; ++x) ws[x] = w[((x - s) % m + m) % m];
                    if (ws != w) fixes_all = false;
                }
                if (fixes_all) clean = false;
            }
        auto tb = random_transform(b, rng);
        auto canon_t = canonicalize_block(tb);
        if (clean)
            CHECK(canon_t == canon);
        else
            ++degenerate;
        CHECK(are_isomorphic(realize_block(canon_t), realize_block(canon)));
    }
    CHECK(degenerate < 60); // the clean branch must actually run
}

TEST_CASE("canonical prefix basics") {
    BlockCirculantColoring empty(12, 2, 2);
    CHECK(is_canonical_prefix(empty));

    // D11 > D22 is rejected as soon as both diagonals exist
    BlockCirculantColoring bad(12, 2, 2);
    bad.set_diff(1, 1, 1, 2);
    bad.set_diff(1, 1, 2, 2);
    bad.set_diff(1, 1, 3, 1);
    CHECK(is_canonical_prefix(bad)); // only one diagonal decided so far
    bad.set_diff(2, 2, 1, 1);
    bad.set_diff(2, 2, 2, 2);
    bad.set_diff(2, 2, 3, 2);
    CHECK(!is_canonical_prefix(bad)); // {3} vs {1,5}: wrong order
}

TEST_CASE("canonical outputs pass the prefix test at every prefix") {
    std::mt19937 rng(23);
    for (int rep = 0; rep < 20; ++rep) {
        int k = 2 + rep % 2, m = 3 + rep % 4;
        auto canon = canonicalize_block(random_block(k, m, rng));
        auto order = block_fill_order(k, m);
        BlockCirculantColoring partial(k * m, k, canon.colors());
        for (const auto& s : order) {
            partial.set_diff(s.i, s.j, s.d, canon.color_at(s.i, s.j, s.d));
            CAPTURE(s.i);
            CAPTURE(s.j);
            CAPTURE(s.d);
            CHECK(is_canonical_prefix(partial));
        }
    }
}

TEST_CASE("structure validation") {
    CHECK_THROWS_AS(BlockCirculantColoring(10, 3, 2), std::invalid_argument); // 3 does not divide 10
    BlockCirculantColoring b(12, 3, 2);
    CHECK_THROWS_AS(b.set_diff(2, 1, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(b.set_diff(1, 1, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(canonicalize_block(b), std::invalid_argument); // partial
    b.set_diff(1, 2, 1, 1);
    CHECK(b.color_at(2, 1, 3) == 1); // transpose lookup
}

TEST_SUITE_END();
