#include "doctest.h"

#include "oracles.hpp"
#include "rml/constructors.hpp"
#include "rml/counting.hpp"
#include "rml/error.hpp"
#include "rml/parallel.hpp"

#include <limits>
#include <random>

using namespace rml;

namespace {

Graph random_pattern(std::mt19937_64& rng, int t, bool connected)
{
    Graph g(t);
    if (connected)
        for (int i = 1; i < t; ++i)
            g.add_edge(static_cast<int>(rng() % i), i);
    for (int i = 0; i < t; ++i)
        for (int j = i + 1; j < t; ++j)
            if (!g.has_edge(i, j) && rng() % 3 == 0)
                g.add_edge(i, j);
    return g;
}

} // namespace

TEST_CASE("count_mono small examples")
{
    const auto red_k4 = ColoredComplete::monochromatic(4, 2);
    const auto rep = count_mono(clique(3), red_k4, true);
    CHECK(rep.per_color == std::vector<BigInt>{24, 0});
    CHECK(rep.total == 24);
    CHECK(*rep.per_vertex == std::vector<BigInt>{18, 18, 18, 18});
    CHECK(*rep.density() == 1);

    const auto h = clique_plus_pendants(4, {1, 0, 0, 0}).flatten();
    const auto t16 = count_mono(h, turan_coloring(16, 4));
    CHECK(t16.total == 960);
    CHECK(t16.per_color[1] == 0);

    CHECK(count_mono(clique(4), turan_coloring(9, 4)).total == 0);

    const auto tiny = count_mono(clique(5), red_k4, true);
    CHECK(tiny.total == 0);
    CHECK_FALSE(tiny.density().has_value());
}

TEST_CASE("count_mono agrees with brute force")
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        const int t = 1 + static_cast<int>(rng() % 5);
        const int n = 1 + static_cast<int>(rng() % 8);
        const int q = 1 + static_cast<int>(rng() % 3);
        const Graph g = random_pattern(rng, t, trial % 3 != 0);
        const auto chi = random_coloring(n, q, rng());
        const auto rep = count_mono(Pattern(g), chi, true);
        std::vector<std::uint64_t> pv(n, 0);
        BigInt total = 0;
        for (int c = 0; c < q; ++c) {
            const auto want = oracle::count_copies(g, chi, c, &pv);
            CHECK(rep.per_color[c] == want);
            total += want;
        }
        CHECK(rep.total == total);
        for (int v = 0; v < n; ++v)
            CHECK((*rep.per_vertex)[v] == pv[v]);
    }
}

TEST_CASE("per-vertex identity and thread independence")
{
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 30; ++trial) {
        const int t = 2 + static_cast<int>(rng() % 5);
        const int n = t + static_cast<int>(rng() % 10);
        const auto chi = random_coloring(n, 2 + trial % 2, rng());
        const Pattern h(random_pattern(rng, t, true));
        const auto one = count_mono(h, chi, true, 1);
        const auto many = count_mono(h, chi, true, 4);
        CHECK(one.total == many.total);
        CHECK(one.per_color == many.per_color);
        CHECK(*one.per_vertex == *many.per_vertex);
        BigInt sum = 0;
        for (const auto& m : *one.per_vertex)
            sum += m;
        CHECK(sum == one.total * t);
    }
}

TEST_CASE("colour permutation and relabelling invariance")
{
    std::mt19937_64 rng(8);
    const Pattern h = clique_plus_pendants(3, {2, 1, 0}).flatten();
    for (int trial = 0; trial < 10; ++trial) {
        const auto chi = random_coloring(11, 3, rng());
        const auto base = count_mono(h, chi, true);
        const auto swapped = count_mono(h, chi.recolored({2, 0, 1}, 3));
        CHECK(swapped.per_color[2] == base.per_color[0]);
        CHECK(swapped.per_color[0] == base.per_color[1]);
        CHECK(swapped.per_color[1] == base.per_color[2]);

        std::vector<int> perm(11);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        const auto moved = count_mono(h, chi.relabelled(perm), true);
        CHECK(moved.total == base.total);
        auto a = *moved.per_vertex, b = *base.per_vertex;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        CHECK(a == b);
    }
}

TEST_CASE("wide accumulator path")
{
    // n = 200, t = 17 puts t * (n)_t past 2^126, so the arbitrary-precision
    // kernel runs. Pin the centre and 15 leaves of a 16-leaf star.
    Graph star(17);
    for (int leaf = 1; leaf <= 16; ++leaf)
        star.add_edge(0, leaf);
    const auto plan = make_plan(star, {0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15});
    const auto chi = ColoredComplete::monochromatic(200, 1);
    std::vector<int> pins(16);
    std::iota(pins.begin(), pins.end(), 0);
    std::vector<BigInt> pv(200, 0);
    CHECK(count_embeddings(plan, chi.adjacency(0), pins, &pv) == 184);
    CHECK(pv[0] == 184);
    CHECK(pv[15] == 184);
    CHECK(pv[16] == 1);
    CHECK(pv[199] == 1);

    // Rows spanning several bitset words.
    const auto rep = count_mono(clique(3), ColoredComplete::monochromatic(300, 1));
    CHECK(rep.total == falling_factorial(300, 3));
}

TEST_CASE("disconnected patterns")
{
    // Two disjoint edges in a one-colour K_5: 5*4*3*2 injective maps.
    const Graph g(4, {{0, 1}, {2, 3}});
    CHECK(count_mono(Pattern(g), ColoredComplete::monochromatic(5, 1)).total == 120);
    // An isolated vertex multiplies by the remaining choices.
    const Graph iso(3, {{0, 1}});
    CHECK(count_mono(Pattern(iso), ColoredComplete::monochromatic(5, 1)).total == 5 * 4 * 3);
}

TEST_CASE("turan formula")
{
    CHECK(turan_count_formula(5, 16, 4).value == 960);
    CHECK(turan_count_formula(5, 9, 4).value == 0);
    CHECK(turan_count_formula(3, 25, 6).value == 300);
    const auto f = turan_count_formula(5, 16, 4);
    CHECK(f.within_bound);
    CHECK(f.bound == Rational(falling_factorial(16, 5), 81));
    CHECK(f.ratio == doctest::Approx(960.0 / (524160.0 / 81)));

    for (int k : {4, 5})
        for (int t = k; t <= 8; ++t)
            for (int n = k - 1; n <= 24; ++n) {
                std::vector<int> counts(k, 0);
                counts[0] = t - k;
                const auto h = clique_plus_pendants(k, counts).flatten();
                CHECK(count_mono(h, turan_coloring(n, k)).total == turan_count_formula(t, n, k).value);
            }
}

TEST_CASE("goodman identity")
{
    CHECK(goodman_triangle_count(pentagon_coloring()) == 0);
    CHECK(goodman_triangle_count(ColoredComplete::monochromatic(4, 2)) == 24);
    for (int seed = 0; seed < 120; ++seed) {
        const int n = 3 + seed % 10;
        const auto chi = random_coloring(n, 2, static_cast<std::uint64_t>(seed));
        CHECK(goodman_triangle_count(chi) == count_mono(clique(3), chi).total);
    }
    CHECK_THROWS_AS(goodman_triangle_count(random_coloring(5, 3, 1)), PreconditionError);
}

TEST_CASE("random expectation")
{
    CHECK(random_expectation(clique(3), 6, 2) == 30);
    CHECK(random_expectation(clique(3), 25, 3) == Rational(13800, 9));
    CHECK(random_expectation(clique(4), 3, 2) == 0);
}
