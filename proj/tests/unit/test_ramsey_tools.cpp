#include "doctest.h"

#include "oracles.hpp"
#include "rml/constructors.hpp"
#include "rml/error.hpp"
#include "rml/graph6.hpp"
#include "rml/known_instances.hpp"
#include "rml/ramsey_tools.hpp"

#include <random>

using namespace rml;

namespace {

Graph random_graph(std::mt19937_64& rng, int n, double p)
{
    std::bernoulli_distribution coin(p);
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng))
                g.add_edge(i, j);
    return g;
}

} // namespace

TEST_CASE("clique number")
{
    CHECK(clique_number(cycle_graph(5)) == 2);
    Graph k8m = complete_graph(8);
    for (int i = 0; i < 8; i += 2)
        k8m.remove_edge(i, i + 1);
    CHECK(clique_number(k8m) == 4);
    CHECK(clique_number(Graph(3)) == 1);
    CHECK(clique_number(Graph()) == 0);
    CHECK(clique_number(complete_graph(70)) == 70);

    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 80; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 12);
        const Graph g = random_graph(rng, n, 0.2 + 0.1 * (trial % 7));
        const auto res = max_clique(g);
        CHECK(res.size == oracle::clique_number(g));
        CHECK(static_cast<int>(res.witness.size()) == res.size);
        CHECK(oracle::is_clique(g, res.witness));
        CHECK(clique_number(g.complement().complement()) == res.size);
        for (int s = 1; s <= n; ++s) {
            auto hit = find_clique(g, s);
            CHECK(hit.has_value() == (s <= res.size));
            if (hit) {
                CHECK(static_cast<int>(hit->size()) == s);
                CHECK(oracle::is_clique(g, *hit));
            }
        }
    }
    CHECK_THROWS_AS(clique_number(Graph(kCliqueCap + 1)), SizeCapExceeded);
}

TEST_CASE("clique number beyond one word")
{
    // Planted 9-clique in a sparse 100-vertex graph.
    std::mt19937_64 rng(4);
    Graph g = random_graph(rng, 100, 0.1);
    const std::vector<int> planted = {3, 17, 29, 40, 64, 65, 77, 90, 99};
    for (std::size_t i = 0; i < planted.size(); ++i)
        for (std::size_t j = i + 1; j < planted.size(); ++j)
            if (!g.has_edge(planted[i], planted[j]))
                g.add_edge(planted[i], planted[j]);
    const auto res = max_clique(g);
    CHECK(res.size == 9);
    CHECK(oracle::is_clique(g, res.witness));
}

TEST_CASE("the 42-vertex pair")
{
    const Graph a = graph6_decode(kR55Graph42A), b = graph6_decode(kR55Graph42B);
    CHECK(clique_number(a) == 4);
    CHECK(clique_number(b) == 4);
    CHECK(clique_number(a.complement()) == 4);
    CHECK(clique_number(b.complement()) == 4);
    const auto diff = graph6_diff(a, b);
    CHECK(diff == std::vector<Edge>{{31, 39}});
    CHECK(graph6_diff(b, a) == diff);
    CHECK(a.has_edge(31, 39));
    CHECK_FALSE(b.has_edge(31, 39));
    CHECK(graph6_diff(a, a).empty());
    CHECK_THROWS_AS(graph6_diff(a, Graph(5)), PreconditionError);
    CHECK(verify_ramsey(ColoredComplete::from_graph(a), {5, 5}).valid);
}

TEST_CASE("verify ramsey")
{
    CHECK(verify_ramsey(pentagon_coloring(), {3, 3}).valid);
    auto bad = verify_ramsey(ColoredComplete::monochromatic(6, 2), {3, 3});
    CHECK_FALSE(bad.valid);
    CHECK(bad.color == 0);
    CHECK(bad.witness.size() == 3);
    for (bool a : {false, true})
        for (bool b : {false, true})
            CHECK(verify_ramsey(r34_k8_coloring(a, b), {3, 4}).valid);
    CHECK(verify_ramsey(ColoredComplete::monochromatic(6, 2), {kUnbounded, 3}).valid);
    CHECK_THROWS_AS(verify_ramsey(pentagon_coloring(), {3}), PreconditionError);
}

TEST_CASE("every 2-colouring of K_6 has a monochromatic triangle")
{
    int violations = 0;
    for (std::uint32_t mask = 0; mask < (1u << 15); ++mask) {
        std::vector<std::uint8_t> colors(15);
        for (int i = 0; i < 15; ++i)
            colors[i] = mask >> i & 1;
        violations += !verify_ramsey(ColoredComplete(6, 2, colors), {3, 3}).valid;
    }
    CHECK(violations == 1 << 15);
}

TEST_CASE("one-vertex extensions")
{
    CHECK(enumerate_extensions(pentagon_coloring(), {3, 3}).empty());

    const auto k8 = r34_k8_coloring(false, false);
    // Delete vertex 2, an endpoint of the chord {2,6}.
    const auto k7 = k8.induced({0, 1, 3, 4, 5, 6, 7});
    const auto ext = enumerate_extensions(k7, {3, 4});
    CHECK(ext.size() >= 2);
    for (const auto& e : ext) {
        CHECK(e.n() == 8);
        CHECK(e.induced({0, 1, 2, 3, 4, 5, 6}) == k7);
        CHECK(verify_ramsey(e, {3, 4}).valid);
    }
    // Compare with trying all 2^7 colourings of the new edges directly.
    std::size_t expected = 0;
    for (int mask = 0; mask < 128; ++mask) {
        ColoringState s(8, 2, 0);
        for (int i = 0; i < 7; ++i)
            for (int j = i + 1; j < 7; ++j)
                s.set_color(i, j, k7.color(i, j));
        for (int i = 0; i < 7; ++i)
            s.set_color(i, 7, mask >> (6 - i) & 1);
        expected += verify_ramsey(ColoredComplete(s), {3, 4}).valid;
    }
    CHECK(ext.size() == expected);
    CHECK(std::is_sorted(ext.begin(), ext.end(), [](const auto& x, const auto& y) { return x.colors() < y.colors(); }));

    // A single vertex extends in both colours when no colour forbids an edge.
    CHECK(enumerate_extensions(ColoredComplete::monochromatic(1, 2), {3, 3}).size() == 2);
    CHECK(enumerate_extensions(ColoredComplete::monochromatic(1, 2), {2, 3}).size() == 1);
    CHECK_THROWS_AS(enumerate_extensions(random_coloring(25, 2, 1), {3, 3}), BudgetExceeded);
    CHECK(enumerate_extensions(k7, {3, 4}, kExtensionBudget, 1).size() ==
          enumerate_extensions(k7, {3, 4}, kExtensionBudget, 4).size());
}

TEST_CASE("blowup recognition")
{
    const auto c5 = pentagon_coloring();
    const auto blown = ramsey_blowup(c5, 25);
    auto v = is_blowup(blown, Partition::balanced(25, 5));
    CHECK(v.is_blowup);
    REQUIRE(v.base.has_value());
    CHECK(*v.base == c5.recolored({0, 1}, 3));

    const auto m = mixed_blowup(r34_k8_coloring(false, false), r34_k8_coloring(false, true), 7, 2, 1);
    auto w = is_blowup(m.coloring, m.parts);
    CHECK_FALSE(w.is_blowup);
    const auto& part = m.parts.parts()[m.parts.part_of()[w.u]];
    CHECK(m.parts.part_of()[w.u] == m.parts.part_of()[w.u_prime]);
    CHECK(m.coloring.color(w.u, w.v) != m.coloring.color(w.u_prime, w.v));
    CHECK(std::find(part.begin(), part.end(), w.v) == part.end());

    CHECK(is_blowup(ColoredComplete::monochromatic(1, 1), Partition::balanced(1, 1)).is_blowup);
}

TEST_CASE("ramsey-blowup-like")
{
    auto t = is_ramsey_blowup_like(turan_coloring(16, 4), 4, 3);
    CHECK(t.holds);
    CHECK(t.color == 0);
    CHECK(t.parts.size() == 3);
    CHECK(t.conditional_on_p);

    auto y = is_ramsey_blowup_like(ramsey_blowup(pentagon_coloring(), 25), 3, 5);
    CHECK(y.holds);
    CHECK(y.color == 2);

    CHECK_FALSE(is_ramsey_blowup_like(turan_coloring(16, 4), 4, 4).holds);
    CHECK_FALSE(is_ramsey_blowup_like(random_coloring(12, 2, 3), 4, 3).holds);

    const auto m = mixed_blowup(r34_k8_coloring(false, false), r34_k8_coloring(false, true), 7, 2, 1);
    auto off = is_ramsey_blowup_like(m.coloring, {3, 4, kUnbounded}, 8);
    CHECK(off.holds);
    CHECK(off.off_diagonal);
    CHECK(off.color == 2);
}

TEST_CASE("isomorphism")
{
    const auto t6 = turan_coloring(6, 4);
    CHECK(iso_check_small(t6, t6.relabelled({4, 2, 0, 5, 1, 3})));
    CHECK_FALSE(iso_check_small(t6, ColoredComplete::monochromatic(6, 2)));
    CHECK(iso_check_small(t6, t6.recolored({1, 0}, 2)));
    CHECK_THROWS_AS(iso_check_small(random_coloring(9, 2, 1), random_coloring(9, 2, 1)), SizeCapExceeded);

    std::vector<ColoredComplete> fig;
    for (bool a : {false, true})
        for (bool b : {false, true})
            fig.push_back(r34_k8_coloring(a, b));
    auto cls = iso_classes(fig);
    CHECK(cls.count == 3);
    CHECK(cls.certified);
    // One chord either way gives the same class.
    CHECK(cls.class_of[1] == cls.class_of[2]);

    std::mt19937_64 rng(6);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 3 + static_cast<int>(rng() % 4);
        const int q = 2 + static_cast<int>(rng() % 2);
        const auto a = random_coloring(n, q, rng());
        auto b = trial % 2 ? random_coloring(n, q, rng()) : a;
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        b = b.relabelled(perm);
        const bool want = oracle::isomorphic(a, b);
        CHECK(iso_check_small(a, b) == want);
        CHECK((canonical_form(a) == canonical_form(b)) == want);
        if (want)
            CHECK(fingerprint(a) == fingerprint(b));
    }

    // Fingerprints stand in above the cap and are flagged.
    auto big = iso_classes({random_coloring(10, 2, 1), random_coloring(10, 2, 1).relabelled({1, 0, 2, 3, 4, 5, 6, 7, 8, 9})});
    CHECK(big.count == 1);
    CHECK_FALSE(big.certified);
}

TEST_CASE("double extension back-extraction")
{
    const auto chi1 = r34_k8_coloring(false, false), chi2 = r34_k8_coloring(false, true);
    const auto m = mixed_blowup(chi1, chi2, 7, 2, 1);
    auto d = extract_double_extension(m.coloring, m.parts, m.fill_color);
    REQUIRE(d.has_value());
    CHECK(d->base.n() == 7);
    CHECK(d->base.q() == 2);
    CHECK(d->via_u.induced({0, 1, 2, 3, 4, 5, 6}) == d->base);
    CHECK(d->via_u_prime.induced({0, 1, 2, 3, 4, 5, 6}) == d->base);
    CHECK_FALSE(d->via_u == d->via_u_prime);
    CHECK(verify_ramsey(d->via_u, {3, 4}).valid);
    CHECK(verify_ramsey(d->via_u_prime, {3, 4}).valid);
    auto ext = enumerate_extensions(d->base, {3, 4});
    CHECK(std::find(ext.begin(), ext.end(), d->via_u) != ext.end());
    CHECK(std::find(ext.begin(), ext.end(), d->via_u_prime) != ext.end());

    const auto plain = ramsey_blowup(pentagon_coloring(), 10);
    CHECK_FALSE(extract_double_extension(plain, Partition::balanced(10, 5), 2).has_value());
}
