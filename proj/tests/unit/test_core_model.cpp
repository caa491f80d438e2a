#include "doctest.h"

#include "rml/bigint.hpp"
#include "rml/coloring_io.hpp"
#include "rml/constructors.hpp"
#include "rml/error.hpp"
#include "rml/graph6.hpp"
#include "rml/known_instances.hpp"
#include "rml/partition.hpp"
#include "rml/pattern.hpp"
#include "rml/pattern_spec.hpp"
#include "rml/ramsey_table.hpp"

#include <random>

using namespace rml;

TEST_CASE("falling factorial")
{
    CHECK(falling_factorial(6, 5) == 720);
    CHECK(falling_factorial(4, 5) == 0);
    CHECK(falling_factorial(25, 3) == 13800);
    CHECK(falling_factorial(7, 0) == 1);
    CHECK(falling_factorial(0, 0) == 1);
    for (int n = 1; n <= 30; ++n)
        for (int t = 1; t <= n; ++t)
            CHECK(falling_factorial(n, t) == falling_factorial(n, t - 1) * (n - t + 1));
    // Well past 64 bits.
    CHECK(falling_factorial(60, 30) == binomial(60, 30) * falling_factorial(30, 30));
}

TEST_CASE("binomial and powers")
{
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(5, 7) == 0);
    CHECK(binomial(5, -1) == 0);
    CHECK(ipow(BigInt(3), 4) == 81);
    CHECK(rpow(Rational(2), -3) == Rational(1, 8));
}

TEST_CASE("graph basics")
{
    Graph g = cycle_graph(5);
    CHECK(g.edge_count() == 5);
    CHECK(g.connected());
    CHECK(g.complement().edge_count() == 5);
    CHECK(g.complement().complement() == g);
    CHECK_THROWS_AS(g.add_edge(2, 2), PreconditionError);
    CHECK_THROWS_AS(g.add_edge(0, 5), PreconditionError);
    Graph two(4, {{0, 1}, {2, 3}});
    CHECK_FALSE(two.connected());
    CHECK(two.induced({1, 0}).edge_count() == 1);
    // Rows longer than one word.
    Graph big = complete_graph(130);
    CHECK(big.edge_count() == 130 * 129 / 2);
    CHECK(big.degree(129) == 129);
}

TEST_CASE("chromatic number")
{
    CHECK(chromatic_number(complete_graph(4)) == 4);
    CHECK(chromatic_number(cycle_graph(5)) == 3);
    CHECK(chromatic_number(cycle_graph(6)) == 2);
    CHECK(chromatic_number(Graph(3)) == 1);
    CHECK(Pattern(clique_plus_pendants(4, {1, 0, 0, 0}).flatten_graph()).chromatic_number() == 4);
    // Petersen graph.
    Graph pet(10);
    for (int i = 0; i < 5; ++i) {
        pet.add_edge(i, (i + 1) % 5);
        pet.add_edge(5 + i, 5 + (i + 2) % 5);
        pet.add_edge(i, 5 + i);
    }
    CHECK(chromatic_number(pet) == 3);
    CHECK_THROWS_AS(chromatic_number(complete_graph(21)), SizeCapExceeded);
    CHECK_THROWS_AS(chromatic_number(Graph()), PreconditionError);
}

TEST_CASE("decorated pattern normalises and round-trips")
{
    DecoratedPattern p(complete_graph(4), {0, 2, 1, 0});
    CHECK(p.pendant_counts() == std::vector<int>{2, 1, 0, 0});
    CHECK(p.order() == 7);
    const Graph flat = p.flatten_graph();
    CHECK(flat.edge_count() == 6 + 3);
    CHECK(flat.induced({0, 1, 2, 3}) == complete_graph(4));
    for (int v = 4; v < 7; ++v)
        CHECK(flat.degree(v) == 1);
    CHECK(DecoratedPattern::detect(flat) == p);
    CHECK(p.flatten().chromatic_number() == 4);

    auto star = starburst(3, 2);
    CHECK(star.order() == 9);
    CHECK(star.flatten_graph().edge_count() == 9);
    CHECK(DecoratedPattern::detect(star.flatten_graph()) == star);
}

TEST_CASE("graph6 decode")
{
    const Graph g = graph6_decode("D?{");
    CHECK(g.order() == 5);
    CHECK(g.edges() == std::vector<Edge>{{0, 4}, {1, 4}, {2, 4}, {3, 4}});
    CHECK(graph6_encode(g) == "D?{");
    CHECK(graph6_decode("@").order() == 1);
    CHECK(graph6_decode("?").order() == 0);

    const Graph a = graph6_decode(kR55Graph42A);
    CHECK(a.order() == 42);
    CHECK(a.edge_count() == 425);
    CHECK(graph6_encode(a) == kR55Graph42A);
    CHECK(graph6_encode(graph6_decode(kR55Graph42B)) == kR55Graph42B);
}

TEST_CASE("graph6 errors carry the byte offset")
{
    auto offset_of = [](const std::string& s) -> long {
        try {
            graph6_decode(s);
        } catch (const ParseError& e) {
            return static_cast<long>(e.position());
        }
        return -1;
    };
    CHECK(offset_of("D? {") == 2);         // byte below 63
    CHECK(offset_of(std::string("D?\x7f")) == 2);
    CHECK(offset_of("D?") == 2);           // too short
    CHECK(offset_of("D?{?") == 3);         // too long
    CHECK(offset_of("D?~") == 2);          // nonzero padding bits
    CHECK(offset_of("~") == 0);            // orders above 62 are not supported
    CHECK(offset_of("") == 0);
}

TEST_CASE("graph6 random round trip")
{
    std::mt19937_64 rng(5);
    for (int n = 0; n <= 62; n += 7) {
        Graph g(n);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (rng() % 2)
                    g.add_edge(i, j);
        const auto s = graph6_encode(g);
        CHECK(graph6_decode(s) == g);
        CHECK(graph6_encode(graph6_decode(s)) == s);
    }
}

TEST_CASE("coloring io")
{
    CHECK(write_coloring(ColoredComplete::monochromatic(3, 2)) == "qcoloring v1\n3 2\n0 0 0");
    const auto chi = random_coloring(10, 3, 99);
    CHECK(read_coloring(write_coloring(chi)) == chi);
    CHECK(read_coloring("qcoloring v1\n3 2\n0 1\n1\n") == ColoredComplete(3, 2, {0, 1, 1}));

    auto line_of = [](const std::string& s) -> long {
        try {
            read_coloring(s);
        } catch (const ParseError& e) {
            return static_cast<long>(e.position());
        }
        return -1;
    };
    CHECK(line_of("qcoloring v1\n3 2\n0 2 0") == 3);
    CHECK(line_of("qcoloring v2\n3 2\n0 0 0") == 1);
    CHECK(line_of("qcoloring v1\n3 2\n0 0") > 0);
    CHECK(line_of("qcoloring v1\n3 2\n0 0 0 0") > 0);
    CHECK(line_of("qcoloring v1\nx 2\n") == 2);
}

TEST_CASE("colored complete invariants")
{
    const auto chi = random_coloring(11, 3, 1);
    std::size_t sum = 0;
    for (int c = 0; c < 3; ++c)
        sum += chi.edge_count(c);
    CHECK(sum == pair_count(11));
    for (int c = 0; c < 3; ++c)
        for (int i = 0; i < 11; ++i)
            for (int j = 0; j < 11; ++j)
                CHECK(chi.adjacency(c).test(i, j) == chi.adjacency(c).test(j, i));
    CHECK_THROWS_AS(ColoredComplete(3, 2, {0, 0}), PreconditionError);
    CHECK_THROWS_AS(ColoredComplete(3, 2, {0, 0, 2}), PreconditionError);
    CHECK_THROWS_AS(ColoredComplete(0, 2, {}), PreconditionError);

    std::vector<int> perm = {2, 0, 1, 3, 4, 5, 6, 7, 8, 10, 9};
    const auto moved = chi.relabelled(perm);
    for (int i = 0; i < 11; ++i)
        for (int j = i + 1; j < 11; ++j)
            CHECK(moved.color(i, j) == chi.color(perm[i], perm[j]));
}

TEST_CASE("partition")
{
    auto p = Partition::balanced(10, 3);
    CHECK(p.sizes() == std::vector<int>{3, 3, 4});
    CHECK(balanced_sizes(16, 3) == std::vector<int>{5, 5, 6});
    CHECK(p.part_of()[9] == 2);
    CHECK(p.internal_edges(complete_graph(10)) == 3 + 3 + 6);
    CHECK_THROWS_AS(Partition::from_parts(3, {{0, 1}, {1, 2}}), PreconditionError);
    CHECK_THROWS_AS(Partition::from_parts(3, {{0, 1}}), PreconditionError);
}

TEST_CASE("ramsey table")
{
    auto t = RamseyTable::builtin();
    CHECK(t.require(3, 3) == Interval{6, 6});
    CHECK(t.require(4, 3) == Interval{9, 9});
    CHECK(t.require(4, 4) == Interval{18, 18});
    CHECK(t.require(2, 7) == Interval{7, 7});
    CHECK(t.require_multicolor(1, 5) == Interval{5, 5});
    CHECK(t.require_multicolor(2, 4) == Interval{18, 18});
    CHECK_THROWS_AS(t.require(6, 6), PreconditionError);
    t.load("# comment\n5 5 43 48\nq 3 4 51 62\n");
    CHECK(t.require(5, 5) == Interval{43, 48});
    CHECK(t.require_multicolor(3, 4) == Interval{51, 62});
    CHECK_THROWS(t.load("5 5 50 40\n"));
    CHECK_THROWS_AS(t.load("5 5 x\n"), ParseError);
}

TEST_CASE("pattern mini-language")
{
    CHECK(parse_pattern("clique:4").edge_count() == 6);
    auto p = parse_pattern("clique-pendants:4:1,0,0,0");
    CHECK(p.order() == 5);
    CHECK(p.edge_count() == 7);
    CHECK(p.chromatic_number() == 4);
    CHECK(parse_pattern("starburst:3:2").order() == 9);
    CHECK(parse_pattern("pineapple:4:3").edge_count() == 9);
    auto l = parse_pattern("lollipop:4:3");
    CHECK(l.order() == 7);
    CHECK(l.edge_count() == 9);
    CHECK(parse_pattern("g6:D?{").edge_count() == 4);
    CHECK_THROWS_AS(parse_pattern("clique"), ParseError);
    CHECK_THROWS_AS(parse_pattern("clique:x"), ParseError);
    CHECK_THROWS_AS(parse_pattern("clique-pendants:4:1,0"), ParseError);
    CHECK_THROWS_AS(parse_pattern("wheel:5"), ParseError);
    CHECK_THROWS_AS(parse_pattern("g6:D? "), ParseError);
}
