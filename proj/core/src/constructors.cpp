#include "rml/constructors.hpp"

#include "rml/error.hpp"

#include <algorithm>
#include <string>

namespace rml {

ColoredComplete turan_coloring(int n, int k)
{
    if (k < 3)
        throw PreconditionError("turan_coloring: need k >= 3");
    if (n < k - 1)
        throw PreconditionError("turan_coloring: need n >= k-1, got n = " + std::to_string(n) +
                                ", k = " + std::to_string(k));
    const Partition parts = Partition::balanced(n, k - 1);
    const auto& part_of = parts.part_of();
    std::vector<std::uint8_t> colors;
    colors.reserve(pair_count(n));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            colors.push_back(part_of[i] == part_of[j] ? 0 : 1);
    return ColoredComplete(n, 2, std::move(colors));
}

ColoredComplete ramsey_blowup(const ColoredComplete& base, int n)
{
    const int p = base.n();
    if (n < p)
        throw PreconditionError("ramsey_blowup: need n >= " + std::to_string(p));
    const int fill = base.q();
    const Partition parts = Partition::balanced(n, p);
    const auto& part_of = parts.part_of();
    std::vector<std::uint8_t> colors;
    colors.reserve(pair_count(n));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            int a = part_of[i], b = part_of[j];
            colors.push_back(static_cast<std::uint8_t>(a == b ? fill : base.color(a, b)));
        }
    return ColoredComplete(n, base.q() + 1, std::move(colors));
}

ColoredComplete lex_product(const ColoredComplete& outer, const ColoredComplete& inner)
{
    const int m = inner.n();
    const int n = outer.n() * m;
    std::vector<std::uint8_t> colors;
    colors.reserve(pair_count(n));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            int bi = i / m, bj = j / m;
            int c = bi == bj ? outer.q() + inner.color(i % m, j % m) : outer.color(bi, bj);
            colors.push_back(static_cast<std::uint8_t>(c));
        }
    return ColoredComplete(n, outer.q() + inner.q(), std::move(colors));
}

MixedBlowup mixed_blowup(const ColoredComplete& chi1, const ColoredComplete& chi2, int u, int s, int split)
{
    const int n = chi1.n();
    if (chi2.n() != n || chi2.q() != chi1.q())
        throw PreconditionError("mixed_blowup: colourings must have equal n and q");
    if (u < 0 || u >= n)
        throw PreconditionError("mixed_blowup: vertex u out of range");
    if (s < 2)
        throw PreconditionError("mixed_blowup: need s >= 2");
    if (split < 1 || split >= s)
        throw PreconditionError("mixed_blowup: need 1 <= split < s");
    bool differ_at_u = false;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (chi1.color(i, j) == chi2.color(i, j))
                continue;
            if (i != u && j != u)
                throw PreconditionError("mixed_blowup: colourings differ on pair (" + std::to_string(i) + "," +
                                        std::to_string(j) + ") not involving u");
            differ_at_u = true;
        }
    if (!differ_at_u)
        throw PreconditionError("mixed_blowup: colourings are identical");

    const int N = n * s;
    const int fill = chi1.q();
    // Vertex x belongs to part x / s; the first `split` copies of u form U_1.
    auto base_of = [s](int x) { return x / s; };
    auto wiring = [&](int x) -> const ColoredComplete& {
        return (base_of(x) == u && x % s >= split) ? chi2 : chi1;
    };
    std::vector<std::uint8_t> colors;
    colors.reserve(pair_count(N));
    for (int x = 0; x < N; ++x)
        for (int y = x + 1; y < N; ++y) {
            int a = base_of(x), b = base_of(y);
            int c;
            if (a == b)
                c = fill;
            else if (a == u)
                c = wiring(x).color(a, b);
            else if (b == u)
                c = wiring(y).color(a, b);
            else
                c = chi1.color(a, b);
            colors.push_back(static_cast<std::uint8_t>(c));
        }
    MixedBlowup out{ColoredComplete(N, fill + 1, std::move(colors)),
                    Partition::contiguous(std::vector<int>(n, s)), fill, {}, {}};
    for (int i = 0; i < s; ++i)
        (i < split ? out.u1 : out.u2).push_back(u * s + i);
    return out;
}

std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

ColoredComplete random_coloring(int n, int q, std::uint64_t seed)
{
    if (q < 1)
        throw PreconditionError("random_coloring: q must be positive");
    std::vector<std::uint8_t> colors(pair_count(n));
    for (std::size_t i = 0; i < colors.size(); ++i) {
        std::uint64_t x = splitmix64(seed + (i + 1) * 0x9E3779B97F4A7C15ull);
        auto c = static_cast<unsigned __int128>(x) * static_cast<unsigned>(q) >> 64;
        colors[i] = static_cast<std::uint8_t>(c);
    }
    return ColoredComplete(n, q, std::move(colors));
}

ColoredComplete pentagon_coloring() { return ColoredComplete::from_graph(cycle_graph(5)); }

Pattern clique(int k)
{
    if (k < 1)
        throw PreconditionError("clique: need k >= 1");
    return Pattern::with_known_chromatic(complete_graph(k), k);
}

DecoratedPattern add_pendants(const Graph& base, const std::vector<int>& counts)
{
    return DecoratedPattern(base, counts);
}

DecoratedPattern clique_plus_pendants(int k, const std::vector<int>& counts)
{
    if (k < 1)
        throw PreconditionError("clique_plus_pendants: need k >= 1");
    if (static_cast<int>(counts.size()) != k)
        throw PreconditionError("clique_plus_pendants: need exactly k pendant counts");
    return DecoratedPattern(complete_graph(k), counts);
}

DecoratedPattern starburst(int k, int per_vertex)
{
    return clique_plus_pendants(k, std::vector<int>(k, per_vertex));
}

DecoratedPattern pineapple(int k, int count)
{
    std::vector<int> counts(k, 0);
    if (k >= 1)
        counts[0] = count;
    return clique_plus_pendants(k, counts);
}

Pattern lollipop(int k, int path_len)
{
    if (k < 1 || path_len < 0)
        throw PreconditionError("lollipop: need k >= 1 and path_len >= 0");
    std::vector<int> parent;
    for (int i = 0; i < path_len; ++i)
        parent.push_back(i == 0 ? 0 : k + i - 1);
    return generalized_lollipop(k, parent);
}

Pattern generalized_lollipop(int k, const std::vector<int>& parent)
{
    if (k < 1)
        throw PreconditionError("generalized_lollipop: need k >= 1");
    const int t = k + static_cast<int>(parent.size());
    Graph g(t);
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            g.add_edge(i, j);
    for (int i = 0; i < static_cast<int>(parent.size()); ++i) {
        int p = parent[i];
        if (p < 0 || p >= k + i)
            throw PreconditionError("generalized_lollipop: parent of vertex " + std::to_string(k + i) +
                                    " must be an earlier vertex");
        g.add_edge(p, k + i);
    }
    // Attaching trees to K_k leaves the chromatic number at max(k, 2).
    int chi = std::max(k, parent.empty() ? 1 : 2);
    return Pattern::with_known_chromatic(std::move(g), chi);
}

} // namespace rml
