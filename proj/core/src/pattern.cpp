#include "rml/pattern.hpp"

#include "rml/error.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace rml {

namespace {

// Backtracking k-colourability in a fixed degree-descending order, with the
// usual symmetry break: a vertex may open at most one new colour.
bool colourable(const Graph& g, const std::vector<int>& order, int k)
{
    const int n = g.order();
    std::vector<int> colour(n, -1);
    auto rec = [&](auto& self, int idx, int used) -> bool {
        if (idx == n)
            return true;
        int v = order[idx];
        int limit = std::min(k, used + 1);
        for (int c = 0; c < limit; ++c) {
            bool ok = true;
            for_each_bit(g.neighbours(v), [&](int w) {
                if (colour[w] == c)
                    ok = false;
            });
            if (!ok)
                continue;
            colour[v] = c;
            if (self(self, idx + 1, std::max(used, c + 1)))
                return true;
            colour[v] = -1;
        }
        return false;
    };
    return rec(rec, 0, 0);
}

} // namespace

int chromatic_number(const Graph& g, int cap)
{
    const int n = g.order();
    if (n < 1)
        throw PreconditionError("chromatic_number: pattern must have at least one vertex");
    if (n > cap)
        throw SizeCapExceeded("chromatic_number: " + std::to_string(n) + " vertices exceeds cap " +
                              std::to_string(cap));
    if (g.edge_count() == 0)
        return 1;
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return g.degree(a) > g.degree(b); });
    for (int k = 2; k <= n; ++k)
        if (colourable(g, order, k))
            return k;
    return n;
}

Pattern::Pattern(Graph g, int chromatic_cap)
    : g_(std::move(g)),
      edge_count_(g_.edge_count()),
      chromatic_(rml::chromatic_number(g_, chromatic_cap)),
      connected_(g_.connected())
{
}

Pattern::Pattern(Graph g, int chromatic, bool connected)
    : g_(std::move(g)), edge_count_(g_.edge_count()), chromatic_(chromatic), connected_(connected)
{
}

Pattern Pattern::with_known_chromatic(Graph g, int chromatic)
{
    bool conn = g.connected();
    return Pattern(std::move(g), chromatic, conn);
}

DecoratedPattern::DecoratedPattern(Graph base, std::vector<int> pendant_counts)
{
    const int h = base.order();
    if (static_cast<int>(pendant_counts.size()) != h)
        throw PreconditionError("DecoratedPattern: need one pendant count per base vertex");
    for (int s : pendant_counts)
        if (s < 0)
            throw PreconditionError("DecoratedPattern: negative pendant count");
    std::vector<int> order(h);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return pendant_counts[a] > pendant_counts[b]; });
    base_ = base.induced(order);
    counts_.reserve(h);
    for (int v : order)
        counts_.push_back(pendant_counts[v]);
}

int DecoratedPattern::order() const noexcept
{
    return base_.order() + std::accumulate(counts_.begin(), counts_.end(), 0);
}

Graph DecoratedPattern::flatten_graph() const
{
    Graph g(order());
    for (auto [u, v] : base_.edges())
        g.add_edge(u, v);
    int next = base_.order();
    for (int i = 0; i < base_.order(); ++i)
        for (int s = 0; s < counts_[i]; ++s)
            g.add_edge(i, next++);
    return g;
}

Pattern DecoratedPattern::flatten() const
{
    // Pendant edges never raise the chromatic number above max(chi(H0), 2).
    int chi = rml::chromatic_number(base_);
    if (order() > base_order())
        chi = std::max(chi, 2);
    return Pattern::with_known_chromatic(flatten_graph(), chi);
}

DecoratedPattern DecoratedPattern::detect(const Graph& g)
{
    const int n = g.order();
    std::vector<char> pendant(n, 0);
    for (int v = 0; v < n; ++v) {
        if (g.degree(v) != 1)
            continue;
        int w = -1;
        for_each_bit(g.neighbours(v), [&](int x) { w = x; });
        if (g.degree(w) > 1)
            pendant[v] = 1;
    }
    std::vector<int> base_vertices;
    std::vector<int> index_in_base(n, -1);
    for (int v = 0; v < n; ++v)
        if (!pendant[v]) {
            index_in_base[v] = static_cast<int>(base_vertices.size());
            base_vertices.push_back(v);
        }
    std::vector<int> counts(base_vertices.size(), 0);
    for (int v = 0; v < n; ++v)
        if (pendant[v])
            for_each_bit(g.neighbours(v), [&](int w) { ++counts[index_in_base[w]]; });
    return DecoratedPattern(g.induced(base_vertices), std::move(counts));
}

} // namespace rml
