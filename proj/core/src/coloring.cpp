#include "rml/coloring.hpp"

#include "rml/error.hpp"

#include <string>

namespace rml {

namespace {

void check_shape(int n, int q)
{
    if (n < 1)
        throw PreconditionError("coloring: n must be positive");
    if (q < 1 || q > 255)
        throw PreconditionError("coloring: q must lie in [1, 255]");
}

std::vector<BitMatrix> build_adjacency(int n, int q, const std::vector<std::uint8_t>& colors)
{
    std::vector<BitMatrix> adj(q, BitMatrix(n));
    std::size_t idx = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            adj[colors[idx++]].set_edge(i, j);
    return adj;
}

} // namespace

ColoringState::ColoringState(int n, int q, int initial_color)
    : n_(n), q_(q), colors_(pair_count(n), static_cast<std::uint8_t>(initial_color))
{
    check_shape(n, q);
    if (initial_color < 0 || initial_color >= q)
        throw PreconditionError("ColoringState: initial colour out of range");
    adj_ = build_adjacency(n, q, colors_);
}

ColoringState::ColoringState(const ColoredComplete& c)
    : n_(c.n()), q_(c.q()), colors_(c.colors())
{
    adj_.reserve(q_);
    for (int k = 0; k < q_; ++k)
        adj_.push_back(c.adjacency(k));
}

void ColoringState::set_color(int i, int j, int c)
{
    auto& slot = colors_[pair_index(n_, i, j)];
    if (slot == c)
        return;
    adj_[slot].reset_edge(i, j);
    adj_[c].set_edge(i, j);
    slot = static_cast<std::uint8_t>(c);
}

ColoredComplete::ColoredComplete(int n, int q, std::vector<std::uint8_t> colors)
    : n_(n), q_(q), colors_(std::move(colors))
{
    check_shape(n, q);
    if (colors_.size() != pair_count(n))
        throw PreconditionError("ColoredComplete: expected " + std::to_string(pair_count(n)) +
                                " pair colours, got " + std::to_string(colors_.size()));
    for (auto c : colors_)
        if (c >= q)
            throw PreconditionError("ColoredComplete: colour " + std::to_string(c) +
                                    " out of range for q = " + std::to_string(q));
    adj_ = build_adjacency(n, q, colors_);
}

ColoredComplete::ColoredComplete(const ColoringState& s)
    : n_(s.n()), q_(s.q()), colors_(s.colors())
{
    adj_.reserve(q_);
    for (int k = 0; k < q_; ++k)
        adj_.push_back(s.adjacency(k));
}

ColoredComplete ColoredComplete::monochromatic(int n, int q, int c)
{
    return ColoredComplete(n, q, std::vector<std::uint8_t>(pair_count(n), static_cast<std::uint8_t>(c)));
}

ColoredComplete ColoredComplete::from_graph(const Graph& g)
{
    const int n = g.order();
    std::vector<std::uint8_t> colors;
    colors.reserve(pair_count(n));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            colors.push_back(g.has_edge(i, j) ? 0 : 1);
    return ColoredComplete(n, 2, std::move(colors));
}

Graph ColoredComplete::color_graph(int c) const
{
    Graph g(n_);
    std::size_t idx = 0;
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j)
            if (colors_[idx++] == c)
                g.add_edge(i, j);
    return g;
}

std::size_t ColoredComplete::edge_count(int c) const
{
    std::size_t k = 0;
    for (auto x : colors_)
        k += (x == c);
    return k;
}

ColoredComplete ColoredComplete::with_color(int i, int j, int c) const
{
    if (i == j || i < 0 || j < 0 || i >= n_ || j >= n_)
        throw PreconditionError("with_color: invalid pair");
    auto colors = colors_;
    colors[pair_index(n_, i, j)] = static_cast<std::uint8_t>(c);
    return ColoredComplete(n_, q_, std::move(colors));
}

ColoredComplete ColoredComplete::relabelled(const std::vector<int>& perm) const
{
    if (static_cast<int>(perm.size()) != n_)
        throw PreconditionError("relabelled: permutation size mismatch");
    std::vector<std::uint8_t> colors;
    colors.reserve(colors_.size());
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j)
            colors.push_back(static_cast<std::uint8_t>(color(perm[i], perm[j])));
    return ColoredComplete(n_, q_, std::move(colors));
}

ColoredComplete ColoredComplete::recolored(const std::vector<int>& colour_map, int new_q) const
{
    if (static_cast<int>(colour_map.size()) < q_)
        throw PreconditionError("recolored: colour map too short");
    std::vector<std::uint8_t> colors;
    colors.reserve(colors_.size());
    for (auto c : colors_)
        colors.push_back(static_cast<std::uint8_t>(colour_map[c]));
    return ColoredComplete(n_, new_q, std::move(colors));
}

ColoredComplete ColoredComplete::induced(const std::vector<int>& vertices) const
{
    const int m = static_cast<int>(vertices.size());
    std::vector<std::uint8_t> colors;
    colors.reserve(pair_count(m));
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b)
            colors.push_back(static_cast<std::uint8_t>(color(vertices[a], vertices[b])));
    return ColoredComplete(m, q_, std::move(colors));
}

} // namespace rml
