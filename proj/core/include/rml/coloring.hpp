#pragma once

#include "rml/bitset.hpp"
#include "rml/graph.hpp"

#include <cstdint>
#include <vector>

namespace rml {

/// Index of pair (i, j), i < j, in the upper-triangular order
/// (0,1), (0,2), ..., (0,n-1), (1,2), ...
inline std::size_t pair_index(int n, int i, int j)
{
    if (i > j)
        std::swap(i, j);
    return static_cast<std::size_t>(i) * (2 * n - i - 1) / 2 + static_cast<std::size_t>(j - i - 1);
}

inline std::size_t pair_count(int n) { return static_cast<std::size_t>(n) * (n - 1) / 2; }

/// Mutable q-colouring of E(K_n) with per-colour adjacency kept in sync.
/// Search code works on this; ColoredComplete is the immutable value type.
class ColoringState {
public:
    ColoringState(int n, int q, int initial_color = 0);
    explicit ColoringState(const class ColoredComplete& c);

    int n() const noexcept { return n_; }
    int q() const noexcept { return q_; }
    int color(int i, int j) const { return colors_[pair_index(n_, i, j)]; }
    void set_color(int i, int j, int c);

    const BitMatrix& adjacency(int c) const { return adj_[c]; }
    const std::vector<std::uint8_t>& colors() const noexcept { return colors_; }

private:
    int n_;
    int q_;
    std::vector<std::uint8_t> colors_;
    std::vector<BitMatrix> adj_;
};

/// A q-edge-colouring of the complete graph K_n. Immutable.
class ColoredComplete {
public:
    /// Colours listed in upper-triangular pair order; each must lie in [0, q).
    ColoredComplete(int n, int q, std::vector<std::uint8_t> colors);
    explicit ColoredComplete(const ColoringState& s);

    static ColoredComplete monochromatic(int n, int q, int c = 0);
    /// Colour 0 on the edges of g, colour 1 elsewhere.
    static ColoredComplete from_graph(const Graph& g);

    int n() const noexcept { return n_; }
    int q() const noexcept { return q_; }
    int color(int i, int j) const { return colors_[pair_index(n_, i, j)]; }
    const std::vector<std::uint8_t>& colors() const noexcept { return colors_; }
    const BitMatrix& adjacency(int c) const { return adj_[c]; }

    Graph color_graph(int c) const;
    int degree(int v, int c) const { return adj_[c].row_count(v); }
    std::size_t edge_count(int c) const;

    ColoredComplete with_color(int i, int j, int c) const;
    /// Vertex v of the result is vertex perm[v] of this colouring.
    ColoredComplete relabelled(const std::vector<int>& perm) const;
    /// Colour c becomes colour_map[c]; the result has q' = colour_map.size() >= q colours.
    ColoredComplete recolored(const std::vector<int>& colour_map, int new_q) const;
    ColoredComplete induced(const std::vector<int>& vertices) const;

    bool operator==(const ColoredComplete& o) const
    {
        return n_ == o.n_ && q_ == o.q_ && colors_ == o.colors_;
    }

private:
    int n_;
    int q_;
    std::vector<std::uint8_t> colors_;
    std::vector<BitMatrix> adj_;
};

} // namespace rml
