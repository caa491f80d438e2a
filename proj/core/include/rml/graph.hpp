#pragma once

#include "rml/bitset.hpp"

#include <utility>
#include <vector>

namespace rml {

using Edge = std::pair<int, int>;

/// Simple undirected graph on vertices 0..n-1 backed by a bit matrix.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);
    Graph(int n, const std::vector<Edge>& edges);

    int order() const noexcept { return adj_.size(); }
    const BitMatrix& adjacency() const noexcept { return adj_; }
    std::span<const std::uint64_t> neighbours(int v) const { return adj_.row(v); }

    bool has_edge(int u, int v) const { return adj_.test(u, v); }
    void add_edge(int u, int v);
    void remove_edge(int u, int v);

    int degree(int v) const { return adj_.row_count(v); }
    int edge_count() const;
    /// Edges (i, j) with i < j, sorted by i then j.
    std::vector<Edge> edges() const;

    Graph complement() const;
    /// Subgraph induced on `vertices`, relabelled 0..|vertices|-1 in the given order.
    Graph induced(const std::vector<int>& vertices) const;
    bool connected() const;

    bool operator==(const Graph&) const = default;

private:
    BitMatrix adj_;
};

Graph complete_graph(int n);
Graph cycle_graph(int n);

} // namespace rml
