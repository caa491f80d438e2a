#pragma once

#include "rml/graph.hpp"

#include <vector>

namespace rml {

/// Patterns above this order are rejected by the exact chromatic-number solver.
inline constexpr int kDefaultChromaticCap = 20;

/// Exact chromatic number by iterative k-colourability backtracking.
/// Throws SizeCapExceeded above `cap` vertices.
int chromatic_number(const Graph& g, int cap = kDefaultChromaticCap);

/// The target graph H together with cached invariants.
class Pattern {
public:
    explicit Pattern(Graph g, int chromatic_cap = kDefaultChromaticCap);

    /// For graphs whose chromatic number follows from their construction
    /// (a clique or base graph plus trees); skips the exact solver and its cap.
    static Pattern with_known_chromatic(Graph g, int chromatic);

    const Graph& graph() const noexcept { return g_; }
    int order() const noexcept { return g_.order(); }
    int edge_count() const noexcept { return edge_count_; }
    int chromatic_number() const noexcept { return chromatic_; }
    bool connected() const noexcept { return connected_; }

private:
    Pattern(Graph g, int chromatic, bool connected);

    Graph g_;
    int edge_count_;
    int chromatic_;
    bool connected_;
};

/// A base graph H0 on h vertices plus s_i pendant edges at base vertex i.
///
/// Construction relabels the base so that s_1 >= ... >= s_h (stable order
/// among equal counts); the flattened graph is isomorphic to the one the
/// caller described.
class DecoratedPattern {
public:
    DecoratedPattern(Graph base, std::vector<int> pendant_counts);

    const Graph& base() const noexcept { return base_; }
    const std::vector<int>& pendant_counts() const noexcept { return counts_; }
    int base_order() const noexcept { return base_.order(); }
    int order() const noexcept;

    /// Base vertices first, then the pendants of base vertex 0, of vertex 1, ...
    Graph flatten_graph() const;
    Pattern flatten() const;

    /// Recover (base, counts) from a graph by stripping degree-1 vertices whose
    /// neighbour has degree > 1. Exact inverse of flatten_graph when the base
    /// has minimum degree >= 2.
    static DecoratedPattern detect(const Graph& g);

    bool operator==(const DecoratedPattern&) const = default;

private:
    Graph base_;
    std::vector<int> counts_;
};

} // namespace rml
