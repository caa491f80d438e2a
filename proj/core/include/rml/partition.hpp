#pragma once

#include "rml/graph.hpp"

#include <vector>

namespace rml {

/// Disjoint parts covering 0..n-1.
class Partition {
public:
    Partition() = default;
    /// part_of[v] in [0, parts); empty parts are allowed.
    Partition(std::vector<int> part_of, int parts);
    static Partition from_parts(int n, const std::vector<std::vector<int>>& parts);
    /// Contiguous ranges with the given sizes, in order.
    static Partition contiguous(const std::vector<int>& sizes);
    /// p near-equal contiguous parts, smaller parts first.
    static Partition balanced(int n, int p);

    int vertex_count() const noexcept { return static_cast<int>(part_of_.size()); }
    int part_count() const noexcept { return static_cast<int>(parts_.size()); }
    const std::vector<std::vector<int>>& parts() const noexcept { return parts_; }
    const std::vector<int>& part_of() const noexcept { return part_of_; }
    std::vector<int> sizes() const;

    /// Number of edges of g with both ends in one part.
    int internal_edges(const Graph& g) const;

    bool operator==(const Partition&) const = default;

private:
    std::vector<std::vector<int>> parts_;
    std::vector<int> part_of_;
};

/// Sizes of p near-equal parts of n, ascending.
std::vector<int> balanced_sizes(int n, int p);

} // namespace rml
