#include "rml/partition.hpp"

#include "rml/error.hpp"

#include <string>

namespace rml {

Partition::Partition(std::vector<int> part_of, int parts) : parts_(parts), part_of_(std::move(part_of))
{
    if (parts < 0)
        throw PreconditionError("Partition: negative part count");
    for (int v = 0; v < vertex_count(); ++v) {
        int p = part_of_[v];
        if (p < 0 || p >= parts)
            throw PreconditionError("Partition: vertex " + std::to_string(v) + " has invalid part");
        parts_[p].push_back(v);
    }
}

Partition Partition::from_parts(int n, const std::vector<std::vector<int>>& parts)
{
    std::vector<int> part_of(n, -1);
    for (int p = 0; p < static_cast<int>(parts.size()); ++p)
        for (int v : parts[p]) {
            if (v < 0 || v >= n)
                throw PreconditionError("Partition: vertex out of range");
            if (part_of[v] != -1)
                throw PreconditionError("Partition: vertex " + std::to_string(v) + " in two parts");
            part_of[v] = p;
        }
    for (int v = 0; v < n; ++v)
        if (part_of[v] == -1)
            throw PreconditionError("Partition: vertex " + std::to_string(v) + " not covered");
    return Partition(std::move(part_of), static_cast<int>(parts.size()));
}

Partition Partition::contiguous(const std::vector<int>& sizes)
{
    std::vector<int> part_of;
    for (int p = 0; p < static_cast<int>(sizes.size()); ++p) {
        if (sizes[p] < 0)
            throw PreconditionError("Partition: negative part size");
        part_of.insert(part_of.end(), sizes[p], p);
    }
    return Partition(std::move(part_of), static_cast<int>(sizes.size()));
}

Partition Partition::balanced(int n, int p) { return contiguous(balanced_sizes(n, p)); }

std::vector<int> Partition::sizes() const
{
    std::vector<int> s;
    s.reserve(parts_.size());
    for (const auto& part : parts_)
        s.push_back(static_cast<int>(part.size()));
    return s;
}

int Partition::internal_edges(const Graph& g) const
{
    int count = 0;
    for (auto [u, v] : g.edges())
        count += part_of_[u] == part_of_[v];
    return count;
}

std::vector<int> balanced_sizes(int n, int p)
{
    if (p < 1)
        throw PreconditionError("balanced_sizes: need at least one part");
    if (n < 0)
        throw PreconditionError("balanced_sizes: negative n");
    int base = n / p;
    int r = n % p;
    std::vector<int> sizes(p - r, base);
    sizes.insert(sizes.end(), r, base + 1);
    return sizes;
}

} // namespace rml
