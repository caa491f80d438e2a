#pragma once

#include "rml/coloring.hpp"
#include "rml/partition.hpp"
#include "rml/pattern.hpp"

#include <cstdint>
#include <vector>

namespace rml {

// Colourings. Parts are always contiguous vertex ranges, smaller parts first.

/// Red (colour 0) = k-1 near-equal disjoint cliques, blue (colour 1) = the
/// complete (k-1)-partite graph between them.
ColoredComplete turan_coloring(int n, int k);

/// Blows `base` (p vertices, q-1 colours) up to n vertices in p near-equal
/// parts; edges inside a part get the new colour q-1.
ColoredComplete ramsey_blowup(const ColoredComplete& base, int n);

/// Lexicographic product on n_outer * n_inner vertices: block b holds
/// vertices b*n_inner .. (b+1)*n_inner-1; cross-block edges take the outer
/// colour, intra-block edges the inner colour shifted by q_outer.
ColoredComplete lex_product(const ColoredComplete& outer, const ColoredComplete& inner);

struct MixedBlowup {
    ColoredComplete coloring;
    /// Part i holds the s copies of base vertex i; the part of u lists U_1 first.
    Partition parts;
    /// Index of the colour used inside parts (== q of the inputs).
    int fill_color;
    std::vector<int> u1;
    std::vector<int> u2;
};

/// s-blowup of K_n where the part of u is split into U_1 (|U_1| = split,
/// wired per chi1) and U_2 (wired per chi2). Other cross edges follow chi1
/// and intra-part edges get the extra fill colour, so the result has q+1
/// colours; dropping the fill colour gives the two-colouring of K_n[s].
///
/// Requires chi1 and chi2 to agree off u and differ on some pair at u.
MixedBlowup mixed_blowup(const ColoredComplete& chi1, const ColoredComplete& chi2, int u, int s, int split);

/// Each pair coloured independently and uniformly. Pair number i (in
/// upper-triangular order) gets colour floor(q * splitmix64(seed + (i+1) * 0x9E3779B97F4A7C15) / 2^64).
ColoredComplete random_coloring(int n, int q, std::uint64_t seed);

std::uint64_t splitmix64(std::uint64_t x);

/// Red = C_5 (i ~ i+1 mod 5), blue = the complementary C_5.
ColoredComplete pentagon_coloring();

// Patterns. Base vertices come first, decorations after.

Pattern clique(int k);
DecoratedPattern add_pendants(const Graph& base, const std::vector<int>& counts);
DecoratedPattern clique_plus_pendants(int k, const std::vector<int>& counts);
/// K_k with `per_vertex` pendant edges at every clique vertex.
DecoratedPattern starburst(int k, int per_vertex);
/// K_k with `count` pendant edges at a single vertex.
DecoratedPattern pineapple(int k, int count);
/// L_{k,k+path_len}: K_k with a path of path_len edges hanging off vertex 0.
Pattern lollipop(int k, int path_len);
/// K_k plus a forest: extra vertex k+i is joined to parent[i] < k+i.
Pattern generalized_lollipop(int k, const std::vector<int>& parent);

} // namespace rml
