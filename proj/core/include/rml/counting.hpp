#pragma once

#include "rml/bigint.hpp"
#include "rml/coloring.hpp"
#include "rml/pattern.hpp"

#include <optional>
#include <span>
#include <vector>

namespace rml {

/// Labeled monochromatic copy counts of a pattern in one colouring.
struct CountReport {
    int n = 0;
    int t = 0;
    std::vector<BigInt> per_color;
    BigInt total;
    /// per_vertex[v] = number of monochromatic labeled copies whose image contains v.
    std::optional<std::vector<BigInt>> per_vertex;

    /// total / (n)_t, defined when t <= n.
    std::optional<Rational> density() const;
};

/// Vertex order for embedding a pattern: every vertex after the first of its
/// component has an earlier neighbour. `back[i]` lists earlier positions
/// adjacent to position i.
struct EmbeddingPlan {
    int t = 0;
    std::vector<int> order;
    std::vector<std::vector<int>> back;
};

/// Greedy max-connectivity order. Vertices in `prefix` come first, in that order.
EmbeddingPlan make_plan(const Graph& h, const std::vector<int>& prefix = {});

/// Injective homomorphisms of the planned pattern into the graph given by
/// `adj`, with the first pinned.size() plan positions mapped to `pinned`.
/// When per_vertex is non-null it must have adj.size() entries; counts of
/// embeddings whose image contains v are added to (*per_vertex)[v].
BigInt count_embeddings(const EmbeddingPlan& plan, const BitMatrix& adj, std::span<const int> pinned = {},
                        std::vector<BigInt>* per_vertex = nullptr);

/// Exact labeled monochromatic copies of h in every colour of chi.
/// Parallelised over (colour, root image); the result does not depend on
/// `threads` (0 = default_threads()).
CountReport count_mono(const Pattern& h, const ColoredComplete& chi, bool with_per_vertex = false,
                       int threads = 0);

struct TuranFormula {
    BigInt value;
    /// (k-1)^{1-t} (n)_t
    Rational bound;
    bool within_bound = false;
    /// value / bound, or 0 when the bound is 0.
    double ratio = 0;
};

/// (k-1-r) (floor(n/(k-1)))_t + r (ceil(n/(k-1)))_t with r = n mod (k-1):
/// labeled copies of a connected t-vertex graph of chromatic number k in the
/// Turan colouring.
TuranFormula turan_count_formula(int t, int n, int k);

/// Labeled monochromatic triangles of a 2-colouring from degrees alone:
/// 6 C(n,3) - 3 sum_v d_v (n-1-d_v), d_v the colour-0 degree.
BigInt goodman_triangle_count(const ColoredComplete& chi);

/// q^{1-e(H)} (n)_t, the expected count under a uniform random colouring.
Rational random_expectation(const Pattern& h, int n, int q);

} // namespace rml
