#pragma once

#include "rml/coloring.hpp"
#include "rml/graph.hpp"
#include "rml/partition.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace rml {

/// Graphs above this order are rejected by the clique solver.
inline constexpr int kCliqueCap = 512;

struct CliqueResult {
    int size = 0;
    std::vector<int> witness;
};

/// Exact maximum clique: branch and bound over bitset candidate sets with a
/// greedy-colouring bound.
CliqueResult max_clique(const Graph& g);
int clique_number(const Graph& g);

/// Some clique of exactly `size` vertices, or nullopt; stops at the first hit.
std::optional<std::vector<int>> find_clique(const Graph& g, int size);

/// Per-colour forbidden clique sizes; kUnbounded disables the check for a colour.
inline constexpr int kUnbounded = 0;

struct RamseyVerdict {
    bool valid = true;
    int color = -1;
    std::vector<int> witness;
};

/// valid iff each colour c has no clique of size forbidden[c].
RamseyVerdict verify_ramsey(const ColoredComplete& chi, const std::vector<int>& forbidden);

/// Default cap on q^m for enumerate_extensions (2^24).
inline constexpr std::uint64_t kExtensionBudget = std::uint64_t{1} << 24;

/// All colourings of the edges from a new vertex m to 0..m-1 that keep the
/// colouring valid for `forbidden`, as colourings of K_{m+1}. Ordered
/// lexicographically by the colour vector (edge to vertex 0 first).
std::vector<ColoredComplete> enumerate_extensions(const ColoredComplete& chi, const std::vector<int>& forbidden,
                                                  std::uint64_t budget = kExtensionBudget, int threads = 0);

struct BlowupVerdict {
    bool is_blowup = false;
    /// Present when is_blowup: colour between parts a and b.
    std::optional<ColoredComplete> base;
    /// When not a blowup: u, u' in one part and v outside it with
    /// chi(u,v) != chi(u',v).
    int u = -1, u_prime = -1, v = -1;
};

/// Whether chi is the blowup of a colouring of K_p along `partition`:
/// same-part vertices see identical colours to every vertex outside the part.
/// Parts must be nonempty.
BlowupVerdict is_blowup(const ColoredComplete& chi, const Partition& partition);

struct BlowupLikeCertificate {
    bool holds = false;
    /// Colour whose graph is the disjoint union of p cliques.
    int color = -1;
    std::vector<std::vector<int>> parts;
    /// The verdict assumes the caller's p equals r_{q-1}(k) - 1.
    bool conditional_on_p = true;
    bool off_diagonal = false;
    std::string reason;
};

/// Ramsey-blowup-like test: some colour is a disjoint union of p cliques of
/// sizes floor(n/p) or ceil(n/p), and every other colour has clique number < k.
BlowupLikeCertificate is_ramsey_blowup_like(const ColoredComplete& chi, int k, int p);

/// Off-diagonal variant: the other colours c must avoid cliques of size
/// forbidden[c] (entries for the clique colour are ignored).
BlowupLikeCertificate is_ramsey_blowup_like(const ColoredComplete& chi, const std::vector<int>& forbidden, int p);

/// Pairs (i, j), i < j, present in exactly one of the graphs.
std::vector<Edge> graph6_diff(const Graph& a, const Graph& b);

/// Canonical form under vertex relabelling and colour permutation, exact for
/// n <= max_n (default 8). Vertices are only permuted within classes of an
/// isomorphism-invariant vertex signature, which keeps the search small.
std::vector<std::uint8_t> canonical_form(const ColoredComplete& chi, int max_n = 8);

/// True iff some vertex permutation plus colour permutation maps a to b.
/// Throws SizeCapExceeded above max_n.
bool iso_check_small(const ColoredComplete& a, const ColoredComplete& b, int max_n = 8);

/// Isomorphism invariant for colourings too large to certify: sorted
/// per-vertex colour-degree vectors plus the sorted triangle colour census,
/// both taken up to colour permutation. Equal fingerprints do not certify
/// isomorphism.
std::string fingerprint(const ColoredComplete& chi);

/// Groups colourings into isomorphism classes; returns class index per input.
/// `certified` is false when any input exceeds max_n and fingerprints were used.
struct IsoClasses {
    std::vector<int> class_of;
    int count = 0;
    bool certified = true;
};
IsoClasses iso_classes(const std::vector<ColoredComplete>& colorings, int max_n = 8);

/// Given a blowup-shaped colouring that is not a blowup (mixed), pick
/// u, u' in one part U and v_1 separating them plus one vertex from each
/// remaining part; the result is the shared colouring on {v_1, ...} and its
/// two extensions by u and by u' (new vertex last).
struct DoubleExtension {
    ColoredComplete base;
    ColoredComplete via_u;
    ColoredComplete via_u_prime;
    std::vector<int> vertices;
};
std::optional<DoubleExtension> extract_double_extension(const ColoredComplete& chi, const Partition& partition,
                                                        int drop_color = -1);

} // namespace rml
