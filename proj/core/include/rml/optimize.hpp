#pragma once

#include "rml/bigint.hpp"
#include "rml/coloring.hpp"
#include "rml/counting.hpp"
#include "rml/partition.hpp"
#include "rml/pattern.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace rml {

// ---------------------------------------------------------------------------
// Exhaustive minimisation

struct ExhaustiveOptions {
    /// Fix pair (0,1) to colour 0 and return one minimiser per isomorphism
    /// class (vertex and colour permutations).
    bool modulo_symmetry = false;
    bool collect_minimizers = true;
    /// Maximum number of colourings to enumerate (after symmetry pruning).
    std::uint64_t budget = std::uint64_t{1} << 23;
    /// Raw minimisers kept before deduplication.
    std::size_t max_minimizers = 200000;
    int threads = 0;
};

struct ExhaustiveResult {
    BigInt min_count;
    /// Minimisers in enumeration order, or class representatives under modulo_symmetry.
    std::vector<ColoredComplete> minimizers;
    /// Minimisers found in the enumerated space before deduplication.
    std::uint64_t raw_minimizers = 0;
    std::uint64_t enumerated = 0;
    /// False if raw minimisers exceeded max_minimizers.
    bool complete = true;
    /// False when deduplication fell back to fingerprints (n > 8).
    bool dedup_certified = true;
};

/// Number of colourings exhaustive_min would visit; saturates at UINT64_MAX.
std::uint64_t exhaustive_work(int n, int q, bool modulo_symmetry);

/// Exact m_q(H, n) by enumerating every q-colouring of K_n.
/// Throws BudgetExceeded with the required work when above options.budget.
ExhaustiveResult exhaustive_min(const Pattern& h, int n, int q, const ExhaustiveOptions& options = {});

// ---------------------------------------------------------------------------
// Local search

enum class Policy { steepest, first_improvement };

struct LocalSearchOptions {
    bool edge_recolor = true;
    bool vertex_clone = false;
    Policy policy = Policy::steepest;
    /// Maximum accepted moves.
    std::size_t budget = 10000;
};

struct TraceEntry {
    std::size_t step = 0;
    std::string move;
    BigInt delta;
    BigInt total;
};

struct LocalSearchResult {
    ColoredComplete final_coloring;
    std::vector<TraceEntry> trace;
    BigInt initial_total;
    BigInt final_total;
    /// Incrementally maintained m_v for the final colouring.
    std::vector<BigInt> per_vertex;
    /// True if the run stopped because no enabled move improves.
    bool local_optimum = false;
};

/// Monochromatic copy counts maintained under single-edge recolourings.
/// Only copies through the changed pair are recounted: for every ordered
/// pattern edge (a, b) the embeddings with a -> u, b -> v.
class RecolorEngine {
public:
    RecolorEngine(const Pattern& h, const ColoredComplete& chi, int threads = 0);

    const ColoringState& state() const noexcept { return state_; }
    const BigInt& total() const noexcept { return total_; }
    const std::vector<BigInt>& per_vertex() const noexcept { return per_vertex_; }

    /// Change in total if pair (u, v) took colour c.
    BigInt delta(int u, int v, int c);
    /// Applies the recolouring and returns its delta.
    BigInt apply(int u, int v, int c);

private:
    BigInt through(int u, int v, int c, std::vector<BigInt>* pv);

    std::vector<EmbeddingPlan> plans_;
    ColoringState state_;
    BigInt total_;
    std::vector<BigInt> per_vertex_;
};

struct EdgeMove {
    int u = -1, v = -1, color = -1;
    BigInt delta;
};

/// Best (steepest) or first improving single-pair recolouring; ties go to the
/// lexicographically smallest (pair, colour). nullopt if none strictly improves.
std::optional<EdgeMove> find_edge_move(RecolorEngine& engine, Policy policy);

/// Every (pair, new colour) move with its exact delta, by full recount of
/// both colourings. Slow; intended as an independent check.
std::vector<EdgeMove> scan_all_edge_moves(const Pattern& h, const ColoredComplete& chi);

LocalSearchResult local_search(const Pattern& h, const ColoredComplete& chi0, const LocalSearchOptions& options = {});

/// One JSON object per line: {"step":..,"move":"..","delta":"..","total":".."}.
std::string trace_jsonl(const std::vector<TraceEntry>& trace);

// ---------------------------------------------------------------------------
// Structure

struct DegreePartition {
    int d = 0;
    /// Colour mask S -> vertices whose degree is >= d exactly in the colours of S.
    std::map<unsigned, std::vector<int>> classes;
    /// q = 2 only: V_R (red degree >= n-d), V_B (blue degree >= n-d),
    /// V_RB (both degrees >= d) and the vertices in none of them.
    struct TwoColor {
        std::vector<int> red, blue, both, none;
    };
    std::optional<TwoColor> two_color;
};

DegreePartition degree_partition(const ColoredComplete& chi, int d);

struct MultiCut {
    Partition partition;
    int internal_edges = 0;
    /// Internal edge count before the first move and after each move.
    std::vector<int> history;
};

/// Local search for a max (parts)-cut of g from a seeded random start: move
/// any vertex with more neighbours in its own part than in some other part
/// to the part where it has the fewest. Terminates with every vertex having
/// at most as many neighbours in its part as in any other.
MultiCut max_multicut(const Graph& g, int parts, std::uint64_t seed);

/// True iff every vertex has at most as many neighbours in its own part as in any other part.
bool is_locally_max_cut(const Graph& g, const Partition& p);

enum class BonbonVerdict { turan_uniquely_minimal, turan_minimal_not_unique, turan_not_minimal };
const char* to_string(BonbonVerdict v);

struct BonbonProbe {
    BonbonVerdict verdict;
    BigInt min_count;
    BigInt turan_count;
    int classes = 0;
    std::vector<ColoredComplete> representatives;
    bool certified = true;
};

/// Compares exhaustive minimisers at this n against the Turan colouring with
/// chi(H) - 1 parts. A finite probe only.
BonbonProbe bonbon_check_small(const Pattern& h, int n, ExhaustiveOptions options = {});

struct JensenResult {
    std::vector<int> equalized;
    BigInt f_input;
    BigInt f_equalized;
    bool holds = false;
};

/// Equalises part sizes (same total, spread <= 1, ascending) and compares
/// sum (x)_t before and after.
JensenResult jensen_equalize(const std::vector<int>& sizes, int t);

struct CliqueMultiplicityProbe {
    int r = 0;
    bool every_subset_hit = false;
    BigInt red_copies;
    BigInt blue_copies;
    /// red >= 4^{-h^2} (n)_{h1} or blue >= 4^{-h^2} (n)_{h2}, h = max(h1, h2).
    bool bound_holds = false;
};

/// Checks that every r-subset of a 2-colouring contains a red K_{h1} or a
/// blue K_{h2}, and the resulting labeled-copy lower bound.
CliqueMultiplicityProbe clique_multiplicity_probe(const ColoredComplete& chi, int h1, int h2, int r);

} // namespace rml
