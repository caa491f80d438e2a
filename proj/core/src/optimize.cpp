#include "rml/optimize.hpp"

#include "rml/constructors.hpp"
#include "rml/error.hpp"
#include "rml/parallel.hpp"
#include "rml/ramsey_tools.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <random>
#include <sstream>

namespace rml {

// ---------------------------------------------------------------------------
// Exhaustive

std::uint64_t exhaustive_work(int n, int q, bool modulo_symmetry)
{
    std::size_t free_pairs = pair_count(n);
    if (modulo_symmetry && free_pairs > 0)
        --free_pairs;
    std::uint64_t work = 1;
    for (std::size_t i = 0; i < free_pairs; ++i) {
        if (work > std::numeric_limits<std::uint64_t>::max() / static_cast<unsigned>(q))
            return std::numeric_limits<std::uint64_t>::max();
        work *= static_cast<unsigned>(q);
    }
    return work;
}

namespace {

struct TaskOutcome {
    bool any = false;
    BigInt min;
    std::uint64_t hits = 0;
    std::vector<std::vector<std::uint8_t>> minimizers;
};

BigInt count_all_colors(const EmbeddingPlan& plan, const ColoringState& s)
{
    BigInt total = 0;
    for (int c = 0; c < s.q(); ++c)
        total += count_embeddings(plan, s.adjacency(c));
    return total;
}

} // namespace

ExhaustiveResult exhaustive_min(const Pattern& h, int n, int q, const ExhaustiveOptions& options)
{
    if (n < 1 || q < 1)
        throw PreconditionError("exhaustive_min: need n >= 1 and q >= 1");
    const std::uint64_t work = exhaustive_work(n, q, options.modulo_symmetry);
    if (work > options.budget) {
        std::string req = work == std::numeric_limits<std::uint64_t>::max() ? std::string("> 2^64")
                                                                             : std::to_string(work);
        throw BudgetExceeded("exhaustive_min: " + req + " colourings exceed budget " +
                                 std::to_string(options.budget),
                             req);
    }

    const std::size_t pairs = pair_count(n);
    const std::size_t first_free = (options.modulo_symmetry && pairs > 0) ? 1 : 0;
    const std::size_t free_pairs = pairs - first_free;
    std::size_t prefix = 0;
    std::uint64_t tasks = 1;
    while (prefix < free_pairs && tasks < 1024) {
        tasks *= q;
        ++prefix;
    }
    const EmbeddingPlan plan = make_plan(h.graph());

    std::vector<TaskOutcome> outcomes(tasks);
    parallel_for(tasks, options.threads, [&](std::size_t task) {
        ColoringState state(n, q, 0);
        std::vector<std::uint8_t> digits(free_pairs, 0);
        std::uint64_t code = task;
        for (std::size_t i = prefix; i-- > 0;) {
            digits[i] = static_cast<std::uint8_t>(code % q);
            code /= q;
        }
        // Pair index -> (i, j) for the free pairs.
        std::vector<Edge> pair_of;
        pair_of.reserve(pairs);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                pair_of.emplace_back(i, j);
        for (std::size_t i = 0; i < prefix; ++i) {
            auto [a, b] = pair_of[first_free + i];
            state.set_color(a, b, digits[i]);
        }
        TaskOutcome& out = outcomes[task];
        while (true) {
            BigInt total = count_all_colors(plan, state);
            if (!out.any || total < out.min) {
                out.any = true;
                out.min = total;
                out.hits = 0;
                out.minimizers.clear();
            }
            if (total == out.min) {
                ++out.hits;
                if (options.collect_minimizers && out.minimizers.size() < options.max_minimizers)
                    out.minimizers.push_back(state.colors());
            }
            // Odometer over the suffix, least significant digit = last pair.
            std::size_t i = free_pairs;
            while (i > prefix) {
                --i;
                auto [a, b] = pair_of[first_free + i];
                if (++digits[i] < q) {
                    state.set_color(a, b, digits[i]);
                    break;
                }
                digits[i] = 0;
                state.set_color(a, b, 0);
                if (i == prefix) {
                    i = prefix + free_pairs + 1; // sentinel: wrapped
                    break;
                }
            }
            if (i == prefix + free_pairs + 1 || free_pairs == prefix)
                break;
        }
    });

    ExhaustiveResult res;
    res.enumerated = work;
    bool have = false;
    for (const auto& o : outcomes)
        if (o.any && (!have || o.min < res.min_count)) {
            res.min_count = o.min;
            have = true;
        }
    std::vector<ColoredComplete> raw;
    for (const auto& o : outcomes) {
        if (!o.any || o.min != res.min_count)
            continue;
        res.raw_minimizers += o.hits;
        if (o.hits > o.minimizers.size())
            res.complete = false;
        for (const auto& colors : o.minimizers) {
            if (raw.size() >= options.max_minimizers) {
                res.complete = false;
                break;
            }
            raw.emplace_back(n, q, colors);
        }
    }
    if (!options.collect_minimizers)
        res.complete = true;
    if (options.modulo_symmetry && !raw.empty()) {
        auto classes = iso_classes(raw);
        res.dedup_certified = classes.certified;
        std::vector<char> taken(classes.count, 0);
        for (std::size_t i = 0; i < raw.size(); ++i)
            if (!taken[classes.class_of[i]]) {
                taken[classes.class_of[i]] = 1;
                res.minimizers.push_back(raw[i]);
            }
    } else {
        res.minimizers = std::move(raw);
    }
    return res;
}

// ---------------------------------------------------------------------------
// Local search

RecolorEngine::RecolorEngine(const Pattern& h, const ColoredComplete& chi, int threads) : state_(chi)
{
    for (auto [a, b] : h.graph().edges()) {
        plans_.push_back(make_plan(h.graph(), {a, b}));
        plans_.push_back(make_plan(h.graph(), {b, a}));
    }
    auto rep = count_mono(h, chi, true, threads);
    total_ = rep.total;
    per_vertex_ = std::move(*rep.per_vertex);
}

BigInt RecolorEngine::through(int u, int v, int c, std::vector<BigInt>* pv)
{
    const int pins[2] = {u, v};
    BigInt sum = 0;
    for (const auto& plan : plans_)
        sum += count_embeddings(plan, state_.adjacency(c), pins, pv);
    return sum;
}

BigInt RecolorEngine::delta(int u, int v, int c)
{
    const int old = state_.color(u, v);
    if (old == c)
        return 0;
    BigInt destroyed = through(u, v, old, nullptr);
    state_.set_color(u, v, c);
    BigInt created = through(u, v, c, nullptr);
    state_.set_color(u, v, old);
    return created - destroyed;
}

BigInt RecolorEngine::apply(int u, int v, int c)
{
    const int old = state_.color(u, v);
    if (old == c)
        return 0;
    const int n = state_.n();
    std::vector<BigInt> pv_old(n, 0), pv_new(n, 0);
    BigInt destroyed = through(u, v, old, &pv_old);
    state_.set_color(u, v, c);
    BigInt created = through(u, v, c, &pv_new);
    for (int x = 0; x < n; ++x)
        per_vertex_[x] += pv_new[x] - pv_old[x];
    BigInt d = created - destroyed;
    total_ += d;
    return d;
}

std::optional<EdgeMove> find_edge_move(RecolorEngine& engine, Policy policy)
{
    const int n = engine.state().n();
    const int q = engine.state().q();
    std::optional<EdgeMove> best;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            for (int c = 0; c < q; ++c) {
                if (c == engine.state().color(u, v))
                    continue;
                BigInt d = engine.delta(u, v, c);
                if (d >= 0)
                    continue;
                if (!best || d < best->delta)
                    best = EdgeMove{u, v, c, d};
                if (policy == Policy::first_improvement)
                    return best;
            }
    return best;
}

std::vector<EdgeMove> scan_all_edge_moves(const Pattern& h, const ColoredComplete& chi)
{
    const BigInt base = count_mono(h, chi).total;
    std::vector<EdgeMove> out;
    for (int u = 0; u < chi.n(); ++u)
        for (int v = u + 1; v < chi.n(); ++v)
            for (int c = 0; c < chi.q(); ++c) {
                if (c == chi.color(u, v))
                    continue;
                BigInt after = count_mono(h, chi.with_color(u, v, c)).total;
                out.push_back({u, v, c, after - base});
            }
    return out;
}

namespace {

struct CloneMove {
    int w = -1, u = -1, clone_color = -1;
    BigInt delta;
};

// Replace w by a clone of u: chi'(w, x) = chi(u, x) for x != u, w, and the
// pair uw gets clone_color. Evaluated as a sequence of single-pair recolourings.
std::optional<CloneMove> best_clone(const RecolorEngine& engine)
{
    const auto& pv = engine.per_vertex();
    const int n = engine.state().n();
    const int q = engine.state().q();
    if (n < 2)
        return std::nullopt;
    int w = 0, u = 0;
    for (int x = 1; x < n; ++x) {
        if (pv[x] > pv[w])
            w = x;
        if (pv[x] < pv[u])
            u = x;
    }
    if (u == w || pv[u] >= pv[w])
        return std::nullopt;
    // The two-colour move colours uu' red; with more colours try every colour.
    std::vector<int> clone_colors;
    if (q == 2)
        clone_colors.push_back(0);
    else
        for (int c = 0; c < q; ++c)
            clone_colors.push_back(c);
    std::optional<CloneMove> best;
    for (int cc : clone_colors) {
        RecolorEngine scratch = engine;
        BigInt d = 0;
        for (int x = 0; x < n; ++x) {
            if (x == u || x == w)
                continue;
            d += scratch.apply(w, x, engine.state().color(u, x));
        }
        d += scratch.apply(u, w, cc);
        if (!best || d < best->delta)
            best = CloneMove{w, u, cc, d};
    }
    return best;
}

} // namespace

LocalSearchResult local_search(const Pattern& h, const ColoredComplete& chi0, const LocalSearchOptions& options)
{
    RecolorEngine engine(h, chi0);
    LocalSearchResult res{chi0, {}, engine.total(), engine.total(), {}, false};
    std::size_t step = 0;
    while (step < options.budget) {
        if (!options.edge_recolor && !options.vertex_clone)
            break;
        bool moved = false;
        if (options.edge_recolor) {
            if (auto m = find_edge_move(engine, options.policy)) {
                BigInt d = engine.apply(m->u, m->v, m->color);
                ++step;
                res.trace.push_back({step,
                                     "edge_recolor(" + std::to_string(m->u) + "," + std::to_string(m->v) + "->" +
                                         std::to_string(m->color) + ")",
                                     d, engine.total()});
                moved = true;
            }
        }
        if (!moved && options.vertex_clone) {
            if (auto m = best_clone(engine); m && m->delta < 0) {
                const int n = engine.state().n();
                std::vector<int> u_colors(n);
                for (int x = 0; x < n; ++x)
                    u_colors[x] = x == m->u ? -1 : engine.state().color(m->u, x);
                BigInt d = 0;
                for (int x = 0; x < n; ++x)
                    if (x != m->u && x != m->w)
                        d += engine.apply(m->w, x, u_colors[x]);
                d += engine.apply(m->u, m->w, m->clone_color);
                ++step;
                res.trace.push_back({step,
                                     "vertex_clone(w=" + std::to_string(m->w) + ",u=" + std::to_string(m->u) +
                                         ",edge->" + std::to_string(m->clone_color) + ")",
                                     d, engine.total()});
                moved = true;
            }
        }
        if (!moved) {
            res.local_optimum = true;
            break;
        }
    }
    res.final_coloring = ColoredComplete(engine.state());
    res.final_total = engine.total();
    res.per_vertex = engine.per_vertex();
    return res;
}

std::string trace_jsonl(const std::vector<TraceEntry>& trace)
{
    std::ostringstream ss;
    for (const auto& e : trace)
        ss << "{\"step\":" << e.step << ",\"move\":\"" << e.move << "\",\"delta\":\"" << e.delta.str()
           << "\",\"total\":\"" << e.total.str() << "\"}\n";
    return ss.str();
}

// ---------------------------------------------------------------------------
// Structure

DegreePartition degree_partition(const ColoredComplete& chi, int d)
{
    const int n = chi.n();
    if (d < 0 || d > n - 1)
        throw PreconditionError("degree_partition: need 0 <= d <= n-1");
    DegreePartition out;
    out.d = d;
    for (int v = 0; v < n; ++v) {
        unsigned mask = 0;
        for (int c = 0; c < chi.q(); ++c)
            if (chi.degree(v, c) >= d)
                mask |= 1u << c;
        out.classes[mask].push_back(v);
    }
    if (chi.q() == 2) {
        DegreePartition::TwoColor tc;
        for (int v = 0; v < n; ++v) {
            int red = chi.degree(v, 0), blue = chi.degree(v, 1);
            bool any = false;
            if (red >= n - d) {
                tc.red.push_back(v);
                any = true;
            }
            if (blue >= n - d) {
                tc.blue.push_back(v);
                any = true;
            }
            if (red >= d && blue >= d) {
                tc.both.push_back(v);
                any = true;
            }
            if (!any)
                tc.none.push_back(v);
        }
        out.two_color = std::move(tc);
    }
    return out;
}

MultiCut max_multicut(const Graph& g, int parts, std::uint64_t seed)
{
    if (parts < 2)
        throw PreconditionError("max_multicut: need at least 2 parts");
    const int n = g.order();
    std::mt19937_64 rng(seed);
    std::vector<int> part_of(n);
    for (int v = 0; v < n; ++v)
        part_of[v] = static_cast<int>(rng() % static_cast<unsigned>(parts));

    auto internal = [&] {
        int k = 0;
        for (auto [a, b] : g.edges())
            k += part_of[a] == part_of[b];
        return k;
    };
    MultiCut out;
    int current = internal();
    out.history.push_back(current);
    std::vector<int> links(parts);
    bool changed = true;
    while (changed) {
        changed = false;
        for (int v = 0; v < n; ++v) {
            std::fill(links.begin(), links.end(), 0);
            for_each_bit(g.neighbours(v), [&](int w) { ++links[part_of[w]]; });
            int own = part_of[v];
            int target = -1;
            for (int p = 0; p < parts; ++p)
                if (p != own && (target < 0 || links[p] < links[target]))
                    target = p;
            if (links[own] > links[target]) {
                current -= links[own] - links[target];
                part_of[v] = target;
                out.history.push_back(current);
                changed = true;
            }
        }
    }
    out.partition = Partition(std::move(part_of), parts);
    out.internal_edges = current;
    return out;
}

bool is_locally_max_cut(const Graph& g, const Partition& p)
{
    const auto& part_of = p.part_of();
    std::vector<int> links(p.part_count());
    for (int v = 0; v < g.order(); ++v) {
        std::fill(links.begin(), links.end(), 0);
        for_each_bit(g.neighbours(v), [&](int w) { ++links[part_of[w]]; });
        for (int q = 0; q < p.part_count(); ++q)
            if (links[part_of[v]] > links[q])
                return false;
    }
    return true;
}

const char* to_string(BonbonVerdict v)
{
    switch (v) {
    case BonbonVerdict::turan_uniquely_minimal:
        return "turan_uniquely_minimal";
    case BonbonVerdict::turan_minimal_not_unique:
        return "turan_minimal_not_unique";
    case BonbonVerdict::turan_not_minimal:
        return "turan_not_minimal";
    }
    return "?";
}

BonbonProbe bonbon_check_small(const Pattern& h, int n, ExhaustiveOptions options)
{
    const ColoredComplete turan = turan_coloring(n, h.chromatic_number());
    options.modulo_symmetry = true;
    options.collect_minimizers = true;
    auto ex = exhaustive_min(h, n, 2, options);
    BonbonProbe probe;
    probe.min_count = ex.min_count;
    probe.turan_count = count_mono(h, turan, false, options.threads).total;
    probe.classes = static_cast<int>(ex.minimizers.size());
    probe.representatives = ex.minimizers;
    probe.certified = ex.dedup_certified && ex.complete;
    if (probe.turan_count != probe.min_count)
        probe.verdict = BonbonVerdict::turan_not_minimal;
    else if (probe.classes == 1)
        probe.verdict = BonbonVerdict::turan_uniquely_minimal;
    else
        probe.verdict = BonbonVerdict::turan_minimal_not_unique;
    return probe;
}

JensenResult jensen_equalize(const std::vector<int>& sizes, int t)
{
    if (t < 0)
        throw PreconditionError("jensen_equalize: need t >= 0");
    long total = 0;
    for (int s : sizes) {
        if (s < 0)
            throw PreconditionError("jensen_equalize: negative part size");
        total += s;
    }
    JensenResult out;
    if (sizes.empty()) {
        out.holds = true;
        return out;
    }
    out.equalized = balanced_sizes(static_cast<int>(total), static_cast<int>(sizes.size()));
    for (int s : sizes)
        out.f_input += falling_factorial(s, t);
    for (int s : out.equalized)
        out.f_equalized += falling_factorial(s, t);
    out.holds = out.f_equalized <= out.f_input;
    return out;
}

CliqueMultiplicityProbe clique_multiplicity_probe(const ColoredComplete& chi, int h1, int h2, int r)
{
    if (chi.q() != 2)
        throw PreconditionError("clique_multiplicity_probe: needs a 2-colouring");
    const int n = chi.n();
    if (r < 1 || r > n)
        throw PreconditionError("clique_multiplicity_probe: need 1 <= r <= n");
    CliqueMultiplicityProbe out;
    out.r = r;
    out.every_subset_hit = true;
    std::vector<int> subset(r);
    std::iota(subset.begin(), subset.end(), 0);
    while (true) {
        auto sub = chi.induced(subset);
        bool hit = find_clique(sub.color_graph(0), h1).has_value() || find_clique(sub.color_graph(1), h2).has_value();
        if (!hit) {
            out.every_subset_hit = false;
            break;
        }
        int i = r - 1;
        while (i >= 0 && subset[i] == n - r + i)
            --i;
        if (i < 0)
            break;
        ++subset[i];
        for (int j = i + 1; j < r; ++j)
            subset[j] = subset[j - 1] + 1;
    }
    out.red_copies = count_embeddings(make_plan(complete_graph(h1)), chi.adjacency(0));
    out.blue_copies = count_embeddings(make_plan(complete_graph(h2)), chi.adjacency(1));
    const int h = std::max(h1, h2);
    const BigInt scale = ipow(BigInt(4), static_cast<unsigned>(h * h));
    out.bound_holds = out.red_copies * scale >= falling_factorial(n, h1) ||
                      out.blue_copies * scale >= falling_factorial(n, h2);
    return out;
}

} // namespace rml
