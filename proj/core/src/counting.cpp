#include "rml/counting.hpp"

#include "rml/error.hpp"
#include "rml/parallel.hpp"

#include <algorithm>
#include <string>

namespace rml {

std::optional<Rational> CountReport::density() const
{
    if (t > n)
        return std::nullopt;
    return Rational(total, falling_factorial(n, t));
}

EmbeddingPlan make_plan(const Graph& h, const std::vector<int>& prefix)
{
    const int t = h.order();
    EmbeddingPlan plan;
    plan.t = t;
    std::vector<int> pos(t, -1);
    auto place = [&](int v) {
        if (v < 0 || v >= t || pos[v] != -1)
            throw PreconditionError("make_plan: invalid or repeated prefix vertex");
        pos[v] = static_cast<int>(plan.order.size());
        plan.order.push_back(v);
    };
    for (int v : prefix)
        place(v);
    while (static_cast<int>(plan.order.size()) < t) {
        int best = -1, best_links = -1, best_deg = -1;
        for (int v = 0; v < t; ++v) {
            if (pos[v] != -1)
                continue;
            int links = 0;
            for_each_bit(h.neighbours(v), [&](int w) { links += pos[w] != -1; });
            int deg = h.degree(v);
            if (links > best_links || (links == best_links && deg > best_deg)) {
                best = v;
                best_links = links;
                best_deg = deg;
            }
        }
        place(best);
    }
    plan.back.resize(t);
    for (int i = 0; i < t; ++i)
        for (int j = 0; j < i; ++j)
            if (h.has_edge(plan.order[i], plan.order[j]))
                plan.back[i].push_back(j);
    return plan;
}

namespace {

using u128 = unsigned __int128;

BigInt to_big(u128 v)
{
    BigInt hi = static_cast<std::uint64_t>(v >> 64);
    BigInt lo = static_cast<std::uint64_t>(v);
    return (hi << 64) | lo;
}
BigInt to_big(const BigInt& v) { return v; }

// True when every count the kernel can produce (<= t * (n)_t) fits in 127 bits.
bool fits_fast_path(int n, int t)
{
    BigInt bound = falling_factorial(n, std::min(t, n)) * std::max(t, 1);
    return boost::multiprecision::msb(bound + 1) < 126;
}

template <class Acc>
class Kernel {
public:
    Kernel(const EmbeddingPlan& plan, const BitMatrix& adj, Acc* per_vertex)
        : plan_(plan),
          adj_(adj),
          n_(adj.size()),
          w_(adj.words()),
          cand_(static_cast<std::size_t>(plan.t) * std::max(w_, 1), 0),
          used_(std::max(w_, 1), 0),
          image_(plan.t, -1),
          pv_(per_vertex)
    {
    }

    Acc run(std::span<const int> pinned)
    {
        total_ = 0;
        const int p = static_cast<int>(pinned.size());
        if (p > plan_.t)
            throw PreconditionError("count_embeddings: more pins than pattern vertices");
        for (int i = 0; i < p; ++i) {
            int v = pinned[i];
            if (v < 0 || v >= n_)
                throw PreconditionError("count_embeddings: pinned vertex out of range");
            if (bit(used_.data(), v))
                return 0;
            for (int j : plan_.back[i])
                if (!adj_.test(image_[j], v))
                    return 0;
            image_[i] = v;
            set_bit(used_.data(), v);
        }
        if (p == plan_.t) {
            total_ = 1;
            if (pv_)
                for (int i = 0; i < p; ++i)
                    pv_[image_[i]] += 1;
        } else {
            descend(p);
        }
        for (int i = 0; i < p; ++i)
            clear_bit(used_.data(), image_[i]);
        return total_;
    }

private:
    static bool bit(const std::uint64_t* s, int v) { return (s[v >> 6] >> (v & 63)) & 1u; }
    static void set_bit(std::uint64_t* s, int v) { s[v >> 6] |= std::uint64_t{1} << (v & 63); }
    static void clear_bit(std::uint64_t* s, int v) { s[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

    void descend(int depth)
    {
        std::uint64_t* cand = cand_.data() + static_cast<std::size_t>(depth) * w_;
        const auto& back = plan_.back[depth];
        if (back.empty()) {
            fill_prefix({cand, static_cast<std::size_t>(w_)}, n_);
        } else {
            auto r0 = adj_.row(image_[back[0]]);
            std::copy(r0.begin(), r0.end(), cand);
            for (std::size_t b = 1; b < back.size(); ++b) {
                auto r = adj_.row(image_[back[b]]);
                for (int w = 0; w < w_; ++w)
                    cand[w] &= r[w];
            }
        }
        bool any = false;
        for (int w = 0; w < w_; ++w) {
            cand[w] &= ~used_[w];
            any |= cand[w] != 0;
        }
        if (!any)
            return;
        std::span<const std::uint64_t> cs(cand, static_cast<std::size_t>(w_));
        if (depth == plan_.t - 1) {
            Acc cnt = static_cast<unsigned>(popcount(cs));
            total_ += cnt;
            if (pv_) {
                for (int j = 0; j < depth; ++j)
                    pv_[image_[j]] += cnt;
                for_each_bit(cs, [&](int v) { pv_[v] += 1; });
            }
            return;
        }
        for (int w = 0; w < w_; ++w) {
            std::uint64_t x = cand[w];
            while (x) {
                int v = w * 64 + std::countr_zero(x);
                x &= x - 1;
                image_[depth] = v;
                set_bit(used_.data(), v);
                descend(depth + 1);
                clear_bit(used_.data(), v);
            }
        }
    }

    const EmbeddingPlan& plan_;
    const BitMatrix& adj_;
    int n_;
    int w_;
    std::vector<std::uint64_t> cand_;
    std::vector<std::uint64_t> used_;
    std::vector<int> image_;
    Acc* pv_;
    Acc total_ = 0;
};

template <class Acc>
BigInt count_with(const EmbeddingPlan& plan, const BitMatrix& adj, std::span<const int> pinned,
                  std::vector<BigInt>* per_vertex)
{
    std::vector<Acc> pv;
    if (per_vertex)
        pv.assign(adj.size(), Acc(0));
    Kernel<Acc> k(plan, adj, per_vertex ? pv.data() : nullptr);
    Acc total = k.run(pinned);
    if (per_vertex)
        for (int v = 0; v < adj.size(); ++v)
            (*per_vertex)[v] += to_big(pv[v]);
    return to_big(total);
}

} // namespace

BigInt count_embeddings(const EmbeddingPlan& plan, const BitMatrix& adj, std::span<const int> pinned,
                        std::vector<BigInt>* per_vertex)
{
    if (plan.t > adj.size())
        return 0;
    if (per_vertex && static_cast<int>(per_vertex->size()) != adj.size())
        throw PreconditionError("count_embeddings: per_vertex has wrong length");
    if (fits_fast_path(adj.size(), plan.t))
        return count_with<u128>(plan, adj, pinned, per_vertex);
    return count_with<BigInt>(plan, adj, pinned, per_vertex);
}

CountReport count_mono(const Pattern& h, const ColoredComplete& chi, bool with_per_vertex, int threads)
{
    const int n = chi.n();
    const int q = chi.q();
    const int t = h.order();
    CountReport rep;
    rep.n = n;
    rep.t = t;
    rep.per_color.assign(q, 0);
    if (with_per_vertex)
        rep.per_vertex.emplace(n, 0);
    if (t > n)
        return rep;

    const EmbeddingPlan plan = make_plan(h.graph());
    const std::size_t tasks = static_cast<std::size_t>(q) * n;
    std::vector<BigInt> task_total(tasks);
    std::vector<std::vector<BigInt>> task_pv(with_per_vertex ? tasks : 0);
    parallel_for(tasks, threads, [&](std::size_t i) {
        const int c = static_cast<int>(i / n);
        const int root = static_cast<int>(i % n);
        const int pin[1] = {root};
        std::vector<BigInt>* pv = nullptr;
        if (with_per_vertex) {
            task_pv[i].assign(n, 0);
            pv = &task_pv[i];
        }
        task_total[i] = count_embeddings(plan, chi.adjacency(c), pin, pv);
    });
    for (std::size_t i = 0; i < tasks; ++i) {
        rep.per_color[i / n] += task_total[i];
        if (with_per_vertex)
            for (int v = 0; v < n; ++v)
                (*rep.per_vertex)[v] += task_pv[i][v];
    }
    for (const auto& c : rep.per_color)
        rep.total += c;
    return rep;
}

TuranFormula turan_count_formula(int t, int n, int k)
{
    if (k < 3)
        throw PreconditionError("turan_count_formula: need k >= 3");
    if (n < k - 1)
        throw PreconditionError("turan_count_formula: need n >= k-1");
    if (t < 1)
        throw PreconditionError("turan_count_formula: need t >= 1");
    const int parts = k - 1;
    const int r = n % parts;
    const int small = n / parts;
    TuranFormula f;
    f.value = BigInt(parts - r) * falling_factorial(small, t) + BigInt(r) * falling_factorial(small + 1, t);
    f.bound = Rational(falling_factorial(n, t), ipow(BigInt(parts), static_cast<unsigned>(t - 1)));
    f.within_bound = Rational(f.value) <= f.bound;
    f.ratio = f.bound == 0 ? 0.0 : to_double(Rational(f.value) / f.bound);
    return f;
}

BigInt goodman_triangle_count(const ColoredComplete& chi)
{
    if (chi.q() != 2)
        throw PreconditionError("goodman_triangle_count: needs a 2-colouring, got q = " + std::to_string(chi.q()));
    const int n = chi.n();
    BigInt sum = 0;
    for (int v = 0; v < n; ++v) {
        long d = chi.degree(v, 0);
        sum += BigInt(d) * (n - 1 - d);
    }
    return 6 * binomial(n, 3) - 3 * sum;
}

Rational random_expectation(const Pattern& h, int n, int q)
{
    if (q < 1)
        throw PreconditionError("random_expectation: q must be positive");
    return rpow(Rational(q), 1 - h.edge_count()) * Rational(falling_factorial(n, h.order()));
}

} // namespace rml
