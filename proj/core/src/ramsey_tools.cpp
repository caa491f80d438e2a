#include "rml/ramsey_tools.hpp"

#include "rml/error.hpp"
#include "rml/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <sstream>

namespace rml {

namespace {

using Words = std::vector<std::uint64_t>;

// Branch and bound over candidate bitsets. Candidates are greedily coloured;
// a branch is cut when |R| + colour bound cannot beat the incumbent.
class CliqueSearch {
public:
    CliqueSearch(const BitMatrix& adj, int best_size, int stop_at)
        : adj_(adj), w_(std::max(adj.words(), 1)), best_size_(best_size), stop_at_(stop_at)
    {
    }

    void run(Words candidates)
    {
        std::vector<int> r;
        expand(r, candidates);
    }

    int best_size() const { return best_size_; }
    const std::vector<int>& best() const { return best_; }

private:
    bool empty(const Words& s) const
    {
        return std::all_of(s.begin(), s.end(), [](std::uint64_t x) { return x == 0; });
    }

    void expand(std::vector<int>& r, Words& p)
    {
        std::vector<int> order;
        std::vector<int> bound;
        colour_sort(p, order, bound);
        for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
            if (done_)
                return;
            if (static_cast<int>(r.size()) + bound[i] <= best_size_)
                return;
            int v = order[i];
            r.push_back(v);
            if (static_cast<int>(r.size()) > best_size_) {
                best_size_ = static_cast<int>(r.size());
                best_ = r;
                if (stop_at_ > 0 && best_size_ >= stop_at_) {
                    done_ = true;
                    return;
                }
            }
            Words np(w_);
            auto row = adj_.row(v);
            for (int w = 0; w < w_; ++w)
                np[w] = p[w] & row[w];
            if (!empty(np))
                expand(r, np);
            r.pop_back();
            p[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
        }
    }

    void colour_sort(const Words& p, std::vector<int>& order, std::vector<int>& bound) const
    {
        Words uncoloured = p;
        int colour = 0;
        while (!empty(uncoloured)) {
            ++colour;
            Words q = uncoloured;
            while (!empty(q)) {
                int v = -1;
                for (int w = 0; w < w_ && v < 0; ++w)
                    if (q[w])
                        v = w * 64 + std::countr_zero(q[w]);
                uncoloured[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
                q[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
                auto row = adj_.row(v);
                for (int w = 0; w < w_; ++w)
                    q[w] &= ~row[w];
                order.push_back(v);
                bound.push_back(colour);
            }
        }
    }

    const BitMatrix& adj_;
    int w_;
    int best_size_;
    int stop_at_;
    bool done_ = false;
    std::vector<int> best_;
};

Words all_vertices(int n)
{
    Words s(std::max(words_for(n), 1), 0);
    fill_prefix(s, n);
    return s;
}

void check_cap(int n)
{
    if (n > kCliqueCap)
        throw SizeCapExceeded("clique search: " + std::to_string(n) + " vertices exceeds cap " +
                              std::to_string(kCliqueCap));
}

std::optional<std::vector<int>> find_clique_in(const BitMatrix& adj, const Words& candidates, int size)
{
    if (size <= 0)
        return std::vector<int>{};
    CliqueSearch s(adj, size - 1, size);
    s.run(candidates);
    if (s.best_size() >= size) {
        auto w = s.best();
        w.resize(size);
        std::sort(w.begin(), w.end());
        return w;
    }
    return std::nullopt;
}

} // namespace

CliqueResult max_clique(const Graph& g)
{
    const int n = g.order();
    check_cap(n);
    if (n == 0)
        return {};
    CliqueSearch s(g.adjacency(), 0, 0);
    s.run(all_vertices(n));
    CliqueResult res{s.best_size(), s.best()};
    std::sort(res.witness.begin(), res.witness.end());
    return res;
}

int clique_number(const Graph& g) { return max_clique(g).size; }

std::optional<std::vector<int>> find_clique(const Graph& g, int size)
{
    check_cap(g.order());
    return find_clique_in(g.adjacency(), all_vertices(g.order()), size);
}

RamseyVerdict verify_ramsey(const ColoredComplete& chi, const std::vector<int>& forbidden)
{
    if (static_cast<int>(forbidden.size()) != chi.q())
        throw PreconditionError("verify_ramsey: need one forbidden size per colour");
    check_cap(chi.n());
    for (int c = 0; c < chi.q(); ++c) {
        if (forbidden[c] == kUnbounded)
            continue;
        if (forbidden[c] < 0)
            throw PreconditionError("verify_ramsey: negative forbidden size");
        if (auto w = find_clique_in(chi.adjacency(c), all_vertices(chi.n()), forbidden[c]))
            return {false, c, *w};
    }
    return {};
}

std::vector<ColoredComplete> enumerate_extensions(const ColoredComplete& chi, const std::vector<int>& forbidden,
                                                  std::uint64_t budget, int threads)
{
    const int m = chi.n();
    const int q = chi.q();
    if (static_cast<int>(forbidden.size()) != q)
        throw PreconditionError("enumerate_extensions: need one forbidden size per colour");
    {
        // q^m against the budget without overflow.
        long double work = std::pow(static_cast<long double>(q), m);
        if (work > static_cast<long double>(budget))
            throw BudgetExceeded("enumerate_extensions: q^m exceeds budget",
                                 std::to_string(q) + "^" + std::to_string(m));
    }
    if (!verify_ramsey(chi, forbidden).valid)
        return {};

    // Assigning colour c to the edge (new, j) is safe iff the colour-c
    // neighbours of j already joined to the new vertex in colour c contain no
    // clique of size forbidden[c] - 2.
    auto safe = [&](const std::vector<Words>& joined, int j, int c) {
        int f = forbidden[c];
        if (f == kUnbounded)
            return true;
        if (f <= 2)
            return false;
        Words cand(joined[c]);
        auto row = chi.adjacency(c).row(j);
        for (std::size_t w = 0; w < cand.size(); ++w)
            cand[w] &= row[w];
        return !find_clique_in(chi.adjacency(c), cand, f - 2).has_value();
    };

    const int words = std::max(words_for(m), 1);
    int prefix = 0;
    std::uint64_t tasks = 1;
    while (prefix < m && tasks < 256) {
        tasks *= q;
        ++prefix;
    }
    std::vector<std::vector<std::vector<std::uint8_t>>> found(tasks);
    parallel_for(tasks, threads, [&](std::size_t task) {
        std::vector<std::uint8_t> assign(m);
        std::vector<Words> joined(q, Words(words, 0));
        // Decode the prefix, most significant digit = edge to vertex 0.
        std::uint64_t code = task;
        for (int j = prefix - 1; j >= 0; --j) {
            assign[j] = static_cast<std::uint8_t>(code % q);
            code /= q;
        }
        for (int j = 0; j < prefix; ++j) {
            int c = assign[j];
            if (!safe(joined, j, c))
                return;
            joined[c][j >> 6] |= std::uint64_t{1} << (j & 63);
        }
        auto rec = [&](auto& self, int j) -> void {
            if (j == m) {
                found[task].push_back(assign);
                return;
            }
            for (int c = 0; c < q; ++c) {
                if (!safe(joined, j, c))
                    continue;
                assign[j] = static_cast<std::uint8_t>(c);
                joined[c][j >> 6] |= std::uint64_t{1} << (j & 63);
                self(self, j + 1);
                joined[c][j >> 6] &= ~(std::uint64_t{1} << (j & 63));
            }
        };
        rec(rec, prefix);
    });

    std::vector<ColoredComplete> out;
    for (const auto& bucket : found)
        for (const auto& assign : bucket) {
            std::vector<std::uint8_t> colors;
            colors.reserve(pair_count(m + 1));
            for (int i = 0; i <= m; ++i)
                for (int j = i + 1; j <= m; ++j)
                    colors.push_back(static_cast<std::uint8_t>(j == m ? assign[i] : chi.color(i, j)));
            out.emplace_back(m + 1, q, std::move(colors));
        }
    return out;
}

BlowupVerdict is_blowup(const ColoredComplete& chi, const Partition& partition)
{
    if (partition.vertex_count() != chi.n())
        throw PreconditionError("is_blowup: partition does not cover the colouring's vertices");
    const auto& parts = partition.parts();
    const auto& part_of = partition.part_of();
    for (const auto& part : parts)
        if (part.empty())
            throw PreconditionError("is_blowup: empty part");
    for (const auto& part : parts) {
        const int rep = part.front();
        for (std::size_t i = 1; i < part.size(); ++i)
            for (int v = 0; v < chi.n(); ++v) {
                if (part_of[v] == part_of[rep])
                    continue;
                if (chi.color(rep, v) != chi.color(part[i], v)) {
                    BlowupVerdict out;
                    out.u = rep;
                    out.u_prime = part[i];
                    out.v = v;
                    return out;
                }
            }
    }
    const int p = partition.part_count();
    std::vector<std::uint8_t> colors;
    colors.reserve(pair_count(p));
    for (int a = 0; a < p; ++a)
        for (int b = a + 1; b < p; ++b)
            colors.push_back(static_cast<std::uint8_t>(chi.color(parts[a].front(), parts[b].front())));
    BlowupVerdict out;
    out.is_blowup = true;
    out.base.emplace(p, chi.q(), std::move(colors));
    return out;
}

namespace {

// Components of colour c, or nullopt if some component is not a clique.
std::optional<std::vector<std::vector<int>>> clique_components(const ColoredComplete& chi, int c)
{
    const int n = chi.n();
    std::vector<int> comp(n, -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < n; ++s) {
        if (comp[s] != -1)
            continue;
        std::vector<int> members{s};
        comp[s] = static_cast<int>(out.size());
        for (std::size_t i = 0; i < members.size(); ++i)
            for_each_bit(chi.adjacency(c).row(members[i]), [&](int w) {
                if (comp[w] == -1) {
                    comp[w] = comp[s];
                    members.push_back(w);
                }
            });
        std::sort(members.begin(), members.end());
        const int sz = static_cast<int>(members.size());
        for (int v : members)
            if (chi.degree(v, c) != sz - 1)
                return std::nullopt;
        out.push_back(std::move(members));
    }
    return out;
}

BlowupLikeCertificate blowup_like(const ColoredComplete& chi, const std::vector<int>& forbidden, int p,
                                  bool off_diagonal)
{
    BlowupLikeCertificate cert;
    cert.off_diagonal = off_diagonal;
    const int n = chi.n();
    if (p < 1) {
        cert.reason = "p must be positive";
        return cert;
    }
    const int lo = n / p;
    const int hi = (n + p - 1) / p;
    std::ostringstream why;
    for (int c = 0; c < chi.q(); ++c) {
        auto comps = clique_components(chi, c);
        if (!comps) {
            why << "colour " << c << ": not a disjoint union of cliques; ";
            continue;
        }
        if (static_cast<int>(comps->size()) != p) {
            why << "colour " << c << ": " << comps->size() << " cliques, need " << p << "; ";
            continue;
        }
        bool sizes_ok = std::all_of(comps->begin(), comps->end(), [&](const auto& part) {
            int s = static_cast<int>(part.size());
            return s == lo || s == hi;
        });
        if (!sizes_ok) {
            why << "colour " << c << ": clique sizes not in {" << lo << "," << hi << "}; ";
            continue;
        }
        bool others_ok = true;
        for (int d = 0; d < chi.q() && others_ok; ++d) {
            if (d == c || forbidden[d] == kUnbounded)
                continue;
            if (find_clique_in(chi.adjacency(d), all_vertices(n), forbidden[d])) {
                why << "colour " << c << " partitions, but colour " << d << " has a K_" << forbidden[d] << "; ";
                others_ok = false;
            }
        }
        if (!others_ok)
            continue;
        cert.holds = true;
        cert.color = c;
        cert.parts = std::move(*comps);
        cert.reason = "colour " + std::to_string(c) + " is " + std::to_string(p) + " near-equal cliques";
        return cert;
    }
    cert.reason = why.str();
    if (cert.reason.size() >= 2)
        cert.reason.resize(cert.reason.size() - 2);
    return cert;
}

} // namespace

BlowupLikeCertificate is_ramsey_blowup_like(const ColoredComplete& chi, int k, int p)
{
    check_cap(chi.n());
    return blowup_like(chi, std::vector<int>(chi.q(), k), p, false);
}

BlowupLikeCertificate is_ramsey_blowup_like(const ColoredComplete& chi, const std::vector<int>& forbidden, int p)
{
    check_cap(chi.n());
    if (static_cast<int>(forbidden.size()) != chi.q())
        throw PreconditionError("is_ramsey_blowup_like: need one forbidden size per colour");
    return blowup_like(chi, forbidden, p, true);
}

std::vector<Edge> graph6_diff(const Graph& a, const Graph& b)
{
    if (a.order() != b.order())
        throw PreconditionError("graph6_diff: graphs have different orders");
    std::vector<Edge> out;
    for (int i = 0; i < a.order(); ++i)
        for (int j = i + 1; j < a.order(); ++j)
            if (a.has_edge(i, j) != b.has_edge(i, j))
                out.emplace_back(i, j);
    return out;
}

namespace {

// Column order (0,1), (0,2), (1,2), (0,3), ...: once positions 0..j are fixed,
// every pair among them is fixed, so prefixes can be compared early.
class Canonicaliser {
public:
    Canonicaliser(const ColoredComplete& chi, std::vector<int> colour_map)
        : chi_(chi), n_(chi.n()), map_(std::move(colour_map))
    {
        // Vertex signature: degree in each image colour.
        std::vector<std::vector<int>> sig(n_, std::vector<int>(chi.q(), 0));
        for (int v = 0; v < n_; ++v)
            for (int c = 0; c < chi.q(); ++c)
                sig[v][map_[c]] = chi.degree(v, c);
        std::vector<int> verts(n_);
        std::iota(verts.begin(), verts.end(), 0);
        std::stable_sort(verts.begin(), verts.end(), [&](int a, int b) { return sig[a] < sig[b]; });
        class_of_pos_.resize(n_);
        vertex_class_.resize(n_);
        int cls = -1;
        for (int i = 0; i < n_; ++i) {
            if (i == 0 || sig[verts[i]] != sig[verts[i - 1]])
                ++cls;
            class_of_pos_[i] = cls;
            vertex_class_[verts[i]] = cls;
        }
    }

    void search(std::vector<std::uint8_t>& best, bool& have_best)
    {
        std::vector<int> placed;
        std::vector<char> used(n_, 0);
        std::vector<std::uint8_t> code;
        rec(placed, used, code, best, have_best, false);
    }

private:
    // `tied` is true while code equals best's prefix so far.
    void rec(std::vector<int>& placed, std::vector<char>& used, std::vector<std::uint8_t>& code,
             std::vector<std::uint8_t>& best, bool& have_best, bool tied)
    {
        const int pos = static_cast<int>(placed.size());
        if (pos == n_) {
            if (!have_best || code < best) {
                best = code;
                have_best = true;
            }
            return;
        }
        for (int v = 0; v < n_; ++v) {
            if (used[v] || vertex_class_[v] != class_of_pos_[pos])
                continue;
            std::size_t mark = code.size();
            for (int i = 0; i < pos; ++i)
                code.push_back(static_cast<std::uint8_t>(map_[chi_.color(placed[i], v)]));
            int cmp = 0;
            const bool compare = have_best && (pos == 0 || tied);
            if (compare) {
                auto first = best.begin() + static_cast<long>(mark);
                auto last = best.begin() + static_cast<long>(code.size());
                cmp = std::lexicographical_compare(code.begin() + static_cast<long>(mark), code.end(), first, last)
                          ? -1
                          : (std::equal(first, last, code.begin() + static_cast<long>(mark)) ? 0 : 1);
            }
            if (cmp <= 0) {
                placed.push_back(v);
                used[v] = 1;
                rec(placed, used, code, best, have_best, compare && cmp == 0);
                used[v] = 0;
                placed.pop_back();
            }
            code.resize(mark);
        }
    }

    const ColoredComplete& chi_;
    int n_;
    std::vector<int> map_;
    std::vector<int> class_of_pos_;
    std::vector<int> vertex_class_;
};

} // namespace

std::vector<std::uint8_t> canonical_form(const ColoredComplete& chi, int max_n)
{
    if (chi.n() > max_n)
        throw SizeCapExceeded("canonical_form: n = " + std::to_string(chi.n()) + " exceeds cap " +
                              std::to_string(max_n));
    std::vector<int> perm(chi.q());
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::uint8_t> best;
    bool have_best = false;
    do {
        // Shares `best` across colour permutations so later searches prune harder.
        Canonicaliser(chi, perm).search(best, have_best);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

bool iso_check_small(const ColoredComplete& a, const ColoredComplete& b, int max_n)
{
    if (a.n() > max_n || b.n() > max_n)
        throw SizeCapExceeded("iso_check_small: n exceeds cap " + std::to_string(max_n));
    if (a.n() != b.n() || a.q() != b.q())
        return false;
    return canonical_form(a, max_n) == canonical_form(b, max_n);
}

std::string fingerprint(const ColoredComplete& chi)
{
    const int n = chi.n();
    const int q = chi.q();
    std::vector<std::vector<int>> vsig(n);
    for (int v = 0; v < n; ++v) {
        for (int c = 0; c < q; ++c)
            vsig[v].push_back(chi.degree(v, c));
        std::sort(vsig[v].begin(), vsig[v].end());
    }
    std::sort(vsig.begin(), vsig.end());
    std::vector<long> mono(q, 0);
    long two_one = 0, rainbow = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                int a = chi.color(i, j), b = chi.color(i, k), c = chi.color(j, k);
                if (a == b && b == c)
                    ++mono[a];
                else if (a == b || b == c || a == c)
                    ++two_one;
                else
                    ++rainbow;
            }
    std::sort(mono.begin(), mono.end());
    std::ostringstream ss;
    ss << "n" << n << "q" << q << "|deg:";
    for (const auto& s : vsig) {
        ss << '(';
        for (int d : s)
            ss << d << ',';
        ss << ')';
    }
    ss << "|tri:";
    for (long m : mono)
        ss << m << ',';
    ss << two_one << ',' << rainbow;
    return ss.str();
}

IsoClasses iso_classes(const std::vector<ColoredComplete>& colorings, int max_n)
{
    IsoClasses out;
    std::map<std::string, int> seen;
    for (const auto& c : colorings) {
        std::string key;
        if (c.n() <= max_n) {
            auto form = canonical_form(c, max_n);
            key = "C" + std::to_string(c.n()) + ":" + std::to_string(c.q()) + ":" +
                  std::string(form.begin(), form.end());
        } else {
            key = "F" + fingerprint(c);
            out.certified = false;
        }
        auto [it, inserted] = seen.emplace(key, out.count);
        if (inserted)
            ++out.count;
        out.class_of.push_back(it->second);
    }
    return out;
}

std::optional<DoubleExtension> extract_double_extension(const ColoredComplete& chi, const Partition& partition,
                                                        int drop_color)
{
    auto verdict = is_blowup(chi, partition);
    if (verdict.is_blowup)
        return std::nullopt;
    const auto& part_of = partition.part_of();
    const int part_u = part_of[verdict.u];
    const int part_v = part_of[verdict.v];
    std::vector<int> vertices;
    for (int p = 0; p < partition.part_count(); ++p) {
        if (p == part_u)
            continue;
        vertices.push_back(p == part_v ? verdict.v : partition.parts()[p].front());
    }
    auto with = [&](int extra) {
        auto vs = vertices;
        vs.push_back(extra);
        return chi.induced(vs);
    };
    DoubleExtension out{chi.induced(vertices), with(verdict.u), with(verdict.u_prime), vertices};
    if (drop_color >= 0) {
        if (drop_color != chi.q() - 1)
            throw PreconditionError("extract_double_extension: only the last colour can be dropped");
        auto drop = [&](const ColoredComplete& c) {
            if (c.edge_count(drop_color) != 0)
                throw PreconditionError("extract_double_extension: dropped colour is in use");
            std::vector<int> id(chi.q());
            std::iota(id.begin(), id.end(), 0);
            return c.recolored(id, chi.q() - 1);
        };
        out.base = drop(out.base);
        out.via_u = drop(out.via_u);
        out.via_u_prime = drop(out.via_u_prime);
    }
    return out;
}

} // namespace rml
