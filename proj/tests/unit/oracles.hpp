#pragma once

// Slow reference implementations used to cross-check the library. They only
// use ColoredComplete::color and Graph::has_edge, never bitsets or plans.

#include "rml/coloring.hpp"
#include "rml/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <vector>

namespace oracle {

// Labeled copies of h in colour c of chi, by trying every injective map.
inline std::uint64_t count_copies(const rml::Graph& h, const rml::ColoredComplete& chi, int c,
                                  std::vector<std::uint64_t>* per_vertex = nullptr)
{
    const int t = h.order(), n = chi.n();
    std::vector<int> image(t, -1);
    std::vector<char> used(n, 0);
    std::uint64_t total = 0;
    std::function<void(int)> place = [&](int i) {
        if (i == t) {
            for (int a = 0; a < t; ++a)
                for (int b = a + 1; b < t; ++b)
                    if (h.has_edge(a, b) && chi.color(image[a], image[b]) != c)
                        return;
            ++total;
            if (per_vertex)
                for (int a = 0; a < t; ++a)
                    ++(*per_vertex)[image[a]];
            return;
        }
        for (int v = 0; v < n; ++v)
            if (!used[v]) {
                used[v] = 1;
                image[i] = v;
                place(i + 1);
                used[v] = 0;
            }
    };
    place(0);
    return total;
}

inline bool is_clique(const rml::Graph& g, const std::vector<int>& s)
{
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (!g.has_edge(s[i], s[j]))
                return false;
    return true;
}

// Largest clique by scanning subsets of decreasing size.
inline int clique_number(const rml::Graph& g)
{
    const int n = g.order();
    int best = n > 0 ? 1 : 0;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        int size = __builtin_popcount(mask);
        if (size <= best)
            continue;
        std::vector<int> s;
        for (int v = 0; v < n; ++v)
            if (mask >> v & 1)
                s.push_back(v);
        if (is_clique(g, s))
            best = size;
    }
    return best;
}

// Isomorphism up to vertex and colour permutation, trying all of both.
inline bool isomorphic(const rml::ColoredComplete& a, const rml::ColoredComplete& b)
{
    if (a.n() != b.n() || a.q() != b.q())
        return false;
    const int n = a.n(), q = a.q();
    std::vector<int> cp(q);
    std::iota(cp.begin(), cp.end(), 0);
    do {
        std::vector<int> vp(n);
        std::iota(vp.begin(), vp.end(), 0);
        do {
            bool ok = true;
            for (int i = 0; i < n && ok; ++i)
                for (int j = i + 1; j < n && ok; ++j)
                    ok = cp[a.color(i, j)] == b.color(vp[i], vp[j]);
            if (ok)
                return true;
        } while (std::next_permutation(vp.begin(), vp.end()));
    } while (std::next_permutation(cp.begin(), cp.end()));
    return false;
}

} // namespace oracle
