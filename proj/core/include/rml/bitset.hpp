#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <span>
#include <vector>

namespace rml {

inline constexpr int words_for(int bits) { return (bits + 63) / 64; }

/// Row-major n x n bit matrix: row v holds the neighbourhood of v.
class BitMatrix {
public:
    BitMatrix() = default;
    explicit BitMatrix(int n)
        : n_(n), words_(words_for(n)), bits_(static_cast<std::size_t>(n) * words_for(n), 0)
    {
    }

    int size() const noexcept { return n_; }
    int words() const noexcept { return words_; }

    std::span<const std::uint64_t> row(int v) const
    {
        return {bits_.data() + static_cast<std::size_t>(v) * words_, static_cast<std::size_t>(words_)};
    }
    std::span<std::uint64_t> row(int v)
    {
        return {bits_.data() + static_cast<std::size_t>(v) * words_, static_cast<std::size_t>(words_)};
    }
    const std::uint64_t* data() const noexcept { return bits_.data(); }

    bool test(int u, int v) const
    {
        return (row(u)[v >> 6] >> (v & 63)) & 1u;
    }
    void set(int u, int v) { row(u)[v >> 6] |= std::uint64_t{1} << (v & 63); }
    void reset(int u, int v) { row(u)[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

    /// Symmetric edge update.
    void set_edge(int u, int v)
    {
        set(u, v);
        set(v, u);
    }
    void reset_edge(int u, int v)
    {
        reset(u, v);
        reset(v, u);
    }

    int row_count(int v) const
    {
        int c = 0;
        for (auto w : row(v))
            c += std::popcount(w);
        return c;
    }

    bool operator==(const BitMatrix&) const = default;

private:
    int n_ = 0;
    int words_ = 0;
    std::vector<std::uint64_t> bits_;
};

inline int popcount(std::span<const std::uint64_t> s)
{
    int c = 0;
    for (auto w : s)
        c += std::popcount(w);
    return c;
}

/// Calls f(i) for every set bit, ascending.
template <class F>
inline void for_each_bit(std::span<const std::uint64_t> s, F&& f)
{
    for (std::size_t w = 0; w < s.size(); ++w) {
        std::uint64_t x = s[w];
        while (x) {
            int b = std::countr_zero(x);
            f(static_cast<int>(w * 64 + b));
            x &= x - 1;
        }
    }
}

inline void fill_prefix(std::span<std::uint64_t> s, int n)
{
    for (std::size_t w = 0; w < s.size(); ++w) {
        int lo = static_cast<int>(w * 64);
        if (n >= lo + 64)
            s[w] = ~std::uint64_t{0};
        else if (n <= lo)
            s[w] = 0;
        else
            s[w] = (std::uint64_t{1} << (n - lo)) - 1;
    }
}

} // namespace rml
