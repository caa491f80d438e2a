#include "rml/ramsey_table.hpp"

#include "rml/error.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace rml {

RamseyTable RamseyTable::builtin()
{
    RamseyTable t;
    auto exact = [&](int a, int b, std::int64_t v) { t.set(a, b, {v, v}); };
    exact(3, 3, 6);
    exact(3, 4, 9);
    exact(3, 5, 14);
    exact(3, 6, 18);
    exact(3, 7, 23);
    exact(3, 8, 28);
    exact(3, 9, 36);
    exact(4, 4, 18);
    exact(4, 5, 25);
    t.set(5, 5, {43, 46});
    t.set_multicolor(3, 3, {17, 17});
    return t;
}

void RamseyTable::set(int a, int b, Interval v)
{
    if (v.lo > v.hi)
        throw PreconditionError("RamseyTable: lo > hi for r(" + std::to_string(a) + "," + std::to_string(b) + ")");
    two_[{std::min(a, b), std::max(a, b)}] = v;
}

void RamseyTable::set_multicolor(int q, int k, Interval v)
{
    if (v.lo > v.hi)
        throw PreconditionError("RamseyTable: lo > hi for r_" + std::to_string(q) + "(" + std::to_string(k) + ")");
    if (q == 2)
        set(k, k, v);
    else
        multi_[{q, k}] = v;
}

std::optional<Interval> RamseyTable::two_color(int a, int b) const
{
    int lo = std::min(a, b), hi = std::max(a, b);
    if (lo <= 0)
        return std::nullopt;
    if (lo == 1)
        return Interval{1, 1};
    if (lo == 2)
        return Interval{hi, hi};
    auto it = two_.find({lo, hi});
    if (it == two_.end())
        return std::nullopt;
    return it->second;
}

std::optional<Interval> RamseyTable::multicolor(int q, int k) const
{
    if (q == 1)
        return Interval{k, k};
    if (q == 2)
        return two_color(k, k);
    auto it = multi_.find({q, k});
    if (it == multi_.end())
        return std::nullopt;
    return it->second;
}

Interval RamseyTable::require(int a, int b) const
{
    if (auto v = two_color(a, b))
        return *v;
    throw PreconditionError("RamseyTable: missing entry r(" + std::to_string(a) + "," + std::to_string(b) + ")");
}

Interval RamseyTable::require_multicolor(int q, int k) const
{
    if (auto v = multicolor(q, k))
        return *v;
    throw PreconditionError("RamseyTable: missing entry r_" + std::to_string(q) + "(" + std::to_string(k) + ")");
}

void RamseyTable::load(const std::string& text)
{
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first))
            continue;
        auto bad = [&] { return ParseError("ramsey table: line " + std::to_string(lineno) + ": malformed", lineno); };
        if (first == "q") {
            int q, k;
            std::int64_t lo, hi;
            if (!(ls >> q >> k >> lo >> hi))
                throw bad();
            set_multicolor(q, k, {lo, hi});
        } else {
            int a, b;
            std::int64_t lo, hi;
            try {
                a = std::stoi(first);
            } catch (...) {
                throw bad();
            }
            if (!(ls >> b >> lo >> hi))
                throw bad();
            set(a, b, {lo, hi});
        }
        std::string extra;
        if (ls >> extra)
            throw bad();
    }
}

void RamseyTable::load_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw Error("ramsey table: cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    load(ss.str());
}

} // namespace rml
