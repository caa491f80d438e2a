#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>

namespace rml {

struct Interval {
    std::int64_t lo = 0;
    std::int64_t hi = 0;
    bool exact() const noexcept { return lo == hi; }
    bool operator==(const Interval&) const = default;
};

/// Known values and bounds for two-colour r(a,b) and multicolour r_q(k).
///
/// Built-ins hold the classical exact values plus the current bounds on
/// r(5,5). r(1,b) = 1, r(2,b) = b, r_1(k) = k and r_2(k) = r(k,k) are
/// derived rather than stored.
class RamseyTable {
public:
    static RamseyTable builtin();
    static RamseyTable empty() { return {}; }

    /// Lines "a b lo hi" set r(a,b); lines "q <q> <k> lo hi" set r_q(k).
    /// '#' starts a comment. Later lines override earlier ones.
    void load(const std::string& text);
    void load_file(const std::string& path);

    void set(int a, int b, Interval v);
    void set_multicolor(int q, int k, Interval v);

    std::optional<Interval> two_color(int a, int b) const;
    std::optional<Interval> multicolor(int q, int k) const;

    /// Throws PreconditionError naming the missing entry.
    Interval require(int a, int b) const;
    Interval require_multicolor(int q, int k) const;

private:
    std::map<std::pair<int, int>, Interval> two_;
    std::map<std::pair<int, int>, Interval> multi_;
};

} // namespace rml
