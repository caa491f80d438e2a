#pragma once

#include "rml/bigint.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <string>

namespace rml {

/// 50 significant decimal digits with a binary exponent range large enough
/// for quantities like 2^(2^600).
using LogReal = boost::multiprecision::cpp_bin_float_50;

enum class Verdict { holds, fails, inconclusive };

const char* to_string(Verdict v);

/// A positive real stored as its base-2 logarithm.
class LedgerQuantity {
public:
    LedgerQuantity() = default;
    explicit LedgerQuantity(LogReal log2_value) : log2_(std::move(log2_value)) {}

    static LedgerQuantity from_log2(const LogReal& v) { return LedgerQuantity(v); }
    static LedgerQuantity from_rational(const Rational& r);
    static LedgerQuantity from_integer(const BigInt& v);

    const LogReal& log2_value() const noexcept { return log2_; }

    LedgerQuantity operator*(const LedgerQuantity& o) const { return LedgerQuantity(log2_ + o.log2_); }
    LedgerQuantity operator/(const LedgerQuantity& o) const { return LedgerQuantity(log2_ - o.log2_); }
    LedgerQuantity pow(const LogReal& e) const { return LedgerQuantity(log2_ * e); }

private:
    LogReal log2_ = 0;
};

/// Default relative slack for log-space comparisons.
inline const LogReal kDefaultSlack = LogReal("1e-9");

/// Compares lhs <= rhs (or lhs < rhs when strict) given as log2 values.
/// inconclusive when |lhs - rhs| < slack * max(1, |lhs|, |rhs|).
Verdict compare_log2(const LogReal& lhs, const LogReal& rhs, bool strict = false,
                     const LogReal& slack = kDefaultSlack);

inline Verdict compare(const LedgerQuantity& lhs, const LedgerQuantity& rhs, bool strict = false,
                       const LogReal& slack = kDefaultSlack)
{
    return compare_log2(lhs.log2_value(), rhs.log2_value(), strict, slack);
}

LogReal log2_of(const Rational& r);
LogReal log2_of(const BigInt& v);
std::string format_log2(const LogReal& v, int digits = 12);

} // namespace rml
