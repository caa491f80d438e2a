#include "rml/ledger_quantity.hpp"

#include "rml/error.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <sstream>

namespace rml {

const char* to_string(Verdict v)
{
    switch (v) {
    case Verdict::holds:
        return "holds";
    case Verdict::fails:
        return "fails";
    case Verdict::inconclusive:
        return "inconclusive";
    }
    return "?";
}

LogReal log2_of(const BigInt& v)
{
    if (v <= 0)
        throw PreconditionError("log2_of: argument must be positive");
    // Split off the high bits so the conversion never overflows a double-range float.
    std::size_t bits = boost::multiprecision::msb(v) + 1;
    if (bits <= 160)
        return log2(LogReal(v));
    std::size_t shift = bits - 160;
    BigInt top = v >> shift;
    return log2(LogReal(top)) + LogReal(shift);
}

LogReal log2_of(const Rational& r)
{
    if (r <= 0)
        throw PreconditionError("log2_of: argument must be positive");
    return log2_of(BigInt(numerator(r))) - log2_of(BigInt(denominator(r)));
}

LedgerQuantity LedgerQuantity::from_rational(const Rational& r) { return LedgerQuantity(log2_of(r)); }
LedgerQuantity LedgerQuantity::from_integer(const BigInt& v) { return LedgerQuantity(log2_of(v)); }

Verdict compare_log2(const LogReal& lhs, const LogReal& rhs, bool strict, const LogReal& slack)
{
    LogReal scale = 1;
    if (abs(lhs) > scale)
        scale = abs(lhs);
    if (abs(rhs) > scale)
        scale = abs(rhs);
    LogReal gap = rhs - lhs;
    if (abs(gap) < slack * scale)
        return Verdict::inconclusive;
    if (strict)
        return gap > 0 ? Verdict::holds : Verdict::fails;
    return gap >= 0 ? Verdict::holds : Verdict::fails;
}

std::string format_log2(const LogReal& v, int digits)
{
    std::ostringstream ss;
    ss.precision(digits);
    ss << v;
    return ss.str();
}

} // namespace rml
