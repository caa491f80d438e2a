#include "rml/bigint.hpp"

#include "rml/error.hpp"

namespace rml {

BigInt falling_factorial(std::int64_t n, std::int64_t t)
{
    if (n < 0)
        throw PreconditionError("falling_factorial: n must be nonnegative");
    if (t < 0)
        throw PreconditionError("falling_factorial: t must be nonnegative");
    if (t > n)
        return 0;
    BigInt r = 1;
    for (std::int64_t i = 0; i < t; ++i)
        r *= n - i;
    return r;
}

BigInt binomial(std::int64_t n, std::int64_t k)
{
    if (k < 0 || n < 0 || k > n)
        return 0;
    k = std::min(k, n - k);
    BigInt r = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

BigInt ipow(const BigInt& base, unsigned exp)
{
    BigInt result = 1;
    BigInt b = base;
    while (exp) {
        if (exp & 1u)
            result *= b;
        exp >>= 1;
        if (exp)
            b *= b;
    }
    return result;
}

Rational rpow(const Rational& base, long exp)
{
    if (exp < 0) {
        if (base == 0)
            throw PreconditionError("rpow: zero to a negative power");
        return 1 / rpow(base, -exp);
    }
    BigInt num = ipow(numerator(base), static_cast<unsigned>(exp));
    BigInt den = ipow(denominator(base), static_cast<unsigned>(exp));
    return Rational(num, den);
}

std::string to_string(const Rational& v)
{
    if (denominator(v) == 1)
        return numerator(v).str();
    return numerator(v).str() + "/" + denominator(v).str();
}

double to_double(const Rational& v) { return v.convert_to<double>(); }

} // namespace rml
