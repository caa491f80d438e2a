#include "rml/ledger.hpp"

#include "rml/error.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <functional>
#include <limits>

namespace rml {

namespace {

LogReal lg(long v) { return log2(LogReal(v)); }
LogReal lg(const Rational& r) { return log2_of(r); }
LogReal log2_e() { return 1 / log(LogReal(2)); }

std::uint64_t bits_of(const Rational& r)
{
    auto bits = [](const BigInt& v) -> std::uint64_t {
        return v == 0 ? 1 : boost::multiprecision::msb(abs(v)) + 1;
    };
    return bits(numerator(r)) + bits(denominator(r));
}

Verdict from_bool(bool b) { return b ? Verdict::holds : Verdict::fails; }

} // namespace

const char* to_string(LambdaConvention c)
{
    return c == LambdaConvention::closed_form ? "closed_form" : "squared";
}

LogReal threshold_log2_t(int k, int h)
{
    return 10 * lg(1000L * k * h) + LogReal(10 * k) * lg(h);
}

TwoColorParams TwoColorParams::with_t(int k, int h, const BigInt& t, LambdaConvention c)
{
    if (t < 1)
        throw PreconditionError("ledger: need t >= 1");
    auto p = with_log2_t(k, h, log2_of(t), c);
    p.t_exact = t;
    return p;
}

TwoColorParams TwoColorParams::with_log2_t(int k, int h, const LogReal& log2_t, LambdaConvention c)
{
    if (k < 2 || h < 1)
        throw PreconditionError("ledger: need k >= 2 and h >= 1");
    if (log2_t < 0)
        throw PreconditionError("ledger: need t >= 1");
    TwoColorParams p;
    p.k = k;
    p.h = h;
    p.log2_t = log2_t;
    p.convention = c;
    return p;
}

TwoColorParams TwoColorParams::at_threshold(int k, int h, LambdaConvention c)
{
    return with_log2_t(k, h, threshold_log2_t(k, h), c);
}

Rational TwoColorParams::theta() const { return Rational(1, 50 * k); }

Rational TwoColorParams::epsilon() const
{
    Rational th = theta();
    return th * th / (2 * h * h * k * k);
}

Rational TwoColorParams::lambda() const
{
    Rational e = epsilon();
    Rational base = convention == LambdaConvention::closed_form ? e : e * e;
    return base / (Rational(200 * h) * (200 * h));
}

Rational TwoColorParams::d_over_n() const { return (1 + lambda()) / (k - 1); }

LedgerQuantity TwoColorParams::gamma() const
{
    return LedgerQuantity(LogReal(1000L * h * h) * lg(lambda()));
}

LedgerQuantity TwoColorParams::tau() const
{
    LogReal t = exp2(log2_t);
    return LedgerQuantity(-t * log1p(LogReal(lambda())) * log2_e());
}

std::vector<LedgerItem> check_lemma31(const TwoColorParams& p, const LedgerOptions& options)
{
    const int k = p.k, h = p.h;
    const Rational lam = p.lambda(), eps = p.epsilon(), th = p.theta();
    const LogReal log_lam = lg(lam), log_eps = lg(eps), log_th = lg(th);
    const LogReal log_tau = p.tau().log2_value();
    const LogReal t = exp2(p.log2_t);
    const LogReal hk = pow(LogReal(h), k);

    std::vector<LedgerItem> items(5);
    auto& a = items[0];
    a.name = "a";
    a.statement = "tau <= gamma * lambda^h";
    a.lhs_log2 = log_tau;
    a.rhs_log2 = LogReal(1000L * h * h + h) * log_lam;

    auto& b = items[1];
    b.name = "b";
    b.statement = "2 tau^(h^-k) <= k^(-10k) eps";
    b.lhs_log2 = 1 + log_tau / hk;
    b.rhs_log2 = -LogReal(10 * k) * lg(k) + log_eps;

    auto& c = items[2];
    c.name = "c";
    c.statement = "theta >= 2k tau^(1/h)";
    c.lhs_log2 = lg(2 * k) + log_tau / h;
    c.rhs_log2 = log_th;

    auto& d = items[3];
    d.name = "d";
    d.statement = "exp(8(k-1) sqrt(lambda) t) > 4^(h^2) t";
    d.lhs_log2 = LogReal(2 * h * h) + p.log2_t;
    d.rhs_log2 = 8 * (k - 1) * sqrt(LogReal(lam)) * t * log2_e();

    auto& e = items[4];
    e.name = "e";
    e.statement = "1/(k-1) - sqrt(2 eps) >= 1/k";
    e.lhs_log2 = -lg(k);
    {
        LogReal diff = LogReal(Rational(1, k - 1)) - sqrt(LogReal(2 * eps));
        e.rhs_log2 = diff > 0 ? log2(diff) : LogReal(-std::numeric_limits<double>::infinity());
    }

    for (std::size_t i = 0; i < items.size(); ++i) {
        auto& it = items[i];
        if (i == 4 && it.rhs_log2 == LogReal(-std::numeric_limits<double>::infinity()))
            it.verdict = Verdict::fails;
        else
            it.verdict = compare_log2(it.lhs_log2, it.rhs_log2, i == 3, options.slack);
    }

    // (e) is cheap enough to settle exactly every time:
    // 1/(k-1) - 1/k >= sqrt(2 eps)  <=>  (1/(k(k-1)))^2 >= 2 eps.
    {
        Rational gap(1, static_cast<long>(k) * (k - 1));
        e.exact = from_bool(gap * gap >= 2 * eps);
        e.exact_note = "exact";
    }
    d.exact_note = "not attempted: irrational";

    if (!options.rational_check)
        return items;
    if (!p.t_exact) {
        for (int i = 0; i < 3; ++i)
            items[i].exact_note = "not attempted: t given in log space";
        return items;
    }
    const BigInt& T = *p.t_exact;
    const std::uint64_t lam_bits = bits_of(1 + lam);
    auto within = [&](const BigInt& exponent, std::uint64_t per_unit) {
        BigInt est = exponent * per_unit;
        return est <= options.rational_bit_budget;
    };
    auto to_long = [](const BigInt& v) { return static_cast<long>(v); };

    // (a): 1 <= (1+λ)^t λ^(1000h²+h)
    {
        const long E = 1000L * h * h + h;
        if (within(T + E, lam_bits)) {
            Rational rhs = rpow(1 + lam, to_long(T)) * rpow(lam, E);
            a.exact = from_bool(rhs >= 1);
            a.exact_note = "exact";
        } else {
            a.exact_note = "not attempted: over bit budget";
        }
    }
    // (b): 2^(h^k) <= (1+λ)^t (k^(-10k) ε)^(h^k)
    {
        const long H = static_cast<long>(ipow(BigInt(h), static_cast<unsigned>(k)));
        const Rational base = eps / Rational(ipow(BigInt(k), static_cast<unsigned>(10 * k)));
        if (within(T, lam_bits) && within(BigInt(H), bits_of(base))) {
            Rational rhs = rpow(1 + lam, to_long(T)) * rpow(base, H);
            b.exact = from_bool(Rational(ipow(BigInt(2), static_cast<unsigned>(H))) <= rhs);
            b.exact_note = "exact";
        } else {
            b.exact_note = "not attempted: over bit budget";
        }
    }
    // (c): (2k)^h <= θ^h (1+λ)^t
    {
        if (within(T, lam_bits)) {
            Rational rhs = rpow(th, h) * rpow(1 + lam, to_long(T));
            c.exact = from_bool(Rational(ipow(BigInt(2 * k), static_cast<unsigned>(h))) <= rhs);
            c.exact_note = "exact";
        } else {
            c.exact_note = "not attempted: over bit budget";
        }
    }
    return items;
}

// ---------------------------------------------------------------------------
// Interval checks

namespace {

// The inequality is monotone in every coordinate, so it holds on the whole
// box iff it holds at the least favourable corner, and fails on the whole
// box iff it fails at the most favourable one.
Verdict over_box(const std::function<bool(bool favourable)>& at_corner)
{
    if (at_corner(false))
        return Verdict::holds;
    if (!at_corner(true))
        return Verdict::fails;
    return Verdict::inconclusive;
}

Rational pow4(const Rational& x) { return x * x * x * x; }

} // namespace

const char* to_string(Politeness p)
{
    switch (p) {
    case Politeness::polite:
        return "polite";
    case Politeness::not_polite:
        return "not_polite";
    case Politeness::unknown:
        return "unknown";
    }
    return "?";
}

PoliteReport check_polite(int k, const RamseyTable& table)
{
    if (k < 2)
        throw PreconditionError("check_polite: need k >= 2");
    PoliteReport rep;
    rep.r_kk = table.require(k, k);
    rep.r_kk1 = table.require(k, k - 1);
    rep.r_khalf = table.require(k, (k + 1) / 2);
    const Interval R = rep.r_kk, S = rep.r_kk1, X = rep.r_khalf;

    // r(k,⌈k/2⌉) <= 2^-31 r(k,k)
    rep.small_ratio = over_box([&](bool fav) {
        BigInt x = fav ? X.lo : X.hi;
        BigInt r = fav ? R.hi : R.lo;
        return (x << 31) <= r;
    });
    // (r(k,k)-1)/r(k,k-1) >= 1 + 25 (r(k,⌈k/2⌉)/r(k,k))^(1/4)
    rep.gap = over_box([&](bool fav) {
        Rational r = fav ? R.hi : R.lo;
        Rational s = fav ? S.lo : S.hi;
        Rational x = fav ? X.lo : X.hi;
        Rational l = (r - 1) / s;
        if (l < 1)
            return false;
        return pow4((l - 1) / 25) >= x / r;
    });
    if (rep.small_ratio == Verdict::fails || rep.gap == Verdict::fails)
        rep.verdict = Politeness::not_polite;
    else if (rep.small_ratio == Verdict::holds && rep.gap == Verdict::holds)
        rep.verdict = Politeness::polite;
    else
        rep.verdict = Politeness::unknown;
    return rep;
}

ThreeColorParams ThreeColorParams::from_table(int k, const RamseyTable& table)
{
    if (k < 2)
        throw PreconditionError("three-colour ledger: need k >= 2");
    ThreeColorParams p;
    p.k = k;
    p.r_kk = table.require(k, k);
    p.r_kk1 = table.require(k, k - 1);
    p.r_khalf = table.require(k, (k + 1) / 2);
    if (p.r_kk.lo < 2)
        throw PreconditionError("three-colour ledger: need r(k,k) >= 2");
    p.eta_lo = Rational(8 * p.r_khalf.lo) / (p.r_kk.hi - 1);
    p.eta_hi = Rational(8 * p.r_khalf.hi) / (p.r_kk.lo - 1);
    return p;
}

std::vector<LedgerItem> check_three_color_consequences(const ThreeColorParams& p)
{
    const int k = p.k;
    const Interval R = p.r_kk, S = p.r_kk1, X = p.r_khalf;
    std::vector<LedgerItem> items;

    {
        // η >= 3k/(r-1)  <=>  8 r(k,⌈k/2⌉) >= 3k
        LedgerItem it;
        it.name = "eta_lower";
        it.statement = "eta >= 3k/(r(k,k)-1)";
        it.lhs_log2 = lg(Rational(3 * k, R.lo - 1));
        it.rhs_log2 = lg(p.eta_hi);
        it.verdict = over_box([&](bool fav) { return 8 * (fav ? X.hi : X.lo) >= 3L * k; });
        items.push_back(it);
    }
    {
        LedgerItem it;
        it.name = "eta_small";
        it.statement = "eta <= 2^-28";
        it.lhs_log2 = lg(p.eta_hi);
        it.rhs_log2 = -28;
        const Rational cap = rpow(Rational(2), -28);
        it.verdict = over_box([&](bool fav) { return (fav ? p.eta_lo : p.eta_hi) <= cap; });
        items.push_back(it);
    }
    {
        // (r-1)/r(k,k-1) > 1 + 12 η^(1/4)
        LedgerItem it;
        it.name = "ratio_gap";
        it.statement = "(r(k,k)-1)/r(k,k-1) > 1 + 12 eta^(1/4)";
        it.lhs_log2 = log2(1 + 12 * sqrt(sqrt(LogReal(p.eta_hi))));
        it.rhs_log2 = lg(Rational(R.lo - 1, S.hi));
        it.verdict = over_box([&](bool fav) {
            Rational r = fav ? R.hi : R.lo;
            Rational s = fav ? S.lo : S.hi;
            Rational x = fav ? X.lo : X.hi;
            Rational l = (r - 1) / s;
            Rational eta = 8 * x / (r - 1);
            if (l <= 1)
                return false;
            return pow4((l - 1) / 12) > eta;
        });
        items.push_back(it);
    }
    {
        LedgerItem it;
        it.name = "r_gap";
        it.statement = "r(k,k) >= r(k,k-1) + 2k - 2";
        it.lhs_log2 = lg(S.hi + 2L * k - 2);
        it.rhs_log2 = lg(R.lo);
        it.verdict = over_box([&](bool fav) {
            return (fav ? R.hi : R.lo) >= (fav ? S.lo : S.hi) + 2L * k - 2;
        });
        items.push_back(it);
    }
    for (auto& it : items) {
        it.exact = it.verdict;
        it.exact_note = "exact";
    }
    return items;
}

// ---------------------------------------------------------------------------
// Bound calculators

std::vector<std::string> bound_calculator_names()
{
    return {"erdos_szekeres", "erdos_lower", "clique_mult_const", "supersat_const",
            "three_color_const", "turan_bound", "lefmann"};
}

BoundValue bound_calculator(const std::string& name, const std::vector<long>& args, const RamseyTable& table)
{
    auto need = [&](std::size_t count) {
        if (args.size() != count)
            throw PreconditionError("bound " + name + ": expected " + std::to_string(count) + " arguments");
    };
    auto positive = [&](long v, const char* what) {
        if (v < 1)
            throw PreconditionError("bound " + name + ": " + what + " must be >= 1");
    };
    BoundValue out;
    out.name = name;
    if (name == "erdos_szekeres") {
        need(2);
        positive(args[0], "a");
        positive(args[1], "b");
        Rational v = Rational(binomial(args[0] + args[1] - 2, args[0] - 1));
        out.exact = v;
        out.value = LedgerQuantity::from_rational(v);
        out.note = "r(a,b) <= C(a+b-2, a-1)";
        if (auto known = table.two_color(args[0], args[1]))
            out.consistent = Rational(known->lo) <= v;
    } else if (name == "erdos_lower") {
        need(1);
        positive(args[0], "k");
        out.value = LedgerQuantity::from_log2(LogReal(args[0]) / 2);
        out.note = "r(k,k) >= 2^(k/2)";
        if (auto known = table.two_color(args[0], args[0]))
            out.consistent = log2(LogReal(known->hi)) >= out.value.log2_value();
    } else if (name == "clique_mult_const") {
        need(1);
        positive(args[0], "h");
        out.value = LedgerQuantity::from_log2(LogReal(-2 * args[0] * args[0]));
        out.exact = rpow(Rational(4), -args[0] * args[0]);
        out.note = "4^(-h^2)";
    } else if (name == "supersat_const") {
        need(3);
        positive(args[0], "h");
        positive(args[1], "numerator");
        positive(args[2], "denominator");
        Rational delta(args[1], args[2]);
        if (delta > 1)
            throw PreconditionError("bound supersat_const: need delta <= 1");
        out.value = LedgerQuantity::from_log2(LogReal(1000 * args[0] * args[0]) * log2_of(delta));
        out.note = "delta^(1000 h^2)";
    } else if (name == "three_color_const") {
        need(1);
        positive(args[0], "h");
        out.value = LedgerQuantity::from_log2(-LogReal(args[0] * args[0]) * log2(LogReal(27)));
        out.exact = rpow(Rational(27), -args[0] * args[0]);
        out.note = "27^(-h^2)";
    } else if (name == "turan_bound") {
        need(2);
        if (args[0] < 2)
            throw PreconditionError("bound turan_bound: need k >= 2");
        positive(args[1], "t");
        Rational v = rpow(Rational(args[0] - 1), 1 - args[1]);
        out.exact = v;
        out.value = LedgerQuantity::from_rational(v);
        out.note = "(k-1)^(1-t)";
    } else if (name == "lefmann") {
        need(3);
        positive(args[0], "q1");
        positive(args[1], "q2");
        if (args[2] < 2)
            throw PreconditionError("bound lefmann: need k >= 2");
        const int q1 = static_cast<int>(args[0]), q2 = static_cast<int>(args[1]), k = static_cast<int>(args[2]);
        Interval a = table.require_multicolor(q1, k);
        Interval b = table.require_multicolor(q2, k);
        Rational product = Rational(a.lo - 1) * (b.lo - 1);
        out.exact = product;
        out.value = LedgerQuantity::from_rational(product);
        out.note = "r_(q1+q2)(k) - 1 >= (r_q1(k) - 1)(r_q2(k) - 1)";
        if (auto sum = table.multicolor(q1 + q2, k))
            out.consistent = Rational(sum->hi - 1) >= product;
    } else {
        throw PreconditionError("unknown bound '" + name + "'");
    }
    return out;
}

} // namespace rml
