#include "doctest.h"

#include "rml/error.hpp"
#include "rml/ledger.hpp"

using namespace rml;

namespace {

bool all_hold(const std::vector<LedgerItem>& items)
{
    for (const auto& it : items)
        if (it.verdict != Verdict::holds)
            return false;
    return true;
}

} // namespace

TEST_CASE("log-space comparison")
{
    CHECK(compare_log2(1, 2) == Verdict::holds);
    CHECK(compare_log2(2, 1) == Verdict::fails);
    CHECK(compare_log2(1, 1) == Verdict::inconclusive);
    CHECK(compare_log2(1e12, 1e12 + 1) == Verdict::inconclusive);
    CHECK(compare_log2(1e12, 1e12 + 10000) == Verdict::holds);
    CHECK(log2_of(Rational(1, 1024)) == -10);
    CHECK(abs(log2_of(ipow(BigInt(3), 5000)) - 5000 * log2(LogReal(3))) < LogReal("1e-30"));
}

TEST_CASE("two-colour parameters")
{
    const auto p = TwoColorParams::with_t(4, 5, 10);
    CHECK(p.theta() == Rational(1, 200));
    CHECK(p.epsilon() == Rational(1, 32000000));
    CHECK(p.lambda() == Rational(1, static_cast<long>(2e8) * 625 * 256));
    CHECK(p.lambda() == p.epsilon() / (Rational(1000) * 1000));
    CHECK(p.d_over_n() == (1 + p.lambda()) / 3);
    CHECK(p.gamma().log2_value() == LogReal(25000) * log2_of(p.lambda()));

    const auto sq = TwoColorParams::with_t(4, 5, 10, LambdaConvention::squared);
    CHECK(sq.lambda() == p.epsilon() * p.epsilon() / (Rational(1000) * 1000));
}

TEST_CASE("parameter items at the threshold")
{
    const LogReal th = threshold_log2_t(4, 5);
    CHECK(abs(th - (10 * log2(LogReal(20000)) + 40 * log2(LogReal(5)))) < LogReal("1e-40"));
    for (auto conv : {LambdaConvention::closed_form, LambdaConvention::squared})
        for (auto [k, h] : {std::pair{4, 4}, {4, 5}, {5, 5}, {5, 6}})
            CHECK(all_hold(check_lemma31(TwoColorParams::at_threshold(k, h, conv))));
}

TEST_CASE("parameter items at small t")
{
    const auto items = check_lemma31(TwoColorParams::with_t(4, 5, 10));
    CHECK(items[0].verdict == Verdict::fails);
    CHECK(items[0].lhs_log2 > items[0].rhs_log2);
    CHECK(items[4].verdict == Verdict::holds);
    CHECK(items[4].exact == Verdict::holds);
}

TEST_CASE("items (a)-(d) are monotone in t")
{
    for (int k : {4, 5}) {
        const int h = k + 1;
        const LogReal th = threshold_log2_t(k, h);
        std::vector<Verdict> prev(5, Verdict::fails);
        for (LogReal x = 0; x <= th + 10; x += th / 40) {
            const auto items = check_lemma31(TwoColorParams::with_log2_t(k, h, x));
            for (int i = 0; i < 4; ++i) {
                if (prev[i] == Verdict::holds)
                    CHECK(items[i].verdict == Verdict::holds);
                prev[i] = items[i].verdict;
            }
        }
    }
}

TEST_CASE("exact backend agrees with log space")
{
    LedgerOptions opts;
    opts.rational_check = true;
    for (long t : {1L, 10L, 1000L}) {
        const auto items = check_lemma31(TwoColorParams::with_t(3, 2, t), opts);
        for (const auto& it : items)
            if (it.exact && it.verdict != Verdict::inconclusive)
                CHECK(*it.exact == it.verdict);
        CHECK(items[0].exact.has_value());
        CHECK(items[2].exact.has_value());
        CHECK_FALSE(items[3].exact.has_value());
    }
    const auto at_threshold = check_lemma31(TwoColorParams::at_threshold(4, 5), opts);
    CHECK_FALSE(at_threshold[0].exact.has_value());
    CHECK(at_threshold[0].exact_note.find("not attempted") == 0);
}

TEST_CASE("politeness")
{
    const auto table = RamseyTable::builtin();
    auto k4 = check_polite(4, table);
    CHECK(k4.verdict == Politeness::not_polite);
    CHECK(k4.small_ratio == Verdict::fails);

    RamseyTable t5 = table;
    t5.set(5, 5, {43, 48});
    CHECK(check_polite(5, t5).verdict == Politeness::not_polite);

    // Constructed to satisfy both conditions.
    RamseyTable hyp;
    const std::int64_t R = std::int64_t{1} << 50, X = std::int64_t{1} << 10;
    const Rational s_max = Rational(R - 1) / (1 + Rational(25, 1024));
    const auto S = static_cast<std::int64_t>(numerator(s_max) / denominator(s_max));
    hyp.set(40, 40, {R, R});
    hyp.set(40, 39, {S, S});
    hyp.set(40, 20, {X, X});
    CHECK(check_polite(40, hyp).verdict == Politeness::polite);

    // Widening the intervals moves the verdict to unknown, never to polite.
    hyp.set(40, 20, {X, R});
    CHECK(check_polite(40, hyp).verdict == Politeness::unknown);
    hyp.set(40, 20, {X, X});
    hyp.set(40, 40, {2 * X, R});
    CHECK(check_polite(40, hyp).verdict == Politeness::unknown);

    CHECK_THROWS_AS(check_polite(6, table), PreconditionError);
}

TEST_CASE("three-colour consequences")
{
    const auto items = check_three_color_consequences(ThreeColorParams::from_table(4, RamseyTable::builtin()));
    REQUIRE(items.size() == 4);
    const auto p = ThreeColorParams::from_table(4, RamseyTable::builtin());
    CHECK(p.eta_lo == Rational(32, 17));
    CHECK(items[0].verdict == Verdict::holds);
    CHECK(items[1].verdict == Verdict::fails);
    CHECK(items[3].name == "r_gap");
    CHECK(items[3].verdict == Verdict::holds);

    RamseyTable hyp;
    const std::int64_t R = std::int64_t{1} << 60, X = std::int64_t{1} << 20;
    hyp.set(40, 40, {R, R});
    hyp.set(40, 39, {R / 2, R / 2});
    hyp.set(40, 20, {X, X});
    CHECK(all_hold(check_three_color_consequences(ThreeColorParams::from_table(40, hyp))));
}

TEST_CASE("bound calculators")
{
    auto es = bound_calculator("erdos_szekeres", {3, 4});
    CHECK(*es.exact == 10);
    CHECK(es.consistent == true);
    auto lef = bound_calculator("lefmann", {1, 1, 3});
    CHECK(*lef.exact == 4);
    CHECK(lef.consistent == true);
    auto cm = bound_calculator("clique_mult_const", {3});
    CHECK(cm.value.log2_value() == -18);
    CHECK(*cm.exact == Rational(1, 262144));
    CHECK(*bound_calculator("turan_bound", {4, 5}).exact == Rational(1, 81));
    CHECK(bound_calculator("erdos_lower", {10}).value.log2_value() == 5);
    CHECK(bound_calculator("three_color_const", {2}).exact == Rational(1, 531441));
    CHECK(bound_calculator("supersat_const", {1, 1, 2}).value.log2_value() == -1000);
    CHECK_THROWS_AS(bound_calculator("nonsense", {}), PreconditionError);
    CHECK_THROWS_AS(bound_calculator("erdos_szekeres", {3}), PreconditionError);
    CHECK(bound_calculator_names().size() == 7);
}
