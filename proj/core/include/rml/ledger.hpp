#pragma once

#include "rml/bigint.hpp"
#include "rml/ledger_quantity.hpp"
#include "rml/ramsey_table.hpp"

#include <optional>
#include <string>
#include <vector>

namespace rml {

/// How λ is derived from ε. `closed_form` is λ = ε/(200h)^2, which equals
/// 1/(2*10^8 h^4 k^4); `squared` is λ = ε^2/(200h)^2.
enum class LambdaConvention { closed_form, squared };

const char* to_string(LambdaConvention c);

/// log2 of the threshold (1000kh)^10 h^(10k).
LogReal threshold_log2_t(int k, int h);

struct TwoColorParams {
    int k = 0;
    int h = 0;
    /// t is held as log2 t; `t_exact` is set when t was given as an integer.
    LogReal log2_t = 0;
    std::optional<BigInt> t_exact;
    LambdaConvention convention = LambdaConvention::closed_form;

    static TwoColorParams with_t(int k, int h, const BigInt& t,
                                 LambdaConvention c = LambdaConvention::closed_form);
    static TwoColorParams with_log2_t(int k, int h, const LogReal& log2_t,
                                      LambdaConvention c = LambdaConvention::closed_form);
    static TwoColorParams at_threshold(int k, int h, LambdaConvention c = LambdaConvention::closed_form);

    Rational theta() const;
    Rational epsilon() const;
    Rational lambda() const;
    /// d/n = (1+λ)/(k-1).
    Rational d_over_n() const;
    LedgerQuantity gamma() const;
    LedgerQuantity tau() const;
};

struct LedgerItem {
    std::string name;
    std::string statement;
    Verdict verdict = Verdict::inconclusive;
    LogReal lhs_log2 = 0;
    LogReal rhs_log2 = 0;
    /// Exact-rational verdict, when that backend was attempted and finished.
    std::optional<Verdict> exact;
    std::string exact_note;
};

struct LedgerOptions {
    LogReal slack = kDefaultSlack;
    bool rational_check = false;
    /// Upper bound on the estimated operand size of the rational backend.
    std::uint64_t rational_bit_budget = std::uint64_t{1} << 22;
};

/// Items (a)-(e) of the parameter lemma, in that order.
std::vector<LedgerItem> check_lemma31(const TwoColorParams& p, const LedgerOptions& options = {});

enum class Politeness { polite, not_polite, unknown };

const char* to_string(Politeness p);

struct PoliteReport {
    Politeness verdict = Politeness::unknown;
    /// Per-inequality results; inconclusive means "depends on the interval point".
    Verdict small_ratio = Verdict::inconclusive;
    Verdict gap = Verdict::inconclusive;
    Interval r_kk, r_kk1, r_khalf;
};

PoliteReport check_polite(int k, const RamseyTable& table);

struct ThreeColorParams {
    int k = 0;
    Interval r_kk, r_kk1, r_khalf;
    /// η = 8 r(k,⌈k/2⌉)/(r(k,k)-1) over the whole interval box.
    Rational eta_lo, eta_hi;

    static ThreeColorParams from_table(int k, const RamseyTable& table);
};

/// The displayed consequences of politeness in the three-colour argument
/// plus the r(k,k) >= r(k,k-1) + 2k - 2 gap. Verdicts quantify over the
/// interval box; inconclusive means the answer depends on the point.
std::vector<LedgerItem> check_three_color_consequences(const ThreeColorParams& p);

struct BoundValue {
    std::string name;
    LedgerQuantity value;
    std::optional<Rational> exact;
    /// Set by the table-aware calculators.
    std::optional<bool> consistent;
    std::string note;
};

/// Names: erdos_szekeres(a,b), erdos_lower(k), clique_mult_const(h),
/// supersat_const(h, num, den), three_color_const(h), turan_bound(k, t),
/// lefmann(q1, q2, k). Throws PreconditionError for unknown names or bad args.
BoundValue bound_calculator(const std::string& name, const std::vector<long>& args,
                            const RamseyTable& table = RamseyTable::builtin());

std::vector<std::string> bound_calculator_names();

} // namespace rml
