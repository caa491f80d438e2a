#include "commands.hpp"

#include "report.hpp"
#include "rml/error.hpp"
#include "rml/ledger.hpp"

#include <memory>
#include <sstream>

namespace rml::cli {

namespace {

LambdaConvention parse_convention(const std::string& s)
{
    if (s == "closed-form")
        return LambdaConvention::closed_form;
    if (s == "squared")
        return LambdaConvention::squared;
    throw ParseError("lambda convention must be closed-form or squared, got '" + s + "'", 0);
}

template <class T>
T parse_number(const std::string& s, const char* what)
{
    try {
        return T(s);
    } catch (const std::exception&) {
        throw ParseError(std::string("bad ") + what + " '" + s + "'", 0);
    }
}

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s)
        out += c == '"' ? std::string("\"\"") : std::string(1, c);
    return out + "\"";
}

std::string items_csv(const std::vector<LedgerItem>& items)
{
    std::ostringstream ss;
    ss << "name,verdict,lhs_log2,rhs_log2,exact,statement\n";
    for (const auto& it : items)
        ss << it.name << ',' << to_string(it.verdict) << ',' << format_log2(it.lhs_log2, 17) << ','
           << format_log2(it.rhs_log2, 17) << ',' << (it.exact ? to_string(*it.exact) : "") << ','
           << csv_field(it.statement) << '\n';
    return ss.str();
}

Json items_json(const std::vector<LedgerItem>& items)
{
    Json a = Json::array();
    for (const auto& it : items)
        a.push_back(ledger_item_json(it));
    return a;
}

} // namespace

void add_ledger(CLI::App& app)
{
    auto* cmd = app.add_subcommand("ledger", "Parameter inequalities and Ramsey-number bounds");
    cmd->require_subcommand(1);

    {
        auto* sub = cmd->add_subcommand("lemma31", "Items a-e of the two-colour parameter lemma");
        auto k = std::make_shared<int>(), h = std::make_shared<int>();
        auto t = std::make_shared<std::string>(), log2_t = std::make_shared<std::string>();
        auto lambda = std::make_shared<std::string>("closed-form");
        auto exact = std::make_shared<bool>(false), csv = std::make_shared<bool>(false);
        sub->add_option("--k", *k)->required();
        // -h would clash with --h, so help is long-form only here.
        sub->set_help_flag("--help", "Print this help message and exit");
        sub->add_option("--h", *h)->required();
        auto* to = sub->add_option("--t", *t, "Integer t (default: the threshold (1000kh)^10 h^10k)");
        auto* lo = sub->add_option("--log2-t", *log2_t, "t given as its base-2 logarithm");
        to->excludes(lo);
        sub->add_option("--lambda", *lambda, "closed-form or squared")->capture_default_str();
        sub->add_flag("--exact", *exact, "Also attempt exact rational checks");
        sub->add_flag("--csv", *csv, "Emit the item table as CSV");
        sub->callback([=] {
            const auto conv = parse_convention(*lambda);
            TwoColorParams p = !t->empty()        ? TwoColorParams::with_t(*k, *h, parse_number<BigInt>(*t, "t"), conv)
                               : !log2_t->empty() ? TwoColorParams::with_log2_t(*k, *h, parse_number<LogReal>(*log2_t, "log2 t"), conv)
                                                  : TwoColorParams::at_threshold(*k, *h, conv);
            LedgerOptions o;
            o.rational_check = *exact;
            const auto items = check_lemma31(p, o);
            if (*csv) {
                write_text("", items_csv(items));
                return;
            }
            Json j = envelope("ledger_lemma31");
            j["k"] = *k;
            j["h"] = *h;
            j["log2_t"] = log2_json(p.log2_t);
            j["t"] = p.t_exact ? big(*p.t_exact) : Json(nullptr);
            j["lambda_convention"] = to_string(conv);
            j["epsilon"] = rational(p.epsilon());
            j["lambda"] = rational(p.lambda());
            j["theta"] = rational(p.theta());
            j["d_over_n"] = rational(p.d_over_n());
            j["log2_gamma"] = log2_json(p.gamma().log2_value());
            j["log2_tau"] = log2_json(p.tau().log2_value());
            j["items"] = items_json(items);
            bool all = true;
            for (const auto& it : items)
                all = all && it.verdict == Verdict::holds;
            j["all_hold"] = all;
            write_text("", dump(j));
        });
    }
    {
        auto* sub = cmd->add_subcommand("polite", "Whether k is polite for the given Ramsey table");
        auto k = std::make_shared<int>();
        auto table = std::make_shared<std::string>("builtin");
        sub->add_option("--k", *k)->required();
        sub->add_option("--table", *table, "builtin, or a table file layered over the built-ins")->capture_default_str();
        sub->callback([=] {
            const auto r = check_polite(*k, load_table(*table));
            Json j = envelope("ledger_polite");
            j["k"] = *k;
            j["verdict"] = to_string(r.verdict);
            j["small_ratio"] = to_string(r.small_ratio);
            j["gap"] = to_string(r.gap);
            j["r_kk"] = interval_json(r.r_kk);
            j["r_kk1"] = interval_json(r.r_kk1);
            j["r_khalf"] = interval_json(r.r_khalf);
            write_text("", dump(j));
        });
    }
    {
        auto* sub = cmd->add_subcommand("three-color", "Three-colour consequences of politeness");
        auto k = std::make_shared<int>();
        auto table = std::make_shared<std::string>("builtin");
        auto csv = std::make_shared<bool>(false);
        sub->add_option("--k", *k)->required();
        sub->add_option("--table", *table)->capture_default_str();
        sub->add_flag("--csv", *csv, "Emit the item table as CSV");
        sub->callback([=] {
            const auto p = ThreeColorParams::from_table(*k, load_table(*table));
            const auto items = check_three_color_consequences(p);
            if (*csv) {
                write_text("", items_csv(items));
                return;
            }
            Json j = envelope("ledger_three_color");
            j["k"] = *k;
            j["eta_lo"] = rational(p.eta_lo);
            j["eta_hi"] = rational(p.eta_hi);
            j["items"] = items_json(items);
            write_text("", dump(j));
        });
    }
    {
        std::string names;
        for (const auto& n : bound_calculator_names())
            names += (names.empty() ? "" : ", ") + n;
        auto* sub = cmd->add_subcommand("bound", "Evaluate a named bound: " + names);
        auto name = std::make_shared<std::string>();
        auto args = std::make_shared<std::vector<long>>();
        auto table = std::make_shared<std::string>("builtin");
        sub->add_option("name", *name)->required();
        sub->add_option("args", *args, "Integer arguments");
        sub->add_option("--table", *table)->capture_default_str();
        sub->callback([=] {
            const auto b = bound_calculator(*name, *args, load_table(*table));
            Json j = envelope("ledger_bound");
            j["name"] = b.name;
            j["args"] = *args;
            j["log2_value"] = log2_json(b.value.log2_value());
            j["exact"] = b.exact ? rational(*b.exact) : Json(nullptr);
            j["consistent"] = b.consistent ? Json(*b.consistent) : Json(nullptr);
            j["note"] = b.note;
            write_text("", dump(j));
        });
    }
}

} // namespace rml::cli
