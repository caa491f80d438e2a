#include "report.hpp"

namespace rml::cli {

Json envelope(const std::string& kind)
{
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["kind"] = kind;
    return j;
}

Json big(const BigInt& v) { return v.str(); }

Json rational(const Rational& v)
{
    return Json{{"exact", to_string(v)}, {"approx", to_double(v)}};
}

Json log2_json(const LogReal& v)
{
    if (isinf(v))
        return v < 0 ? "-inf" : "inf";
    return format_log2(v, 17);
}

Json coloring_json(const ColoredComplete& c)
{
    return Json{{"n", c.n()}, {"q", c.q()}, {"colors", c.colors()}};
}

Json count_json(const CountReport& r)
{
    Json j;
    j["n"] = r.n;
    j["t"] = r.t;
    Json per = Json::array();
    for (const auto& v : r.per_color)
        per.push_back(big(v));
    j["per_color"] = per;
    j["total"] = big(r.total);
    if (auto d = r.density())
        j["density"] = rational(*d);
    else
        j["density"] = nullptr;
    if (r.per_vertex) {
        Json pv = Json::array();
        for (const auto& v : *r.per_vertex)
            pv.push_back(big(v));
        j["per_vertex"] = pv;
    }
    return j;
}

Json verdict_json(const RamseyVerdict& v)
{
    Json j;
    j["valid"] = v.valid;
    if (!v.valid) {
        j["color"] = v.color;
        j["witness"] = v.witness;
    }
    return j;
}

Json ledger_item_json(const LedgerItem& it)
{
    Json j;
    j["name"] = it.name;
    j["statement"] = it.statement;
    j["verdict"] = to_string(it.verdict);
    j["lhs_log2"] = log2_json(it.lhs_log2);
    j["rhs_log2"] = log2_json(it.rhs_log2);
    j["exact"] = it.exact ? Json(to_string(*it.exact)) : Json(nullptr);
    if (!it.exact_note.empty())
        j["exact_note"] = it.exact_note;
    return j;
}

Json interval_json(const Interval& i) { return Json{{"lo", i.lo}, {"hi", i.hi}}; }

Json partition_json(const Partition& p) { return p.parts(); }

Json count_report(const std::string& spec, const Pattern& h, const ColoredComplete& chi, const CountReport& r)
{
    Json j = envelope("count");
    j["pattern"] = Json{{"spec", spec},
                        {"t", h.order()},
                        {"edges", h.edge_count()},
                        {"chromatic_number", h.chromatic_number()},
                        {"connected", h.connected()}};
    j["report"] = count_json(r);
    j["random_expectation"] = rational(random_expectation(h, chi.n(), chi.q()));
    return j;
}

Json exhaustive_report(const std::string& spec, int n, int q, const ExhaustiveOptions& o, const ExhaustiveResult& r)
{
    Json j = envelope("minimize_exhaustive");
    j["pattern"] = spec;
    j["n"] = n;
    j["q"] = q;
    j["modulo_symmetry"] = o.modulo_symmetry;
    j["min_count"] = big(r.min_count);
    j["enumerated"] = r.enumerated;
    j["raw_minimizers"] = r.raw_minimizers;
    j["complete"] = r.complete;
    j["dedup_certified"] = r.dedup_certified;
    Json mins = Json::array();
    for (const auto& c : r.minimizers)
        mins.push_back(coloring_json(c));
    j["minimizers"] = mins;
    return j;
}

Json local_search_report(const std::string& spec, const std::string& policy, const LocalSearchResult& r)
{
    Json j = envelope("minimize_local");
    j["pattern"] = spec;
    j["policy"] = policy;
    j["initial_total"] = big(r.initial_total);
    j["final_total"] = big(r.final_total);
    j["moves"] = r.trace.size();
    j["local_optimum"] = r.local_optimum;
    Json tr = Json::array();
    for (const auto& e : r.trace)
        tr.push_back(Json{{"step", e.step}, {"move", e.move}, {"delta", big(e.delta)}, {"total", big(e.total)}});
    j["trace"] = tr;
    j["final_coloring"] = coloring_json(r.final_coloring);
    return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

} // namespace rml::cli
