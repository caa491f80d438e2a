#pragma once

#include "json.hpp"
#include "rml/coloring.hpp"
#include "rml/counting.hpp"
#include "rml/ledger.hpp"
#include "rml/optimize.hpp"
#include "rml/partition.hpp"
#include "rml/ramsey_tools.hpp"

#include <string>

namespace rml::cli {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1.0";
inline constexpr const char* kToolVersion = "0.1.0";

/// Envelope shared by every report: schema version first, then the report kind.
Json envelope(const std::string& kind);

Json big(const BigInt& v);
Json rational(const Rational& v);
Json log2_json(const LogReal& v);

Json coloring_json(const ColoredComplete& c);
Json count_json(const CountReport& r);
Json verdict_json(const RamseyVerdict& v);
Json ledger_item_json(const LedgerItem& it);
Json interval_json(const Interval& i);
Json partition_json(const Partition& p);

/// Full documents shared by the single commands and `experiment run`.
Json count_report(const std::string& spec, const Pattern& h, const ColoredComplete& chi, const CountReport& r);
Json exhaustive_report(const std::string& spec, int n, int q, const ExhaustiveOptions& o, const ExhaustiveResult& r);
Json local_search_report(const std::string& spec, const std::string& policy, const LocalSearchResult& r);

/// Pretty JSON text with a trailing newline.
std::string dump(const Json& j);

} // namespace rml::cli
