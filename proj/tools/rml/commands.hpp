#pragma once

#include "CLI11.hpp"
#include "rml/coloring.hpp"
#include "rml/optimize.hpp"
#include "rml/ramsey_table.hpp"

#include <string>
#include <vector>

namespace rml::cli {

void add_construct(CLI::App& app);
void add_count(CLI::App& app);
void add_goodman(CLI::App& app);
void add_minimize(CLI::App& app);
void add_ramsey(CLI::App& app);
void add_ledger(CLI::App& app);
void add_experiment(CLI::App& app);

/// Writes to `path`, or stdout when path is empty or "-".
void write_text(const std::string& path, const std::string& text);
std::string read_text(const std::string& path);

ColoredComplete load_coloring_arg(const std::string& path);

/// "3,4,inf": per-colour forbidden clique sizes; "inf" or 0 disables a colour.
std::vector<int> parse_forbidden(const std::string& text);
std::vector<int> parse_int_list(const std::string& text, const char* what);

/// "steepest" or "first".
Policy parse_policy(const std::string& s);
/// Comma list of edge_recolor, vertex_clone; sets exactly those moves.
void apply_moves(const std::string& s, LocalSearchOptions& options);

/// "builtin", or a table file loaded on top of the built-in values.
RamseyTable load_table(const std::string& spec);

} // namespace rml::cli
