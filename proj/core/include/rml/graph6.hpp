#pragma once

#include "rml/graph.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace rml {

/// Largest order representable with the single-byte graph6 header.
inline constexpr int kGraph6MaxOrder = 62;

/// Decodes one graph6 string (no ">>graph6<<" header, no newline).
/// Throws ParseError with the offending 0-based byte offset.
Graph graph6_decode(std::string_view text);

std::string graph6_encode(const Graph& g);

/// One graph per non-empty line; a leading ">>graph6<<" header is skipped.
std::vector<Graph> graph6_read_file(const std::string& path);

} // namespace rml
