#pragma once

#include "rml/pattern.hpp"

#include <string>

namespace rml {

/// Parses the pattern mini-language:
///   clique:k  clique-pendants:k:s1,...,sk  starburst:k:s  pineapple:k:s
///   lollipop:k:len  g6:<graph6>
/// Throws ParseError (position = byte offset in `spec`) on malformed input.
Pattern parse_pattern(const std::string& spec);

} // namespace rml
