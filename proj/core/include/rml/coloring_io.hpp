#pragma once

#include "rml/coloring.hpp"

#include <string>
#include <string_view>

namespace rml {

// "qcoloring v1" text format:
//   qcoloring v1
//   <n> <q>
//   <n(n-1)/2 colours in upper-triangular pair order, single-space separated>
// Colour 0 = red, 1 = blue, 2 = yellow. The writer emits no trailing newline;
// the reader accepts any whitespace layout for the colour list.

std::string write_coloring(const ColoredComplete& c);
ColoredComplete read_coloring(std::string_view text);

void save_coloring(const std::string& path, const ColoredComplete& c);
ColoredComplete load_coloring(const std::string& path);

} // namespace rml
