#pragma once

#include "rml/coloring.hpp"

#include <string_view>

namespace rml {

/// Two 42-vertex graphs with clique and independence number 4 that differ
/// in the single pair (31, 39).
inline constexpr std::string_view kR55Graph42A =
    "i?Udjp^j}?W@`bIRhHgk\\SY~ECeQS\\CniuKP]RQLdsX~F?b|L?h_SvygSNziSVdZ`P|"
    "CxamFHKax[PhPyVEYxAqkY\\_xCfYxNscNtb]k_uFsLruaJwr`nPMMc]\\qGhwyh"
    "fLjTELQ}T]h@qtuW";
inline constexpr std::string_view kR55Graph42B =
    "i?Udjp^j}?W@`bIRhHgk\\SY~ECeQS\\CniuKP]RQLdsX~F?b|L?h_SvygSNziSVdZ`P|"
    "CxamFHKax[PhPyVEYxAqkY\\_xCfYxNscNtb]k_uFsLruaJwr`nPMMc]\\qGhwyh"
    "dLjTELQ}T]h@qtuW";

/// Red/blue colouring of K_8 with no red K_3 and no blue K_4: red is the
/// 8-cycle 0..7 plus the chords {0,4}, {1,5}; the chords {2,6} and {3,7}
/// are red or blue as requested.
ColoredComplete r34_k8_coloring(bool chord26_red, bool chord37_red);

} // namespace rml
