#include "rml/known_instances.hpp"

namespace rml {

ColoredComplete r34_k8_coloring(bool chord26_red, bool chord37_red)
{
    ColoringState s(8, 2, 1);
    for (int i = 0; i < 8; ++i)
        s.set_color(i, (i + 1) % 8, 0);
    s.set_color(0, 4, 0);
    s.set_color(1, 5, 0);
    if (chord26_red)
        s.set_color(2, 6, 0);
    if (chord37_red)
        s.set_color(3, 7, 0);
    return ColoredComplete(s);
}

} // namespace rml
