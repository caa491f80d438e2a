#include "rml/graph6.hpp"

#include "rml/error.hpp"

#include <fstream>
#include <string>

namespace rml {

Graph graph6_decode(std::string_view text)
{
    if (text.empty())
        throw ParseError("graph6: empty input", 0);
    for (std::size_t i = 0; i < text.size(); ++i) {
        auto b = static_cast<unsigned char>(text[i]);
        if (b < 63 || b > 126)
            throw ParseError("graph6: byte " + std::to_string(b) + " outside [63,126] at offset " +
                                 std::to_string(i),
                             i);
    }
    const int n = static_cast<unsigned char>(text[0]) - 63;
    if (n > kGraph6MaxOrder)
        throw ParseError("graph6: multi-byte header (n > 62) is not supported", 0);
    const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
    const std::size_t body = (bits + 5) / 6;
    if (text.size() != 1 + body)
        throw ParseError("graph6: expected " + std::to_string(1 + body) + " bytes for n = " +
                             std::to_string(n) + ", got " + std::to_string(text.size()),
                         std::min(text.size(), 1 + body));
    Graph g(n);
    std::size_t k = 0;
    // Column-major upper triangle: x(0,1), x(0,2), x(1,2), x(0,3), ...
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++k) {
            int byte = static_cast<unsigned char>(text[1 + k / 6]) - 63;
            if ((byte >> (5 - k % 6)) & 1)
                g.add_edge(i, j);
        }
    if (bits % 6 != 0) {
        int last = static_cast<unsigned char>(text.back()) - 63;
        int pad_mask = (1 << (6 - bits % 6)) - 1;
        if (last & pad_mask)
            throw ParseError("graph6: nonzero padding bits at offset " + std::to_string(text.size() - 1),
                             text.size() - 1);
    }
    return g;
}

std::string graph6_encode(const Graph& g)
{
    const int n = g.order();
    if (n > kGraph6MaxOrder)
        throw SizeCapExceeded("graph6: n = " + std::to_string(n) + " needs a multi-byte header");
    std::string out(1, static_cast<char>(n + 63));
    int acc = 0;
    int filled = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                filled = 0;
            }
        }
    if (filled)
        out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
    return out;
}

std::vector<Graph> graph6_read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw Error("graph6: cannot open " + path);
    std::vector<Graph> out;
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
            line.pop_back();
        std::string_view s = line;
        if (s.starts_with(">>graph6<<"))
            s.remove_prefix(10);
        if (s.empty())
            continue;
        out.push_back(graph6_decode(s));
    }
    return out;
}

} // namespace rml
