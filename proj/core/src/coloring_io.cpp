#include "rml/coloring_io.hpp"

#include "rml/error.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace rml {

namespace {

constexpr std::string_view kMagic = "qcoloring v1";

struct Token {
    std::string_view text;
    std::size_t line;
};

// Splits on whitespace while tracking 1-based line numbers.
std::vector<Token> tokenize(std::string_view text, std::size_t first_line, std::size_t start)
{
    std::vector<Token> out;
    std::size_t line = first_line;
    std::size_t i = start;
    while (i < text.size()) {
        char c = text[i];
        if (c == '\n') {
            ++line;
            ++i;
            continue;
        }
        if (c == ' ' || c == '\t' || c == '\r') {
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j < text.size() && text[j] != ' ' && text[j] != '\t' && text[j] != '\r' && text[j] != '\n')
            ++j;
        out.push_back({text.substr(i, j - i), line});
        i = j;
    }
    return out;
}

long parse_int(const Token& t)
{
    long v = 0;
    auto [p, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
    if (ec != std::errc() || p != t.text.data() + t.text.size())
        throw ParseError("qcoloring: line " + std::to_string(t.line) + ": expected integer, got '" +
                             std::string(t.text) + "'",
                         t.line);
    return v;
}

} // namespace

std::string write_coloring(const ColoredComplete& c)
{
    std::string out(kMagic);
    out += '\n';
    out += std::to_string(c.n()) + ' ' + std::to_string(c.q()) + '\n';
    bool first = true;
    for (auto x : c.colors()) {
        if (!first)
            out += ' ';
        out += std::to_string(x);
        first = false;
    }
    return out;
}

ColoredComplete read_coloring(std::string_view text)
{
    std::size_t eol = text.find('\n');
    std::string_view magic = text.substr(0, eol);
    if (!magic.empty() && magic.back() == '\r')
        magic.remove_suffix(1);
    if (magic != kMagic)
        throw ParseError("qcoloring: line 1: expected magic 'qcoloring v1'", 1);
    if (eol == std::string_view::npos)
        throw ParseError("qcoloring: line 2: missing header 'n q'", 2);
    auto tokens = tokenize(text, 2, eol + 1);
    if (tokens.size() < 2)
        throw ParseError("qcoloring: line 2: missing header 'n q'", 2);
    long n = parse_int(tokens[0]);
    long q = parse_int(tokens[1]);
    if (tokens[0].line != 2 || tokens[1].line != 2)
        throw ParseError("qcoloring: line 2: header must be 'n q' on one line", 2);
    if (n < 1 || q < 1 || q > 255)
        throw ParseError("qcoloring: line 2: need n >= 1 and 1 <= q <= 255", 2);
    const std::size_t expected = pair_count(static_cast<int>(n));
    if (tokens.size() - 2 != expected) {
        std::size_t line = tokens.size() > 2 + expected ? tokens[2 + expected].line : tokens.back().line;
        throw ParseError("qcoloring: line " + std::to_string(line) + ": expected " + std::to_string(expected) +
                             " colours, found " + std::to_string(tokens.size() - 2),
                         line);
    }
    std::vector<std::uint8_t> colors;
    colors.reserve(expected);
    for (std::size_t i = 2; i < tokens.size(); ++i) {
        long c = parse_int(tokens[i]);
        if (c < 0 || c >= q)
            throw ParseError("qcoloring: line " + std::to_string(tokens[i].line) + ": colour " +
                                 std::to_string(c) + " out of range [0," + std::to_string(q) + ")",
                             tokens[i].line);
        colors.push_back(static_cast<std::uint8_t>(c));
    }
    return ColoredComplete(static_cast<int>(n), static_cast<int>(q), std::move(colors));
}

void save_coloring(const std::string& path, const ColoredComplete& c)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw Error("qcoloring: cannot write " + path);
    out << write_coloring(c);
}

ColoredComplete load_coloring(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error("qcoloring: cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return read_coloring(ss.str());
}

} // namespace rml
