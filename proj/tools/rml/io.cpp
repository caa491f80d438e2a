#include "commands.hpp"

#include "rml/coloring_io.hpp"
#include "rml/error.hpp"
#include "rml/ramsey_tools.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace rml::cli {

void write_text(const std::string& path, const std::string& text)
{
    if (path.empty() || path == "-") {
        std::cout << text;
        std::cout.flush();
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw Error("cannot open '" + path + "' for writing");
    out << text;
    if (!out)
        throw Error("write to '" + path + "' failed");
}

std::string read_text(const std::string& path)
{
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

ColoredComplete load_coloring_arg(const std::string& path) { return read_coloring(read_text(path)); }

std::vector<int> parse_int_list(const std::string& text, const char* what)
{
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    std::size_t pos = 0;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            int v = std::stoi(item, &used);
            if (used != item.size())
                throw std::invalid_argument(item);
            out.push_back(v);
        } catch (const std::exception&) {
            throw ParseError(std::string("bad integer '") + item + "' in " + what, pos);
        }
        pos += item.size() + 1;
    }
    if (out.empty())
        throw ParseError(std::string("empty ") + what, 0);
    return out;
}

std::vector<int> parse_forbidden(const std::string& text)
{
    std::string normalised;
    std::stringstream ss(text);
    std::string item;
    bool first = true;
    while (std::getline(ss, item, ',')) {
        if (!first)
            normalised += ',';
        first = false;
        normalised += (item == "inf" || item == "none") ? "0" : item;
    }
    auto out = parse_int_list(normalised, "forbidden list");
    for (int v : out)
        if (v < 0)
            throw ParseError("forbidden sizes must be positive (or inf)", 0);
    return out;
}

RamseyTable load_table(const std::string& spec)
{
    auto table = RamseyTable::builtin();
    if (spec != "builtin")
        table.load(read_text(spec));
    return table;
}

} // namespace rml::cli
