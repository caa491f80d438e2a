#include "commands.hpp"

#include "rml/coloring_io.hpp"
#include "rml/constructors.hpp"
#include "rml/error.hpp"
#include "rml/known_instances.hpp"

#include <memory>

namespace rml::cli {

namespace {

void emit(const std::string& out, const ColoredComplete& chi)
{
    std::string text = write_coloring(chi);
    if (out.empty() || out == "-")
        text += '\n';
    write_text(out, text);
}

bool parse_red_blue(const std::string& s)
{
    if (s == "red")
        return true;
    if (s == "blue")
        return false;
    throw ParseError("expected red or blue, got '" + s + "'", 0);
}

} // namespace

void add_construct(CLI::App& app)
{
    auto* cmd = app.add_subcommand("construct", "Build a colouring and write it in qcoloring format");
    cmd->require_subcommand(1);
    auto out = std::make_shared<std::string>();

    {
        auto* sub = cmd->add_subcommand("turan", "k-1 near-equal red cliques, blue between them");
        sub->add_option("-o,--out", *out, "Output file (default stdout)");
        auto n = std::make_shared<int>(), k = std::make_shared<int>();
        sub->add_option("--n", *n)->required();
        sub->add_option("--k", *k)->required();
        sub->callback([=] { emit(*out, turan_coloring(*n, *k)); });
    }
    {
        auto* sub = cmd->add_subcommand("blowup", "Blow a colouring up to n vertices, new colour inside parts");
        sub->add_option("-o,--out", *out, "Output file (default stdout)");
        auto base = std::make_shared<std::string>();
        auto n = std::make_shared<int>();
        sub->add_option("--base", *base, "qcoloring file")->required();
        sub->add_option("--n", *n)->required();
        sub->callback([=] { emit(*out, ramsey_blowup(load_coloring_arg(*base), *n)); });
    }
    {
        auto* sub = cmd->add_subcommand("lexprod", "Lexicographic product, inner colours shifted by q(outer)");
        sub->add_option("-o,--out", *out, "Output file (default stdout)");
        auto outer = std::make_shared<std::string>(), inner = std::make_shared<std::string>();
        sub->add_option("--outer", *outer)->required();
        sub->add_option("--inner", *inner)->required();
        sub->callback([=] { emit(*out, lex_product(load_coloring_arg(*outer), load_coloring_arg(*inner))); });
    }
    {
        auto* sub = cmd->add_subcommand("mixed", "s-blowup with the part of u split between two colourings");
        sub->add_option("-o,--out", *out, "Output file (default stdout)");
        auto c1 = std::make_shared<std::string>(), c2 = std::make_shared<std::string>();
        auto u = std::make_shared<int>(), s = std::make_shared<int>(2), split = std::make_shared<int>(1);
        sub->add_option("--chi1", *c1)->required();
        sub->add_option("--chi2", *c2)->required();
        sub->add_option("--u", *u, "Vertex where the colourings differ (0-indexed)")->required();
        sub->add_option("--s", *s, "Part size")->capture_default_str();
        sub->add_option("--split", *split, "Copies of u wired per chi1")->capture_default_str();
        sub->callback([=] {
            emit(*out, mixed_blowup(load_coloring_arg(*c1), load_coloring_arg(*c2), *u, *s, *split).coloring);
        });
    }
    {
        auto* sub = cmd->add_subcommand("random", "Uniform random colouring from a seeded splitmix64 stream");
        sub->add_option("-o,--out", *out, "Output file (default stdout)");
        auto n = std::make_shared<int>(), q = std::make_shared<int>(2);
        auto seed = std::make_shared<std::uint64_t>(0);
        sub->add_option("--n", *n)->required();
        sub->add_option("--q", *q)->capture_default_str();
        sub->add_option("--seed", *seed)->capture_default_str();
        sub->callback([=] { emit(*out, random_coloring(*n, *q, *seed)); });
    }
    {
        auto* sub = cmd->add_subcommand("pentagon", "Red 5-cycle, blue complementary 5-cycle");
        sub->add_option("-o,--out", *out, "Output file (default stdout)");
        sub->callback([=] { emit(*out, pentagon_coloring()); });
    }
    {
        auto* sub = cmd->add_subcommand("r34-k8", "K_8 with no red K_3 and no blue K_4 (chords {2,6}, {3,7} selectable)");
        sub->add_option("-o,--out", *out, "Output file (default stdout)");
        auto a = std::make_shared<std::string>("blue"), b = std::make_shared<std::string>("blue");
        sub->add_option("--chord26", *a, "red or blue")->capture_default_str();
        sub->add_option("--chord37", *b, "red or blue")->capture_default_str();
        sub->callback([=] { emit(*out, r34_k8_coloring(parse_red_blue(*a), parse_red_blue(*b))); });
    }
}

} // namespace rml::cli
