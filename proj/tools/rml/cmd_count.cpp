#include "commands.hpp"

#include "report.hpp"
#include "rml/constructors.hpp"
#include "rml/counting.hpp"
#include "rml/pattern_spec.hpp"

#include <memory>
#include <sstream>

namespace rml::cli {

void add_count(CLI::App& app)
{
    auto* cmd = app.add_subcommand("count", "Exact labeled monochromatic copies of a pattern");
    auto pattern = std::make_shared<std::string>(), coloring = std::make_shared<std::string>();
    auto per_vertex = std::make_shared<bool>(false), csv = std::make_shared<bool>(false);
    cmd->add_option("--pattern", *pattern, "clique:k, clique-pendants:k:s1,..., starburst:k:s, ...")->required();
    cmd->add_option("--coloring", *coloring, "qcoloring file ('-' for stdin)")->required();
    cmd->add_flag("--per-vertex", *per_vertex, "Also report m_v for every vertex");
    cmd->add_flag("--csv", *csv, "Per-vertex table as CSV instead of JSON");
    cmd->callback([=] {
        const Pattern h = parse_pattern(*pattern);
        const auto chi = load_coloring_arg(*coloring);
        const auto rep = count_mono(h, chi, *per_vertex || *csv);
        if (*csv) {
            std::ostringstream ss;
            ss << "vertex,m_v\n";
            for (std::size_t v = 0; v < rep.per_vertex->size(); ++v)
                ss << v << ',' << (*rep.per_vertex)[v].str() << '\n';
            write_text("", ss.str());
            return;
        }
        write_text("", dump(count_report(*pattern, h, chi, rep)));
    });
}

void add_goodman(CLI::App& app)
{
    auto* cmd = app.add_subcommand("goodman", "Triangle count from degrees, cross-checked against direct counting");
    auto coloring = std::make_shared<std::string>();
    cmd->add_option("--coloring", *coloring)->required();
    cmd->callback([=] {
        const auto chi = load_coloring_arg(*coloring);
        const BigInt identity = goodman_triangle_count(chi);
        const BigInt direct = count_mono(clique(3), chi).total;
        Json j = envelope("goodman");
        j["n"] = chi.n();
        j["identity_value"] = big(identity);
        j["count_mono"] = big(direct);
        j["agree"] = identity == direct;
        write_text("", dump(j));
    });
}

} // namespace rml::cli
