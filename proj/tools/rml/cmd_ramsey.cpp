#include "commands.hpp"

#include "report.hpp"
#include "rml/coloring_io.hpp"
#include "rml/error.hpp"
#include "rml/graph6.hpp"
#include "rml/ramsey_tools.hpp"

#include <memory>

namespace rml::cli {

namespace {

Graph first_graph(const std::string& path)
{
    auto graphs = graph6_read_file(path);
    if (graphs.empty())
        throw ParseError("no graph6 string in '" + path + "'", 0);
    return std::move(graphs.front());
}

Json edge_pair(int i, int j) { return Json::array({i, j}); }

} // namespace

void add_ramsey(CLI::App& app)
{
    auto* cmd = app.add_subcommand("ramsey", "Ramsey and blowup structure checks (vertices 0-indexed)");
    cmd->require_subcommand(1);

    {
        auto* sub = cmd->add_subcommand("verify", "Check that colour c has no clique of size forbidden[c]");
        auto coloring = std::make_shared<std::string>(), forbidden = std::make_shared<std::string>();
        sub->add_option("--coloring", *coloring)->required();
        sub->add_option("--forbidden", *forbidden, "Per-colour sizes, e.g. 3,4,inf")->required();
        sub->callback([=] {
            const auto chi = load_coloring_arg(*coloring);
            const auto f = parse_forbidden(*forbidden);
            Json j = envelope("ramsey_verify");
            j["n"] = chi.n();
            j["q"] = chi.q();
            j["forbidden"] = f;
            j["verdict"] = verdict_json(verify_ramsey(chi, f));
            write_text("", dump(j));
        });
    }
    {
        auto* sub = cmd->add_subcommand("extend", "All valid extensions by one new vertex (appended last)");
        auto coloring = std::make_shared<std::string>(), forbidden = std::make_shared<std::string>();
        auto budget = std::make_shared<std::uint64_t>(kExtensionBudget);
        sub->add_option("--coloring", *coloring)->required();
        sub->add_option("--forbidden", *forbidden)->required();
        sub->add_option("--budget", *budget, "Maximum q^n candidate extensions")->capture_default_str();
        sub->callback([=] {
            const auto chi = load_coloring_arg(*coloring);
            const auto f = parse_forbidden(*forbidden);
            const auto ext = enumerate_extensions(chi, f, *budget);
            Json j = envelope("ramsey_extend");
            j["n"] = chi.n();
            j["forbidden"] = f;
            j["count"] = ext.size();
            Json list = Json::array();
            for (const auto& e : ext) {
                std::vector<int> edges;
                for (int v = 0; v < chi.n(); ++v)
                    edges.push_back(e.color(v, chi.n()));
                list.push_back(edges);
            }
            j["extensions"] = list;
            write_text("", dump(j));
        });
    }
    {
        auto* sub = cmd->add_subcommand("diff-g6", "Edges present in exactly one of two graph6 graphs");
        auto a = std::make_shared<std::string>(), b = std::make_shared<std::string>();
        sub->add_option("a", *a, "graph6 file")->required();
        sub->add_option("b", *b, "graph6 file")->required();
        sub->callback([=] {
            const Graph ga = first_graph(*a), gb = first_graph(*b);
            if (ga.order() != gb.order())
                throw PreconditionError("graphs have different orders");
            const auto diff = graph6_diff(ga, gb);
            Json j = envelope("ramsey_diff_g6");
            j["n"] = ga.order();
            j["edges_a"] = ga.edge_count();
            j["edges_b"] = gb.edge_count();
            j["differing_edges"] = diff.size();
            j["summary"] = std::to_string(diff.size()) + (diff.size() == 1 ? " differing edge" : " differing edges");
            Json pairs = Json::array();
            for (auto [i, k] : diff)
                pairs.push_back(Json{{"zero_indexed", edge_pair(i, k)},
                                     {"one_indexed", edge_pair(i + 1, k + 1)},
                                     {"in", ga.has_edge(i, k) ? "a" : "b"}});
            j["pairs"] = pairs;
            write_text("", dump(j));
        });
    }
    {
        auto* sub = cmd->add_subcommand("clique", "Clique and independence numbers of a graph6 graph");
        auto g6 = std::make_shared<std::string>();
        sub->add_option("file", *g6, "graph6 file")->required();
        sub->callback([=] {
            const Graph g = first_graph(*g6);
            const auto c = max_clique(g);
            const auto i = max_clique(g.complement());
            Json j = envelope("ramsey_clique");
            j["n"] = g.order();
            j["clique_number"] = c.size;
            j["clique_witness"] = c.witness;
            j["independence_number"] = i.size;
            j["independent_witness"] = i.witness;
            write_text("", dump(j));
        });
    }
    {
        auto* sub = cmd->add_subcommand("blowup-like", "Some colour is p near-equal cliques, the rest avoid K_k");
        auto coloring = std::make_shared<std::string>(), forbidden = std::make_shared<std::string>();
        auto k = std::make_shared<int>(0), p = std::make_shared<int>();
        sub->add_option("--coloring", *coloring)->required();
        sub->add_option("--p", *p, "Number of cliques")->required();
        auto* ko = sub->add_option("--k", *k, "Forbidden clique size for the other colours");
        auto* fo = sub->add_option("--forbidden", *forbidden, "Off-diagonal per-colour sizes");
        ko->excludes(fo);
        sub->callback([=] {
            const auto chi = load_coloring_arg(*coloring);
            if (*k == 0 && forbidden->empty())
                throw PreconditionError("give --k or --forbidden");
            const auto cert = forbidden->empty() ? is_ramsey_blowup_like(chi, *k, *p)
                                                 : is_ramsey_blowup_like(chi, parse_forbidden(*forbidden), *p);
            Json j = envelope("ramsey_blowup_like");
            j["holds"] = cert.holds;
            j["color"] = cert.color;
            j["parts"] = cert.parts;
            j["conditional_on_p"] = cert.conditional_on_p;
            j["off_diagonal"] = cert.off_diagonal;
            j["reason"] = cert.reason;
            write_text("", dump(j));
        });
    }
    {
        auto* sub = cmd->add_subcommand("is-blowup", "Whether a colouring is a blowup along contiguous parts");
        auto coloring = std::make_shared<std::string>(), sizes = std::make_shared<std::string>();
        sub->add_option("--coloring", *coloring)->required();
        sub->add_option("--sizes", *sizes, "Contiguous part sizes, e.g. 2,2,2")->required();
        sub->callback([=] {
            const auto chi = load_coloring_arg(*coloring);
            const auto part = Partition::contiguous(parse_int_list(*sizes, "part sizes"));
            const auto v = is_blowup(chi, part);
            Json j = envelope("ramsey_is_blowup");
            j["is_blowup"] = v.is_blowup;
            if (v.base)
                j["base"] = coloring_json(*v.base);
            else
                j["witness"] = Json{{"u", v.u}, {"u_prime", v.u_prime}, {"v", v.v}};
            write_text("", dump(j));
        });
    }
    {
        auto* sub = cmd->add_subcommand("iso", "Isomorphism up to vertex and colour permutation (n <= 8)");
        auto a = std::make_shared<std::string>(), b = std::make_shared<std::string>();
        sub->add_option("a", *a, "qcoloring file")->required();
        sub->add_option("b", *b, "qcoloring file")->required();
        sub->callback([=] {
            Json j = envelope("ramsey_iso");
            j["isomorphic"] = iso_check_small(load_coloring_arg(*a), load_coloring_arg(*b));
            write_text("", dump(j));
        });
    }
}

} // namespace rml::cli
