#include "commands.hpp"

#include "report.hpp"
#include "rml/coloring_io.hpp"
#include "rml/constructors.hpp"
#include "rml/counting.hpp"
#include "rml/error.hpp"
#include "rml/optimize.hpp"
#include "rml/parallel.hpp"
#include "rml/pattern_spec.hpp"

#include <boost/version.hpp>
#include <openssl/evp.h>

#include <chrono>
#include <ctime>
#include <filesystem>
#include <map>
#include <memory>
#include <set>
#include <sstream>

namespace fs = std::filesystem;

namespace rml::cli {

namespace {

class Config {
public:
    static Config parse(const std::string& text)
    {
        Config c;
        std::istringstream in(text);
        std::string line;
        std::size_t lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            if (auto hash = line.find('#'); hash != std::string::npos)
                line.erase(hash);
            line = trim(line);
            if (line.empty())
                continue;
            const auto eq = line.find('=');
            if (eq == std::string::npos)
                throw ParseError("expected key = value", lineno);
            const std::string key = trim(line.substr(0, eq));
            if (key.empty())
                throw ParseError("empty key", lineno);
            if (c.values_.count(key))
                throw ParseError("duplicate key '" + key + "'", lineno);
            c.values_[key] = trim(line.substr(eq + 1));
            c.lines_[key] = lineno;
        }
        return c;
    }

    std::string get(const std::string& key, const std::string& fallback) const
    {
        used_.insert(key);
        auto it = values_.find(key);
        return it == values_.end() ? fallback : it->second;
    }

    std::string require(const std::string& key) const
    {
        used_.insert(key);
        auto it = values_.find(key);
        if (it == values_.end())
            throw ParseError("missing key '" + key + "'", 0);
        return it->second;
    }

    long integer(const std::string& key, std::optional<long> fallback = std::nullopt) const
    {
        const std::string v = fallback ? get(key, std::to_string(*fallback)) : require(key);
        try {
            std::size_t used = 0;
            long out = std::stol(v, &used);
            if (used == v.size())
                return out;
        } catch (const std::exception&) {
        }
        throw ParseError("key '" + key + "' needs an integer, got '" + v + "'", line_of(key));
    }

    std::uint64_t unsigned_integer(const std::string& key, std::uint64_t fallback) const
    {
        const std::string v = get(key, std::to_string(fallback));
        try {
            std::size_t used = 0;
            auto out = std::stoull(v, &used);
            if (used == v.size() && v.front() != '-')
                return out;
        } catch (const std::exception&) {
        }
        throw ParseError("key '" + key + "' needs a nonnegative integer, got '" + v + "'", line_of(key));
    }

    bool boolean(const std::string& key, bool fallback) const
    {
        const std::string v = get(key, fallback ? "true" : "false");
        if (v == "true")
            return true;
        if (v == "false")
            return false;
        throw ParseError("key '" + key + "' needs true or false, got '" + v + "'", line_of(key));
    }

    /// Keys never read by the pipeline are almost always typos.
    void reject_unused() const
    {
        for (const auto& [key, value] : values_)
            if (!used_.count(key))
                throw ParseError("unknown key '" + key + "'", line_of(key));
    }

    const std::map<std::string, std::string>& values() const { return values_; }

private:
    static std::string trim(const std::string& s)
    {
        const auto b = s.find_first_not_of(" \t\r");
        if (b == std::string::npos)
            return "";
        const auto e = s.find_last_not_of(" \t\r");
        return s.substr(b, e - b + 1);
    }

    std::size_t line_of(const std::string& key) const
    {
        auto it = lines_.find(key);
        return it == lines_.end() ? 0 : it->second;
    }

    std::map<std::string, std::string> values_;
    std::map<std::string, std::size_t> lines_;
    mutable std::set<std::string> used_;
};

std::string sha256_hex(const std::string& data)
{
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1)
        throw Error("SHA-256 failed");
    static const char* hex = "0123456789abcdef";
    std::string out;
    for (unsigned i = 0; i < len; ++i) {
        out += hex[digest[i] >> 4];
        out += hex[digest[i] & 15];
    }
    return out;
}

std::string utc_timestamp()
{
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

ColoredComplete construct_from(const Config& c, const fs::path& base_dir, std::uint64_t seed)
{
    const std::string kind = c.require("construct");
    if (kind == "turan")
        return turan_coloring(c.integer("construct.n"), c.integer("construct.k"));
    if (kind == "random")
        return random_coloring(c.integer("construct.n"), c.integer("construct.q", 2), seed);
    if (kind == "pentagon")
        return pentagon_coloring();
    if (kind == "blowup")
        return ramsey_blowup(load_coloring_arg((base_dir / c.require("construct.base")).string()),
                             c.integer("construct.n"));
    if (kind == "file")
        return load_coloring_arg((base_dir / c.require("construct.path")).string());
    throw ParseError("construct must be turan, random, pentagon, blowup or file, got '" + kind + "'", 0);
}

struct Artifact {
    std::string name;
    std::string text;
};

} // namespace

void add_experiment(CLI::App& app)
{
    auto* cmd = app.add_subcommand("experiment", "Declared construct, count, minimise pipelines");
    cmd->require_subcommand(1);
    auto* sub = cmd->add_subcommand("run", "Run a pipeline from a key=value config file (see docs/experiment-config.md)");
    auto config_path = std::make_shared<std::string>(), out_dir = std::make_shared<std::string>();
    sub->add_option("config", *config_path)->required();
    sub->add_option("--out-dir", *out_dir, "Output directory (overrides output_dir in the config)");
    sub->callback([=] {
        const std::string config_text = read_text(*config_path);
        const Config c = Config::parse(config_text);
        const fs::path base_dir = fs::path(*config_path).parent_path();

        const std::string name = c.require("name");
        const std::uint64_t seed = c.unsigned_integer("seed", 0);
        fs::path dir = out_dir->empty() ? fs::path(c.get("output_dir", name + ".out")) : fs::path(*out_dir);
        if (out_dir->empty() && dir.is_relative())
            dir = base_dir / dir;

        std::vector<Artifact> artifacts;
        Json summary = envelope("experiment_run");
        summary["name"] = name;
        summary["seed"] = std::to_string(seed);

        const ColoredComplete chi = construct_from(c, base_dir, seed);
        artifacts.push_back({"coloring.qcol", write_coloring(chi)});
        summary["construct"] = Json{{"kind", c.get("construct", "")}, {"n", chi.n()}, {"q", chi.q()}};

        const std::string spec = c.require("pattern");
        const Pattern h = parse_pattern(spec);
        const auto rep = count_mono(h, chi, c.boolean("count.per_vertex", false));
        artifacts.push_back({"count.json", dump(count_report(spec, h, chi, rep))});
        summary["count_total"] = big(rep.total);

        const std::string mode = c.get("minimize", "none");
        if (mode == "local") {
            LocalSearchOptions o;
            apply_moves(c.get("minimize.moves", "edge_recolor"), o);
            const std::string policy = c.get("minimize.policy", "steepest");
            o.policy = parse_policy(policy);
            o.budget = c.unsigned_integer("minimize.budget", o.budget);
            const auto r = local_search(h, chi, o);
            artifacts.push_back({"minimize.json", dump(local_search_report(spec, policy, r))});
            artifacts.push_back({"trace.jsonl", trace_jsonl(r.trace)});
            artifacts.push_back({"final.qcol", write_coloring(r.final_coloring)});
            summary["minimize"] = Json{{"mode", mode}, {"final_total", big(r.final_total)}};
        } else if (mode == "exhaustive") {
            ExhaustiveOptions o;
            o.modulo_symmetry = c.boolean("minimize.modulo_symmetry", false);
            o.budget = c.unsigned_integer("minimize.budget", o.budget);
            const int n = c.integer("minimize.n", chi.n());
            const int q = c.integer("minimize.q", chi.q());
            const auto r = exhaustive_min(h, n, q, o);
            artifacts.push_back({"minimize.json", dump(exhaustive_report(spec, n, q, o, r))});
            summary["minimize"] = Json{{"mode", mode}, {"min_count", big(r.min_count)}};
        } else if (mode != "none") {
            throw ParseError("minimize must be none, local or exhaustive, got '" + mode + "'", 0);
        }
        c.reject_unused();

        fs::create_directories(dir);
        Json files = Json::array();
        for (const auto& a : artifacts) {
            write_text((dir / a.name).string(), a.text);
            files.push_back(Json{{"path", a.name}, {"sha256", sha256_hex(a.text)}});
        }
        summary["files"] = files;

        Json manifest = envelope("experiment_manifest");
        manifest["name"] = name;
        manifest["tool_version"] = kToolVersion;
        manifest["versions"] = Json{{"compiler", __VERSION__},
                                    {"cplusplus", static_cast<long>(__cplusplus)},
                                    {"boost", BOOST_LIB_VERSION},
                                    {"json_schema", kSchemaVersion}};
        manifest["seed"] = std::to_string(seed);
        manifest["threads"] = default_threads();
        manifest["config"] = Json{{"path", *config_path}, {"sha256", sha256_hex(config_text)}, {"values", c.values()}};
        manifest["files"] = files;
        manifest["created_utc"] = utc_timestamp();
        write_text((dir / "manifest.json").string(), dump(manifest));

        summary["output_dir"] = dir.string();
        write_text("", dump(summary));
    });
}

} // namespace rml::cli
