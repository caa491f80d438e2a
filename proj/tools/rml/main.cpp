#include "commands.hpp"
#include "report.hpp"

#include "rml/error.hpp"
#include "rml/parallel.hpp"

#include <iostream>

namespace {

enum ExitCode {
    kUsage = 2,
    kParse = 3,
    kPrecondition = 4,
    kBudget = 5,
    kSizeCap = 6,
    kRuntime = 7,
    kInternal = 70,
};

int fail(int code, const std::string& type, const std::string& message, std::optional<std::size_t> position = {})
{
    rml::cli::Json j;
    j["error"] = type;
    j["message"] = message;
    if (position)
        j["position"] = *position;
    j["exit_code"] = code;
    std::cerr << j.dump() << '\n';
    return code;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"rml: colourings of complete graphs, monochromatic copy counts and Ramsey checks"};
    app.set_version_flag("--version", rml::cli::kToolVersion);
    app.require_subcommand(1);
    int threads = 0;
    app.add_option("--threads", threads, "Worker threads (default $RML_THREADS, else all cores)")
        ->check(CLI::NonNegativeNumber);
    app.parse_complete_callback([&] {
        if (threads > 0)
            rml::set_default_threads(threads);
    });

    rml::cli::add_construct(app);
    rml::cli::add_count(app);
    rml::cli::add_goodman(app);
    rml::cli::add_minimize(app);
    rml::cli::add_ramsey(app);
    rml::cli::add_ledger(app);
    rml::cli::add_experiment(app);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        return fail(kUsage, "usage", e.what());
    } catch (const rml::ParseError& e) {
        return fail(kParse, "parse", e.what(), e.position());
    } catch (const rml::PreconditionError& e) {
        return fail(kPrecondition, "precondition", e.what());
    } catch (const rml::BudgetExceeded& e) {
        return fail(kBudget, "budget_exceeded", std::string(e.what()) + " (required " + e.required() + ")");
    } catch (const rml::SizeCapExceeded& e) {
        return fail(kSizeCap, "size_cap", e.what());
    } catch (const rml::Error& e) {
        return fail(kRuntime, "runtime", e.what());
    } catch (const std::exception& e) {
        return fail(kInternal, "internal", e.what());
    }
    return 0;
}
