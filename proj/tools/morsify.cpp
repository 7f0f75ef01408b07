#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "morsify/corpus.hpp"
#include "morsify/errors.hpp"
#include "morsify/pipeline.hpp"

using namespace morsify;

namespace {

JobConfig load_job(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot open " + path);
    Json j;
    try {
        j = Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw InputError(std::string("malformed json: ") + e.what());
    }
    return job_from_json(j);
}

ReportFormat format_of(const std::string& name)
{
    return name == "json" ? ReportFormat::json : ReportFormat::text;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Stratified Morse numbers of general linear Morsifications"};
    app.require_subcommand(1);

    std::string input, format = "text", lambda;
    bool no_oracle = false, timings = false;
    std::optional<std::uint64_t> seed_override;

    auto* compute = app.add_subcommand("compute", "polar curve, image curve, Morse numbers and oracle check");
    compute->add_option("--input", input, "job json")->required();
    compute->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
    compute->add_flag("--no-oracle", no_oracle);
    compute->add_option("--seed-override", seed_override, "use this single seed");
    compute->add_flag("--timings", timings, "report stage timings");

    auto* oracle = app.add_subcommand("oracle", "numeric critical point count at one lambda");
    oracle->add_option("--input", input, "job json")->required();
    oracle->add_option("--lambda", lambda, "positive rational, e.g. 1/1000")->required();

    auto* selftest = app.add_subcommand("selftest", "run the built-in regression corpus");
    selftest->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    CLI11_PARSE(app, argc, argv);

    try {
        if (compute->parsed()) {
            JobConfig job = load_job(input);
            if (no_oracle)
                job.run_oracle = false;
            if (seed_override) {
                job.seeds = {*seed_override};
                job.linear_form.reset();
            }
            auto report = run_pipeline(job, RunOptions{timings, {}});
            std::cout << render_report(report, format_of(format));
            return report.exit_code();
        }
        if (oracle->parsed()) {
            JobConfig job = load_job(input);
            std::cout << run_oracle_only(job, parse_rational(lambda)).dump(2) << "\n";
            return 0;
        }
        if (selftest->parsed()) {
            auto result = run_selftest();
            if (format_of(format) == ReportFormat::json) {
                std::cout << result.json.dump(2) << "\n";
            } else {
                for (const auto& e : result.json["entries"]) {
                    std::cout << (e["pass"].get<bool>() ? "PASS " : "FAIL ") << e["name"].get<std::string>() << "  m =";
                    for (const auto& m : e["expected_m"])
                        std::cout << " " << m.dump();
                    std::cout << "\n";
                }
                std::cout << result.json["passed"].dump() << "/" << result.json["total"].dump() << " passed\n";
            }
            return result.passed ? 0 : 1;
        }
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return static_cast<int>(ExitCode::input);
    } catch (const ResourceCapExceeded& e) {
        std::cerr << "resource cap: " << e.what() << "\n";
        return static_cast<int>(ExitCode::resource_cap);
    } catch (const NotSupported& e) {
        std::cerr << "not supported: " << e.what() << "\n";
        return static_cast<int>(ExitCode::input);
    }
    return 0;
}
