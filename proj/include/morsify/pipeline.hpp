#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "morsify/oracle.hpp"
#include "morsify/reduction.hpp"

namespace morsify {

using Json = nlohmann::ordered_json;

struct StratumInput {
    std::string label;
    std::vector<std::string> closure;
    std::vector<std::string> boundary;
};

struct JobConfig {
    std::vector<std::string> ambient_vars;
    std::string f;
    // Empty means the single ambient stratum.
    std::vector<StratumInput> strata;
    std::optional<std::string> linear_form;
    std::vector<std::uint64_t> seeds{1, 2, 3};
    OracleConfig oracle;
    bool run_oracle = true;
};

// Throws InputError on missing, mistyped or unknown fields.
JobConfig job_from_json(const Json& j);
Json job_to_json(const JobConfig& job);

// Result of one stratum for one linear form.
struct StratumOutcome {
    std::string label;
    // CURVE, EMPTY, DEGENERATE or NOT_APPLICABLE.
    std::string polar_status;
    std::vector<std::string> polar_generators;
    std::optional<std::string> g;
    std::optional<PlaneCurveGerm> germ;
    std::optional<unsigned> m;
    std::vector<BranchDatum> branch_table;
    // Nonempty when this linear form is not general enough for the stratum.
    std::string genericity_failure;
};

struct LinearFormRun {
    // nullopt for an explicit linear form.
    std::optional<std::uint64_t> requested_seed;
    std::optional<std::uint64_t> seed_used;
    std::vector<std::uint64_t> rejected_seeds;
    LinearForm ell;
    std::string ell_text;
    std::vector<StratumOutcome> strata;

    bool failed() const;
};

struct OracleOutcome {
    // RAN, SKIPPED, NOT_SUPPORTED or NOT_FINITE.
    std::string status = "SKIPPED";
    OracleReport report;
    bool agrees = false;
};

struct MorseReport {
    JobConfig job;
    std::vector<LinearFormRun> runs;
    // One per stratum, for the first linear form.
    std::vector<OracleOutcome> oracle;
    bool genericity_pass = false;
    std::vector<std::string> genericity_notes;
    // Stage that ran out of Groebner budget, if any.
    std::optional<std::string> resource_cap;
    std::optional<std::map<std::string, double>> timings_ms;

    int exit_code() const;
};

enum class ExitCode { ok = 0, genericity = 2, oracle_mismatch = 3, resource_cap = 4, input = 5 };

struct RunOptions {
    bool record_timings = false;
    GroebnerLimits limits;
};

// Draws from derived seeds when a seed's linear form is degenerate for some stratum.
inline constexpr unsigned max_resamples = 4;

MorseReport run_pipeline(const JobConfig& job, const RunOptions& options = {});

enum class ReportFormat { text, json };
Json report_to_json(const MorseReport& report);
std::string render_report(const MorseReport& report, ReportFormat format);

// Oracle only, at a single lambda, with the first linear form of the job.
Json run_oracle_only(const JobConfig& job, const Rational& lambda, const GroebnerLimits& limits = {});

Rational parse_rational(const std::string& text);

} // namespace morsify
