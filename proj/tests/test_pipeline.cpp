#include "doctest.h"

#include "morsify/corpus.hpp"
#include "morsify/errors.hpp"
#include "morsify/pipeline.hpp"

using namespace morsify;

namespace {

JobConfig job_of(const char* text)
{
    return job_from_json(Json::parse(text));
}

} // namespace

TEST_CASE("job parsing")
{
    auto job = job_of(R"({"ambient_vars": ["x", "y"], "f": "x^2*y"})");
    CHECK(job.seeds == std::vector<std::uint64_t>{1, 2, 3});
    CHECK(job.run_oracle);
    CHECK_FALSE(job.linear_form.has_value());
    CHECK(job.strata.empty());

    auto full = job_of(R"({"ambient_vars": ["x", "y", "z"], "f": "x*z", "linear_form": "x + y",
        "strata": [{"label": "z=0", "closure": ["z"], "boundary": ["x", "y", "z"]}],
        "seeds": [7], "run_oracle": false,
        "oracle": {"lambda_schedule": ["1/10", "1/20"], "ball_radius": 0.25, "newton_iters": 9}})");
    CHECK(full.strata.size() == 1);
    CHECK(full.strata[0].closure == std::vector<std::string>{"z"});
    CHECK(full.oracle.lambda_schedule == std::vector<Rational>{Rational(1, 10), Rational(1, 20)});
    CHECK(full.oracle.ball_radius == 0.25);
    CHECK(full.oracle.newton_iters == 9u);
    CHECK_FALSE(full.run_oracle);

    CHECK_THROWS_AS(job_of(R"({"f": "x"})"), InputError);
    CHECK_THROWS_AS(job_of(R"({"ambient_vars": ["x"], "f": "x", "colour": 1})"), InputError);
    CHECK_THROWS_AS(job_of(R"({"ambient_vars": ["x"], "f": 3})"), InputError);
    CHECK_THROWS_AS(job_of(R"({"ambient_vars": ["x"], "f": "x", "seeds": []})"), InputError);
    CHECK_THROWS_AS(job_of(R"({"ambient_vars": ["x"], "f": "x", "seeds": [-1]})"), InputError);
    CHECK_THROWS_AS(job_of(R"({"ambient_vars": ["x"], "f": "x", "oracle": {"lambda_schedule": ["1/100", "1/10"]}})"),
                    InputError);
    CHECK_THROWS_AS(job_of(R"({"ambient_vars": ["x"], "f": "x", "oracle": {"lambda_schedule": ["0.01"]}})"),
                    InputError);
}

TEST_CASE("rationals")
{
    CHECK(parse_rational("1/1000") == Rational(1, 1000));
    CHECK(parse_rational(" -6/4 ") == Rational(-3, 2));
    CHECK(parse_rational("5") == 5);
    CHECK_THROWS_AS(parse_rational("1/0"), InputError);
    CHECK_THROWS_AS(parse_rational("1e-3"), InputError);
}

TEST_CASE("bad input surfaces before any computation")
{
    CHECK_THROWS_AS(run_pipeline(job_of(R"({"ambient_vars": ["x", "y"], "f": "x^2*w"})")), ParseError);
    CHECK_THROWS_AS(run_pipeline(job_of(R"({"ambient_vars": ["x", "x"], "f": "x"})")), InputError);
    CHECK_THROWS_AS(run_pipeline(job_of(R"({"ambient_vars": ["x", "y"], "f": "x*y", "linear_form": "x + 1"})")),
                    InputError);
    CHECK_THROWS_AS(run_pipeline(job_of(R"({"ambient_vars": ["x", "y"], "f": "x*y",
        "strata": [{"label": "off", "closure": ["x - 1"], "boundary": []}]})")),
                    InputError);
}

TEST_CASE("end-to-end examples")
{
    auto j = run_pipeline(job_of(R"({"ambient_vars": ["x", "y"], "f": "x^2*y^2 + x^3"})"));
    CHECK(j.exit_code() == 0);
    CHECK(j.genericity_pass);
    REQUIRE(j.runs.size() == 3);
    for (const auto& run : j.runs)
        CHECK(run.strata[0].m == 5u);
    CHECK(j.oracle[0].status == "RAN");
    CHECK(j.oracle[0].report.stable_count == 5u);

    auto d3 = run_pipeline(job_of(R"({"ambient_vars": ["x", "y"], "f": "x^3*y"})"));
    CHECK(d3.runs[0].strata[0].m == 3u);

    auto cubic = run_pipeline(job_of(R"({"ambient_vars": ["x", "y"], "f": "x^3"})"));
    CHECK(cubic.runs[0].strata[0].polar_status == "EMPTY");
    CHECK(cubic.runs[0].strata[0].m == 0u);
    CHECK(cubic.exit_code() == 0);

    // The constant term is irrelevant for Morse points.
    auto shifted = run_pipeline(job_of(R"({"ambient_vars": ["x", "y"], "f": "x^2*y + 7", "linear_form": "x + y"})"));
    CHECK(shifted.runs[0].strata[0].m == 2u);
}

TEST_CASE("exit code contract")
{
    // Degenerate explicit linear form: no resampling, genericity FAIL.
    auto degenerate = run_pipeline(job_of(R"({"ambient_vars": ["x", "y", "z"], "f": "x^2*y", "linear_form": "x + y"})"));
    CHECK_FALSE(degenerate.genericity_pass);
    CHECK(degenerate.exit_code() == static_cast<int>(ExitCode::genericity));
    CHECK_FALSE(degenerate.runs[0].strata[0].m.has_value());

    // A ball too small to hold the Morse points makes the oracle disagree.
    auto tiny = run_pipeline(job_of(R"({"ambient_vars": ["x", "y"], "f": "x^2*y", "linear_form": "x + y",
        "oracle": {"ball_radius": 0.001}})"));
    CHECK(tiny.genericity_pass);
    CHECK(tiny.exit_code() == static_cast<int>(ExitCode::oracle_mismatch));

    auto skipped = run_pipeline(job_of(R"({"ambient_vars": ["x", "y"], "f": "x^2*y", "linear_form": "x + y",
        "run_oracle": false, "oracle": {"ball_radius": 0.001}})"));
    CHECK(skipped.oracle[0].status == "SKIPPED");
    CHECK(skipped.exit_code() == 0);

    RunOptions starved;
    starved.limits.max_pairs = 1;
    auto capped = run_pipeline(job_of(R"({"ambient_vars": ["x", "y"], "f": "x^2*y^2 + x^3", "linear_form": "x + y"})"),
                               starved);
    REQUIRE(capped.resource_cap.has_value());
    CHECK(capped.exit_code() == static_cast<int>(ExitCode::resource_cap));
}

TEST_CASE("strata where f is constant are not applicable")
{
    auto r = run_pipeline(job_of(R"({"ambient_vars": ["x", "y", "z"], "f": "z",
        "strata": [{"label": "z=0", "closure": ["z"], "boundary": ["x", "y", "z"]}]})"));
    CHECK(r.runs[0].strata[0].polar_status == "NOT_APPLICABLE");
    CHECK_FALSE(r.runs[0].strata[0].m.has_value());
    auto json = report_to_json(r);
    CHECK(json["strata"][0]["m"] == "NOT_APPLICABLE");
    CHECK(json["strata"][0]["oracle"] == "SKIPPED");
    CHECK(r.exit_code() == 0);
}

TEST_CASE("json report schema")
{
    auto r = run_pipeline(job_of(R"({"ambient_vars": ["x", "y"], "f": "x^2*y", "linear_form": "x + y"})"));
    auto j = report_to_json(r);
    std::vector<std::string> keys;
    for (const auto& [k, v] : j.items())
        keys.push_back(k);
    CHECK(keys == std::vector<std::string>{"input_echo", "strata", "genericity", "seeds", "timings_ms"});
    const auto& s = j["strata"][0];
    std::vector<std::string> stratum_keys;
    for (const auto& [k, v] : s.items())
        stratum_keys.push_back(k);
    CHECK(stratum_keys == std::vector<std::string>{"label", "polar_status", "polar_generators", "G", "ord_u0",
                                                   "ord_0v", "m", "branch_table", "oracle"});
    CHECK(s["m"] == 2);
    CHECK(s["branch_table"].size() == 1);
    CHECK(s["branch_table"][0]["p"] == 1);
    CHECK(s["branch_table"][0]["q"] == 3);
    CHECK(s["branch_table"][0]["m_delta_total"] == 2);
    CHECK(j["timings_ms"] == "OMITTED");

    // No nulls anywhere, including for an empty polar curve.
    auto empty = report_to_json(run_pipeline(job_of(R"({"ambient_vars": ["x", "y"], "f": "x^3"})")));
    CHECK(empty.dump().find("null") == std::string::npos);
    CHECK(empty["strata"][0]["G"] == "NONE");
    CHECK(empty["strata"][0]["ord_u0"] == "NONE");
}

TEST_CASE("text report")
{
    auto r = run_pipeline(job_of(R"({"ambient_vars": ["x", "y"], "f": "x^3", "linear_form": "x + 2*y"})"));
    auto text = render_report(r, ReportFormat::text);
    CHECK(text.find("Γ = ∅, m = 0 (by convention)") != std::string::npos);
    auto d = render_report(run_pipeline(job_of(R"({"ambient_vars": ["x", "y"], "f": "x^2*y", "linear_form": "x + y"})")),
                           ReportFormat::text);
    CHECK(d.find("m = 2") != std::string::npos);
    CHECK(d.find("genericity: PASS") != std::string::npos);
}

TEST_CASE("reports are deterministic")
{
    const char* text = R"({"ambient_vars": ["x", "y"], "f": "x^2*y + y^4", "seeds": [4, 5]})";
    auto a = render_report(run_pipeline(job_of(text)), ReportFormat::json);
    auto b = render_report(run_pipeline(job_of(text)), ReportFormat::json);
    CHECK(a == b);
    auto r = run_pipeline(job_of(text));
    CHECK(render_report(r, ReportFormat::text) == render_report(r, ReportFormat::text));
}

TEST_CASE("oracle only")
{
    auto j = run_oracle_only(job_of(R"({"ambient_vars": ["x", "y"], "f": "x^2*y", "linear_form": "x + y"})"),
                             Rational(1, 10000));
    CHECK(j["strata"][0]["count"] == 2);
    CHECK(j["strata"][0]["points"].size() == 2);
    CHECK_THROWS_AS(run_oracle_only(job_of(R"({"ambient_vars": ["x"], "f": "x^3"})"), Rational(-1)), InputError);
}

TEST_CASE("built-in corpus passes")
{
    auto result = run_selftest();
    CHECK(result.passed);
    CHECK(result.json["passed"] == result.json["total"]);
}
