#include "morsify/corpus.hpp"

#include <sstream>

namespace morsify {

namespace {

JobConfig plane(std::string f, std::optional<std::string> ell)
{
    JobConfig job;
    job.ambient_vars = {"x", "y"};
    job.f = std::move(f);
    job.linear_form = std::move(ell);
    return job;
}

std::string power_times_y(unsigned k)
{
    return "x^" + std::to_string(k) + "*y";
}

} // namespace

std::vector<CorpusEntry> builtin_corpus()
{
    std::vector<CorpusEntry> c;
    for (unsigned k = 2; k <= 5; ++k)
        c.push_back({"dinf_k" + std::to_string(k), plane(power_times_y(k), "x + y"), {k}});
    c.push_back({"jinf", plane("x^2*y^2 + x^3", "x + y"), {5}});
    for (int b : {1, 2, -3}) {
        std::ostringstream ell;
        ell << "x + " << b << "*y";
        c.push_back({"cubic_b" + std::to_string(b), plane("x^3", ell.str()), {0}});
    }
    for (unsigned k = 2; k <= 5; ++k)
        c.push_back({"dinf_k" + std::to_string(k) + "_seeds", plane(power_times_y(k), std::nullopt), {k}});
    c.push_back({"jinf_seeds", plane("x^2*y^2 + x^3", std::nullopt), {5}});
    // l = y sees the polar branch 3x = -2y^2 through the same orders (6, 1).
    c.push_back({"jinf_l_is_y", plane("x^2*y^2 + x^3", "y"), {5}});
    c.push_back({"cubic_seeds", plane("x^3", std::nullopt), {0}});
    c.push_back({"morse_x2y2", plane("x^2 + y^2", std::nullopt), {1}});
    c.push_back({"brieskorn_33", plane("x^3 + y^3", std::nullopt), {4}});
    c.push_back({"brieskorn_43", plane("x^4 + y^3", std::nullopt), {6}});
    c.push_back({"brieskorn_34", plane("x^3 + y^4", std::nullopt), {6}});
    c.push_back({"d5", plane("x^2*y + y^4", std::nullopt), {5}});

    JobConfig line;
    line.ambient_vars = {"x"};
    line.f = "x^3";
    c.push_back({"a2_one_variable", line, {2}});

    JobConfig hyper;
    hyper.ambient_vars = {"x", "y", "z"};
    hyper.f = "x^2*y + z*x";
    hyper.strata = {{"z=0", {"z"}, {"x", "y", "z"}}};
    hyper.linear_form = "x + y + 3*z";
    c.push_back({"plane_in_c3", hyper, {2}});

    JobConfig two;
    two.ambient_vars = {"x", "y", "z"};
    two.f = "x^2*y + z";
    two.strata = {{"z=0", {"z"}, {"x", "y", "z"}}, {"z-axis", {"x", "y"}, {"z"}}};
    c.push_back({"two_strata_in_c3", two, {2, 0}});
    return c;
}

SelftestResult run_selftest(const RunOptions& options)
{
    SelftestResult result;
    result.passed = true;
    Json entries = Json::array();
    unsigned passed = 0, total = 0;
    for (const auto& entry : builtin_corpus()) {
        ++total;
        Json e;
        e["name"] = entry.name;
        Json expected = Json::array();
        for (const auto& m : entry.expected_m)
            expected.push_back(m ? Json(*m) : Json("NOT_APPLICABLE"));
        e["expected_m"] = std::move(expected);
        bool ok = true;
        try {
            auto report = run_pipeline(entry.job, options);
            const auto& strata = report.runs.front().strata;
            ok = report.exit_code() == 0 && strata.size() == entry.expected_m.size();
            for (std::size_t i = 0; ok && i < strata.size(); ++i)
                ok = strata[i].m == entry.expected_m[i];
            e["exit_code"] = report.exit_code();
            e["report"] = report_to_json(report);
        } catch (const std::exception& ex) {
            ok = false;
            e["exit_code"] = "EXCEPTION";
            e["report"] = ex.what();
        }
        e["pass"] = ok;
        passed += ok ? 1 : 0;
        result.passed = result.passed && ok;
        entries.push_back(std::move(e));
    }
    result.json["entries"] = std::move(entries);
    result.json["passed"] = passed;
    result.json["total"] = total;
    return result;
}

} // namespace morsify
