#include "morsify/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <regex>
#include <set>

#include "morsify/errors.hpp"
#include "morsify/variables.hpp"

namespace morsify {

namespace {

const std::set<std::string> job_keys{"ambient_vars", "f", "strata", "linear_form", "seeds", "oracle", "run_oracle"};
const std::set<std::string> oracle_keys{"lambda_schedule", "ball_radius",     "cluster_tol",
                                        "hessian_tol",     "newton_iters",    "root_finder_tol"};

const Json& require(const Json& j, const char* key)
{
    if (!j.contains(key))
        throw InputError(std::string("job is missing \"") + key + "\"");
    return j.at(key);
}

std::string as_string(const Json& j, const std::string& what)
{
    if (!j.is_string())
        throw InputError(what + " must be a string");
    return j.get<std::string>();
}

std::vector<std::string> as_strings(const Json& j, const std::string& what)
{
    if (!j.is_array())
        throw InputError(what + " must be an array of strings");
    std::vector<std::string> out;
    for (const auto& e : j)
        out.push_back(as_string(e, what + " entry"));
    return out;
}

double as_positive(const Json& j, const std::string& what)
{
    if (!j.is_number())
        throw InputError(what + " must be a number");
    return j.get<double>();
}

class Stopwatch {
public:
    explicit Stopwatch(std::optional<std::map<std::string, double>>& sink, std::string stage)
        : sink_(sink), stage_(std::move(stage)), start_(std::chrono::steady_clock::now())
    {
    }
    ~Stopwatch()
    {
        if (sink_) {
            std::chrono::duration<double, std::milli> d = std::chrono::steady_clock::now() - start_;
            (*sink_)[stage_] += d.count();
        }
    }

private:
    std::optional<std::map<std::string, double>>& sink_;
    std::string stage_;
    std::chrono::steady_clock::time_point start_;
};

struct Prepared {
    VariableSet vars;
    Polynomial f;
    std::vector<Stratum> strata;
};

Prepared prepare(const JobConfig& job)
{
    if (job.ambient_vars.empty())
        throw InputError("ambient_vars is empty");
    VariableSet vars(job.ambient_vars);
    Polynomial f = parse_polynomial(job.f, vars);
    // Morse points do not see the constant term; work with the germ f - f(0).
    f -= Polynomial::constant(f.nvars(), f.constant_term());

    std::vector<Stratum> strata;
    if (job.strata.empty())
        strata.push_back(Stratum::ambient(vars.size()));
    std::set<std::string> labels;
    for (const auto& s : job.strata) {
        if (s.label.empty() || !labels.insert(s.label).second)
            throw InputError("stratum labels must be nonempty and distinct");
        std::vector<Polynomial> closure, boundary;
        for (const auto& t : s.closure)
            closure.push_back(parse_polynomial(t, vars));
        for (const auto& t : s.boundary)
            boundary.push_back(parse_polynomial(t, vars));
        for (const auto& g : closure)
            if (g.constant_term() != 0)
                throw InputError("stratum \"" + s.label + "\" does not pass through the origin");
        strata.push_back(Stratum{s.label, Ideal(vars.size(), closure), Ideal(vars.size(), boundary)});
    }
    return Prepared{std::move(vars), std::move(f), std::move(strata)};
}

std::vector<std::string> print_generators(const Ideal& ideal, const VariableSet& vars, const GroebnerLimits& limits)
{
    std::vector<std::string> out;
    const auto basis = buchberger(ideal, MonomialOrder::grevlex(), limits);
    for (const auto& g : basis.elements())
        out.push_back(format_polynomial(g.primitive(), vars));
    return out;
}

StratumOutcome analyze(const Prepared& in, const Stratum& stratum, const LinearForm& ell, const RunOptions& options,
                       std::optional<std::map<std::string, double>>& timings, std::optional<std::string>& cap_stage)
{
    static const VariableSet uv({"u", "v"});
    StratumOutcome out;
    out.label = stratum.label;
    std::string stage = "polar";
    try {
        PolarCurve polar{Ideal(in.f.nvars()), PolarStatus::empty, -1};
        {
            Stopwatch sw(timings, "polar");
            if (constant_on_stratum(in.f, stratum, options.limits)) {
                out.polar_status = "NOT_APPLICABLE";
                return out;
            }
            polar = polar_ideal(in.f, ell, stratum, options.limits);
        }
        out.polar_status = to_string(polar.status);
        if (polar.status == PolarStatus::degenerate) {
            out.genericity_failure = "polar locus has dimension " + std::to_string(polar.dimension);
            return out;
        }
        if (polar.status == PolarStatus::empty) {
            out.m = 0;
            return out;
        }
        out.polar_generators = print_generators(polar.ideal, in.vars, options.limits);

        stage = "image";
        Stopwatch sw(timings, "image");
        try {
            auto germ = image_plane_curve(polar, ell, in.f, options.limits);
            out.g = format_polynomial(germ.g, uv);
            out.germ = germ;
            out.m = morse_number(germ);
            out.branch_table = branch_table(germ);
        } catch (const GenericityFailure& e) {
            out.m.reset();
            out.branch_table.clear();
            out.genericity_failure = e.what();
        }
    } catch (const ResourceCapExceeded& e) {
        if (!cap_stage)
            cap_stage = stage + " (" + out.label + "): " + e.what();
        out.genericity_failure = "resource cap in stage " + stage;
    }
    return out;
}

LinearFormRun run_form(const Prepared& in, std::optional<std::uint64_t> seed, const std::optional<LinearForm>& explicit_ell,
                       const RunOptions& options, std::optional<std::map<std::string, double>>& timings,
                       std::optional<std::string>& cap_stage)
{
    LinearFormRun run;
    run.requested_seed = seed;
    for (unsigned attempt = 0;; ++attempt) {
        if (explicit_ell) {
            run.ell = *explicit_ell;
        } else {
            run.seed_used = *seed + 1000003ULL * attempt;
            run.ell = draw_generic_linear(*run.seed_used, in.vars.size());
        }
        run.ell_text = format_polynomial(run.ell.polynomial(), in.vars);
        run.strata.clear();
        for (const auto& s : in.strata)
            run.strata.push_back(analyze(in, s, run.ell, options, timings, cap_stage));
        if (!run.failed() || explicit_ell || attempt == max_resamples || cap_stage)
            return run;
        run.rejected_seeds.push_back(*run.seed_used);
    }
}

Json discard_json(const DiscardTally& d)
{
    Json j;
    j["outside_ball"] = d.outside_ball;
    j["degenerate_hessian"] = d.degenerate_hessian;
    j["on_sing_f"] = d.on_sing_f;
    j["not_converged"] = d.not_converged;
    return j;
}

Json oracle_report_json(const OracleReport& r)
{
    Json j;
    Json rows = Json::array();
    for (const auto& row : r.per_lambda) {
        Json e;
        e["lambda"] = row.lambda.get_str();
        e["count"] = row.count;
        e["discarded"] = discard_json(row.discarded);
        double max_res = 0;
        std::optional<double> min_det;
        for (const auto& p : row.accepted) {
            max_res = std::max(max_res, p.residual);
            double d = std::abs(p.hessian_det);
            min_det = min_det ? std::min(*min_det, d) : d;
        }
        e["max_residual"] = max_res;
        if (min_det)
            e["min_abs_hessian_det"] = *min_det;
        else
            e["min_abs_hessian_det"] = "NONE";
        rows.push_back(std::move(e));
    }
    j["lambdas"] = std::move(rows);
    if (r.stable_count)
        j["stable_count"] = *r.stable_count;
    else
        j["stable_count"] = "UNSTABLE";
    j["discarded"] = discard_json(r.discarded);
    return j;
}

Json seed_json(const std::optional<std::uint64_t>& s)
{
    return s ? Json(*s) : Json("explicit");
}

Json m_json(const StratumOutcome& s)
{
    if (s.m)
        return *s.m;
    if (s.polar_status == "NOT_APPLICABLE")
        return "NOT_APPLICABLE";
    return "UNDETERMINED";
}

Json order_json(const StratumOutcome& s, bool u_axis)
{
    if (!s.germ)
        return "NONE";
    const auto& o = u_axis ? s.germ->ord_u0 : s.germ->ord_0v;
    return o ? Json(*o) : Json("INFINITE");
}

} // namespace

Rational parse_rational(const std::string& text)
{
    static const std::regex pattern(R"(\s*([+-]?\d+)(\s*/\s*(\d+))?\s*)");
    std::smatch m;
    if (!std::regex_match(text, m, pattern))
        throw InputError("not a rational number: \"" + text + "\"");
    Rational r(Integer(m[1].str()), m[3].matched ? Integer(m[3].str()) : Integer(1));
    if (r.get_den() == 0)
        throw InputError("zero denominator in \"" + text + "\"");
    r.canonicalize();
    return r;
}

JobConfig job_from_json(const Json& j)
{
    if (!j.is_object())
        throw InputError("job must be a json object");
    for (const auto& [key, value] : j.items())
        if (!job_keys.count(key))
            throw InputError("unknown job field \"" + key + "\"");
    JobConfig job;
    job.ambient_vars = as_strings(require(j, "ambient_vars"), "ambient_vars");
    job.f = as_string(require(j, "f"), "f");
    if (j.contains("strata")) {
        const auto& arr = j.at("strata");
        if (!arr.is_array())
            throw InputError("strata must be an array");
        for (const auto& s : arr) {
            if (!s.is_object())
                throw InputError("each stratum must be an object");
            for (const auto& [key, value] : s.items())
                if (key != "label" && key != "closure" && key != "boundary")
                    throw InputError("unknown stratum field \"" + key + "\"");
            StratumInput in;
            in.label = as_string(require(s, "label"), "stratum label");
            in.closure = as_strings(require(s, "closure"), "stratum closure");
            in.boundary = as_strings(require(s, "boundary"), "stratum boundary");
            job.strata.push_back(std::move(in));
        }
    }
    if (j.contains("linear_form"))
        job.linear_form = as_string(j.at("linear_form"), "linear_form");
    if (j.contains("seeds")) {
        const auto& arr = j.at("seeds");
        if (!arr.is_array() || arr.empty())
            throw InputError("seeds must be a nonempty array of naturals");
        job.seeds.clear();
        for (const auto& s : arr) {
            if (!s.is_number_unsigned())
                throw InputError("seeds must be naturals");
            job.seeds.push_back(s.get<std::uint64_t>());
        }
    }
    if (j.contains("run_oracle")) {
        if (!j.at("run_oracle").is_boolean())
            throw InputError("run_oracle must be a boolean");
        job.run_oracle = j.at("run_oracle").get<bool>();
    }
    if (j.contains("oracle")) {
        const auto& o = j.at("oracle");
        if (!o.is_object())
            throw InputError("oracle must be an object");
        for (const auto& [key, value] : o.items())
            if (!oracle_keys.count(key))
                throw InputError("unknown oracle field \"" + key + "\"");
        if (o.contains("lambda_schedule")) {
            job.oracle.lambda_schedule.clear();
            for (const auto& t : as_strings(o.at("lambda_schedule"), "lambda_schedule"))
                job.oracle.lambda_schedule.push_back(parse_rational(t));
        }
        if (o.contains("ball_radius"))
            job.oracle.ball_radius = as_positive(o.at("ball_radius"), "ball_radius");
        if (o.contains("cluster_tol"))
            job.oracle.cluster_tol = as_positive(o.at("cluster_tol"), "cluster_tol");
        if (o.contains("hessian_tol"))
            job.oracle.hessian_tol = as_positive(o.at("hessian_tol"), "hessian_tol");
        if (o.contains("root_finder_tol"))
            job.oracle.root_finder_tol = as_positive(o.at("root_finder_tol"), "root_finder_tol");
        if (o.contains("newton_iters")) {
            if (!o.at("newton_iters").is_number_unsigned())
                throw InputError("newton_iters must be a natural");
            job.oracle.newton_iters = o.at("newton_iters").get<unsigned>();
        }
    }
    job.oracle.validate();
    return job;
}

Json job_to_json(const JobConfig& job)
{
    Json j;
    j["ambient_vars"] = job.ambient_vars;
    j["f"] = job.f;
    Json strata = Json::array();
    for (const auto& s : job.strata) {
        Json e;
        e["label"] = s.label;
        e["closure"] = s.closure;
        e["boundary"] = s.boundary;
        strata.push_back(std::move(e));
    }
    j["strata"] = std::move(strata);
    j["linear_form"] = job.linear_form ? Json(*job.linear_form) : Json("NONE");
    j["seeds"] = job.seeds;
    Json o;
    Json lambdas = Json::array();
    for (const auto& l : job.oracle.lambda_schedule)
        lambdas.push_back(l.get_str());
    o["lambda_schedule"] = std::move(lambdas);
    o["ball_radius"] = job.oracle.ball_radius;
    o["cluster_tol"] = job.oracle.cluster_tol;
    o["hessian_tol"] = job.oracle.hessian_tol;
    o["newton_iters"] = job.oracle.newton_iters;
    o["root_finder_tol"] = job.oracle.root_finder_tol;
    j["oracle"] = std::move(o);
    j["run_oracle"] = job.run_oracle;
    return j;
}

bool LinearFormRun::failed() const
{
    return std::any_of(strata.begin(), strata.end(), [](const auto& s) { return !s.genericity_failure.empty(); });
}

int MorseReport::exit_code() const
{
    if (resource_cap)
        return static_cast<int>(ExitCode::resource_cap);
    if (!genericity_pass)
        return static_cast<int>(ExitCode::genericity);
    for (const auto& o : oracle)
        if ((o.status == "RAN" && !o.agrees) || o.status == "NOT_FINITE")
            return static_cast<int>(ExitCode::oracle_mismatch);
    return static_cast<int>(ExitCode::ok);
}

MorseReport run_pipeline(const JobConfig& job, const RunOptions& options)
{
    job.oracle.validate();
    const Prepared in = prepare(job);
    MorseReport report;
    report.job = job;
    if (options.record_timings)
        report.timings_ms.emplace();

    std::optional<LinearForm> explicit_ell;
    if (job.linear_form)
        explicit_ell = linear_form_from(parse_polynomial(*job.linear_form, in.vars));
    if (!explicit_ell && job.seeds.empty())
        throw InputError("no seeds and no explicit linear form");

    if (explicit_ell) {
        report.runs.push_back(run_form(in, std::nullopt, explicit_ell, options, report.timings_ms, report.resource_cap));
    } else {
        for (auto seed : job.seeds) {
            report.runs.push_back(run_form(in, seed, std::nullopt, options, report.timings_ms, report.resource_cap));
            if (report.resource_cap)
                break;
        }
    }

    // Cross-seed comparison of polar status and m per stratum.
    report.genericity_pass = !report.resource_cap;
    for (const auto& run : report.runs)
        for (const auto& s : run.strata)
            if (!s.genericity_failure.empty()) {
                report.genericity_pass = false;
                report.genericity_notes.push_back("linear form " + run.ell_text + ", stratum " + s.label + ": " +
                                                  s.genericity_failure);
            }
    const auto& first = report.runs.front();
    for (std::size_t r = 1; r < report.runs.size(); ++r)
        for (std::size_t i = 0; i < first.strata.size(); ++i) {
            const auto& a = first.strata[i];
            const auto& b = report.runs[r].strata[i];
            if (a.polar_status != b.polar_status || a.m != b.m) {
                report.genericity_pass = false;
                report.genericity_notes.push_back("stratum " + a.label + ": linear forms " + first.ell_text + " and " +
                                                  report.runs[r].ell_text + " disagree");
            }
        }
    for (const auto& run : report.runs)
        for (auto s : run.rejected_seeds)
            report.genericity_notes.push_back("seed " + std::to_string(s) + " was degenerate and resampled");
    if (report.runs.size() == 1 && !explicit_ell)
        report.genericity_notes.push_back("single seed: no cross-seed comparison");

    // Oracle with the first linear form.
    for (std::size_t i = 0; i < in.strata.size(); ++i) {
        OracleOutcome o;
        const auto& s = first.strata[i];
        if (job.run_oracle && s.m && !report.resource_cap) {
            Stopwatch sw(report.timings_ms, "oracle");
            try {
                o.report = count_converging_morse(in.f, first.ell, in.strata[i], job.oracle, options.limits);
                o.status = "RAN";
                o.agrees = o.report.stable_count == s.m;
            } catch (const NotSupported&) {
                o.status = "NOT_SUPPORTED";
            } catch (const NotFinite&) {
                o.status = "NOT_FINITE";
            } catch (const ResourceCapExceeded& e) {
                report.resource_cap = "oracle (" + s.label + "): " + e.what();
            }
        }
        report.oracle.push_back(std::move(o));
    }
    return report;
}

Json report_to_json(const MorseReport& report)
{
    Json j;
    j["input_echo"] = job_to_json(report.job);

    const auto& first = report.runs.front();
    Json strata = Json::array();
    for (std::size_t i = 0; i < first.strata.size(); ++i) {
        const auto& s = first.strata[i];
        Json e;
        e["label"] = s.label;
        e["polar_status"] = s.polar_status;
        e["polar_generators"] = s.polar_generators;
        e["G"] = s.g ? Json(*s.g) : Json("NONE");
        e["ord_u0"] = order_json(s, true);
        e["ord_0v"] = order_json(s, false);
        e["m"] = m_json(s);
        Json table = Json::array();
        for (const auto& b : s.branch_table) {
            Json row;
            row["p"] = b.p;
            row["q"] = b.q;
            row["count"] = b.count;
            row["m_delta_total"] = b.m_delta_total;
            table.push_back(std::move(row));
        }
        e["branch_table"] = std::move(table);
        const auto& o = report.oracle.at(i);
        if (o.status == "RAN") {
            Json oj = oracle_report_json(o.report);
            oj["agrees"] = o.agrees;
            e["oracle"] = std::move(oj);
        } else {
            e["oracle"] = o.status;
        }
        strata.push_back(std::move(e));
    }
    j["strata"] = std::move(strata);

    Json gen;
    gen["verdict"] = report.genericity_pass ? "PASS" : "FAIL";
    gen["mode"] = report.job.linear_form ? "explicit" : "seeds";
    Json table = Json::array();
    for (const auto& run : report.runs)
        for (const auto& s : run.strata) {
            Json row;
            row["seed"] = seed_json(run.requested_seed);
            row["stratum"] = s.label;
            row["polar_status"] = s.polar_status;
            row["m"] = m_json(s);
            table.push_back(std::move(row));
        }
    gen["table"] = std::move(table);
    gen["notes"] = report.genericity_notes;
    gen["resource_cap"] = report.resource_cap ? Json(*report.resource_cap) : Json("NONE");
    j["genericity"] = std::move(gen);

    Json seeds = Json::array();
    for (const auto& run : report.runs) {
        Json e;
        e["requested"] = seed_json(run.requested_seed);
        e["used"] = seed_json(run.seed_used);
        e["rejected"] = run.rejected_seeds;
        e["linear_form"] = run.ell_text;
        seeds.push_back(std::move(e));
    }
    j["seeds"] = std::move(seeds);

    if (report.timings_ms) {
        Json t;
        for (const auto& [stage, ms] : *report.timings_ms)
            t[stage] = ms;
        j["timings_ms"] = std::move(t);
    } else {
        j["timings_ms"] = "OMITTED";
    }
    return j;
}

Json run_oracle_only(const JobConfig& job, const Rational& lambda, const GroebnerLimits& limits)
{
    if (lambda <= 0)
        throw InputError("lambda must be positive");
    const Prepared in = prepare(job);
    LinearForm ell = job.linear_form ? linear_form_from(parse_polynomial(*job.linear_form, in.vars))
                                     : draw_generic_linear(job.seeds.at(0), in.vars.size());
    OracleConfig config = job.oracle;
    config.lambda_schedule = {lambda};
    Json j;
    j["linear_form"] = format_polynomial(ell.polynomial(), in.vars);
    Json strata = Json::array();
    for (const auto& s : in.strata) {
        Json e;
        e["label"] = s.label;
        try {
            auto r = count_converging_morse(in.f, ell, s, config, limits);
            const auto& row = r.per_lambda.front();
            e["lambda"] = row.lambda.get_str();
            e["count"] = row.count;
            e["discarded"] = discard_json(row.discarded);
            Json pts = Json::array();
            for (const auto& p : row.accepted) {
                Json pt;
                Json coords = Json::array();
                for (const auto& c : p.point)
                    coords.push_back(Json::array({c.real(), c.imag()}));
                pt["coordinates"] = std::move(coords);
                pt["residual"] = p.residual;
                pt["abs_hessian_det"] = std::abs(p.hessian_det);
                pts.push_back(std::move(pt));
            }
            e["points"] = std::move(pts);
        } catch (const NotSupported&) {
            e["count"] = "NOT_SUPPORTED";
        } catch (const NotFinite&) {
            e["count"] = "NOT_FINITE";
        }
        strata.push_back(std::move(e));
    }
    j["strata"] = std::move(strata);
    return j;
}

} // namespace morsify
