#include <sstream>

#include "morsify/pipeline.hpp"

namespace morsify {

namespace {

std::string order_text(const std::optional<unsigned>& o)
{
    return o ? std::to_string(*o) : "INFINITE";
}

void render_oracle(std::ostream& out, const OracleOutcome& o, const StratumOutcome& s)
{
    if (o.status != "RAN") {
        out << "  oracle: " << o.status << "\n";
        return;
    }
    out << "  oracle:";
    for (const auto& row : o.report.per_lambda) {
        out << " " << row.lambda.get_str() << " -> " << row.count;
        const auto& d = row.discarded;
        if (d.outside_ball + d.on_sing_f + d.degenerate_hessian + d.not_converged)
            out << " (discarded " << d.outside_ball << " outside ball, " << d.on_sing_f << " on Sing f, "
                << d.degenerate_hessian << " degenerate, " << d.not_converged << " not converged)";
        out << ";";
    }
    if (o.report.stable_count)
        out << " stable " << *o.report.stable_count;
    else
        out << " UNSTABLE";
    if (s.m)
        out << (o.agrees ? ", agrees with m" : ", DISAGREES with m");
    out << "\n";
}

std::string render_text(const MorseReport& report)
{
    std::ostringstream out;
    const auto& job = report.job;
    out << "f = " << job.f << "   variables:";
    for (const auto& v : job.ambient_vars)
        out << " " << v;
    out << "\n";
    for (const auto& run : report.runs) {
        if (run.requested_seed)
            out << "seed " << *run.requested_seed;
        else
            out << "explicit";
        if (run.seed_used && run.seed_used != run.requested_seed)
            out << " (resampled as " << *run.seed_used << ")";
        out << ": l = " << run.ell_text << "\n";
    }

    const auto& first = report.runs.front();
    for (std::size_t i = 0; i < first.strata.size(); ++i) {
        const auto& s = first.strata[i];
        out << "\nstratum " << s.label << "\n";
        if (s.polar_status == "NOT_APPLICABLE") {
            out << "  f is constant on the stratum, m = NOT_APPLICABLE\n";
            continue;
        }
        if (s.polar_status == "EMPTY") {
            out << "  Γ = ∅, m = 0 (by convention)\n";
        } else {
            out << "  polar: " << s.polar_status;
            for (std::size_t k = 0; k < s.polar_generators.size(); ++k)
                out << (k ? ", " : "  generators: ") << s.polar_generators[k];
            out << "\n";
            if (s.g && s.germ)
                out << "  G = " << *s.g << "   ord_u0 = " << order_text(s.germ->ord_u0)
                    << "   ord_0v = " << order_text(s.germ->ord_0v) << "\n";
            if (s.m)
                out << "  m = " << *s.m << "\n";
            else
                out << "  m undetermined: " << s.genericity_failure << "\n";
            if (!s.branch_table.empty()) {
                out << "  branches   p   q   count   m_delta\n";
                for (const auto& b : s.branch_table)
                    out << "           " << b.p << "   " << b.q << "   " << b.count << "       " << b.m_delta_total
                        << "\n";
            }
        }
        render_oracle(out, report.oracle.at(i), s);
    }

    out << "\ngenericity: " << (report.genericity_pass ? "PASS" : "FAIL") << "\n";
    for (const auto& note : report.genericity_notes)
        out << "  " << note << "\n";
    if (report.resource_cap)
        out << "resource cap exceeded in " << *report.resource_cap << "\n";
    if (report.timings_ms)
        for (const auto& [stage, ms] : *report.timings_ms)
            out << "time " << stage << ": " << ms << " ms\n";
    return out.str();
}

} // namespace

std::string render_report(const MorseReport& report, ReportFormat format)
{
    if (format == ReportFormat::json)
        return report_to_json(report).dump(2) + "\n";
    return render_text(report);
}

} // namespace morsify
