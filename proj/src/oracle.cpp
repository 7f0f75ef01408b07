#include "morsify/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include <Eigen/Dense>

#include "morsify/bivariate.hpp"
#include "morsify/errors.hpp"
#include "morsify/ideal.hpp"
#include "morsify/roots.hpp"

namespace morsify {

namespace {

using Vec = Eigen::VectorXcd;
using Mat = Eigen::MatrixXcd;

double residual_of(const std::vector<Polynomial>& system, std::span<const Complex> z)
{
    double r = 0;
    for (const auto& p : system)
        r = std::max(r, std::abs(p.evaluate(z)));
    return r;
}

// Gauss-Newton on a square or overdetermined system.
NumericSolution polish(const std::vector<Polynomial>& system, std::vector<Complex> z, const OracleConfig& config)
{
    const std::size_t n = z.size(), m = system.size();
    std::vector<std::vector<Polynomial>> jac(m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j)
            jac[i].push_back(system[i].derivative(j));

    double res = residual_of(system, z);
    for (unsigned it = 0; it < config.newton_iters && res > 0; ++it) {
        Vec F(static_cast<Eigen::Index>(m));
        Mat J(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(n));
        for (std::size_t i = 0; i < m; ++i) {
            F(static_cast<Eigen::Index>(i)) = system[i].evaluate(z);
            for (std::size_t j = 0; j < n; ++j)
                J(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = jac[i][j].evaluate(z);
        }
        Vec step = J.colPivHouseholderQr().solve(-F);
        if (!step.allFinite())
            break;
        std::vector<Complex> next = z;
        for (std::size_t j = 0; j < n; ++j)
            next[j] += step(static_cast<Eigen::Index>(j));
        double next_res = residual_of(system, next);
        if (!std::isfinite(next_res))
            break;
        const bool small_step = step.norm() <= 1e-16 * (1 + Eigen::Map<const Vec>(z.data(), static_cast<Eigen::Index>(n)).norm());
        if (next_res >= res && res < config.root_finder_tol)
            break;
        z = std::move(next);
        res = next_res;
        if (small_step)
            break;
    }
    return NumericSolution{std::move(z), res, res < config.root_finder_tol};
}

double distance(const std::vector<Complex>& a, const std::vector<Complex>& b)
{
    double d = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        d = std::max(d, std::abs(a[i] - b[i]));
    return d;
}

// Keeps the best-residual representative of each cluster.
std::vector<NumericSolution> dedupe(std::vector<NumericSolution> sols, double tol)
{
    std::stable_sort(sols.begin(), sols.end(), [](const auto& a, const auto& b) {
        if (a.converged != b.converged)
            return a.converged;
        return a.residual < b.residual;
    });
    std::vector<NumericSolution> out;
    for (auto& s : sols) {
        bool dup = std::any_of(out.begin(), out.end(), [&](const auto& o) { return distance(o.point, s.point) < tol; });
        if (!dup)
            out.push_back(std::move(s));
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        for (std::size_t i = 0; i < a.point.size(); ++i) {
            if (a.point[i].real() != b.point[i].real())
                return a.point[i].real() < b.point[i].real();
            if (a.point[i].imag() != b.point[i].imag())
                return a.point[i].imag() < b.point[i].imag();
        }
        return false;
    });
    return out;
}

// Coefficients in y of p(x0, y), with entries that cancel to rounding level set to zero.
std::vector<Complex> specialize_x(const Polynomial& p, Complex x0)
{
    const int d = p.degree_in(1);
    std::vector<Complex> c(static_cast<std::size_t>(std::max(d, 0) + 1), 0);
    std::vector<double> bound(c.size(), 0);
    for (const auto& [m, a] : p.terms()) {
        Complex term = a.get_d() * std::pow(x0, static_cast<int>(m[0]));
        c[m[1]] += term;
        bound[m[1]] += std::abs(term);
    }
    for (std::size_t i = 0; i < c.size(); ++i)
        if (std::abs(c[i]) <= 1e-10 * bound[i])
            c[i] = 0;
    return c;
}

int effective_degree(const std::vector<Complex>& c)
{
    for (std::size_t i = c.size(); i-- > 0;)
        if (c[i] != Complex(0))
            return static_cast<int>(i);
    return -1;
}

std::vector<NumericSolution> solve_univariate(const std::vector<Polynomial>& system, const OracleConfig& config)
{
    UPoly g;
    for (const auto& p : system)
        g = gcd(g, to_upoly(p, 0));
    if (g.is_zero())
        throw NotFinite("every equation vanishes identically");
    std::vector<NumericSolution> sols;
    for (const auto& r : distinct_roots(g))
        sols.push_back(polish(system, {r}, config));
    return dedupe(std::move(sols), config.cluster_tol);
}

// Eigenvalue method on the multiplication matrix of a generic linear form
// acting on the quotient ring.
std::vector<NumericSolution> solve_by_eigenvalues(const std::vector<Polynomial>& system, const OracleConfig& config,
                                                  const GroebnerLimits& limits)
{
    const std::size_t n = system.front().nvars();
    auto gb = buchberger(Ideal(n, system), MonomialOrder::grevlex(), limits);
    if (gb.is_unit())
        return {};
    auto basis = quotient_basis(gb);
    if (!basis)
        throw NotFinite("critical system has a positive-dimensional solution set");
    const auto D = static_cast<Eigen::Index>(basis->size());
    std::map<Monomial, Eigen::Index> index;
    for (Eigen::Index i = 0; i < D; ++i)
        index.emplace((*basis)[static_cast<std::size_t>(i)], i);

    auto coords = [&](const Polynomial& p) {
        Vec v = Vec::Zero(D);
        const Polynomial nf = normal_form(p, gb);
        for (const auto& [m, c] : nf.terms())
            v(index.at(m)) = c.get_d();
        return v;
    };

    const Rational weights[] = {Rational(1), Rational(2, 7), Rational(3, 11)};
    Polynomial r(n);
    for (std::size_t i = 0; i < n; ++i)
        r += Polynomial::variable(n, i) * weights[i];

    Mat M(D, D);
    for (Eigen::Index j = 0; j < D; ++j)
        M.col(j) = coords(r * Polynomial::monomial((*basis)[static_cast<std::size_t>(j)], 1));
    const Eigen::Index one = index.at(Monomial(n, 0));
    std::vector<Vec> xs;
    for (std::size_t k = 0; k < n; ++k)
        xs.push_back(coords(Polynomial::variable(n, k)));

    Eigen::ComplexEigenSolver<Mat> eig(M.transpose());
    std::vector<NumericSolution> sols;
    for (Eigen::Index e = 0; e < D; ++e) {
        Vec w = eig.eigenvectors().col(e);
        if (std::abs(w(one)) < 1e-12 * w.norm())
            continue;
        std::vector<Complex> z(n);
        for (std::size_t k = 0; k < n; ++k)
            z[k] = (w.transpose() * xs[k]).value() / w(one);
        sols.push_back(polish(system, z, config));
    }
    return dedupe(std::move(sols), config.cluster_tol);
}

std::vector<Complex> gradient_at(const Polynomial& p, std::span<const Complex> z)
{
    std::vector<Complex> g;
    for (std::size_t i = 0; i < p.nvars(); ++i)
        g.push_back(p.derivative(i).evaluate(z));
    return g;
}

Mat hessian_at(const Polynomial& p, std::span<const Complex> z)
{
    const auto n = static_cast<Eigen::Index>(p.nvars());
    Mat H(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        auto di = p.derivative(static_cast<std::size_t>(i));
        for (Eigen::Index j = 0; j < n; ++j)
            H(i, j) = di.derivative(static_cast<std::size_t>(j)).evaluate(z);
    }
    return H;
}

} // namespace

void OracleConfig::validate() const
{
    if (lambda_schedule.empty())
        throw InputError("oracle lambda schedule is empty");
    for (std::size_t i = 0; i < lambda_schedule.size(); ++i) {
        if (lambda_schedule[i] <= 0)
            throw InputError("oracle lambdas must be positive");
        if (i > 0 && lambda_schedule[i] >= lambda_schedule[i - 1])
            throw InputError("oracle lambda schedule must be strictly decreasing");
    }
    if (!(ball_radius > 0) || !(cluster_tol > 0) || !(hessian_tol > 0) || !(root_finder_tol > 0) || newton_iters == 0)
        throw InputError("oracle tolerances must be positive");
}

std::vector<Polynomial> critical_system(const Polynomial& f, const LinearForm& ell, const Rational& lambda,
                                        const Stratum& stratum)
{
    const std::size_t n = f.nvars();
    const Polynomial F = f - ell.polynomial() * lambda;
    std::vector<Polynomial> eqs;
    if (stratum.codim() == 0) {
        for (std::size_t i = 0; i < n; ++i)
            eqs.push_back(F.derivative(i));
    } else if (stratum.codim() == 1) {
        const auto& g = stratum.closure.generators().front();
        eqs.push_back(g);
        for (auto& minor : jacobian_minors({g, F}))
            if (!minor.is_zero())
                eqs.push_back(std::move(minor));
    } else {
        throw NotSupported("the numeric oracle handles ambient and hypersurface strata only");
    }
    std::erase_if(eqs, [](const Polynomial& p) { return p.is_zero(); });
    return eqs;
}

std::vector<NumericSolution> solve_bivariate(const Polynomial& p, const Polynomial& q, const OracleConfig& config)
{
    if (p.nvars() != 2 || q.nvars() != 2)
        throw InternalError("solve_bivariate needs a two-variable ring");
    if (p.is_zero() || q.is_zero())
        throw NotFinite("an equation vanishes identically");
    const std::vector<Polynomial> system{p, q};

    if (p.degree_in(1) == 0 && q.degree_in(1) == 0) {
        if (gcd(to_upoly(p, 0), to_upoly(q, 0)).degree() >= 1)
            throw NotFinite("common factor in x alone: vertical lines of solutions");
        return {};
    }
    // The resultant misses common factors free of y, so test the gcd first.
    if (!bivariate_gcd(p, q).is_constant())
        throw NotFinite("equations share a curve component");
    UPoly res = resultant(p, q, 1);
    if (res.is_zero())
        throw NotFinite("resultant vanishes identically: common curve component");

    std::vector<NumericSolution> sols;
    for (const Complex& x0 : distinct_roots(res)) {
        for (const auto* eq : {&p, &q}) {
            auto c = specialize_x(*eq, x0);
            if (effective_degree(c) < 1)
                continue;
            c.resize(static_cast<std::size_t>(effective_degree(c)) + 1);
            for (const Complex& y0 : polynomial_roots(c))
                sols.push_back(polish(system, {x0, y0}, config));
        }
    }
    return dedupe(std::move(sols), config.cluster_tol);
}

std::vector<NumericSolution> solve_system(const std::vector<Polynomial>& system, const OracleConfig& config,
                                          const GroebnerLimits& limits)
{
    if (system.empty())
        throw NotFinite("empty system");
    const std::size_t n = system.front().nvars();
    for (const auto& p : system)
        if (p.is_constant())
            return {};
    if (n == 1)
        return solve_univariate(system, config);
    if (n == 2 && system.size() == 2)
        return solve_bivariate(system[0], system[1], config);
    if (n > 3)
        throw NotSupported("the numeric oracle solves systems in at most three variables");
    return solve_by_eigenvalues(system, config, limits);
}

Complex hessian_determinant(const Polynomial& F, const Stratum& stratum, std::span<const Complex> point)
{
    Mat H = hessian_at(F, point);
    if (stratum.codim() == 0)
        return H.determinant();
    if (stratum.codim() != 1)
        throw NotSupported("bordered Hessian needs a hypersurface stratum");
    const auto& g = stratum.closure.generators().front();
    auto dg = gradient_at(g, point);
    auto dF = gradient_at(F, point);
    Complex num = 0;
    double den = 0;
    for (std::size_t i = 0; i < dg.size(); ++i) {
        num += std::conj(dg[i]) * dF[i];
        den += std::norm(dg[i]);
    }
    if (den == 0)
        return 0;
    const Complex mu = num / den;
    const auto n = static_cast<Eigen::Index>(F.nvars());
    Mat B = Mat::Zero(n + 1, n + 1);
    B.bottomRightCorner(n, n) = H - mu * hessian_at(g, point);
    for (Eigen::Index i = 0; i < n; ++i) {
        B(0, i + 1) = dg[static_cast<std::size_t>(i)];
        B(i + 1, 0) = dg[static_cast<std::size_t>(i)];
    }
    return B.determinant();
}

OracleReport count_converging_morse(const Polynomial& f, const LinearForm& ell, const Stratum& stratum,
                                    const OracleConfig& config, const GroebnerLimits& limits)
{
    config.validate();
    const auto sing = sing_f_ideal(f, stratum).generators();
    OracleReport report;
    for (const auto& lambda : config.lambda_schedule) {
        LambdaCount row;
        row.lambda = lambda;
        const Polynomial F = f - ell.polynomial() * lambda;
        for (const auto& s : solve_system(critical_system(f, ell, lambda, stratum), config, limits)) {
            if (std::any_of(s.point.begin(), s.point.end(), [&](Complex c) { return std::abs(c) > config.ball_radius; })) {
                ++row.discarded.outside_ball;
                continue;
            }
            if (!s.converged) {
                ++row.discarded.not_converged;
                continue;
            }
            if (residual_of(sing, s.point) < config.cluster_tol) {
                ++row.discarded.on_sing_f;
                continue;
            }
            Complex det = hessian_determinant(F, stratum, s.point);
            if (!(std::abs(det) > config.hessian_tol)) {
                ++row.discarded.degenerate_hessian;
                continue;
            }
            row.accepted.push_back({s.point, s.residual, det});
        }
        row.count = static_cast<unsigned>(row.accepted.size());
        report.discarded.outside_ball += row.discarded.outside_ball;
        report.discarded.on_sing_f += row.discarded.on_sing_f;
        report.discarded.degenerate_hessian += row.discarded.degenerate_hessian;
        report.discarded.not_converged += row.discarded.not_converged;
        report.per_lambda.push_back(std::move(row));
    }
    const auto& rows = report.per_lambda;
    if (rows.size() >= 2 && rows[rows.size() - 1].count == rows[rows.size() - 2].count)
        report.stable_count = rows.back().count;
    return report;
}

std::optional<unsigned> milnor_number(const Polynomial& f, const GroebnerLimits& limits)
{
    const std::size_t n = f.nvars();
    std::vector<Polynomial> grad;
    for (std::size_t i = 0; i < n; ++i)
        grad.push_back(f.derivative(i));
    Ideal jac(n, grad);
    std::vector<Polynomial> vars;
    for (std::size_t i = 0; i < n; ++i)
        vars.push_back(Polynomial::variable(n, i));
    const Ideal maximal(n, vars);

    // The origin is an isolated zero iff removing the primary component at the
    // origin leaves an ideal that does not vanish there.
    auto away = buchberger(saturation(jac, maximal, limits), MonomialOrder::grevlex(), limits);
    const bool vanishes_at_origin = std::all_of(away.elements().begin(), away.elements().end(),
                                                [](const Polynomial& p) { return p.constant_term() == 0; });
    if (vanishes_at_origin)
        return std::nullopt;

    // Local length: dim C[x]/(J + m^k) grows strictly until it stabilizes.
    std::optional<std::size_t> previous;
    Ideal power = maximal;
    for (unsigned k = 1;; ++k) {
        auto basis = quotient_basis(jac + power, limits);
        if (!basis)
            throw InternalError("J + m^k is not zero-dimensional");
        if (previous && *previous == basis->size())
            return static_cast<unsigned>(basis->size());
        previous = basis->size();
        std::set<Monomial> next;
        for (const auto& a : power.generators())
            for (std::size_t i = 0; i < n; ++i) {
                Monomial m = a.terms().begin()->first;
                ++m[i];
                next.insert(m);
            }
        std::vector<Polynomial> gens;
        for (const auto& m : next)
            gens.push_back(Polynomial::monomial(m, 1));
        power = Ideal(n, std::move(gens));
    }
}

} // namespace morsify
