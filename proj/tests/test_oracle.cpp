#include "doctest.h"

#include <cmath>

#include "morsify/errors.hpp"
#include "morsify/oracle.hpp"
#include "morsify/roots.hpp"
#include "morsify/variables.hpp"

using namespace morsify;

namespace {

const VariableSet xy({"x", "y"});

Polynomial P(const char* text, const VariableSet& vars = xy)
{
    return parse_polynomial(text, vars);
}

bool has_root(const std::vector<Complex>& roots, Complex z, double tol = 1e-10)
{
    for (const auto& r : roots)
        if (std::abs(r - z) < tol)
            return true;
    return false;
}

} // namespace

TEST_CASE("univariate roots")
{
    // (t - 1)(t + 2)(t - 3i)(t + 3i) = (t^2 + t - 2)(t^2 + 9)
    std::vector<Complex> c{-18, 9, 7, 1, 1};
    auto roots = polynomial_roots(c);
    REQUIRE(roots.size() == 4);
    for (Complex z : {Complex(1), Complex(-2), Complex(0, 3), Complex(0, -3)})
        CHECK(has_root(roots, z));

    auto with_zero = polynomial_roots(std::vector<Complex>{0, 0, -4, 1});
    REQUIRE(with_zero.size() == 3);
    CHECK(with_zero[0] == Complex(0));
    CHECK(with_zero[1] == Complex(0));
    CHECK(has_root(with_zero, 4));

    // Widely spread magnitudes: (t - 1e-4)(t - 1)(t - 1e4)
    auto spread = polynomial_roots(std::vector<Complex>{-1.0, 1e4 + 1 + 1e-4, -(1e4 + 1 + 1e-4), 1});
    CHECK(has_root(spread, 1e-4, 1e-14));
    CHECK(has_root(spread, 1));
    CHECK(has_root(spread, 1e4, 1e-8));

    // Exact squarefree part first: (t - 1)^3 (t + 1) has two distinct roots.
    UPoly p({-1, 2, 0, -2, 1});
    auto distinct = distinct_roots(p);
    CHECK(distinct.size() == 2);
    CHECK(has_root(distinct, 1));
    CHECK(has_root(distinct, -1));
}

TEST_CASE("bivariate solver on a small system")
{
    OracleConfig config;
    // 2xy = 1e-4, x^2 = 1e-4: x = +-1e-2, y = +-1e-2 / 2 with matching signs.
    auto sols = solve_bivariate(P("2*x*y - 1/10000"), P("x^2 - 1/10000"), config);
    REQUIRE(sols.size() == 2);
    for (const auto& s : sols) {
        CHECK(s.converged);
        CHECK(s.residual < 1e-12);
        CHECK(std::abs(std::abs(s.point[0]) - 1e-2) < 1e-12);
        CHECK(std::abs(s.point[1] - s.point[0] / 2.0) < 1e-12);
    }
    CHECK(std::abs(sols[0].point[0] + sols[1].point[0]) < 1e-12);
}

TEST_CASE("bivariate solver special cases")
{
    OracleConfig config;
    CHECK_THROWS_AS(solve_bivariate(P("x*y"), P("x*y^2 + x"), config), NotFinite);
    CHECK_THROWS_AS(solve_bivariate(P("x - 1"), P("x^2 - 1"), config), NotFinite);
    CHECK(solve_bivariate(P("x - 1"), P("x - 2"), config).empty());
    CHECK(solve_bivariate(P("x + y"), P("x + y + 1"), config).empty());
    CHECK_THROWS_AS(solve_bivariate(Polynomial(2), P("x"), config), NotFinite);

    auto sols = solve_bivariate(P("x^2 + y^2 - 1"), P("x - y"), config);
    CHECK(sols.size() == 2);
}

TEST_CASE("eigenvalue solver in three variables")
{
    const VariableSet xyz({"x", "y", "z"});
    OracleConfig config;
    std::vector<Polynomial> system{parse_polynomial("x^2 - 1/4", xyz), parse_polynomial("y - x*z", xyz),
                                   parse_polynomial("z^2 - z - 2", xyz)};
    auto sols = solve_system(system, config);
    REQUIRE(sols.size() == 4);
    for (const auto& s : sols) {
        CHECK(s.converged);
        CHECK(std::abs(s.point[0] * s.point[0] - 0.25) < 1e-12);
        CHECK(std::abs(s.point[1] - s.point[0] * s.point[2]) < 1e-12);
    }
    std::vector<Polynomial> line{parse_polynomial("x", xyz), parse_polynomial("y", xyz)};
    CHECK_THROWS_AS(solve_system(line, config), NotFinite);
}

TEST_CASE("critical systems")
{
    auto ell = linear_form_from(P("x + 2*y"));
    auto sys = critical_system(P("x^2*y"), ell, Rational(1, 100), Stratum::ambient(2));
    REQUIRE(sys.size() == 2);
    CHECK(sys[0] == P("2*x*y - 1/100"));
    CHECK(sys[1] == P("x^2 - 1/50"));

    const VariableSet xyz({"x", "y", "z"});
    auto z = parse_polynomial("z", xyz);
    Stratum plane{"z=0", Ideal(3, {z}), Ideal(3, {parse_polynomial("x", xyz), parse_polynomial("y", xyz), z})};
    LinearForm ell3{{1, 1, 0}, std::nullopt};
    auto hyp = critical_system(parse_polynomial("x^2*y + z", xyz), ell3, 1, plane);
    CHECK(hyp.front() == z);
    CHECK(hyp.size() >= 3);

    Stratum line{"axis", Ideal(3, {parse_polynomial("y", xyz), z}), Ideal(3, {parse_polynomial("x", xyz)})};
    CHECK_THROWS_AS(critical_system(parse_polynomial("x^2", xyz), ell3, 1, line), NotSupported);
}

TEST_CASE("converging Morse points of the line singularities")
{
    auto ell = linear_form_from(P("x + y"));
    for (unsigned k = 2; k <= 4; ++k) {
        auto report = count_converging_morse(P("x").pow(k) * P("y"), ell, Stratum::ambient(2));
        REQUIRE(report.stable_count.has_value());
        CHECK(*report.stable_count == k);
        for (const auto& row : report.per_lambda)
            for (const auto& pt : row.accepted) {
                CHECK(pt.residual < 1e-12);
                CHECK(std::abs(pt.hessian_det) > 1e-8);
            }
    }
    auto j = count_converging_morse(P("x^2*y^2 + x^3"), ell, Stratum::ambient(2));
    REQUIRE(j.stable_count.has_value());
    CHECK(*j.stable_count == 5);
}

TEST_CASE("the cubic has no converging Morse points")
{
    auto report = count_converging_morse(P("x^3"), linear_form_from(P("x + 2*y")), Stratum::ambient(2));
    for (const auto& row : report.per_lambda)
        CHECK(row.count == 0);
    CHECK(report.stable_count == 0u);
}

TEST_CASE("oracle on a hypersurface stratum")
{
    // On z = 0, f restricts to x^2*y; the restricted count matches the plane case.
    const VariableSet xyz({"x", "y", "z"});
    auto z = parse_polynomial("z", xyz);
    Stratum plane{"z=0", Ideal(3, {z}), Ideal(3, {parse_polynomial("x", xyz), parse_polynomial("y", xyz), z})};
    LinearForm ell{{1, 1, 3}, std::nullopt};
    auto report = count_converging_morse(parse_polynomial("x^2*y + z*x", xyz), ell, plane);
    REQUIRE(report.stable_count.has_value());
    CHECK(*report.stable_count == 2);
}

TEST_CASE("config validation")
{
    OracleConfig bad;
    bad.lambda_schedule = {Rational(1, 1000), Rational(1, 100)};
    CHECK_THROWS_AS(bad.validate(), InputError);
    bad.lambda_schedule = {Rational(-1, 100)};
    CHECK_THROWS_AS(bad.validate(), InputError);
    OracleConfig tol;
    tol.cluster_tol = 0;
    CHECK_THROWS_AS(tol.validate(), InputError);
    CHECK_NOTHROW(OracleConfig{}.validate());
}

TEST_CASE("milnor numbers")
{
    CHECK(milnor_number(P("x^3 + y^3")) == 4u);
    CHECK(milnor_number(P("x^2 + y^2")) == 1u);
    CHECK(milnor_number(P("x^2*y + y^4")) == 5u);
    CHECK(milnor_number(P("x^4 + y^3")) == 6u);
    CHECK(milnor_number(P("x + y^2")) == 0u);
    for (unsigned k = 2; k <= 4; ++k)
        CHECK_FALSE(milnor_number(P("x").pow(k) * P("y")).has_value());
    // A second critical point away from the origin does not count.
    CHECK(milnor_number(P("x^2 + y^3 - y^2")) == 1u);
}
