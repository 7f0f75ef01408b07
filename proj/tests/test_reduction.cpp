#include "doctest.h"

#include <random>

#include "morsify/bivariate.hpp"
#include "morsify/errors.hpp"
#include "morsify/reduction.hpp"
#include "morsify/variables.hpp"

using namespace morsify;

namespace {

const VariableSet xy({"x", "y"});
const VariableSet uv({"u", "v"});

Polynomial P(const char* text, const VariableSet& vars = xy)
{
    return parse_polynomial(text, vars);
}

PlaneCurveGerm image_for(const Polynomial& f, const LinearForm& ell)
{
    auto polar = polar_ideal(f, ell, Stratum::ambient(f.nvars()));
    REQUIRE(polar.status == PolarStatus::curve);
    return image_plane_curve(polar, ell, f);
}

} // namespace

TEST_CASE("image curve of x^2*y is the hand-eliminated cubic")
{
    auto germ = image_for(P("x^2*y"), linear_form_from(P("x + y")));
    CHECK(germ.g == P("4*u^3 - 27*v", uv));
    CHECK(germ.ord_u0 == 3u);
    CHECK(germ.ord_0v == 1u);
    CHECK(morse_number(germ) == 2);
}

TEST_CASE("image curves of the line singularities")
{
    auto ell = linear_form_from(P("x + y"));
    for (unsigned k = 2; k <= 5; ++k) {
        auto germ = image_for(P("x").pow(k) * P("y"), ell);
        CHECK(germ.ord_u0 == k + 1);
        CHECK(germ.ord_0v == 1u);
        CHECK(morse_number(germ) == k);
    }
    auto j = image_for(P("x^2*y^2 + x^3"), ell);
    CHECK(j.ord_u0 == 6u);
    CHECK(j.ord_0v == 1u);
    CHECK(morse_number(j) == 5);
}

TEST_CASE("a linear form vanishing on a polar branch is rejected")
{
    // Polar curve of x^3 + y^3 for l = x + y is x^2 = y^2; l vanishes on x = -y.
    auto f = P("x^3 + y^3");
    auto ell = linear_form_from(P("x + y"));
    auto polar = polar_ideal(f, ell, Stratum::ambient(2));
    REQUIRE(polar.status == PolarStatus::curve);
    CHECK_THROWS_AS(image_plane_curve(polar, ell, f), GenericityFailure);
    CHECK(morse_number(image_for(f, linear_form_from(P("x + 2*y")))) == 4);
}

TEST_CASE("morse_number conventions and failures")
{
    CHECK(morse_number(std::nullopt) == 0);
    CHECK(morse_number(PlaneCurveGerm::from(P("v - u", uv))) == 0);
    CHECK_THROWS_AS(morse_number(PlaneCurveGerm::from(P("u*v + u^3", uv))), GenericityFailure);
    CHECK_THROWS_AS(morse_number(PlaneCurveGerm::from(P("u - v^2", uv))), GenericityFailure);
}

TEST_CASE("newton polygons")
{
    auto cubic = newton_polygon(PlaneCurveGerm::from(P("27*v - 4*u^3", uv)));
    CHECK(cubic.vertices == std::vector<LatticePoint>{{3, 0}, {0, 1}});
    REQUIRE(cubic.edges.size() == 1);
    CHECK(cubic.edges[0].lattice_length == 1);

    auto three = newton_polygon(PlaneCurveGerm::from(P("v^2 + u*v + u^3", uv)));
    CHECK(three.vertices == std::vector<LatticePoint>{{3, 0}, {1, 1}, {0, 2}});

    auto line = newton_polygon(PlaneCurveGerm::from(P("v - u", uv)));
    CHECK(line.vertices == std::vector<LatticePoint>{{1, 0}, {0, 1}});

    // Interior and far terms do not change the local polygon.
    auto busy = newton_polygon(PlaneCurveGerm::from(P("v^2 - u^4 + u^3*v + u^9 + 7*u^2*v^5 + 1/3*u^2*v", uv)));
    // (2, 1) is on the segment, so it is not a vertex.
    CHECK(busy.vertices == std::vector<LatticePoint>{{4, 0}, {0, 2}});
    REQUIRE(busy.edges.size() == 1);
    CHECK(busy.edges[0].lattice_length == 2);
}

TEST_CASE("branch tables")
{
    auto cubic = branch_table(PlaneCurveGerm::from(P("27*v - 4*u^3", uv)));
    CHECK(cubic == std::vector<BranchDatum>{{1, 3, 1, 2}});
    auto line = branch_table(PlaneCurveGerm::from(P("v - u", uv)));
    CHECK(line == std::vector<BranchDatum>{{1, 1, 1, 0}});
    // Two branches v = +-u^2 share one edge of lattice length 2.
    auto pair = branch_table(PlaneCurveGerm::from(P("v^2 - u^4", uv)));
    CHECK(pair == std::vector<BranchDatum>{{1, 2, 2, 2}});

    auto j = branch_table(image_for(P("x^2*y^2 + x^3"), linear_form_from(P("x + y"))));
    unsigned sum = 0;
    for (const auto& b : j)
        sum += b.m_delta_total;
    CHECK(sum == 5);

    CHECK_THROWS_AS(branch_table(PlaneCurveGerm::from(P("v^3 + u*v + u^4", uv))), GenericityFailure);
}

TEST_CASE("axis orders are invariant under rescaling the linear form")
{
    auto f = P("x^2*y^2 + x^3");
    auto base = image_for(f, linear_form_from(P("x + y")));
    for (const char* scaled : {"3*x + 3*y", "-1/2*x - 1/2*y"}) {
        auto germ = image_for(f, linear_form_from(P(scaled)));
        CHECK(germ.ord_u0 == base.ord_u0);
        CHECK(germ.ord_0v == base.ord_0v);
    }
}

TEST_CASE("random admissible curves satisfy the lattice sum identity")
{
    std::mt19937_64 rng(41);
    std::uniform_int_distribution<int> coeff(-4, 4);
    std::uniform_int_distribution<unsigned> exp(0, 6);
    int checked = 0;
    while (checked < 40) {
        Polynomial g(2);
        unsigned a = 1 + exp(rng), b = 1 + exp(rng) % 3;
        g += Polynomial::monomial({a, 0}, 1 + std::abs(coeff(rng)));
        g += Polynomial::monomial({0, b}, -1 - std::abs(coeff(rng)));
        for (int t = 0; t < 4; ++t) {
            unsigned i = exp(rng), j = 1 + exp(rng) % 4;
            g += Polynomial::monomial({i, j}, coeff(rng));
        }
        auto germ = PlaneCurveGerm::from(squarefree_part(g));
        if (!germ.ord_u0 || !germ.ord_0v || *germ.ord_u0 < *germ.ord_0v || germ.g.constant_term() != 0)
            continue;
        std::vector<BranchDatum> table;
        try {
            table = branch_table(germ);
        } catch (const GenericityFailure&) {
            continue; // an edge with q < p
        }
        unsigned sum = 0;
        for (const auto& row : table) {
            CHECK(row.q >= row.p);
            CHECK(row.p >= 1);
            sum += row.m_delta_total;
        }
        CHECK(sum == *germ.ord_u0 - *germ.ord_0v);
        ++checked;
    }
}
