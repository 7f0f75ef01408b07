#include "doctest.h"

#include <random>

#include "morsify/bivariate.hpp"
#include "morsify/errors.hpp"
#include "morsify/ideal.hpp"
#include "morsify/variables.hpp"
#include "test_support.hpp"

using namespace morsify;

namespace {

const VariableSet xy({"x", "y"});

Polynomial P(const char* text, const VariableSet& vars = xy)
{
    return parse_polynomial(text, vars);
}

Ideal I(std::initializer_list<const char*> gens, const VariableSet& vars = xy)
{
    std::vector<Polynomial> ps;
    for (auto g : gens)
        ps.push_back(P(g, vars));
    return Ideal(vars.size(), std::move(ps));
}

bool same_up_to_scalar(const Polynomial& a, const Polynomial& b)
{
    return a.primitive() == b.primitive() || a.primitive() == (-b).primitive();
}

bool principal_equal(const Ideal& ideal, const Polynomial& g)
{
    return ideals_equal(ideal, Ideal(g.nvars(), {g}));
}

} // namespace

TEST_CASE("monomial orders")
{
    auto grevlex = MonomialOrder::grevlex();
    CHECK(grevlex.compare({1, 1}, {0, 2}) > 0);
    CHECK(grevlex.compare({3, 0}, {0, 2}) > 0);
    CHECK(grevlex.compare({1, 0, 1}, {0, 2, 0}) < 0);
    auto lex = MonomialOrder::lex();
    CHECK(lex.compare({1, 0}, {0, 5}) > 0);
    auto block = MonomialOrder::block({true, false, false});
    CHECK(block.compare({1, 0, 0}, {0, 9, 9}) > 0);
    CHECK(block.compare({0, 2, 0}, {0, 0, 1}) > 0);
}

TEST_CASE("buchberger examples")
{
    auto gb = buchberger(I({"x", "y"}), MonomialOrder::lex());
    CHECK(gb.elements() == std::vector<Polynomial>{P("y"), P("x")});

    const VariableSet txy({"t", "x", "y"});
    auto line = buchberger(I({"x - 2*t", "y - t"}, txy), MonomialOrder::lex());
    bool found = false;
    for (const auto& g : line.elements())
        found = found || same_up_to_scalar(g, P("x - 2*y", txy));
    CHECK(found);

    // The univariate element must match the resultant in x, computed independently.
    auto a = P("x^2 + y"), b = P("x*y - 1");
    auto gb2 = buchberger(Ideal(2, {a, b}), MonomialOrder::lex());
    auto res = from_upoly(resultant(a, b, 0), 2, 1);
    CHECK(res.total_degree() == 3);
    bool has_univariate = false;
    for (const auto& g : gb2.elements())
        if (!g.uses_variable(0)) {
            has_univariate = true;
            CHECK(g.degree_in(1) == 3);
            CHECK(same_up_to_scalar(g, res));
        }
    CHECK(has_univariate);
}

TEST_CASE("buchberger detects the unit ideal and honours caps")
{
    CHECK(buchberger(I({"x", "x - 1"}), MonomialOrder::grevlex()).is_unit());
    CHECK(buchberger(Ideal(2), MonomialOrder::grevlex()).is_zero());
    GroebnerLimits tight;
    tight.max_pairs = 1;
    CHECK_THROWS_AS(buchberger(I({"x^3 - y^2", "x*y^2 - x - 1", "y^3 - x*y"}), MonomialOrder::lex(), tight),
                    ResourceCapExceeded);
    GroebnerLimits low_degree;
    low_degree.max_degree = 2;
    CHECK_THROWS_AS(buchberger(I({"x^3 - y"}), MonomialOrder::grevlex(), low_degree), ResourceCapExceeded);
}

TEST_CASE("normal form")
{
    auto gb = buchberger(I({"x^2 + y", "x*y - 1"}), MonomialOrder::grevlex());
    CHECK(normal_form(P("x^2 + y") * P("x + 3*y^2"), gb).is_zero());
    CHECK(normal_form(P("y"), buchberger(I({"x"}), MonomialOrder::grevlex())) == P("y"));
    CHECK(normal_form(P("x^2*y"), buchberger(I({"x*y - 1"}), MonomialOrder::grevlex())) == P("x"));
}

TEST_CASE("ideal quotient")
{
    CHECK(principal_equal(ideal_quotient(I({"x*(2*y - x)"}), P("x")), P("2*y - x")));
    CHECK(principal_equal(ideal_quotient(I({"x^2"}), P("y")), P("x^2")));
    CHECK(principal_equal(ideal_quotient(I({"x*y"}), P("x")), P("y")));
}

TEST_CASE("saturation")
{
    // Jacobian ideal of x^2*y strips the {x = 0} component.
    auto sat = saturation(I({"x*(2*y - x)"}), I({"2*x*y", "x^2"}));
    CHECK(principal_equal(sat, P("2*y - x")));

    auto cusp = saturation(I({"x*(2*y^2 + 3*x - 2*x*y)"}), I({"2*x*y^2 + 3*x^2", "2*x^2*y"}));
    CHECK(principal_equal(cusp, P("2*x*y - 2*y^2 - 3*x")));

    // Saturating by the unit ideal changes nothing.
    auto f = P("x^2*y^2 + x^3");
    CHECK(principal_equal(saturation(Ideal(2, {f}), Ideal::unit(2)), f));

    // Removing the origin from a zero-dimensional ideal at the origin empties it.
    CHECK(buchberger(saturation(I({"x^2", "y"}), I({"x", "y"})), MonomialOrder::grevlex()).is_unit());

    // Saturation by a multi-generator ideal keeps components outside V(J) even
    // when they lie in V(h) for a single generator h.
    auto keep = saturation(I({"x*y"}), I({"x", "y"}));
    CHECK(principal_equal(keep, P("x*y")));
}

TEST_CASE("elimination")
{
    const VariableSet tuv({"t", "u", "v"});
    auto e = eliminate(I({"u - 3*t", "v - 4*t^3"}, tuv), {true, false, false});
    REQUIRE(e.generators().size() == 1);
    CHECK(same_up_to_scalar(e.generators()[0], P("27*v - 4*u^3", tuv)));

    const VariableSet xuv({"x", "u", "v"});
    auto diag = eliminate(I({"u - x", "v - x"}, xuv), {true, false, false});
    REQUIRE(diag.generators().size() == 1);
    CHECK(same_up_to_scalar(diag.generators()[0], P("u - v", xuv)));

    const VariableSet xyuv({"x", "y", "u", "v"});
    auto image = eliminate(I({"x - 2*y", "u - x - y", "v - x^2*y"}, xyuv), {true, true, false, false});
    REQUIRE(image.generators().size() == 1);
    std::vector<std::size_t> keep{0, 0, 0, 1};
    auto g = image.generators()[0];
    // Move G into the (u, v) ring.
    Polynomial::TermMap terms;
    for (const auto& [m, c] : g.terms())
        terms.emplace(Monomial{m[2], m[3]}, c);
    Polynomial guv(2, terms);
    CHECK(axis_order(guv, Axis::set_v_zero) == 3u);
    CHECK(axis_order(guv, Axis::set_u_zero) == 1u);
}

TEST_CASE("elimination soundness on a parametrized curve")
{
    // x = t^2, y = t^3 + t, eliminate t; generators vanish on the parametrization.
    const VariableSet txy({"t", "x", "y"});
    auto e = eliminate(I({"x - t^2", "y - t^3 - t"}, txy), {true, false, false});
    REQUIRE_FALSE(e.is_zero());
    auto gb = buchberger(I({"x - t^2", "y - t^3 - t"}, txy), MonomialOrder::grevlex());
    std::vector<Polynomial> param{P("t", txy), P("t^2", txy), P("t^3 + t", txy)};
    for (const auto& g : e.generators()) {
        CHECK_FALSE(g.uses_variable(0));
        CHECK(contains(gb, g));
        CHECK(g.substitute(param).is_zero());
    }
}

TEST_CASE("krull dimension")
{
    CHECK(krull_dimension(I({"2*y - x"})) == 1);
    CHECK(krull_dimension(Ideal::unit(2)) == -1);
    CHECK(krull_dimension(I({"x", "y"})) == 0);
    CHECK(krull_dimension(Ideal(2)) == 2);
    const VariableSet xyz({"x", "y", "z"});
    CHECK(krull_dimension(I({"x*y", "x*z"}, xyz)) == 2);
}

TEST_CASE("quotient basis")
{
    auto q = quotient_basis(I({"3*x^2", "3*y^2"}));
    REQUIRE(q.has_value());
    CHECK(q->size() == 4);
    CHECK(quotient_basis(I({"x", "y"}))->size() == 1);
    CHECK_FALSE(quotient_basis(I({"x^2*y", "x*y^2"})).has_value());
}

TEST_CASE("quotient basis size matches the Brieskorn-Pham product")
{
    for (unsigned a = 2; a <= 4; ++a)
        for (unsigned b = 2; b <= 4; ++b) {
            auto f = P("x").pow(a) + P("y").pow(b);
            auto q = quotient_basis(Ideal(2, {f.derivative(0), f.derivative(1)}));
            REQUIRE(q.has_value());
            CHECK(q->size() == (a - 1) * (b - 1));
        }
}

TEST_CASE("radical membership")
{
    CHECK(radical_contains(I({"x^3"}), P("x")));
    CHECK_FALSE(radical_contains(I({"x^3"}), P("y")));
}

TEST_CASE("bivariate gcd and squarefree part")
{
    const VariableSet uv({"u", "v"});
    auto g = P("27*v - 4*u^3", uv);
    CHECK(same_up_to_scalar(squarefree_part(g * g), g));
    CHECK(squarefree_part(P("u^2*v", uv)) == P("u*v", uv));
    CHECK(squarefree_part(g) == g.primitive());
    CHECK(same_up_to_scalar(bivariate_gcd(P("u^2 - v^2", uv), P("u^2 + 2*u*v + v^2", uv)), P("u + v", uv)));

    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 40; ++trial) {
        auto a = testing::random_polynomial(rng, 2, 3, 4);
        auto b = testing::random_polynomial(rng, 2, 3, 4);
        auto c = testing::random_polynomial(rng, 2, 2, 3);
        if (a.is_zero() || b.is_zero() || c.is_zero())
            continue;
        auto d = bivariate_gcd(a * c, b * c);
        CHECK(divide_exact(d, c.primitive()).has_value());
        CHECK(divide_exact(a * c, d).has_value());
        CHECK(divide_exact(b * c, d).has_value());
    }
}

TEST_CASE("resultant")
{
    // Res_y(2xy - l, x^2 - l) = (x^2 - l) up to sign, l = 1/10000.
    auto r = resultant(P("2*x*y - 1/10000"), P("x^2 - 1/10000"), 1);
    CHECK(r.degree() == 2);
    CHECK(r.monic() == UPoly({Rational(-1, 10000), 0, 1}));
    // A common factor makes the resultant vanish.
    CHECK(resultant(P("(x - y)*(x + 1)"), P("(x - y)*(y + 2)"), 1).is_zero());
}

TEST_CASE("groebner bases are deterministic and idempotent")
{
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 30; ++trial) {
        Ideal ideal(3, {testing::random_polynomial(rng, 3, 3, 3), testing::random_polynomial(rng, 3, 3, 3)});
        if (ideal.is_zero())
            continue;
        auto order = trial % 2 ? MonomialOrder::grevlex() : MonomialOrder::lex();
        auto gb = buchberger(ideal, order);
        CHECK(gb == buchberger(ideal, order));
        CHECK(gb == buchberger(gb.ideal(), order));
        for (const auto& g : ideal.generators())
            CHECK(contains(gb, g));
    }
}
