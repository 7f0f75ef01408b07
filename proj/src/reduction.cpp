#include "morsify/reduction.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "morsify/bivariate.hpp"
#include "morsify/errors.hpp"

namespace morsify {

namespace {

// Terms of a polynomial that only uses variables n and n+1, moved to (u, v).
Polynomial to_target_plane(const Polynomial& p, std::size_t n)
{
    Polynomial::TermMap terms;
    for (const auto& [m, c] : p.terms())
        terms.emplace(Monomial{m[n], m[n + 1]}, c);
    return Polynomial(2, std::move(terms));
}

long cross(const LatticePoint& o, const LatticePoint& a, const LatticePoint& b)
{
    long ax = static_cast<long>(a.first) - static_cast<long>(o.first);
    long ay = static_cast<long>(a.second) - static_cast<long>(o.second);
    long bx = static_cast<long>(b.first) - static_cast<long>(o.first);
    long by = static_cast<long>(b.second) - static_cast<long>(o.second);
    return ax * by - ay * bx;
}

} // namespace

PlaneCurveGerm PlaneCurveGerm::from(const Polynomial& g)
{
    if (g.nvars() != 2 || g.is_zero())
        throw InternalError("plane curve germ needs a nonzero polynomial in (u, v)");
    return PlaneCurveGerm{g, axis_order(g, Axis::set_v_zero), axis_order(g, Axis::set_u_zero)};
}

PlaneCurveGerm image_plane_curve(const PolarCurve& polar, const LinearForm& ell, const Polynomial& f,
                                 const GroebnerLimits& limits)
{
    if (polar.status != PolarStatus::curve)
        throw InternalError("image_plane_curve needs a polar curve");
    const std::size_t n = f.nvars();
    // A polar branch inside {l = 0} collapses to a point and drops out of G.
    if (krull_dimension(polar.ideal + Ideal(n, {ell.polynomial()}), limits) > 0)
        throw GenericityFailure("the linear form vanishes on a branch of the polar curve");
    const Polynomial u = Polynomial::variable(n + 2, n);
    const Polynomial v = Polynomial::variable(n + 2, n + 1);

    std::vector<Polynomial> gens;
    for (const auto& g : polar.ideal.generators())
        gens.push_back(g.extend(2));
    gens.push_back(u - ell.polynomial().extend(2));
    gens.push_back(v - f.extend(2));

    std::vector<bool> front(n + 2, true);
    front[n] = front[n + 1] = false;
    Ideal image = eliminate(Ideal(n + 2, std::move(gens)), front, limits);
    if (image.is_zero())
        throw GenericityFailure("the image of the polar curve under (l, f) is not a plane curve");

    std::vector<Polynomial> plane;
    for (const auto& g : image.generators())
        plane.push_back(to_target_plane(g, n));

    Polynomial g = squarefree_part(plane.front());
    for (std::size_t i = 1; i < plane.size(); ++i)
        g = bivariate_gcd(g, squarefree_part(plane[i]));
    if (g.is_constant())
        throw GenericityFailure("elimination ideal of the polar image has no curve component");
    if (!radical_contains(Ideal(2, plane), g, limits))
        throw GenericityFailure("elimination ideal of the polar image is not principal up to radical");
    return PlaneCurveGerm::from(squarefree_part(g));
}

unsigned morse_number(const std::optional<PlaneCurveGerm>& germ)
{
    if (!germ)
        return 0;
    if (!germ->ord_u0 || !germ->ord_0v)
        throw GenericityFailure("an axis divides the image curve G");
    if (*germ->ord_u0 < *germ->ord_0v)
        throw GenericityFailure("image curve is not tangent to {v = 0}: ord_u0 < ord_0v");
    return *germ->ord_u0 - *germ->ord_0v;
}

NewtonPolygon newton_polygon(const PlaneCurveGerm& germ)
{
    if (!germ.ord_u0 || !germ.ord_0v)
        throw GenericityFailure("an axis divides the image curve G; no compact Newton polygon");
    const unsigned a_max = *germ.ord_u0, b_max = *germ.ord_0v;
    if (a_max == 0 || b_max == 0)
        throw InternalError("Newton polygon of a curve not through the origin");

    // Lowest v-exponent per u-exponent inside the box spanned by the axis points.
    std::map<unsigned, unsigned> lowest;
    for (const auto& [m, c] : germ.g.terms()) {
        if (m[0] > a_max || m[1] > b_max)
            continue;
        auto [it, inserted] = lowest.try_emplace(m[0], m[1]);
        if (!inserted)
            it->second = std::min(it->second, m[1]);
    }

    std::vector<LatticePoint> hull;
    for (const auto& [a, b] : lowest) {
        LatticePoint pt{a, b};
        while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), pt) <= 0)
            hull.pop_back();
        hull.push_back(pt);
    }
    if (hull.front() != LatticePoint{0, b_max} || hull.back() != LatticePoint{a_max, 0})
        throw InternalError("Newton polygon endpoints disagree with the axis orders");

    NewtonPolygon poly;
    poly.vertices.assign(hull.rbegin(), hull.rend());
    for (std::size_t i = 0; i + 1 < poly.vertices.size(); ++i) {
        const auto& from = poly.vertices[i];
        const auto& to = poly.vertices[i + 1];
        unsigned da = from.first - to.first;
        unsigned db = to.second - from.second;
        unsigned len = std::gcd(da, db);
        poly.edges.push_back({from, to, len, da / len, db / len});
    }
    return poly;
}

std::vector<BranchDatum> branch_table(const PlaneCurveGerm& germ)
{
    const unsigned total = morse_number(germ);
    std::vector<BranchDatum> table;
    unsigned sum = 0;
    for (const auto& e : newton_polygon(germ).edges) {
        const unsigned p = e.dv, q = e.du;
        if (q < p)
            throw GenericityFailure("a branch of the image curve is not tangent to {v = 0} (q < p)");
        table.push_back({p, q, e.lattice_length, e.lattice_length * (q - p)});
        sum += table.back().m_delta_total;
    }
    if (sum != total)
        throw InternalError("branch contributions sum to " + std::to_string(sum) + " but ord_u0 - ord_0v = " +
                            std::to_string(total));
    return table;
}

} // namespace morsify
