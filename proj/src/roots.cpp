#include "morsify/roots.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace morsify {

namespace {

Complex horner(const std::vector<Complex>& c, Complex z, Complex& deriv)
{
    Complex p = 0;
    deriv = 0;
    for (std::size_t i = c.size(); i-- > 0;) {
        deriv = deriv * z + p;
        p = p * z + c[i];
    }
    return p;
}

// Starting points on circles whose radii come from the upper convex hull of
// (i, log|c_i|), one circle per hull edge.
std::vector<Complex> initial_guesses(const std::vector<Complex>& c)
{
    const std::size_t n = c.size() - 1;
    std::vector<std::pair<double, double>> pts;
    for (std::size_t i = 0; i <= n; ++i)
        if (std::abs(c[i]) > 0)
            pts.emplace_back(static_cast<double>(i), std::log(std::abs(c[i])));
    std::vector<std::pair<double, double>> hull;
    for (const auto& pt : pts) {
        while (hull.size() >= 2) {
            const auto& o = hull[hull.size() - 2];
            const auto& a = hull.back();
            double cr = (a.first - o.first) * (pt.second - o.second) - (a.second - o.second) * (pt.first - o.first);
            if (cr < 0)
                break;
            hull.pop_back();
        }
        hull.push_back(pt);
    }
    std::vector<Complex> z;
    const double offset = 0.4;
    for (std::size_t k = 0; k + 1 < hull.size(); ++k) {
        const double span = hull[k + 1].first - hull[k].first;
        const double r = std::exp((hull[k].second - hull[k + 1].second) / span);
        const auto count = static_cast<std::size_t>(span);
        for (std::size_t j = 0; j < count; ++j) {
            double angle = 2 * std::numbers::pi * static_cast<double>(j) / span + offset + 0.7 * static_cast<double>(k);
            z.push_back(std::polar(r, angle));
        }
    }
    return z;
}

} // namespace

std::vector<Complex> polynomial_roots(std::span<const Complex> coeffs)
{
    std::vector<Complex> c(coeffs.begin(), coeffs.end());
    while (!c.empty() && c.back() == Complex(0))
        c.pop_back();
    std::vector<Complex> roots;
    std::size_t zeros = 0;
    while (zeros < c.size() && c[zeros] == Complex(0))
        ++zeros;
    roots.assign(zeros, Complex(0));
    c.erase(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(zeros));
    if (c.size() <= 1)
        return roots;
    if (c.size() == 2) {
        roots.push_back(-c[0] / c[1]);
        return roots;
    }

    std::vector<Complex> z = initial_guesses(c);
    const std::size_t n = z.size();
    std::vector<bool> done(n, false);
    for (int iter = 0; iter < 2000; ++iter) {
        bool all = true;
        for (std::size_t i = 0; i < n; ++i) {
            if (done[i])
                continue;
            Complex d;
            Complex p = horner(c, z[i], d);
            if (p == Complex(0)) {
                done[i] = true;
                continue;
            }
            Complex w = p / d;
            Complex s = 0;
            for (std::size_t j = 0; j < n; ++j)
                if (j != i)
                    s += 1.0 / (z[i] - z[j]);
            Complex step = w / (1.0 - w * s);
            if (!std::isfinite(step.real()) || !std::isfinite(step.imag()))
                step = w;
            z[i] -= step;
            if (std::abs(step) <= 1e-15 * std::max(std::abs(z[i]), 1e-300))
                done[i] = true;
            else
                all = false;
        }
        if (all)
            break;
    }
    // A few Newton steps on each root separately.
    for (auto& r : z)
        for (int k = 0; k < 3; ++k) {
            Complex d;
            Complex p = horner(c, r, d);
            if (p == Complex(0) || d == Complex(0))
                break;
            Complex next = r - p / d;
            Complex dn;
            if (std::abs(horner(c, next, dn)) >= std::abs(p))
                break;
            r = next;
        }
    roots.insert(roots.end(), z.begin(), z.end());
    return roots;
}

std::vector<Complex> distinct_roots(const UPoly& p)
{
    if (p.degree() <= 0)
        return {};
    UPoly sq = squarefree_part(p);
    std::vector<Complex> c;
    for (const auto& q : sq.coeffs())
        c.emplace_back(q.get_d(), 0.0);
    return polynomial_roots(c);
}

} // namespace morsify
