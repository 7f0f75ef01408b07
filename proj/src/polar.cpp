#include "morsify/polar.hpp"

#include <algorithm>
#include <random>

#include "morsify/errors.hpp"

namespace morsify {

namespace {

Polynomial determinant(const std::vector<std::vector<Polynomial>>& m)
{
    const std::size_t n = m.size();
    if (n == 1)
        return m[0][0];
    if (n == 2)
        return m[0][0] * m[1][1] - m[0][1] * m[1][0];
    Polynomial acc(m[0][0].nvars());
    for (std::size_t col = 0; col < n; ++col) {
        if (m[0][col].is_zero())
            continue;
        std::vector<std::vector<Polynomial>> sub;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<Polynomial> row;
            for (std::size_t c = 0; c < n; ++c)
                if (c != col)
                    row.push_back(m[r][c]);
            sub.push_back(std::move(row));
        }
        Polynomial term = m[0][col] * determinant(sub);
        if (col % 2 == 0)
            acc += term;
        else
            acc -= term;
    }
    return acc;
}

} // namespace

Stratum Stratum::ambient(std::size_t nvars, std::string label)
{
    std::vector<Polynomial> coords;
    for (std::size_t i = 0; i < nvars; ++i)
        coords.push_back(Polynomial::variable(nvars, i));
    return Stratum{std::move(label), Ideal(nvars), Ideal(nvars, std::move(coords))};
}

Polynomial LinearForm::polynomial() const
{
    const std::size_t n = coefficients.size();
    Polynomial p(n);
    for (std::size_t i = 0; i < n; ++i)
        p += Polynomial::variable(n, i) * coefficients[i];
    return p;
}

LinearForm draw_generic_linear(std::uint64_t seed, std::size_t nvars)
{
    if (nvars == 0)
        throw InternalError("linear form needs at least one variable");
    // Plain modular reduction keeps the stream identical across standard libraries.
    std::mt19937_64 rng(seed);
    LinearForm form;
    form.seed = seed;
    for (std::size_t i = 0; i < nvars; ++i) {
        long v = static_cast<long>(rng() % 18);
        form.coefficients.emplace_back(v < 9 ? v - 9 : v - 8);
    }
    return form;
}

LinearForm linear_form_from(const Polynomial& p)
{
    if (p.is_zero())
        throw InputError("linear form is identically zero");
    LinearForm form;
    form.coefficients.assign(p.nvars(), Rational(0));
    for (const auto& [m, c] : p.terms()) {
        if (total_degree(m) != 1)
            throw InputError("linear form must be homogeneous of degree one");
        for (std::size_t i = 0; i < m.size(); ++i)
            if (m[i] == 1)
                form.coefficients[i] = c;
    }
    return form;
}

const char* to_string(PolarStatus s)
{
    switch (s) {
    case PolarStatus::curve:
        return "CURVE";
    case PolarStatus::empty:
        return "EMPTY";
    case PolarStatus::degenerate:
        return "DEGENERATE";
    }
    return "?";
}

std::vector<Polynomial> jacobian_minors(const std::vector<Polynomial>& rows)
{
    if (rows.empty())
        throw InternalError("jacobian of an empty list");
    const std::size_t n = rows.front().nvars();
    const std::size_t r = rows.size();
    if (r > n)
        return {};
    std::vector<std::vector<Polynomial>> grad(r);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < n; ++j)
            grad[i].push_back(rows[i].derivative(j));

    std::vector<Polynomial> minors;
    std::vector<bool> pick(n, false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(r), true);
    do {
        std::vector<std::vector<Polynomial>> sub(r);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (pick[j])
                    sub[i].push_back(grad[i][j]);
        minors.push_back(determinant(sub));
    } while (std::prev_permutation(pick.begin(), pick.end()));
    return minors;
}

Ideal sing_f_ideal(const Polynomial& f, const Stratum& stratum)
{
    std::vector<Polynomial> rows = stratum.closure.generators();
    if (rows.size() >= f.nvars())
        throw InputError("stratum '" + stratum.label + "' has codimension >= ambient dimension");
    rows.push_back(f);
    return stratum.closure + Ideal(f.nvars(), jacobian_minors(rows));
}

bool constant_on_stratum(const Polynomial& f, const Stratum& stratum, const GroebnerLimits& limits)
{
    Ideal sing = sing_f_ideal(f, stratum);
    return std::all_of(sing.generators().begin(), sing.generators().end(),
                       [&](const Polynomial& g) { return radical_contains(stratum.closure, g, limits); });
}

PolarCurve polar_ideal(const Polynomial& f, const LinearForm& ell, const Stratum& stratum, const GroebnerLimits& limits)
{
    const std::size_t n = f.nvars();
    if (ell.coefficients.size() != n)
        throw InternalError("linear form lives in a different ring");
    std::vector<Polynomial> rows = stratum.closure.generators();
    rows.push_back(ell.polynomial());
    rows.push_back(f);
    Ideal critical = stratum.closure + Ideal(n, jacobian_minors(rows));

    Ideal polar = saturation(critical, sing_f_ideal(f, stratum), limits);
    polar = saturation(polar, stratum.boundary, limits);

    GroebnerBasis gb = buchberger(polar, MonomialOrder::grevlex(), limits);
    int dim = krull_dimension(gb);
    bool through_origin = std::all_of(gb.elements().begin(), gb.elements().end(),
                                      [](const Polynomial& g) { return g.constant_term() == 0; });

    PolarStatus status = PolarStatus::empty;
    if (dim >= 2)
        status = PolarStatus::degenerate;
    else if (dim == 1 && through_origin)
        status = PolarStatus::curve;
    return PolarCurve{gb.ideal(), status, dim};
}

} // namespace morsify
