#include "morsify/bivariate.hpp"

#include "morsify/errors.hpp"

namespace morsify {

namespace {

// Coefficients in the main variable, each a polynomial in the other.
using Recursive = std::vector<UPoly>;

void trim(Recursive& r)
{
    while (!r.empty() && r.back().is_zero())
        r.pop_back();
}

Recursive to_recursive(const Polynomial& p, std::size_t main)
{
    if (p.nvars() != 2)
        throw InternalError("expected a bivariate polynomial");
    const std::size_t other = 1 - main;
    Recursive out;
    std::vector<std::vector<Rational>> dense;
    for (const auto& [m, c] : p.terms()) {
        std::size_t i = m[main], j = m[other];
        if (dense.size() <= i)
            dense.resize(i + 1);
        if (dense[i].size() <= j)
            dense[i].resize(j + 1, Rational(0));
        dense[i][j] = c;
    }
    for (auto& d : dense)
        out.emplace_back(std::move(d));
    trim(out);
    return out;
}

Polynomial from_recursive(const Recursive& r, std::size_t main)
{
    const std::size_t other = 1 - main;
    Polynomial::TermMap terms;
    for (std::size_t i = 0; i < r.size(); ++i)
        for (std::size_t j = 0; j < r[i].coeffs().size(); ++j) {
            if (r[i].coeffs()[j] == 0)
                continue;
            Monomial m(2, 0);
            m[main] = static_cast<std::uint32_t>(i);
            m[other] = static_cast<std::uint32_t>(j);
            terms.emplace(std::move(m), r[i].coeffs()[j]);
        }
    return Polynomial(2, std::move(terms));
}

UPoly content(const Recursive& r)
{
    UPoly g;
    for (const auto& c : r)
        g = gcd(g, c);
    return g;
}

Recursive divide_by(const Recursive& r, const UPoly& c)
{
    Recursive out;
    for (const auto& x : r) {
        auto [q, rem] = divmod(x, c);
        if (!rem.is_zero())
            throw InternalError("inexact content division");
        out.push_back(std::move(q));
    }
    trim(out);
    return out;
}

Recursive primitive_part(const Recursive& r)
{
    if (r.empty())
        return r;
    return divide_by(r, content(r));
}

// lc(b)^(deg a - deg b + 1) * a mod b.
Recursive pseudo_remainder(Recursive a, const Recursive& b)
{
    const UPoly lead_b = b.back();
    const std::size_t db = b.size() - 1;
    while (!a.empty() && a.size() - 1 >= db) {
        const std::size_t shift = a.size() - 1 - db;
        const UPoly lead_a = a.back();
        for (auto& c : a)
            c = c * lead_b;
        for (std::size_t j = 0; j < b.size(); ++j)
            a[j + shift] = a[j + shift] - lead_a * b[j];
        trim(a);
    }
    return a;
}

} // namespace

Polynomial bivariate_gcd(const Polynomial& a, const Polynomial& b)
{
    constexpr std::size_t main = 1;
    Recursive ra = to_recursive(a, main), rb = to_recursive(b, main);
    if (ra.empty())
        return b.primitive();
    if (rb.empty())
        return a.primitive();

    UPoly content_gcd = gcd(content(ra), content(rb));
    ra = primitive_part(ra);
    rb = primitive_part(rb);
    if (ra.size() < rb.size())
        std::swap(ra, rb);
    while (!rb.empty()) {
        Recursive r = pseudo_remainder(ra, rb);
        ra = std::move(rb);
        rb = primitive_part(r);
    }
    // ra is the last nonzero remainder; a constant in x1 means coprime primitive parts.
    Recursive g = ra.size() == 1 ? Recursive{UPoly::constant(1)} : primitive_part(ra);
    for (auto& c : g)
        c = c * content_gcd;
    return from_recursive(g, main).primitive();
}

Polynomial squarefree_part(const Polynomial& g)
{
    if (g.nvars() != 2)
        throw InternalError("expected a bivariate polynomial");
    if (g.is_zero())
        return g;
    Polynomial d = bivariate_gcd(bivariate_gcd(g, g.derivative(0)), g.derivative(1));
    auto q = divide_exact(g, d);
    if (!q)
        throw InternalError("gcd does not divide its argument");
    return q->primitive();
}

UPoly resultant(const Polynomial& p, const Polynomial& q, std::size_t eliminated)
{
    Recursive rp = to_recursive(p, eliminated), rq = to_recursive(q, eliminated);
    if (rp.empty() || rq.empty())
        return {};
    const std::size_t m = rp.size() - 1, n = rq.size() - 1;
    const std::size_t size = m + n;
    if (size == 0)
        return UPoly::constant(1);

    // Sylvester matrix, highest coefficient first.
    std::vector<std::vector<UPoly>> mat(size, std::vector<UPoly>(size));
    for (std::size_t row = 0; row < n; ++row)
        for (std::size_t k = 0; k <= m; ++k)
            mat[row][row + k] = rp[m - k];
    for (std::size_t row = 0; row < m; ++row)
        for (std::size_t k = 0; k <= n; ++k)
            mat[n + row][row + k] = rq[n - k];

    // Fraction-free (Bareiss) elimination over Q[t].
    UPoly previous = UPoly::constant(1);
    bool negate = false;
    for (std::size_t k = 0; k + 1 < size; ++k) {
        if (mat[k][k].is_zero()) {
            std::size_t swap_row = k + 1;
            while (swap_row < size && mat[swap_row][k].is_zero())
                ++swap_row;
            if (swap_row == size)
                return {};
            std::swap(mat[k], mat[swap_row]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < size; ++i) {
            for (std::size_t j = k + 1; j < size; ++j) {
                UPoly num = mat[k][k] * mat[i][j] - mat[i][k] * mat[k][j];
                auto [quot, rem] = divmod(num, previous);
                if (!rem.is_zero())
                    throw InternalError("Bareiss division was not exact");
                mat[i][j] = std::move(quot);
            }
            mat[i][k] = UPoly{};
        }
        previous = mat[k][k];
    }
    UPoly det = mat[size - 1][size - 1];
    return negate ? -det : det;
}

} // namespace morsify
