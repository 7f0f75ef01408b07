#include "morsify/univariate.hpp"

#include <algorithm>

#include "morsify/errors.hpp"

namespace morsify {

UPoly::UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs))
{
    trim();
}

UPoly UPoly::monomial(std::size_t degree, const Rational& c)
{
    std::vector<Rational> v(degree + 1, Rational(0));
    v[degree] = c;
    return UPoly(std::move(v));
}

void UPoly::trim()
{
    while (!c_.empty() && c_.back() == 0)
        c_.pop_back();
}

UPoly UPoly::operator-() const
{
    UPoly out = *this;
    for (auto& c : out.c_)
        c = -c;
    return out;
}

UPoly operator+(const UPoly& a, const UPoly& b)
{
    std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        v[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i)
        v[i] += b.c_[i];
    return UPoly(std::move(v));
}

UPoly operator-(const UPoly& a, const UPoly& b)
{
    return a + (-b);
}

UPoly operator*(const UPoly& a, const UPoly& b)
{
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<Rational> v(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            v[i + j] += a.c_[i] * b.c_[j];
    }
    return UPoly(std::move(v));
}

UPoly operator*(const UPoly& a, const Rational& c)
{
    UPoly out = a;
    for (auto& x : out.c_)
        x *= c;
    out.trim();
    return out;
}

UPoly UPoly::derivative() const
{
    if (c_.size() <= 1)
        return {};
    std::vector<Rational> v(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i)
        v[i - 1] = c_[i] * static_cast<unsigned long>(i);
    return UPoly(std::move(v));
}

UPoly UPoly::monic() const
{
    if (is_zero())
        return *this;
    return *this * (Rational(1) / leading());
}

Rational UPoly::evaluate(const Rational& t) const
{
    Rational acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;)
        acc = acc * t + c_[i];
    return acc;
}

Complex UPoly::evaluate(Complex t) const
{
    Complex acc = 0.0;
    for (std::size_t i = c_.size(); i-- > 0;)
        acc = acc * t + c_[i].get_d();
    return acc;
}

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b)
{
    if (b.is_zero())
        throw InternalError("univariate division by zero");
    std::vector<Rational> rem = a.coeffs();
    const int db = b.degree();
    if (a.degree() < db)
        return {UPoly{}, a};
    std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - db + 1), Rational(0));
    const Rational lead = b.leading();
    for (int k = a.degree() - db; k >= 0; --k) {
        Rational q = rem[static_cast<std::size_t>(k + db)] / lead;
        quot[static_cast<std::size_t>(k)] = q;
        if (q == 0)
            continue;
        for (int j = 0; j <= db; ++j)
            rem[static_cast<std::size_t>(k + j)] -= q * b.coeffs()[static_cast<std::size_t>(j)];
    }
    rem.resize(static_cast<std::size_t>(db));
    return {UPoly(std::move(quot)), UPoly(std::move(rem))};
}

UPoly gcd(const UPoly& a, const UPoly& b)
{
    UPoly x = a, y = b;
    while (!y.is_zero()) {
        UPoly r = divmod(x, y).second;
        x = std::move(y);
        y = r.monic();
    }
    return x.monic();
}

UPoly squarefree_part(const UPoly& p)
{
    if (p.degree() <= 0)
        return p.monic();
    UPoly g = gcd(p, p.derivative());
    return divmod(p, g).first.monic();
}

UPoly to_upoly(const Polynomial& p, std::size_t var)
{
    std::vector<Rational> v;
    for (const auto& [m, c] : p.terms()) {
        for (std::size_t i = 0; i < m.size(); ++i)
            if (i != var && m[i] != 0)
                throw InternalError("polynomial is not univariate in the requested variable");
        std::size_t e = m[var];
        if (v.size() <= e)
            v.resize(e + 1, Rational(0));
        v[e] = c;
    }
    return UPoly(std::move(v));
}

Polynomial from_upoly(const UPoly& p, std::size_t nvars, std::size_t var)
{
    Polynomial out(nvars);
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
        Monomial m(nvars, 0);
        m[var] = static_cast<std::uint32_t>(i);
        out += Polynomial::monomial(m, p.coeffs()[i]);
    }
    return out;
}

} // namespace morsify
