#include "morsify/polynomial.hpp"

#include <algorithm>
#include <numeric>

#include "morsify/errors.hpp"

namespace morsify {

std::uint32_t total_degree(const Monomial& m)
{
    return std::accumulate(m.begin(), m.end(), std::uint32_t{0});
}

bool divides(const Monomial& a, const Monomial& b)
{
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i])
            return false;
    return true;
}

Monomial monomial_lcm(const Monomial& a, const Monomial& b)
{
    Monomial out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = std::max(a[i], b[i]);
    return out;
}

Monomial monomial_product(const Monomial& a, const Monomial& b)
{
    Monomial out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = a[i] + b[i];
    return out;
}

Monomial monomial_quotient(const Monomial& a, const Monomial& b)
{
    Monomial out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = a[i] - b[i];
    return out;
}

Polynomial::Polynomial(std::size_t nvars, TermMap terms) : nvars_(nvars), terms_(std::move(terms))
{
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->first.size() != nvars_)
            throw InternalError("exponent vector length does not match ring");
        if (it->second == 0)
            it = terms_.erase(it);
        else
            ++it;
    }
}

Polynomial Polynomial::constant(std::size_t nvars, const Rational& c)
{
    Polynomial p(nvars);
    if (c != 0)
        p.terms_.emplace(Monomial(nvars, 0), c);
    return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t index)
{
    Monomial m(nvars, 0);
    m.at(index) = 1;
    return monomial(m, 1);
}

Polynomial Polynomial::monomial(const Monomial& m, const Rational& c)
{
    Polynomial p(m.size());
    if (c != 0)
        p.terms_.emplace(m, c);
    return p;
}

bool Polynomial::is_constant() const
{
    return terms_.empty() || (terms_.size() == 1 && morsify::total_degree(terms_.begin()->first) == 0);
}

Rational Polynomial::constant_term() const
{
    return coefficient(Monomial(nvars_, 0));
}

Rational Polynomial::coefficient(const Monomial& m) const
{
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

int Polynomial::total_degree() const
{
    int best = -1;
    for (const auto& [m, c] : terms_)
        best = std::max(best, static_cast<int>(morsify::total_degree(m)));
    return best;
}

int Polynomial::degree_in(std::size_t var) const
{
    int best = -1;
    for (const auto& [m, c] : terms_)
        best = std::max(best, static_cast<int>(m[var]));
    return best;
}

int Polynomial::order_in(std::size_t var) const
{
    if (terms_.empty())
        return -1;
    auto best = terms_.begin()->first[var];
    for (const auto& [m, c] : terms_)
        best = std::min(best, m[var]);
    return static_cast<int>(best);
}

bool Polynomial::uses_variable(std::size_t var) const
{
    return std::any_of(terms_.begin(), terms_.end(), [var](const auto& t) { return t.first[var] != 0; });
}

void Polynomial::check_ring(const Polynomial& other) const
{
    if (other.nvars_ != nvars_)
        throw InternalError("polynomials live in different rings");
}

Polynomial Polynomial::operator-() const
{
    Polynomial out = *this;
    for (auto& [m, c] : out.terms_)
        c = -c;
    return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& other)
{
    check_ring(other);
    for (const auto& [m, c] : other.terms_) {
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0)
                terms_.erase(it);
        }
    }
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other)
{
    check_ring(other);
    for (const auto& [m, c] : other.terms_) {
        auto [it, inserted] = terms_.try_emplace(m, -c);
        if (!inserted) {
            it->second -= c;
            if (it->second == 0)
                terms_.erase(it);
        }
    }
    return *this;
}

void Polynomial::add_scaled(const Polynomial& other, const Rational& c, const Monomial& shift)
{
    check_ring(other);
    if (c == 0)
        return;
    for (const auto& [m, d] : other.terms_) {
        Rational term = c * d;
        auto [it, inserted] = terms_.try_emplace(monomial_product(m, shift), term);
        if (!inserted) {
            it->second += term;
            if (it->second == 0)
                terms_.erase(it);
        }
    }
}

Polynomial operator*(const Polynomial& a, const Polynomial& b)
{
    a.check_ring(b);
    Polynomial out(a.nvars_);
    for (const auto& [m, c] : b.terms_)
        out.add_scaled(a, c, m);
    return out;
}

Polynomial& Polynomial::operator*=(const Polynomial& other)
{
    *this = *this * other;
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, d] : terms_)
        d *= c;
    return *this;
}

Polynomial Polynomial::pow(unsigned exponent) const
{
    Polynomial result = constant(nvars_, 1);
    Polynomial base = *this;
    while (exponent > 0) {
        if (exponent & 1u)
            result *= base;
        exponent >>= 1u;
        if (exponent > 0)
            base *= base;
    }
    return result;
}

Polynomial Polynomial::derivative(std::size_t var) const
{
    if (var >= nvars_)
        throw InternalError("derivative variable out of range");
    Polynomial out(nvars_);
    for (const auto& [m, c] : terms_) {
        if (m[var] == 0)
            continue;
        Monomial dm = m;
        dm[var] -= 1;
        out.terms_.emplace(std::move(dm), c * m[var]);
    }
    return out;
}

Polynomial Polynomial::substitute(std::span<const Polynomial> images) const
{
    if (images.size() != nvars_)
        throw InternalError("substitution needs one image per variable");
    const std::size_t target = images.empty() ? 0 : images.front().nvars();
    for (const auto& img : images)
        if (img.nvars() != target)
            throw InternalError("substitution images live in different rings");

    // Powers are cached per variable; the exponents seen are small.
    std::vector<std::vector<Polynomial>> powers(nvars_);
    auto power_of = [&](std::size_t var, std::uint32_t e) -> const Polynomial& {
        auto& cache = powers[var];
        if (cache.empty())
            cache.push_back(constant(target, 1));
        while (cache.size() <= e)
            cache.push_back(cache.back() * images[var]);
        return cache[e];
    };

    Polynomial out(target);
    for (const auto& [m, c] : terms_) {
        Polynomial term = constant(target, c);
        for (std::size_t i = 0; i < nvars_; ++i)
            if (m[i] != 0)
                term *= power_of(i, m[i]);
        out += term;
    }
    return out;
}

Polynomial Polynomial::substitute(const std::map<std::size_t, Polynomial>& bindings) const
{
    std::vector<Polynomial> images;
    images.reserve(nvars_);
    for (std::size_t i = 0; i < nvars_; ++i) {
        auto it = bindings.find(i);
        images.push_back(it == bindings.end() ? variable(nvars_, i) : it->second);
    }
    return substitute(images);
}

Polynomial Polynomial::embed(std::size_t target_nvars, std::span<const std::size_t> index_map) const
{
    if (index_map.size() != nvars_)
        throw InternalError("embedding needs one index per variable");
    Polynomial out(target_nvars);
    for (const auto& [m, c] : terms_) {
        Monomial tm(target_nvars, 0);
        for (std::size_t i = 0; i < nvars_; ++i)
            tm.at(index_map[i]) += m[i];
        out.terms_.emplace(std::move(tm), c);
    }
    return out;
}

Polynomial Polynomial::extend(std::size_t extra) const
{
    std::vector<std::size_t> index(nvars_);
    std::iota(index.begin(), index.end(), std::size_t{0});
    return embed(nvars_ + extra, index);
}

Polynomial Polynomial::truncate_ring(std::size_t keep) const
{
    Polynomial out(keep);
    for (const auto& [m, c] : terms_) {
        for (std::size_t i = keep; i < nvars_; ++i)
            if (m[i] != 0)
                throw InternalError("truncate_ring would drop a used variable");
        out.terms_.emplace(Monomial(m.begin(), m.begin() + static_cast<std::ptrdiff_t>(keep)), c);
    }
    return out;
}

Complex Polynomial::evaluate(std::span<const Complex> point) const
{
    if (point.size() != nvars_)
        throw InternalError("evaluation point has wrong dimension");
    std::vector<std::vector<Complex>> powers(nvars_, std::vector<Complex>{Complex(1.0)});
    Complex sum = 0.0;
    for (const auto& [m, c] : terms_) {
        Complex term = c.get_d();
        for (std::size_t i = 0; i < nvars_; ++i) {
            auto& pw = powers[i];
            while (pw.size() <= m[i])
                pw.push_back(pw.back() * point[i]);
            term *= pw[m[i]];
        }
        sum += term;
    }
    return sum;
}

Polynomial Polynomial::primitive() const
{
    if (terms_.empty())
        return *this;
    Integer den_lcm = 1;
    for (const auto& [m, c] : terms_)
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
    Integer content = 0;
    for (const auto& [m, c] : terms_) {
        Integer num = c.get_num() * (den_lcm / c.get_den());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), num.get_mpz_t());
    }
    Rational scale(den_lcm, content);
    scale.canonicalize();
    if (terms_.rbegin()->second < 0)
        scale = -scale;
    Polynomial out = *this;
    out *= scale;
    return out;
}

Polynomial Polynomial::monic_lex() const
{
    if (terms_.empty())
        return *this;
    Polynomial out = *this;
    out *= Rational(1) / terms_.rbegin()->second;
    return out;
}

std::optional<Polynomial> divide_exact(const Polynomial& a, const Polynomial& b)
{
    if (b.is_zero())
        throw InternalError("division by the zero polynomial");
    if (a.nvars() != b.nvars())
        throw InternalError("polynomials live in different rings");
    const auto& [lead_b, lead_c] = *b.terms().rbegin();
    Polynomial remainder = a;
    Polynomial quotient(a.nvars());
    while (!remainder.is_zero()) {
        const auto& [lead_r, coeff_r] = *remainder.terms().rbegin();
        if (!divides(lead_b, lead_r))
            return std::nullopt;
        Monomial shift = monomial_quotient(lead_r, lead_b);
        Rational factor = coeff_r / lead_c;
        quotient += Polynomial::monomial(shift, factor);
        remainder.add_scaled(b, -factor, shift);
    }
    return quotient;
}

std::optional<unsigned> axis_order(const Polynomial& g, Axis axis)
{
    if (g.nvars() != 2)
        throw InternalError("axis order needs a polynomial in (u, v)");
    const std::size_t zeroed = axis == Axis::set_v_zero ? 1 : 0;
    const std::size_t kept = 1 - zeroed;
    std::optional<unsigned> best;
    for (const auto& [m, c] : g.terms())
        if (m[zeroed] == 0 && (!best || m[kept] < *best))
            best = m[kept];
    return best;
}

} // namespace morsify
