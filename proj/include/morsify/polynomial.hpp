#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace morsify {

using Rational = mpq_class;
using Integer = mpz_class;
using Complex = std::complex<double>;

// Dense exponent vector, one entry per ring variable.
using Monomial = std::vector<std::uint32_t>;

std::uint32_t total_degree(const Monomial& m);
bool divides(const Monomial& a, const Monomial& b);
Monomial monomial_lcm(const Monomial& a, const Monomial& b);
Monomial monomial_product(const Monomial& a, const Monomial& b);
// Requires divides(b, a).
Monomial monomial_quotient(const Monomial& a, const Monomial& b);

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// Terms are kept in a map keyed by exponent vector (std::vector ordering,
/// i.e. lexicographic with the first variable largest), so two equal
/// polynomials always have identical term maps. Zero coefficients are never
/// stored. The polynomial knows only its variable count; names live in
/// VariableSet.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational>;

    Polynomial() = default;
    explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}
    Polynomial(std::size_t nvars, TermMap terms);

    static Polynomial constant(std::size_t nvars, const Rational& c);
    static Polynomial variable(std::size_t nvars, std::size_t index);
    static Polynomial monomial(const Monomial& m, const Rational& c);

    std::size_t nvars() const noexcept { return nvars_; }
    const TermMap& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const;
    Rational constant_term() const;
    Rational coefficient(const Monomial& m) const;

    // -1 for the zero polynomial.
    int total_degree() const;
    int degree_in(std::size_t var) const;
    // Smallest exponent of var over all terms; -1 for the zero polynomial.
    int order_in(std::size_t var) const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);
    Polynomial& operator*=(const Polynomial& other);
    Polynomial& operator*=(const Rational& c);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
    friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
    friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

    Polynomial pow(unsigned exponent) const;
    Polynomial derivative(std::size_t var) const;

    // Adds c * m * other in place.
    void add_scaled(const Polynomial& other, const Rational& c, const Monomial& m);

    // Ring map: variable i is replaced by images[i]. All images share one
    // target ring, which may differ from this polynomial's ring.
    Polynomial substitute(std::span<const Polynomial> images) const;
    // Same-ring substitution of the bound variables only.
    Polynomial substitute(const std::map<std::size_t, Polynomial>& bindings) const;

    // Moves the polynomial into a ring with target_nvars variables, sending
    // variable i to variable index_map[i].
    Polynomial embed(std::size_t target_nvars, std::span<const std::size_t> index_map) const;
    // Embeds into a ring with extra trailing variables.
    Polynomial extend(std::size_t extra) const;

    // Restriction to the first `keep` variables; requires all other exponents zero.
    Polynomial truncate_ring(std::size_t keep) const;

    Complex evaluate(std::span<const Complex> point) const;

    // Multiplies by the lcm of coefficient denominators and divides by the
    // integer content, so the result has coprime integer coefficients. The
    // largest term in the map (lex-first) is made positive.
    Polynomial primitive() const;
    // Divides by the coefficient of the lex-largest term.
    Polynomial monic_lex() const;

    bool uses_variable(std::size_t var) const;

private:
    void check_ring(const Polynomial& other) const;

    std::size_t nvars_ = 0;
    TermMap terms_;
};

// Exact division of a by b. Returns nullopt when b does not divide a.
std::optional<Polynomial> divide_exact(const Polynomial& a, const Polynomial& b);

enum class Axis { set_v_zero, set_u_zero };

// For G(u, v) in a two-variable ring (u first): the lowest exponent of the
// surviving variable after setting the other to zero. nullopt stands for an
// infinite order, i.e. the restriction vanishes and the axis divides G.
std::optional<unsigned> axis_order(const Polynomial& g, Axis axis);

} // namespace morsify
