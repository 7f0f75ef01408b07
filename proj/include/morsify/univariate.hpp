#pragma once

#include <utility>
#include <vector>

#include "morsify/polynomial.hpp"

namespace morsify {

/// Dense univariate polynomial over the rationals; coefficient i multiplies t^i.
/// The coefficient vector never has trailing zeros.
class UPoly {
public:
    UPoly() = default;
    explicit UPoly(std::vector<Rational> coeffs);
    static UPoly constant(const Rational& c) { return UPoly({c}); }
    static UPoly monomial(std::size_t degree, const Rational& c);

    const std::vector<Rational>& coeffs() const noexcept { return c_; }
    bool is_zero() const noexcept { return c_.empty(); }
    // -1 for zero.
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }
    Rational operator[](std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }

    UPoly operator-() const;
    friend UPoly operator+(const UPoly& a, const UPoly& b);
    friend UPoly operator-(const UPoly& a, const UPoly& b);
    friend UPoly operator*(const UPoly& a, const UPoly& b);
    friend UPoly operator*(const UPoly& a, const Rational& c);
    friend bool operator==(const UPoly&, const UPoly&) = default;

    UPoly derivative() const;
    UPoly monic() const;
    Rational evaluate(const Rational& t) const;
    Complex evaluate(Complex t) const;

private:
    void trim();
    std::vector<Rational> c_;
};

// Quotient and remainder; b must be nonzero.
std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
// Monic gcd; gcd(0, 0) = 0.
UPoly gcd(const UPoly& a, const UPoly& b);
UPoly squarefree_part(const UPoly& p);

// Conversion between UPoly and a Polynomial that uses only variable `var`.
UPoly to_upoly(const Polynomial& p, std::size_t var);
Polynomial from_upoly(const UPoly& p, std::size_t nvars, std::size_t var);

} // namespace morsify
