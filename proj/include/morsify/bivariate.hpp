#pragma once

#include "morsify/polynomial.hpp"
#include "morsify/univariate.hpp"

namespace morsify {

// All functions here take polynomials in a two-variable ring.

// gcd over Q[x0][x1] via content/primitive-part splitting and a primitive
// pseudo-remainder sequence in x1. Normalized with Polynomial::primitive().
Polynomial bivariate_gcd(const Polynomial& a, const Polynomial& b);

// G / gcd(G, dG/dx0, dG/dx1), normalized with Polynomial::primitive().
Polynomial squarefree_part(const Polynomial& g);

// Sylvester resultant eliminating variable `eliminated` (0 or 1); the result
// is a polynomial in the other variable. Uses formal degrees, so it
// commutes with specialization of the remaining variable.
UPoly resultant(const Polynomial& p, const Polynomial& q, std::size_t eliminated);

} // namespace morsify
