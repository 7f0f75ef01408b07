#pragma once

#include <span>
#include <vector>

#include "morsify/polynomial.hpp"
#include "morsify/univariate.hpp"

namespace morsify {

// All complex roots of sum coeffs[i] * t^i, counted with multiplicity, by
// Aberth-Ehrlich simultaneous iteration started from Newton-polygon radii.
// Exact zero roots are split off first. Trailing zero coefficients are ignored.
std::vector<Complex> polynomial_roots(std::span<const Complex> coeffs);

// Roots of the squarefree part, computed exactly before the numeric stage.
std::vector<Complex> distinct_roots(const UPoly& p);

} // namespace morsify
