#pragma once

#include <random>
#include <vector>

#include "morsify/polynomial.hpp"

namespace morsify::testing {

// Random polynomial with at most `terms` terms, total degree <= max_degree,
// small integer or half-integer coefficients.
inline Polynomial random_polynomial(std::mt19937_64& rng, std::size_t nvars, unsigned max_degree, std::size_t terms)
{
    std::uniform_int_distribution<int> coeff(-5, 5);
    std::uniform_int_distribution<int> den(1, 2);
    std::uniform_int_distribution<unsigned> deg(0, max_degree);
    Polynomial p(nvars);
    for (std::size_t k = 0; k < terms; ++k) {
        Monomial m(nvars, 0);
        unsigned budget = deg(rng);
        for (unsigned d = 0; d < budget; ++d)
            m[std::uniform_int_distribution<std::size_t>(0, nvars - 1)(rng)] += 1;
        Rational c(coeff(rng), den(rng));
        c.canonicalize();
        p += Polynomial::monomial(m, c);
    }
    return p;
}

} // namespace morsify::testing
