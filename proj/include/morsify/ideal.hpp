#pragma once

#include <optional>
#include <vector>

#include "morsify/groebner.hpp"

namespace morsify {

// Generators of I ∩ J (auxiliary variable t, t*I + (1-t)*J, eliminate t).
Ideal intersection(const Ideal& a, const Ideal& b, const GroebnerLimits& limits = {});

// Generators of the elimination ideal I ∩ k[variables outside `front`],
// still expressed in the full ring.
Ideal eliminate(const Ideal& ideal, const std::vector<bool>& front, const GroebnerLimits& limits = {});

// (I : h) = (I ∩ (h)) / h. h must be nonzero.
Ideal ideal_quotient(const Ideal& ideal, const Polynomial& h, const GroebnerLimits& limits = {});

// (I : h^inf) by repeated quotients until the chain stabilizes.
Ideal saturation(const Ideal& ideal, const Polynomial& h, const GroebnerLimits& limits = {});

// (I : J^inf) as the intersection of the saturations by each generator of J.
// The result is the reduced grevlex basis of the saturation.
Ideal saturation(const Ideal& ideal, const Ideal& by, const GroebnerLimits& limits = {});

// Dimension of the leading-term ideal of a grevlex basis via the largest
// independent variable set. -1 for the unit ideal.
int krull_dimension(const GroebnerBasis& basis);
int krull_dimension(const Ideal& ideal, const GroebnerLimits& limits = {});

// Standard monomials of a zero-dimensional ideal, ascending in the basis
// order; nullopt when the quotient is infinite-dimensional.
std::optional<std::vector<Monomial>> quotient_basis(const GroebnerBasis& basis);
std::optional<std::vector<Monomial>> quotient_basis(const Ideal& ideal, const GroebnerLimits& limits = {});

// p in the radical of I, by the Rabinowitsch trick.
bool radical_contains(const Ideal& ideal, const Polynomial& p, const GroebnerLimits& limits = {});

} // namespace morsify
