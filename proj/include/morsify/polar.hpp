#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "morsify/groebner.hpp"
#include "morsify/ideal.hpp"

namespace morsify {

/// A stratum V = V(closure) \ V(boundary), with V(closure) cut out near the
/// origin as a complete intersection by the closure generators.
struct Stratum {
    std::string label;
    Ideal closure;
    Ideal boundary;

    // Number of closure generators; 0 for the ambient smooth stratum.
    std::size_t codim() const { return closure.generators().size(); }

    // The ambient space with only the origin removed.
    static Stratum ambient(std::size_t nvars, std::string label = "ambient");
};

struct LinearForm {
    std::vector<Rational> coefficients;
    // Seed that produced the form; empty for an explicit override.
    std::optional<std::uint64_t> seed;

    Polynomial polynomial() const;
};

// Deterministic coefficients in [-9, 9] \ {0}, reproducible from the seed.
LinearForm draw_generic_linear(std::uint64_t seed, std::size_t nvars);
// Explicit form from a linear polynomial; throws InputError if not linear
// homogeneous or identically zero.
LinearForm linear_form_from(const Polynomial& p);

enum class PolarStatus { curve, empty, degenerate };
const char* to_string(PolarStatus s);

struct PolarCurve {
    Ideal ideal;
    PolarStatus status;
    int dimension;
};

// All r x r minors of the matrix whose rows are the gradients of `rows`,
// r = rows.size(), taken over every choice of r columns.
std::vector<Polynomial> jacobian_minors(const std::vector<Polynomial>& rows);

// closure + all (k+1)-minors of Jac(g_1..g_k, f).
Ideal sing_f_ideal(const Polynomial& f, const Stratum& stratum);

// True when df vanishes identically on the stratum closure, i.e. every
// generator of sing_f_ideal lies in the radical of the closure ideal.
bool constant_on_stratum(const Polynomial& f, const Stratum& stratum, const GroebnerLimits& limits = {});

// closure + (k+2)-minors of Jac(g, l, f), saturated by sing_f_ideal and then
// by the boundary. Status: dimension 1 with the origin on it gives curve,
// dimension >= 2 degenerate, anything else empty.
PolarCurve polar_ideal(const Polynomial& f, const LinearForm& ell, const Stratum& stratum,
                       const GroebnerLimits& limits = {});

} // namespace morsify
