#pragma once

#include <array>
#include <optional>
#include <vector>

#include "morsify/polar.hpp"

namespace morsify {

struct OracleConfig {
    std::vector<Rational> lambda_schedule{Rational(1, 100), Rational(1, 1000), Rational(1, 10000)};
    double ball_radius = 0.5;
    double cluster_tol = 1e-6;
    double hessian_tol = 1e-8;
    unsigned newton_iters = 50;
    double root_finder_tol = 1e-12;

    // Throws InputError on a non-decreasing or non-positive schedule or bad tolerances.
    void validate() const;
};

// A polished solution of a critical system.
struct NumericSolution {
    std::vector<Complex> point;
    double residual = 0;
    bool converged = false;
};

struct CriticalPoint {
    std::vector<Complex> point;
    double residual = 0;
    Complex hessian_det;
};

struct DiscardTally {
    unsigned outside_ball = 0;
    unsigned on_sing_f = 0;
    unsigned degenerate_hessian = 0;
    unsigned not_converged = 0;

    friend bool operator==(const DiscardTally&, const DiscardTally&) = default;
};

struct LambdaCount {
    Rational lambda;
    unsigned count = 0;
    std::vector<CriticalPoint> accepted;
    DiscardTally discarded;
};

struct OracleReport {
    std::vector<LambdaCount> per_lambda;
    // Set only when the two smallest lambdas give the same count.
    std::optional<unsigned> stable_count;
    DiscardTally discarded;
};

// Equations whose solutions are the critical points of (f - lambda*l)|V.
// Ambient: the gradient. Hypersurface {g = 0}: g and the 2x2 minors of
// Jac(g, f - lambda*l). Other strata throw NotSupported.
std::vector<Polynomial> critical_system(const Polynomial& f, const LinearForm& ell, const Rational& lambda,
                                        const Stratum& stratum);

// Exactly two equations in two variables: resultant in y, numeric roots in x,
// back-substitution and Newton polishing. Throws NotFinite if the solution
// set is not finite.
std::vector<NumericSolution> solve_bivariate(const Polynomial& p, const Polynomial& q, const OracleConfig& config);

// Any zero-dimensional system in at most three variables. Throws NotFinite
// or NotSupported.
std::vector<NumericSolution> solve_system(const std::vector<Polynomial>& system, const OracleConfig& config,
                                          const GroebnerLimits& limits = {});

// Ambient: det of the Hessian of F. Hypersurface: the bordered Hessian of
// F - mu*g with the multiplier mu read off from grad F = mu grad g.
Complex hessian_determinant(const Polynomial& F, const Stratum& stratum, std::span<const Complex> point);

OracleReport count_converging_morse(const Polynomial& f, const LinearForm& ell, const Stratum& stratum,
                                    const OracleConfig& config = {}, const GroebnerLimits& limits = {});

// dim_C C[x]/(df); nullopt when the singular point is not isolated.
std::optional<unsigned> milnor_number(const Polynomial& f, const GroebnerLimits& limits = {});

} // namespace morsify
