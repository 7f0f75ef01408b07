#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "morsify/polar.hpp"

namespace morsify {

/// The image curve Delta_V = (l, f)(Gamma_V) in the target plane with
/// coordinates (u, v). G is squarefree with coprime integer coefficients.
struct PlaneCurveGerm {
    Polynomial g;
    // Order of G(u, 0) in u and of G(0, v) in v; nullopt means infinite.
    std::optional<unsigned> ord_u0;
    std::optional<unsigned> ord_0v;

    static PlaneCurveGerm from(const Polynomial& g);
};

// Lattice point (u-exponent, v-exponent).
using LatticePoint = std::pair<unsigned, unsigned>;

struct NewtonEdge {
    LatticePoint from; // larger u-exponent
    LatticePoint to;
    unsigned lattice_length;
    unsigned du; // primitive u-step
    unsigned dv; // primitive v-step
};

/// Local Newton polygon: the compact lower-left boundary of the support,
/// running from (ord_u0, 0) to (0, ord_0v).
struct NewtonPolygon {
    std::vector<LatticePoint> vertices;
    std::vector<NewtonEdge> edges;
};

struct BranchDatum {
    unsigned p; // order in u per branch
    unsigned q; // order in v per branch
    unsigned count;
    unsigned m_delta_total;

    friend bool operator==(const BranchDatum&, const BranchDatum&) = default;
};

// Eliminates the ambient variables from polar + (u - l, v - f) and returns
// the reduced image curve. Throws GenericityFailure when the image is not a
// plane curve.
PlaneCurveGerm image_plane_curve(const PolarCurve& polar, const LinearForm& ell, const Polynomial& f,
                                 const GroebnerLimits& limits = {});

// ord_u0 - ord_0v; nullopt (an empty polar curve) gives 0. Throws
// GenericityFailure for an infinite order or ord_u0 < ord_0v.
unsigned morse_number(const std::optional<PlaneCurveGerm>& germ);

NewtonPolygon newton_polygon(const PlaneCurveGerm& germ);

// One row per Newton polygon edge; the m_delta_total column sums to
// morse_number(germ).
std::vector<BranchDatum> branch_table(const PlaneCurveGerm& germ);

} // namespace morsify
