#pragma once

#include <string>
#include <vector>

#include "mink/curve.hpp"

namespace mink::assoc {

// Construction family of an associated pair. The numbered families are the
// solved coefficient triples: Hca1..Hca5 produce helices from a helix base
// curve (timelike base for 1-2, spacelike base with timelike binormal for
// 3-5); Shca1..Shca3 produce timelike helices from a spacelike slant-helix
// base curve with timelike principal normal.
enum class Family {
    Generic,
    Hca1,
    Hca2,
    Hca3,
    Hca4,
    Hca5,
    Shca1,
    Shca2,
    Shca3,
};

std::string to_string(Family family);

// Free constants of the solved coefficient triples. Only the fields used by
// the requested family are read:
//   Hca1: c (phase constant of the integrated torsion)
//   Hca2: c (binormal coefficient; must be nonzero)
//   Hca4: nu (tangent coefficient is nu - s)
//   Hca5: c1, c2 (homogeneous solution weights, anchored at the default
//         integral anchor: a2(anchor) = c1 + 1/kappa(anchor),
//         a2'(anchor) = kappa(anchor) * c2)
//   Shca1: c (additive constant of the integrated torsion-to-curvature ratio)
//   Shca2: xi, zeta     Shca3: omega
struct FamilyParams {
    double c = 0.0;
    double nu = 0.0;
    double xi = 0.0;
    double zeta = 0.0;
    double omega = 0.0;
    double c1 = 0.0;
    double c2 = 0.0;
};

// Coefficient functions of an associated curve, sampled on the base curve's
// grid together with their first derivatives.
struct CoefficientTriple {
    std::vector<double> a1;
    std::vector<double> a2;
    std::vector<double> a3;
    std::vector<double> da1;
    std::vector<double> da2;
    std::vector<double> da3;

    // Builds a triple from sampled values, filling the derivatives by
    // five-point finite differences on the grid.
    static CoefficientTriple from_values(const std::vector<double>& s,
                                         std::vector<double> a1,
                                         std::vector<double> a2,
                                         std::vector<double> a3);
};

// A base curve alpha and its associated curve
//     beta(s) = alpha(s) + a1 T + a2 N + a3 B.
// beta carries positions on alpha's grid (frames left empty; its own frame
// data comes from measurement or from shca_frame). f1, f2, f3 are the frame
// components of beta': beta' = f1 T + f2 N + f3 B, computed from the
// coefficient derivatives and the frame equations.
struct AssociatedPair {
    SampledCurve alpha;
    SampledCurve beta;
    CoefficientTriple coefficients;
    Family family = Family::Generic;
    FamilyParams params;
    std::vector<double> f1;
    std::vector<double> f2;
    std::vector<double> f3;
    bool helix_precondition_ok = true;
    std::string note;
};

// Whether a violated helix/slant-helix precondition aborts the construction
// or is recorded on the returned pair. Structural violations (wrong causal
// type, degenerate constants, vanishing divisors) always throw.
enum class Enforcement { Require, Warn };

// Generic associated curve from explicit coefficients. Requires alpha to be
// arc-length parametrized with frames and curvature/torsion data on the same
// grid as the coefficients.
AssociatedPair associated_curve(const SampledCurve& alpha,
                                const CoefficientTriple& coeffs);

// Solved coefficient triples making beta a helix when alpha is one.
// Types 1-2 take a timelike alpha and give beta' parallel to T; types 3-5
// take a spacelike alpha with timelike binormal and give beta' parallel to
// B. Types 3 and 4 divide by tau and require it nonvanishing. Integrals are
// anchored at the default integral anchor of alpha's grid.
AssociatedPair hca_construct(const SampledCurve& alpha, int type,
                             const FamilyParams& params,
                             Enforcement enforcement = Enforcement::Require);

// Solved coefficient triples on a spacelike alpha with timelike principal
// normal (slant-helix base); beta' is parallel to N. The slant-helix
// precondition defaults to Warn because the helix conclusion, not the
// construction, needs it.
AssociatedPair shca_construct(const SampledCurve& alpha, int type,
                              const FamilyParams& params,
                              Enforcement enforcement = Enforcement::Warn);

// Frame field of an associated curve whose tangent is parallel to N:
//     T_b = sign * N,
//     N_b = (eps_b kappa T + tau_m B) / sqrt(|eps_t kappa^2 + eps_b tau^2|),
//     B_b = -sign * W / sqrt(|eps_t kappa^2 + eps_b tau^2|),
// where W is the frame rotation vector and tau_m the frame-equation torsion.
// tau is the measured torsion as stored in SampledCurve (for a spacelike
// curve with timelike principal normal the two conventions coincide).
// Throws when |eps_t kappa^2 + eps_b tau^2| falls below tolerance anywhere.
std::vector<FrenetFrame> shca_frame(const std::vector<FrenetFrame>& frames,
                                    const std::vector<double>& kappa,
                                    const std::vector<double>& tau,
                                    int sign = +1);

// Slant-helix invariant of a spacelike curve with timelike principal normal:
//     sigma = kappa^2 (tau/kappa)' / (kappa^2 + tau^2)^(3/2),
// the derivative being taken by finite differences. Constant sigma
// characterizes slant helices of this causal type.
std::vector<double> slant_invariant(const std::vector<double>& s,
                                    const std::vector<double>& kappa,
                                    const std::vector<double>& tau);

// Pointwise Lorentzian distance d(s) = ||beta(s) - alpha(s)|| with a
// constancy verdict and, for the families with characterizing conditions
// (Hca3, Hca5, Shca1), an evaluation of those conditions.
struct DistanceReport {
    std::vector<double> d;
    bool constant = false;
    double residual = 0.0;
    double value = 0.0;
    std::vector<std::string> conditions;
};

DistanceReport distance_function(const AssociatedPair& pair);

} // namespace mink::assoc
