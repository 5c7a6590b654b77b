#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "mink/lorentz.hpp"

namespace mink {

// Causal signature (eps_t, eps_n, eps_b) of a Frenet frame, where
// eps_x = <X, X> for the unit frame vector X. Exactly three combinations
// occur for the curves handled here; all satisfy eps_t*eps_n*eps_b = -1.
struct CausalSignature {
    int eps_t = -1;
    int eps_n = 1;
    int eps_b = 1;

    static CausalSignature timelike() { return {-1, 1, 1}; }        // T timelike
    static CausalSignature spacelike_type1() { return {1, -1, 1}; } // N timelike
    static CausalSignature spacelike_type2() { return {1, 1, -1}; } // B timelike

    friend bool operator==(const CausalSignature&, const CausalSignature&) = default;
};

enum class CurveType { Timelike, SpacelikeType1, SpacelikeType2 };

CausalSignature signature_of(CurveType type);
CurveType type_of(const CausalSignature& sig);
std::string to_string(CurveType type);

struct FrenetFrame {
    LVec3 T;
    LVec3 N;
    LVec3 B;
    CausalSignature sig;
};

// Canonical initial frame for each curve type: axis-aligned, orthonormal,
// right-handed in the sense B = eps_t*eps_n * (T x N).
FrenetFrame standard_frame(CurveType type);

// Intrinsic data of a curve: curvature and torsion as functions of arc
// length, the causal signature, and the parameter interval.
struct CurvatureProfile {
    std::function<double(double)> kappa;
    std::function<double(double)> tau;
    CausalSignature signature = CausalSignature::timelike();
    double s_begin = 0.0;
    double s_end = 1.0;
};

// A discretized curve. frames/kappa/tau may be empty when only positions are
// known; signature is set when the causal characters have been established.
struct SampledCurve {
    std::vector<double> s;
    std::vector<LVec3> p;
    std::vector<FrenetFrame> frames;
    std::vector<double> kappa;
    std::vector<double> tau;
    std::optional<CausalSignature> signature;
};

// Integrates the frame equations
//     T' = kappa N,   N' = eps_b kappa T - eps_n tau B,   B' = eps_b tau N,
// together with p' = T, by the classical fourth-order Runge-Kutta scheme,
// re-orthonormalizing the frame after every step (normalize T, project and
// normalize N, rebuild B = eps_t*eps_n T x N). The torsion here is the
// measured one, tau = eps_n*eps_b <B', N>.
SampledCurve integrate_frenet(const CurvatureProfile& profile,
                              const FrenetFrame& frame0, const LVec3& p0,
                              double step = 1e-3);

struct MeasuredFrames {
    std::vector<FrenetFrame> frames;
    std::vector<double> kappa;
    std::vector<double> tau;
    CausalSignature signature;
};

// Recovers frames, curvature and torsion from arc-length samples of a
// position curve using moving five-point finite-difference stencils:
// T = p', kappa = |T'|, N = T'/kappa, B = eps_t*eps_n T x N,
// tau = eps_n*eps_b <B', N>. Requires at least five samples, a strictly
// increasing (not necessarily uniform) grid, unit-speed samples, and
// curvature bounded away from zero.
MeasuredFrames frenet_from_samples(const std::vector<double>& s,
                                   const std::vector<LVec3>& p);

// Rotation vector of the frame motion, W = -eps_b*tau*T - eps_n*kappa*B,
// satisfying T' = W x T, N' = W x N, B' = W x B. The tau expected here is
// the frame-equation (matrix) torsion; callers holding the measured torsion
// tau_m = eps_n*eps_b <B',N> should pass -eps_n * tau_m.
LVec3 darboux_vector(const FrenetFrame& frame, double kappa, double tau);

// Recomputes the parameter of a sampled curve as Lorentzian arc length,
// keeping the sample points and anchoring the new parameter at the old
// initial value. Throws if the curve is lightlike somewhere (arc length
// degenerates). Output carries positions only.
SampledCurve arc_length_reparametrize(const std::vector<double>& t,
                                      const std::vector<LVec3>& p);

// Determines the curve type from position samples (any regular
// parametrization): tangent character first, then the character of the
// principal-normal direction for spacelike tangents.
CurveType classify_curve(const std::vector<double>& s,
                         const std::vector<LVec3>& p,
                         double tol = kCausalTol);

} // namespace mink
