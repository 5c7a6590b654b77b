#pragma once

#include <cstddef>
#include <deque>
#include <functional>
#include <string>
#include <vector>

#include "mink/curve.hpp"
#include "mink/lorentz.hpp"

namespace mink::pos {

// Fixed axis around which a closed-form representation is built: the
// spacelike coordinate axis e3 = (0,0,1) or the timelike axis e1 = (1,0,0).
enum class AxisKind { SpacelikeAxis, TimelikeAxis };

std::string to_string(AxisKind kind);

LVec3 axis_vector(AxisKind kind);

// Parameters (n, m) of the closed-form helix and slant-helix families,
// together with the axis kind and the Lorentzian angle phi between the
// curve and the axis. Two relations between n and m occur:
//
//     sinh family: n = sinh(phi),     m = n / sqrt(1 + n^2),  |m| < 1
//     cosh family: n = cosh(phi) > 1, m = n / sqrt(n^2 - 1),  |m| > 1
//
// Which relation a family uses depends on the family and the axis kind;
// each generator validates the relation it needs to 1e-12.
struct HelixParams {
    double n = 0.0;
    double m = 0.0;
    AxisKind axis = AxisKind::SpacelikeAxis;
    double phi = 0.0;

    static HelixParams sinh_family(double n, AxisKind axis);
    static HelixParams cosh_family(double n, AxisKind axis);
};

// Shared-grid nested cumulative integrals. Every registered integrand f gets
// a first integral F with F(anchor) equal to a caller-supplied value, and a
// second integral (the cumulative integral of F) anchored to zero, all
// computed by one quadrature rule so that cancellations between terms built
// from the same table are consistent. The anchor is the grid point nearest
// s = 0 when 0 lies inside the grid, otherwise the left endpoint.
class NestedIntegralTable {
public:
    static std::size_t default_anchor(const std::vector<double>& s);

    NestedIntegralTable(std::vector<double> s, std::size_t anchor_index);
    explicit NestedIntegralTable(std::vector<double> s);

    // Registers an integrand sampled on the grid; returns its id.
    // References returned by integrand/first/second stay valid across
    // subsequent add() calls.
    std::size_t add(std::vector<double> f, double anchor_value = 0.0);

    const std::vector<double>& grid() const { return s_; }
    std::size_t anchor() const { return anchor_; }

    const std::vector<double>& integrand(std::size_t id) const;
    const std::vector<double>& first(std::size_t id) const;
    const std::vector<double>& second(std::size_t id) const;

    // Differencing consistency: max |d/ds(second) - first| over the grid.
    double consistency_residual(std::size_t id) const;

private:
    struct Entry {
        std::vector<double> f;
        std::vector<double> F;
        std::vector<double> FF;
    };

    std::vector<double> s_;
    std::size_t anchor_ = 0;
    std::deque<Entry> entries_;
};

// Convenience: a table over s with the single integrand f registered as
// id 0 with anchor value 0.
NestedIntegralTable nested_cumulative(const std::vector<double>& s,
                                      const std::vector<double>& f);

// Timelike general helix from curvature kappa(s) > 0 and params, with
// torsion tau = m*kappa (SpacelikeAxis) or tau = -m*kappa (TimelikeAxis),
// sampled on a uniform grid over [s_begin, s_end]. The curve is unit-speed
// with closed-form Frenet frames; its tangent keeps the constant Lorentzian
// angle phi with the axis. SpacelikeAxis (sinh family) anchors the position
// at (0, sqrt(1+n^2)/(sqrt(1-m^2)*kappa(s_a)), 0) at the parameter anchor
// s_a, reproducing the natural constant-curvature antiderivatives;
// TimelikeAxis (cosh family) anchors at the origin.
SampledCurve timelike_helix(const std::function<double(double)>& kappa,
                            const HelixParams& params,
                            double s_begin, double s_end, double step = 1e-3);

// Spacelike general helix of type 2 (timelike binormal). SpacelikeAxis uses
// the cosh family (|tau/kappa| = m > 1, tau = +m*kappa); TimelikeAxis uses
// the sinh family (|tau/kappa| = m < 1, tau = -m*kappa). Anchored at the
// origin.
SampledCurve spacelike_type2_helix(const std::function<double(double)>& kappa,
                                   const HelixParams& params,
                                   double s_begin, double s_end,
                                   double step = 1e-3);

// Spacelike slant helix of type 1 (timelike principal normal) whose normal
// keeps a constant Lorentzian angle with the axis: <N, e3> = n for the
// spacelike axis, <N, e1> = -n for the timelike axis. With theta = int kappa
// (anchored), A = (1/n)*arcsin(m*theta) and Q = sqrt(1 - m^2 theta^2), the
// torsion is tau = branch * m*kappa*theta/Q (SpacelikeAxis) or
// tau = -branch * m*kappa*theta/Q (TimelikeAxis); tau_branch = -1 yields the
// mirror curve under diag(1,-1,1). The whole grid must satisfy
// |m*theta| < 1; otherwise the representation leaves its valid parameter
// window. Anchored at the origin.
SampledCurve spacelike_slant_helix(const std::function<double(double)>& kappa,
                                   const HelixParams& params,
                                   double s_begin, double s_end,
                                   int tau_branch = +1, double step = 1e-3);

// Integration constants of the explicit helix-built curves: l shifts the
// axis coordinate; c is the phase (type 1) or the constant binormal
// coefficient (type 2, must be nonzero).
struct HcaConstants {
    double l = 0.0;
    double c = 0.0;
};

// Closed-form position of the curve associated to the sinh-family timelike
// helix (SpacelikeAxis) whose tangent (type 1) or binormal (type 2) stays
// parallel to the helix frame. Coordinates are evaluated from the explicit
// three-component formulas via a NestedIntegralTable on the same grid the
// generator uses, including the generator's anchor translation, so the
// result coincides with the constructive path (timelike_helix + the
// associated-curve construction) up to quadrature tolerance.
SampledCurve hca_position(int type, const std::function<double(double)>& kappa,
                          const HelixParams& params,
                          const HcaConstants& constants,
                          double s_begin, double s_end, double step = 1e-3);

// Integration constants of the explicit slant-built curves: c1,c2,c3 for
// type 1, (xi, zeta) for type 2, omega for type 3.
struct ShcaConstants {
    double c1 = 0.0;
    double c2 = 0.0;
    double c3 = 0.0;
    double xi = 0.0;
    double zeta = 0.0;
    double omega = 0.0;
};

// Result of shca_position: the returned curve plus both evaluation routes.
// For types 2 and 3 the printed closed form is algebraically the
// constructive path, `curve` carries the closed-form coordinates, and the
// discrepancy fields report the (tiny) quadrature disagreement. The printed
// type-1 form presumes a linear torsion integral a3 = m*s + c_i, which is
// generally false; there `curve` carries the constructive ground truth, the
// closed form rides in `verbatim`, and the discrepancy fields quantify the
// gap. `note` states which situation applies.
struct ShcaPositionResult {
    SampledCurve curve;
    std::vector<LVec3> verbatim;
    std::vector<LVec3> constructive;
    LVec3 component_discrepancy{0.0, 0.0, 0.0};
    double max_distance = 0.0;
    std::string note;
};

// Closed-form position of the curve associated to a spacelike slant helix
// (either axis kind) whose tangent stays parallel to the slant helix's
// principal normal. Type 1 coefficients (0, -1/kappa, a3); type 2
// (xi - s, 0, zeta); type 3 (omega - s, 0, 0).
ShcaPositionResult shca_position(int type,
                                 const std::function<double(double)>& kappa,
                                 const HelixParams& params,
                                 const ShcaConstants& constants,
                                 double s_begin, double s_end,
                                 int tau_branch = +1, double step = 1e-3);

} // namespace mink::pos
