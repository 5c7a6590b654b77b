#include "mink/curve.hpp"

#include <cmath>
#include <cstddef>
#include <string>

#include "mink/errors.hpp"
#include "mink/numeric.hpp"

namespace mink {

CausalSignature signature_of(CurveType type) {
    switch (type) {
        case CurveType::Timelike: return CausalSignature::timelike();
        case CurveType::SpacelikeType1: return CausalSignature::spacelike_type1();
        case CurveType::SpacelikeType2: return CausalSignature::spacelike_type2();
    }
    throw InputError("signature_of: unknown curve type");
}

CurveType type_of(const CausalSignature& sig) {
    if (sig == CausalSignature::timelike()) return CurveType::Timelike;
    if (sig == CausalSignature::spacelike_type1()) return CurveType::SpacelikeType1;
    if (sig == CausalSignature::spacelike_type2()) return CurveType::SpacelikeType2;
    throw InputError("type_of: signature is not one of the supported frames");
}

std::string to_string(CurveType type) {
    switch (type) {
        case CurveType::Timelike: return "timelike";
        case CurveType::SpacelikeType1: return "spacelike-type-1";
        case CurveType::SpacelikeType2: return "spacelike-type-2";
    }
    return "unknown";
}

FrenetFrame standard_frame(CurveType type) {
    FrenetFrame f;
    f.sig = signature_of(type);
    switch (type) {
        case CurveType::Timelike:
            f.T = {1.0, 0.0, 0.0};
            f.N = {0.0, 1.0, 0.0};
            f.B = {0.0, 0.0, 1.0};
            break;
        case CurveType::SpacelikeType1:
            f.T = {0.0, 1.0, 0.0};
            f.N = {1.0, 0.0, 0.0};
            f.B = {0.0, 0.0, -1.0};
            break;
        case CurveType::SpacelikeType2:
            f.T = {0.0, 1.0, 0.0};
            f.N = {0.0, 0.0, 1.0};
            f.B = {1.0, 0.0, 0.0};
            break;
    }
    return f;
}

namespace {

struct FrameState {
    LVec3 p, T, N, B;
};

FrameState operator+(const FrameState& a, const FrameState& b) {
    return {a.p + b.p, a.T + b.T, a.N + b.N, a.B + b.B};
}

FrameState operator*(double h, const FrameState& a) {
    return {h * a.p, h * a.T, h * a.N, h * a.B};
}

FrameState frame_rhs(const FrameState& x, double kappa, double tau,
                     const CausalSignature& sig) {
    FrameState d;
    d.p = x.T;
    d.T = kappa * x.N;
    d.N = (sig.eps_b * kappa) * x.T - (sig.eps_n * tau) * x.B;
    d.B = (sig.eps_b * tau) * x.N;
    return d;
}

void reorthonormalize(FrameState& x, const CausalSignature& sig) {
    x.T = x.T / lorentz_norm(x.T);
    const double tt = minkowski_inner(x.T, x.T);
    x.N -= (minkowski_inner(x.N, x.T) / tt) * x.T;
    x.N = x.N / lorentz_norm(x.N);
    x.B = (sig.eps_t * sig.eps_n) * lorentz_cross(x.T, x.N);
}

double frame_gram_residual(const FrenetFrame& f) {
    const double tt = minkowski_inner(f.T, f.T) - f.sig.eps_t;
    const double nn = minkowski_inner(f.N, f.N) - f.sig.eps_n;
    const double bb = minkowski_inner(f.B, f.B) - f.sig.eps_b;
    const double tn = minkowski_inner(f.T, f.N);
    const double tb = minkowski_inner(f.T, f.B);
    const double nb = minkowski_inner(f.N, f.B);
    double r = 0.0;
    for (double v : {tt, nn, bb, tn, tb, nb}) r = std::max(r, std::fabs(v));
    return r;
}

int sign_consistent(const std::vector<double>& q, const char* what) {
    int sign = 0;
    for (double v : q) {
        const int s = v > 0.0 ? 1 : (v < 0.0 ? -1 : 0);
        if (s == 0) {
            throw DomainError(std::string(what) +
                              " is lightlike at a sample point");
        }
        if (sign == 0) sign = s;
        if (s != sign) {
            throw DomainError(std::string(what) +
                              " changes causal character along the curve");
        }
    }
    return sign;
}

} // namespace

SampledCurve integrate_frenet(const CurvatureProfile& profile,
                              const FrenetFrame& frame0, const LVec3& p0,
                              double step) {
    if (!profile.kappa || !profile.tau) {
        throw InputError("integrate_frenet: curvature profile is incomplete");
    }
    FrenetFrame f0 = frame0;
    f0.sig = profile.signature;
    if (frame_gram_residual(f0) > 1e-6) {
        throw InputError(
            "integrate_frenet: initial frame is not orthonormal for the "
            "requested signature");
    }

    const std::vector<double> grid =
        num::make_grid(profile.s_begin, profile.s_end, step);
    const std::size_t n = grid.size();

    SampledCurve out;
    out.s = grid;
    out.p.resize(n);
    out.frames.resize(n);
    out.kappa.resize(n);
    out.tau.resize(n);
    out.signature = profile.signature;

    FrameState x{p0, frame0.T, frame0.N, frame0.B};
    reorthonormalize(x, profile.signature);

    for (std::size_t i = 0; i < n; ++i) {
        out.p[i] = x.p;
        out.frames[i] = {x.T, x.N, x.B, profile.signature};
        out.kappa[i] = profile.kappa(grid[i]);
        out.tau[i] = profile.tau(grid[i]);
        if (i + 1 == n) break;

        const double s0 = grid[i];
        const double h = grid[i + 1] - grid[i];
        const double sm = s0 + 0.5 * h;
        const double s1 = s0 + h;

        const FrameState k1 =
            frame_rhs(x, profile.kappa(s0), profile.tau(s0), profile.signature);
        const FrameState k2 = frame_rhs(x + (0.5 * h) * k1, profile.kappa(sm),
                                        profile.tau(sm), profile.signature);
        const FrameState k3 = frame_rhs(x + (0.5 * h) * k2, profile.kappa(sm),
                                        profile.tau(sm), profile.signature);
        const FrameState k4 = frame_rhs(x + h * k3, profile.kappa(s1),
                                        profile.tau(s1), profile.signature);
        x = x + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        reorthonormalize(x, profile.signature);
    }
    return out;
}

MeasuredFrames frenet_from_samples(const std::vector<double>& s,
                                   const std::vector<LVec3>& p) {
    if (s.size() != p.size()) {
        throw InputError("frenet_from_samples: grid and points differ in length");
    }
    const std::size_t n = s.size();
    if (n < 5) {
        throw InputError("frenet_from_samples: need at least five samples");
    }

    std::vector<double> x1(n), x2(n), x3(n);
    for (std::size_t i = 0; i < n; ++i) {
        x1[i] = p[i].x1;
        x2[i] = p[i].x2;
        x3[i] = p[i].x3;
    }
    const std::vector<double> d1 = num::derivative(s, x1);
    const std::vector<double> d2 = num::derivative(s, x2);
    const std::vector<double> d3 = num::derivative(s, x3);

    std::vector<LVec3> T(n);
    std::vector<double> qT(n);
    for (std::size_t i = 0; i < n; ++i) {
        T[i] = {d1[i], d2[i], d3[i]};
        qT[i] = minkowski_inner(T[i], T[i]);
        if (std::fabs(std::fabs(qT[i]) - 1.0) > 1e-3) {
            throw DomainError(
                "frenet_from_samples: samples are not arc-length "
                "parametrized (|<p',p'>| deviates from 1); reparametrize "
                "first");
        }
    }
    const int eps_t = sign_consistent(qT, "frenet_from_samples: tangent");

    std::vector<double> t1(n), t2(n), t3(n);
    for (std::size_t i = 0; i < n; ++i) {
        T[i] = T[i] / lorentz_norm(T[i]);
        t1[i] = T[i].x1;
        t2[i] = T[i].x2;
        t3[i] = T[i].x3;
    }
    const std::vector<double> dt1 = num::derivative(s, t1);
    const std::vector<double> dt2 = num::derivative(s, t2);
    const std::vector<double> dt3 = num::derivative(s, t3);

    std::vector<LVec3> N(n);
    std::vector<double> kappa(n), qN(n);
    for (std::size_t i = 0; i < n; ++i) {
        const LVec3 dT{dt1[i], dt2[i], dt3[i]};
        kappa[i] = lorentz_norm(dT);
        if (kappa[i] < 1e-8) {
            throw DomainError(
                "frenet_from_samples: curvature vanishes at a sample point; "
                "the frame is undefined there");
        }
        N[i] = dT / kappa[i];
        qN[i] = minkowski_inner(N[i], N[i]);
        N[i] = N[i] / lorentz_norm(N[i]);
    }
    const int eps_n = sign_consistent(qN, "frenet_from_samples: normal");
    const int eps_b = -eps_t * eps_n;

    std::vector<LVec3> B(n);
    std::vector<double> b1(n), b2(n), b3(n);
    for (std::size_t i = 0; i < n; ++i) {
        B[i] = (eps_t * eps_n) * lorentz_cross(T[i], N[i]);
        b1[i] = B[i].x1;
        b2[i] = B[i].x2;
        b3[i] = B[i].x3;
    }
    const std::vector<double> db1 = num::derivative(s, b1);
    const std::vector<double> db2 = num::derivative(s, b2);
    const std::vector<double> db3 = num::derivative(s, b3);

    MeasuredFrames out;
    out.signature = CausalSignature{eps_t, eps_n, eps_b};
    out.frames.resize(n);
    out.kappa = std::move(kappa);
    out.tau.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        out.frames[i] = {T[i], N[i], B[i], out.signature};
        const LVec3 dB{db1[i], db2[i], db3[i]};
        out.tau[i] = eps_n * eps_b * minkowski_inner(dB, N[i]);
    }
    return out;
}

LVec3 darboux_vector(const FrenetFrame& frame, double kappa, double tau) {
    return (-frame.sig.eps_b * tau) * frame.T +
           (-frame.sig.eps_n * kappa) * frame.B;
}

SampledCurve arc_length_reparametrize(const std::vector<double>& t,
                                      const std::vector<LVec3>& p) {
    if (t.size() != p.size()) {
        throw InputError(
            "arc_length_reparametrize: grid and points differ in length");
    }
    const std::size_t n = t.size();
    if (n < 2) {
        throw InputError("arc_length_reparametrize: need at least two samples");
    }
    for (std::size_t i = 1; i < n; ++i) {
        if (!(t[i] > t[i - 1])) {
            throw InputError(
                "arc_length_reparametrize: parameter must be strictly "
                "increasing");
        }
    }

    SampledCurve out;
    out.p = p;
    out.s.resize(n);

    if (n >= 5) {
        std::vector<double> x1(n), x2(n), x3(n);
        for (std::size_t i = 0; i < n; ++i) {
            x1[i] = p[i].x1;
            x2[i] = p[i].x2;
            x3[i] = p[i].x3;
        }
        const std::vector<double> d1 = num::derivative(t, x1);
        const std::vector<double> d2 = num::derivative(t, x2);
        const std::vector<double> d3 = num::derivative(t, x3);
        std::vector<double> speed(n);
        for (std::size_t i = 0; i < n; ++i) {
            const LVec3 v{d1[i], d2[i], d3[i]};
            const double lor = lorentz_norm(v);
            if (lor <= 1e-9 * euclidean_norm(v)) {
                throw DomainError(
                    "arc_length_reparametrize: velocity is lightlike (or "
                    "zero) at a sample point; arc length degenerates");
            }
            speed[i] = lor;
        }
        const std::vector<double> F = num::cumulative_integral(t, speed);
        for (std::size_t i = 0; i < n; ++i) out.s[i] = t[0] + F[i];
    } else {
        out.s[0] = t[0];
        for (std::size_t i = 0; i + 1 < n; ++i) {
            const LVec3 d = p[i + 1] - p[i];
            const double lor = lorentz_norm(d);
            if (lor <= 1e-9 * euclidean_norm(d)) {
                throw DomainError(
                    "arc_length_reparametrize: chord is lightlike or "
                    "degenerate; arc length degenerates");
            }
            out.s[i + 1] = out.s[i] + lor;
        }
    }

    for (std::size_t i = 1; i < n; ++i) {
        if (!(out.s[i] > out.s[i - 1])) {
            throw DomainError(
                "arc_length_reparametrize: computed arc length is not "
                "strictly increasing");
        }
    }
    return out;
}

CurveType classify_curve(const std::vector<double>& s,
                         const std::vector<LVec3>& p, double tol) {
    if (s.size() != p.size()) {
        throw InputError("classify_curve: grid and points differ in length");
    }
    const std::size_t n = s.size();
    if (n < 5) {
        throw InputError("classify_curve: need at least five samples");
    }

    std::vector<double> x1(n), x2(n), x3(n);
    for (std::size_t i = 0; i < n; ++i) {
        x1[i] = p[i].x1;
        x2[i] = p[i].x2;
        x3[i] = p[i].x3;
    }
    const std::vector<double> d1 = num::derivative(s, x1);
    const std::vector<double> d2 = num::derivative(s, x2);
    const std::vector<double> d3 = num::derivative(s, x3);

    std::vector<LVec3> That(n);
    int tangent_sign = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const LVec3 v{d1[i], d2[i], d3[i]};
        const double e = euclidean_norm(v);
        if (e == 0.0) {
            throw DomainError("classify_curve: stationary sample point");
        }
        const CausalCharacter cc = causal_character(v / e, tol);
        if (cc == CausalCharacter::Lightlike) {
            throw DomainError("classify_curve: tangent is lightlike");
        }
        const int sgn = cc == CausalCharacter::Timelike ? -1 : 1;
        if (tangent_sign == 0) tangent_sign = sgn;
        if (sgn != tangent_sign) {
            throw DomainError(
                "classify_curve: tangent changes causal character");
        }
        That[i] = v / lorentz_norm(v);
    }
    if (tangent_sign < 0) return CurveType::Timelike;

    std::vector<double> t1(n), t2(n), t3(n);
    for (std::size_t i = 0; i < n; ++i) {
        t1[i] = That[i].x1;
        t2[i] = That[i].x2;
        t3[i] = That[i].x3;
    }
    const std::vector<double> dt1 = num::derivative(s, t1);
    const std::vector<double> dt2 = num::derivative(s, t2);
    const std::vector<double> dt3 = num::derivative(s, t3);

    int normal_sign = 0;
    for (std::size_t i = 0; i < n; ++i) {
        LVec3 k{dt1[i], dt2[i], dt3[i]};
        const double tt = minkowski_inner(That[i], That[i]);
        k -= (minkowski_inner(k, That[i]) / tt) * That[i];
        const double e = euclidean_norm(k);
        if (e < 1e-8) continue; // locally straight: no normal direction here
        const CausalCharacter cc = causal_character(k / e, tol);
        if (cc == CausalCharacter::Lightlike) {
            throw DomainError(
                "classify_curve: principal normal is lightlike; outside the "
                "supported frame classes");
        }
        const int sgn = cc == CausalCharacter::Timelike ? -1 : 1;
        if (normal_sign == 0) normal_sign = sgn;
        if (sgn != normal_sign) {
            throw DomainError(
                "classify_curve: principal normal changes causal character");
        }
    }
    if (normal_sign == 0) {
        throw DomainError(
            "classify_curve: curve is straight; no principal normal exists");
    }
    return normal_sign < 0 ? CurveType::SpacelikeType1
                           : CurveType::SpacelikeType2;
}

} // namespace mink
