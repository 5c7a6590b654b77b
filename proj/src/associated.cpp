#include "mink/associated.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <sstream>
#include <utility>

#include "mink/errors.hpp"
#include "mink/numeric.hpp"
#include "mink/position.hpp"

namespace mink::assoc {

namespace {

constexpr std::size_t kInteriorTrim = 8;

void require_curve_data(const SampledCurve& curve) {
    const std::size_t n = curve.s.size();
    if (n < 5 || curve.p.size() != n || curve.frames.size() != n ||
        curve.kappa.size() != n || curve.tau.size() != n) {
        throw InputError(
            "base curve needs positions, frames, curvature and torsion on a "
            "common grid of at least five samples");
    }
    for (double k : curve.kappa) {
        if (!(k > 0.0)) throw InputError("curvature must be positive");
    }
}

void require_signature(const SampledCurve& curve, const CausalSignature& want,
                       const char* what) {
    const CausalSignature sig =
        curve.signature ? *curve.signature : curve.frames.front().sig;
    if (sig != want) throw InputError(what);
}

// Torsion-to-curvature ratio constancy, the general-helix criterion for the
// causal types handled here.
num::Constancy helix_check(const SampledCurve& curve) {
    std::vector<double> ratio(curve.s.size());
    for (std::size_t i = 0; i < ratio.size(); ++i) {
        ratio[i] = curve.tau[i] / curve.kappa[i];
    }
    return num::constancy(ratio);
}

void apply_precondition(AssociatedPair& pair, bool ok, double residual,
                        const char* message, Enforcement enforcement) {
    if (ok) return;
    if (enforcement == Enforcement::Require) throw DomainError(message);
    pair.helix_precondition_ok = false;
    std::ostringstream os;
    os << message << " (criterion residual " << residual << ")";
    pair.note = os.str();
}

// Guards divisions by the sampled torsion.
void require_nonvanishing_tau(const SampledCurve& curve) {
    double scale = 0.0;
    for (double t : curve.tau) scale = std::max(scale, std::abs(t));
    for (double t : curve.tau) {
        if (std::abs(t) <= 1e-12 * (1.0 + scale)) {
            throw DomainError(
                "torsion vanishes on the domain; the construction divides by "
                "tau");
        }
    }
}

AssociatedPair build_pair(const SampledCurve& alpha,
                          const CoefficientTriple& coeffs) {
    require_curve_data(alpha);
    const std::size_t n = alpha.s.size();
    if (coeffs.a1.size() != n || coeffs.a2.size() != n ||
        coeffs.a3.size() != n || coeffs.da1.size() != n ||
        coeffs.da2.size() != n || coeffs.da3.size() != n) {
        throw InputError("coefficient samples do not match the curve grid");
    }

    AssociatedPair pair;
    pair.alpha = alpha;
    pair.coefficients = coeffs;
    pair.beta.s = alpha.s;
    pair.beta.p.resize(n);
    pair.f1.resize(n);
    pair.f2.resize(n);
    pair.f3.resize(n);

    const CausalSignature sig = alpha.frames.front().sig;
    for (std::size_t i = 0; i < n; ++i) {
        const FrenetFrame& f = alpha.frames[i];
        pair.beta.p[i] = alpha.p[i] + coeffs.a1[i] * f.T + coeffs.a2[i] * f.N +
                         coeffs.a3[i] * f.B;
        const double k = alpha.kappa[i];
        const double t = alpha.tau[i];
        pair.f1[i] = 1.0 + coeffs.da1[i] + sig.eps_b * coeffs.a2[i] * k;
        pair.f2[i] = coeffs.da2[i] + coeffs.a1[i] * k +
                     sig.eps_b * coeffs.a3[i] * t;
        pair.f3[i] = coeffs.da3[i] - sig.eps_n * coeffs.a2[i] * t;
    }
    return pair;
}

} // namespace

std::string to_string(Family family) {
    switch (family) {
        case Family::Generic: return "generic";
        case Family::Hca1: return "hca1";
        case Family::Hca2: return "hca2";
        case Family::Hca3: return "hca3";
        case Family::Hca4: return "hca4";
        case Family::Hca5: return "hca5";
        case Family::Shca1: return "shca1";
        case Family::Shca2: return "shca2";
        case Family::Shca3: return "shca3";
    }
    return "generic";
}

CoefficientTriple CoefficientTriple::from_values(const std::vector<double>& s,
                                                 std::vector<double> a1,
                                                 std::vector<double> a2,
                                                 std::vector<double> a3) {
    if (a1.size() != s.size() || a2.size() != s.size() ||
        a3.size() != s.size()) {
        throw InputError("coefficient samples do not match the curve grid");
    }
    CoefficientTriple c;
    c.da1 = num::derivative(s, a1);
    c.da2 = num::derivative(s, a2);
    c.da3 = num::derivative(s, a3);
    c.a1 = std::move(a1);
    c.a2 = std::move(a2);
    c.a3 = std::move(a3);
    return c;
}

AssociatedPair associated_curve(const SampledCurve& alpha,
                                const CoefficientTriple& coeffs) {
    return build_pair(alpha, coeffs);
}

AssociatedPair hca_construct(const SampledCurve& alpha, int type,
                             const FamilyParams& params,
                             Enforcement enforcement) {
    require_curve_data(alpha);
    if (type < 1 || type > 5) throw InputError("unknown construction type");
    if (type <= 2) {
        require_signature(alpha, CausalSignature::timelike(),
                          "construction needs a timelike base curve");
    } else {
        require_signature(
            alpha, CausalSignature::spacelike_type2(),
            "construction needs a spacelike base curve with timelike "
            "binormal");
    }

    const std::size_t n = alpha.s.size();
    CoefficientTriple c;
    c.a1.assign(n, 0.0);
    c.a2.assign(n, 0.0);
    c.a3.assign(n, 0.0);
    c.da1.assign(n, 0.0);
    c.da2.assign(n, 0.0);
    c.da3.assign(n, 0.0);

    switch (type) {
        case 1: {
            pos::NestedIntegralTable table(alpha.s);
            const std::size_t id = table.add(alpha.tau, params.c);
            const std::vector<double>& phi = table.first(id);
            for (std::size_t i = 0; i < n; ++i) {
                c.a2[i] = -std::sin(phi[i]);
                c.a3[i] = std::cos(phi[i]);
                c.da2[i] = -alpha.tau[i] * std::cos(phi[i]);
                c.da3[i] = -alpha.tau[i] * std::sin(phi[i]);
            }
            break;
        }
        case 2: {
            if (params.c == 0.0) throw DomainError("degenerate: beta = alpha");
            for (std::size_t i = 0; i < n; ++i) {
                c.a1[i] = -params.c * alpha.tau[i] / alpha.kappa[i];
                c.a3[i] = params.c;
            }
            c.da1 = num::derivative(alpha.s, c.a1);
            break;
        }
        case 3: {
            require_nonvanishing_tau(alpha);
            for (std::size_t i = 0; i < n; ++i) {
                c.a2[i] = 1.0 / alpha.kappa[i];
            }
            c.da2 = num::derivative(alpha.s, c.a2);
            for (std::size_t i = 0; i < n; ++i) {
                c.a3[i] = c.da2[i] / alpha.tau[i];
            }
            c.da3 = num::derivative(alpha.s, c.a3);
            break;
        }
        case 4: {
            require_nonvanishing_tau(alpha);
            for (std::size_t i = 0; i < n; ++i) {
                c.a1[i] = params.nu - alpha.s[i];
                c.da1[i] = -1.0;
                c.a3[i] = (params.nu - alpha.s[i]) * alpha.kappa[i] /
                          alpha.tau[i];
            }
            c.da3 = num::derivative(alpha.s, c.a3);
            break;
        }
        case 5: {
            // a2 solves a2'' - (kappa'/kappa) a2' + kappa^2 a2 = kappa: the
            // homogeneous solutions are cos/sin of the integrated curvature,
            // and the particular solution is pinned to value 1/kappa and
            // slope 0 at the integral anchor.
            pos::NestedIntegralTable table(alpha.s);
            const std::size_t kid = table.add(alpha.kappa);
            const std::vector<double>& theta = table.first(kid);
            std::vector<double> st(n), ct(n);
            for (std::size_t i = 0; i < n; ++i) {
                st[i] = std::sin(theta[i]);
                ct[i] = std::cos(theta[i]);
            }
            const double k_anchor = alpha.kappa[table.anchor()];
            const std::size_t js_id = table.add(st, -1.0 / k_anchor);
            const std::size_t jc_id = table.add(ct, 0.0);
            const std::vector<double>& js = table.first(js_id);
            const std::vector<double>& jc = table.first(jc_id);
            for (std::size_t i = 0; i < n; ++i) {
                c.a2[i] = params.c1 * ct[i] + params.c2 * st[i] -
                          ct[i] * js[i] + st[i] * jc[i];
                c.da2[i] = alpha.kappa[i] *
                           (-params.c1 * st[i] + params.c2 * ct[i] +
                            st[i] * js[i] + ct[i] * jc[i]);
                c.a1[i] = -c.da2[i] / alpha.kappa[i];
                c.da1[i] = alpha.kappa[i] * c.a2[i] - 1.0;
            }
            break;
        }
    }

    AssociatedPair pair = build_pair(alpha, c);
    pair.family = static_cast<Family>(static_cast<int>(Family::Hca1) + type - 1);
    pair.params = params;
    pair.beta.signature = CausalSignature::timelike();
    const num::Constancy helix = helix_check(alpha);
    apply_precondition(pair, helix.constant, helix.residual,
                       "main curve is not a general helix", enforcement);
    return pair;
}

AssociatedPair shca_construct(const SampledCurve& alpha, int type,
                              const FamilyParams& params,
                              Enforcement enforcement) {
    require_curve_data(alpha);
    if (type < 1 || type > 3) throw InputError("unknown construction type");
    require_signature(alpha, CausalSignature::spacelike_type1(),
                      "construction needs a spacelike base curve with "
                      "timelike principal normal");

    const std::size_t n = alpha.s.size();
    CoefficientTriple c;
    c.a1.assign(n, 0.0);
    c.a2.assign(n, 0.0);
    c.a3.assign(n, 0.0);
    c.da1.assign(n, 0.0);
    c.da2.assign(n, 0.0);
    c.da3.assign(n, 0.0);

    switch (type) {
        case 1: {
            std::vector<double> ratio(n);
            for (std::size_t i = 0; i < n; ++i) {
                ratio[i] = alpha.tau[i] / alpha.kappa[i];
            }
            pos::NestedIntegralTable table(alpha.s);
            const std::size_t id = table.add(ratio, params.c);
            for (std::size_t i = 0; i < n; ++i) {
                c.a2[i] = -1.0 / alpha.kappa[i];
                c.a3[i] = table.first(id)[i];
                c.da3[i] = ratio[i];
            }
            c.da2 = num::derivative(alpha.s, c.a2);
            break;
        }
        case 2: {
            for (std::size_t i = 0; i < n; ++i) {
                c.a1[i] = params.xi - alpha.s[i];
                c.da1[i] = -1.0;
                c.a3[i] = params.zeta;
            }
            break;
        }
        case 3: {
            for (std::size_t i = 0; i < n; ++i) {
                c.a1[i] = params.omega - alpha.s[i];
                c.da1[i] = -1.0;
            }
            break;
        }
    }

    AssociatedPair pair = build_pair(alpha, c);
    pair.family =
        static_cast<Family>(static_cast<int>(Family::Shca1) + type - 1);
    pair.params = params;
    pair.beta.signature = CausalSignature::timelike();
    const num::Constancy slant =
        num::constancy(slant_invariant(alpha.s, alpha.kappa, alpha.tau));
    apply_precondition(pair, slant.constant, slant.residual,
                       "main curve is not a slant helix", enforcement);
    return pair;
}

std::vector<FrenetFrame> shca_frame(const std::vector<FrenetFrame>& frames,
                                    const std::vector<double>& kappa,
                                    const std::vector<double>& tau, int sign) {
    if (sign != 1 && sign != -1) throw InputError("sign must be +1 or -1");
    const std::size_t n = frames.size();
    if (n == 0 || kappa.size() != n || tau.size() != n) {
        throw InputError("frame, curvature and torsion samples must share "
                         "one nonempty grid");
    }
    std::vector<FrenetFrame> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        const CausalSignature sig = frames[i].sig;
        const double denom2 =
            sig.eps_t * kappa[i] * kappa[i] + sig.eps_b * tau[i] * tau[i];
        const double scale = kappa[i] * kappa[i] + tau[i] * tau[i];
        if (std::abs(denom2) <= 1e-12 * (1.0 + scale)) {
            throw DomainError(
                "Darboux vector lightlike; associated frame undefined");
        }
        const double inv = 1.0 / std::sqrt(std::abs(denom2));
        const double tau_m = -sig.eps_n * tau[i];
        FrenetFrame f;
        f.T = sign * frames[i].N;
        f.N = inv * (sig.eps_b * kappa[i] * frames[i].T + tau_m * frames[i].B);
        f.B = -sign * inv * darboux_vector(frames[i], kappa[i], tau_m);
        f.sig.eps_t = minkowski_inner(f.T, f.T) < 0.0 ? -1 : 1;
        f.sig.eps_n = minkowski_inner(f.N, f.N) < 0.0 ? -1 : 1;
        f.sig.eps_b = minkowski_inner(f.B, f.B) < 0.0 ? -1 : 1;
        out[i] = f;
    }
    return out;
}

std::vector<double> slant_invariant(const std::vector<double>& s,
                                    const std::vector<double>& kappa,
                                    const std::vector<double>& tau) {
    const std::size_t n = s.size();
    if (kappa.size() != n || tau.size() != n || n < 5) {
        throw InputError("slant invariant needs curvature and torsion on a "
                         "common grid of at least five samples");
    }
    std::vector<double> ratio(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!(kappa[i] > 0.0)) throw InputError("curvature must be positive");
        ratio[i] = tau[i] / kappa[i];
    }
    const std::vector<double> dr = num::derivative(s, ratio);
    std::vector<double> sigma(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double sum = kappa[i] * kappa[i] + tau[i] * tau[i];
        sigma[i] = kappa[i] * kappa[i] * dr[i] / std::pow(sum, 1.5);
    }
    return sigma;
}

DistanceReport distance_function(const AssociatedPair& pair) {
    const std::size_t n = pair.alpha.s.size();
    DistanceReport report;
    report.d.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        report.d[i] = lorentz_norm(pair.beta.p[i] - pair.alpha.p[i]);
    }
    const num::Constancy con = num::constancy(report.d);
    report.constant = con.constant;
    report.residual = con.residual;
    report.value = con.value;

    const std::size_t lo = n > 4 * kInteriorTrim ? kInteriorTrim : 0;
    const std::size_t hi = n - lo;

    if (pair.family == Family::Hca3) {
        // Constant distance is equivalent to g g' affine in s, g = 1/kappa.
        std::vector<double> g(n);
        for (std::size_t i = 0; i < n; ++i) g[i] = 1.0 / pair.alpha.kappa[i];
        const std::vector<double> dg = num::derivative(pair.alpha.s, g);
        double sx = 0, sy = 0, sxx = 0, sxy = 0, count = 0;
        for (std::size_t i = lo; i < hi; ++i) {
            const double u = g[i] * dg[i];
            sx += pair.alpha.s[i];
            sy += u;
            sxx += pair.alpha.s[i] * pair.alpha.s[i];
            sxy += pair.alpha.s[i] * u;
            count += 1;
        }
        const double det = count * sxx - sx * sx;
        const double slope = (count * sxy - sx * sy) / det;
        const double intercept = (sy - slope * sx) / count;
        double resid = 0.0;
        for (std::size_t i = lo; i < hi; ++i) {
            const double u = g[i] * dg[i];
            resid = std::max(
                resid, std::abs(u - slope * pair.alpha.s[i] - intercept));
        }
        std::ostringstream os;
        os << "constant distance iff g*g' is affine in s with g = 1/kappa: "
           << "affine residual " << resid << ", slope " << slope
           << ", intercept " << intercept;
        report.conditions.push_back(os.str());
    } else if (pair.family == Family::Hca5) {
        double a1_max = 0.0;
        for (double v : pair.coefficients.a1) {
            a1_max = std::max(a1_max, std::abs(v));
        }
        const num::Constancy a2c = num::constancy(pair.coefficients.a2);
        std::ostringstream os;
        os << "constant distance iff a1 vanishes (max |a1| = " << a1_max
           << ") or a2 is constant (residual " << a2c.residual << ")";
        report.conditions.push_back(os.str());
    } else if (pair.family == Family::Shca1) {
        // Constant distance is equivalent to tau = g'/sqrt(c^2 + g^2) for a
        // real constant c, g = 1/kappa; solve each sample for c^2.
        std::vector<double> g(n);
        for (std::size_t i = 0; i < n; ++i) g[i] = 1.0 / pair.alpha.kappa[i];
        const std::vector<double> dg = num::derivative(pair.alpha.s, g);
        double tau_scale = 0.0;
        for (double t : pair.alpha.tau) {
            tau_scale = std::max(tau_scale, std::abs(t));
        }
        std::vector<double> c2;
        for (std::size_t i = lo; i < hi; ++i) {
            const double t = pair.alpha.tau[i];
            if (std::abs(t) <= 0.05 * tau_scale) continue;
            const double q = dg[i] / t;
            c2.push_back(q * q - g[i] * g[i]);
        }
        std::ostringstream os;
        if (c2.size() < 3) {
            os << "constant-distance criterion tau = g'/sqrt(c^2+g^2) "
                  "indeterminate: torsion too small on the window";
        } else {
            const num::Constancy cc = num::constancy(c2);
            os << "constant distance iff tau = g'/sqrt(c^2+g^2) for a real "
                  "constant c, g = 1/kappa: implied c^2 median " << cc.value
               << ", residual " << cc.residual
               << (cc.value < 0.0 ? "; negative, so no real constant exists"
                                  : "");
        }
        report.conditions.push_back(os.str());
    }
    return report;
}

} // namespace mink::assoc
