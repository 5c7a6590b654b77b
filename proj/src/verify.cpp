#include "mink/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

#include "mink/errors.hpp"

namespace mink::verify {

namespace {

struct Range {
    std::size_t lo;
    std::size_t hi; // one past the end
};

Range trimmed(std::size_t n, std::size_t trim) {
    if (n > 4 * trim) return {trim, n - trim};
    return {0, n};
}

std::string format_number(double v) {
    std::ostringstream os;
    os.precision(6);
    os << v;
    return os.str();
}

// Constancy verdict over a subrange, with the extremal samples as witnesses.
VerificationReport constancy_report(std::string property,
                                    const std::vector<double>& s,
                                    const std::vector<double>& f, Range r,
                                    double rel_tol) {
    VerificationReport report;
    report.property = std::move(property);
    report.tolerance = rel_tol;
    std::vector<double> window(f.begin() + static_cast<std::ptrdiff_t>(r.lo),
                               f.begin() + static_cast<std::ptrdiff_t>(r.hi));
    const num::Constancy con = num::constancy(window, rel_tol);
    report.residual = con.residual;
    report.verdict = con.constant ? Verdict::Pass : Verdict::Fail;
    std::size_t imax = r.lo, imin = r.lo;
    for (std::size_t i = r.lo; i < r.hi; ++i) {
        if (f[i] > f[imax]) imax = i;
        if (f[i] < f[imin]) imin = i;
    }
    report.witnesses.push_back({s[imax], f[imax]});
    report.witnesses.push_back({s[imin], f[imin]});
    report.note = "median " + format_number(con.value);
    return report;
}

void require_grid(const std::vector<double>& s, std::size_t n,
                  const char* what) {
    if (n < 5 || s.size() != n) throw InputError(what);
}

std::vector<LVec3> fd_velocity(const std::vector<double>& s,
                               const std::vector<LVec3>& p) {
    std::vector<double> x1(p.size()), x2(p.size()), x3(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        x1[i] = p[i].x1;
        x2[i] = p[i].x2;
        x3[i] = p[i].x3;
    }
    const std::vector<double> d1 = num::derivative(s, x1);
    const std::vector<double> d2 = num::derivative(s, x2);
    const std::vector<double> d3 = num::derivative(s, x3);
    std::vector<LVec3> v(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) v[i] = {d1[i], d2[i], d3[i]};
    return v;
}

// Squared norm of the frame rotation vector; its vanishing marks the
// lightlike-rotation singularity shared by the slant and Darboux checks.
double rotation_norm2(const CausalSignature& sig, double kappa, double tau) {
    return sig.eps_t * tau * tau + sig.eps_b * kappa * kappa;
}

using Mat3 = std::array<std::array<double, 3>, 3>;

// Eigenvector of the smallest eigenvalue of a symmetric 3x3 matrix,
// computed with cyclic Jacobi rotations. Deterministic for fixed input.
LVec3 smallest_eigenvector(Mat3 a) {
    Mat3 v{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
    for (int sweep = 0; sweep < 32; ++sweep) {
        const double off =
            std::abs(a[0][1]) + std::abs(a[0][2]) + std::abs(a[1][2]);
        if (off == 0.0) break;
        for (int p = 0; p < 2; ++p) {
            for (int q = p + 1; q < 3; ++q) {
                if (a[p][q] == 0.0) continue;
                const double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                const double t =
                    (theta >= 0.0 ? 1.0 : -1.0) /
                    (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double sn = t * c;
                for (int k = 0; k < 3; ++k) {
                    const double akp = a[k][p], akq = a[k][q];
                    a[k][p] = c * akp - sn * akq;
                    a[k][q] = sn * akp + c * akq;
                }
                for (int k = 0; k < 3; ++k) {
                    const double apk = a[p][k], aqk = a[q][k];
                    a[p][k] = c * apk - sn * aqk;
                    a[q][k] = sn * apk + c * aqk;
                }
                for (int k = 0; k < 3; ++k) {
                    const double vkp = v[k][p], vkq = v[k][q];
                    v[k][p] = c * vkp - sn * vkq;
                    v[k][q] = sn * vkp + c * vkq;
                }
            }
        }
    }
    int best = 0;
    for (int k = 1; k < 3; ++k) {
        if (a[k][k] < a[best][best]) best = k;
    }
    return LVec3{v[0][best], v[1][best], v[2][best]};
}

} // namespace

std::string to_string(Verdict verdict) {
    switch (verdict) {
        case Verdict::Pass: return "pass";
        case Verdict::Fail: return "fail";
        case Verdict::Inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

std::string to_text(const VerificationReport& report) {
    std::ostringstream os;
    os << report.property << ": " << to_string(report.verdict) << " (residual "
       << format_number(report.residual) << ", tolerance "
       << format_number(report.tolerance) << ")";
    if (!report.note.empty()) os << " - " << report.note;
    return os.str();
}

nlohmann::json to_json(const VerificationReport& report) {
    nlohmann::json witnesses = nlohmann::json::array();
    for (const Witness& w : report.witnesses) {
        witnesses.push_back({{"s", w.s}, {"value", w.value}});
    }
    return {{"property", report.property},
            {"verdict", to_string(report.verdict)},
            {"residual", report.residual},
            {"tolerance", report.tolerance},
            {"witnesses", witnesses},
            {"note", report.note}};
}

VerificationReport is_general_helix(const std::vector<double>& s,
                                    const std::vector<double>& kappa,
                                    const std::vector<double>& tau,
                                    const CheckOptions& opt) {
    const std::size_t n = kappa.size();
    require_grid(s, n, "general-helix check needs matching grids of at least "
                       "five samples");
    if (tau.size() != n) {
        throw InputError("general-helix check needs matching grids of at "
                         "least five samples");
    }
    const Range r = trimmed(n, opt.boundary_trim);
    for (std::size_t i = r.lo; i < r.hi; ++i) {
        if (kappa[i] <= 1e-8) {
            VerificationReport report;
            report.property = "general-helix";
            report.tolerance = opt.rel_tol;
            report.note = "curvature too small to estimate the "
                          "torsion-to-curvature ratio";
            return report;
        }
    }
    std::vector<double> ratio(n, 0.0);
    for (std::size_t i = r.lo; i < r.hi; ++i) ratio[i] = tau[i] / kappa[i];
    VerificationReport report =
        constancy_report("general-helix", s, ratio, r, opt.rel_tol);
    report.note = "tau/kappa " + report.note;
    return report;
}

VerificationReport is_slant_helix(const std::vector<double>& s,
                                  const std::vector<double>& kappa,
                                  const std::vector<double>& tau,
                                  const CausalSignature& sig,
                                  const CheckOptions& opt) {
    const std::size_t n = kappa.size();
    require_grid(s, n, "slant-helix check needs matching grids of at least "
                       "five samples");
    if (tau.size() != n) {
        throw InputError("slant-helix check needs matching grids of at least "
                         "five samples");
    }
    const Range r = trimmed(n, opt.boundary_trim);
    std::vector<double> ratio(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!(kappa[i] > 0.0)) throw InputError("curvature must be positive");
        ratio[i] = tau[i] / kappa[i];
    }
    for (std::size_t i = r.lo; i < r.hi; ++i) {
        const double denom = rotation_norm2(sig, kappa[i], tau[i]);
        const double scale = kappa[i] * kappa[i] + tau[i] * tau[i];
        if (std::abs(denom) <= 1e-6 * scale) {
            VerificationReport report;
            report.property = "slant-helix";
            report.tolerance = opt.rel_tol;
            report.note = "slant invariant singular";
            return report;
        }
    }
    const std::vector<double> dr = num::derivative(s, ratio);
    std::vector<double> sigma(n, 0.0);
    for (std::size_t i = r.lo; i < r.hi; ++i) {
        const double denom = std::abs(rotation_norm2(sig, kappa[i], tau[i]));
        sigma[i] = kappa[i] * kappa[i] * dr[i] / std::pow(denom, 1.5);
    }
    VerificationReport report =
        constancy_report("slant-helix", s, sigma, r, opt.rel_tol);
    report.note = "sigma " + report.note;
    return report;
}

VerificationReport is_darboux_helix(const std::vector<double>& s,
                                    const std::vector<FrenetFrame>& frames,
                                    const std::vector<double>& kappa,
                                    const std::vector<double>& tau,
                                    const std::optional<LVec3>& axis,
                                    const CheckOptions& opt) {
    const std::size_t n = frames.size();
    require_grid(s, n, "Darboux-helix check needs matching grids of at least "
                       "five samples");
    if (kappa.size() != n || tau.size() != n) {
        throw InputError("Darboux-helix check needs matching grids of at "
                         "least five samples");
    }
    const Range r = trimmed(n, opt.boundary_trim);
    std::vector<LVec3> unit_w(n);
    for (std::size_t i = r.lo; i < r.hi; ++i) {
        const CausalSignature sig = frames[i].sig;
        const double norm2 = rotation_norm2(sig, kappa[i], tau[i]);
        const double scale = kappa[i] * kappa[i] + tau[i] * tau[i];
        if (std::abs(norm2) <= 1e-6 * scale) {
            VerificationReport report;
            report.property = "darboux-helix";
            report.tolerance = opt.rel_tol;
            report.note = "Darboux vector lightlike";
            return report;
        }
        const LVec3 w =
            darboux_vector(frames[i], kappa[i], -sig.eps_n * tau[i]);
        unit_w[i] = w / std::sqrt(std::abs(norm2));
    }

    LVec3 direction;
    if (axis) {
        direction = *axis;
    } else {
        const double count = static_cast<double>(r.hi - r.lo);
        LVec3 mean{0, 0, 0};
        for (std::size_t i = r.lo; i < r.hi; ++i) mean += unit_w[i];
        mean = mean / count;
        // The axis must have a constant inner product with every sample of
        // the unit rotation vector, so it is Lorentz-orthogonal to all their
        // differences. Fit it as the null direction of the covariance of
        // eta * (W_i - mean); when the samples barely move, the rotation
        // vector itself is the axis.
        Mat3 cov{};
        double spread2 = 0.0;
        for (std::size_t i = r.lo; i < r.hi; ++i) {
            const LVec3 d = unit_w[i] - mean;
            const double u[3] = {-d.x1, d.x2, d.x3};
            for (int p = 0; p < 3; ++p) {
                for (int q = 0; q < 3; ++q) cov[p][q] += u[p] * u[q];
            }
            spread2 += d.x1 * d.x1 + d.x2 * d.x2 + d.x3 * d.x3;
        }
        const LVec3 est = std::sqrt(spread2 / count) <= 1e-6
                              ? mean
                              : smallest_eigenvector(cov);
        const double m2 = minkowski_inner(est, est);
        if (std::abs(m2) <= 1e-6) {
            VerificationReport report;
            report.property = "darboux-helix";
            report.tolerance = opt.rel_tol;
            report.note = "axis estimate near-lightlike";
            return report;
        }
        direction = est / std::sqrt(std::abs(m2));
        double probe = 0.0;
        for (std::size_t i = r.lo; i < r.hi; ++i) {
            probe += minkowski_inner(unit_w[i], direction);
        }
        if (probe < 0.0) direction = -direction;
    }

    std::vector<double> angle(n, 0.0);
    for (std::size_t i = r.lo; i < r.hi; ++i) {
        angle[i] = minkowski_inner(unit_w[i], direction);
    }
    VerificationReport report =
        constancy_report("darboux-helix", s, angle, r, opt.rel_tol);
    report.note = "axis (" + format_number(direction.x1) + ", " +
                  format_number(direction.x2) + ", " +
                  format_number(direction.x3) + "); <W/|W|, axis> " +
                  report.note;
    return report;
}

VerificationReport check_frame_field(const std::vector<FrenetFrame>& frames,
                                     const CausalSignature& sig,
                                     const std::vector<double>& s,
                                     double tolerance) {
    if (frames.empty()) throw InputError("frame field is empty");
    if (!s.empty() && s.size() != frames.size()) {
        throw InputError("frame field and grid sizes differ");
    }
    static const char* const kNames[9] = {
        "<T,T> = eps_t", "<N,N> = eps_n", "<B,B> = eps_b", "<T,N> = 0",
        "<T,B> = 0",     "<N,B> = 0",     "B = eps_t eps_n T x N",
        "N = eps_b eps_t B x T", "T = eps_n eps_b N x B"};
    double worst = -1.0;
    std::size_t at = 0;
    int which = 0;
    for (std::size_t i = 0; i < frames.size(); ++i) {
        const FrenetFrame& f = frames[i];
        const double dev[9] = {
            std::abs(minkowski_inner(f.T, f.T) - sig.eps_t),
            std::abs(minkowski_inner(f.N, f.N) - sig.eps_n),
            std::abs(minkowski_inner(f.B, f.B) - sig.eps_b),
            std::abs(minkowski_inner(f.T, f.N)),
            std::abs(minkowski_inner(f.T, f.B)),
            std::abs(minkowski_inner(f.N, f.B)),
            lorentz_norm(f.B - static_cast<double>(sig.eps_t * sig.eps_n) *
                                   lorentz_cross(f.T, f.N)),
            lorentz_norm(f.N - static_cast<double>(sig.eps_b * sig.eps_t) *
                                   lorentz_cross(f.B, f.T)),
            lorentz_norm(f.T - static_cast<double>(sig.eps_n * sig.eps_b) *
                                   lorentz_cross(f.N, f.B))};
        for (int k = 0; k < 9; ++k) {
            if (dev[k] > worst) {
                worst = dev[k];
                at = i;
                which = k;
            }
        }
    }
    VerificationReport report;
    report.property = "frame-field";
    report.tolerance = tolerance;
    report.residual = worst;
    report.verdict = worst <= tolerance ? Verdict::Pass : Verdict::Fail;
    report.witnesses.push_back(
        {s.empty() ? static_cast<double>(at) : s[at], worst});
    report.note = std::string("worst invariant: ") + kNames[which];
    return report;
}

VerificationReport check_equivalence_theorem(const assoc::AssociatedPair& pair,
                                             const CheckOptions& opt) {
    VerificationReport report;
    report.property = "equivalence";
    report.tolerance = opt.rel_tol;

    const SampledCurve& alpha = pair.alpha;
    const std::size_t n = alpha.s.size();
    if (pair.beta.p.size() != n || n < 21) {
        throw InputError("equivalence check needs a full associated pair");
    }

    // Normal-parallel contract of the associated curve's velocity.
    const std::vector<LVec3> v = fd_velocity(pair.beta.s, pair.beta.p);
    const Range r = trimmed(n, opt.boundary_trim);
    double vmax = 0.0;
    for (std::size_t i = r.lo; i < r.hi; ++i) {
        vmax = std::max(vmax, lorentz_norm(v[i]));
    }
    double contract = 0.0;
    for (std::size_t i = r.lo; i < r.hi; ++i) {
        const double speed = lorentz_norm(v[i]);
        if (speed <= 1e-3 * vmax) continue;
        const FrenetFrame& f = alpha.frames[i];
        const double off =
            std::max(std::abs(minkowski_inner(v[i], f.T)),
                     std::abs(minkowski_inner(v[i], f.B)));
        contract = std::max(contract, off / speed);
    }
    if (contract > 1e-3) {
        report.note = "normal-parallel contract violated (residual " +
                      format_number(contract) + ")";
        return report;
    }

    const SampledCurve rep = arc_length_reparametrize(pair.beta.s, pair.beta.p);
    const MeasuredFrames mf = frenet_from_samples(rep.s, rep.p);
    const VerificationReport helix =
        is_general_helix(rep.s, mf.kappa, mf.tau, opt);
    const VerificationReport slant = is_slant_helix(
        alpha.s, alpha.kappa, alpha.tau, alpha.frames.front().sig, opt);
    const VerificationReport darboux = is_darboux_helix(
        alpha.s, alpha.frames, alpha.kappa, alpha.tau, {}, opt);

    report.note = "helix(beta) " + to_string(helix.verdict) +
                  ", slant(alpha) " + to_string(slant.verdict) +
                  ", darboux(alpha) " + to_string(darboux.verdict);
    report.residual =
        std::max({helix.residual, slant.residual, darboux.residual});
    if (helix.verdict == Verdict::Inconclusive ||
        slant.verdict == Verdict::Inconclusive ||
        darboux.verdict == Verdict::Inconclusive) {
        return report;
    }
    const bool agree = helix.verdict == slant.verdict &&
                       slant.verdict == darboux.verdict;
    report.verdict = agree ? Verdict::Pass : Verdict::Fail;
    return report;
}

VerificationReport distance_constancy(const assoc::AssociatedPair& pair,
                                      const CheckOptions& opt) {
    const assoc::DistanceReport dist = assoc::distance_function(pair);
    const std::size_t n = dist.d.size();
    double dmax = 0.0;
    std::size_t imax = 0, imin = 0;
    for (std::size_t i = 0; i < n; ++i) {
        dmax = std::max(dmax, dist.d[i]);
        if (dist.d[i] > dist.d[imax]) imax = i;
        if (dist.d[i] < dist.d[imin]) imin = i;
    }
    const double atol = 1e-6 * (1.0 + dmax);

    VerificationReport report;
    report.property = "distance-" + to_string(pair.family);
    report.tolerance = opt.rel_tol;
    report.residual = dist.residual;
    report.witnesses.push_back({pair.alpha.s[imax], dist.d[imax]});
    report.witnesses.push_back({pair.alpha.s[imin], dist.d[imin]});

    const auto profile_residual = [&](auto&& expected) {
        double e = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            e = std::max(e, std::abs(dist.d[i] - expected(i)));
        }
        return e;
    };

    switch (pair.family) {
        case assoc::Family::Generic: {
            report.verdict = dist.constant ? Verdict::Pass : Verdict::Fail;
            report.note = "no family claim; observed constancy, median " +
                          format_number(dist.value);
            break;
        }
        case assoc::Family::Hca1:
        case assoc::Family::Hca2: {
            report.verdict = dist.constant ? Verdict::Pass : Verdict::Fail;
            report.note = "claim: constant distance; median " +
                          format_number(dist.value);
            break;
        }
        case assoc::Family::Hca3: {
            // Constant distance iff g g' is affine in s, g = 1/kappa.
            std::vector<double> g(n);
            for (std::size_t i = 0; i < n; ++i) {
                g[i] = 1.0 / pair.alpha.kappa[i];
            }
            const std::vector<double> dg =
                num::derivative(pair.alpha.s, g);
            const Range r = trimmed(n, opt.boundary_trim);
            double sx = 0, sy = 0, sxx = 0, sxy = 0, cnt = 0, umax = 0;
            for (std::size_t i = r.lo; i < r.hi; ++i) {
                const double u = g[i] * dg[i];
                sx += pair.alpha.s[i];
                sy += u;
                sxx += pair.alpha.s[i] * pair.alpha.s[i];
                sxy += pair.alpha.s[i] * u;
                cnt += 1;
                umax = std::max(umax, std::abs(u));
            }
            const double det = cnt * sxx - sx * sx;
            const double slope = (cnt * sxy - sx * sy) / det;
            const double inter = (sy - slope * sx) / cnt;
            double resid = 0.0;
            for (std::size_t i = r.lo; i < r.hi; ++i) {
                resid = std::max(resid, std::abs(g[i] * dg[i] -
                                                 slope * pair.alpha.s[i] -
                                                 inter));
            }
            const bool affine = resid <= opt.rel_tol * (1.0 + umax);
            report.verdict =
                affine == dist.constant ? Verdict::Pass : Verdict::Fail;
            report.note = "claim: constant iff g*g' affine; affine " +
                          std::string(affine ? "holds" : "fails") +
                          ", distance " +
                          (dist.constant ? "constant" : "varies");
            break;
        }
        case assoc::Family::Hca4: {
            const double nu = pair.params.nu;
            const double e = profile_residual([&](std::size_t i) {
                const double k = pair.alpha.kappa[i];
                const double t = pair.alpha.tau[i];
                return std::abs(nu - pair.alpha.s[i]) *
                       std::sqrt(std::abs(1.0 - (k / t) * (k / t)));
            });
            report.residual = e;
            report.verdict = (!dist.constant && e <= atol) ? Verdict::Pass
                                                           : Verdict::Fail;
            report.note = "claim: |nu - s|-shaped, vanishing only where the "
                          "curves meet";
            break;
        }
        case assoc::Family::Hca5: {
            double a1max = 0.0, a2scale = 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                a1max = std::max(a1max, std::abs(pair.coefficients.a1[i]));
                a2scale =
                    std::max(a2scale, std::abs(pair.coefficients.a2[i]));
            }
            const bool a1zero = a1max <= 1e-6 * (1.0 + a2scale);
            const bool a2const =
                num::constancy(pair.coefficients.a2, opt.rel_tol).constant;
            const bool condition = a1zero || a2const;
            report.verdict =
                condition == dist.constant ? Verdict::Pass : Verdict::Fail;
            report.note = std::string("claim: constant iff a1 = 0 or a2 "
                                      "constant; condition ") +
                          (condition ? "holds" : "fails") + ", distance " +
                          (dist.constant ? "constant" : "varies");
            break;
        }
        case assoc::Family::Shca1: {
            std::vector<double> g(n);
            for (std::size_t i = 0; i < n; ++i) {
                g[i] = 1.0 / pair.alpha.kappa[i];
            }
            const std::vector<double> dg =
                num::derivative(pair.alpha.s, g);
            double tau_scale = 0.0, g2max = 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                tau_scale = std::max(tau_scale, std::abs(pair.alpha.tau[i]));
                g2max = std::max(g2max, g[i] * g[i]);
            }
            const Range r = trimmed(n, opt.boundary_trim);
            std::vector<double> c2;
            for (std::size_t i = r.lo; i < r.hi; ++i) {
                const double t = pair.alpha.tau[i];
                if (std::abs(t) <= 0.05 * tau_scale) continue;
                const double q = dg[i] / t;
                c2.push_back(q * q - g[i] * g[i]);
            }
            if (c2.size() < 3) {
                report.note = "torsion too small to evaluate the "
                              "characterizing condition";
                break;
            }
            const num::Constancy cc = num::constancy(c2, opt.rel_tol);
            const bool condition =
                cc.constant && cc.value > -1e-8 * (1.0 + g2max);
            report.verdict =
                condition == dist.constant ? Verdict::Pass : Verdict::Fail;
            report.note = std::string("claim: constant iff tau = "
                                      "g'/sqrt(c^2+g^2) for real c; "
                                      "condition ") +
                          (condition ? "holds" : "fails") + ", distance " +
                          (dist.constant ? "constant" : "varies");
            break;
        }
        case assoc::Family::Shca2: {
            const double xi = pair.params.xi;
            const double zeta = pair.params.zeta;
            const double e = profile_residual([&](std::size_t i) {
                const double u = xi - pair.alpha.s[i];
                return std::sqrt(u * u + zeta * zeta);
            });
            report.residual = e;
            report.verdict = (!dist.constant && e <= atol) ? Verdict::Pass
                                                           : Verdict::Fail;
            report.note =
                "claim: sqrt((xi-s)^2 + zeta^2), minimal where the base "
                "point is nearest";
            break;
        }
        case assoc::Family::Shca3: {
            const double omega = pair.params.omega;
            const double e = profile_residual([&](std::size_t i) {
                return std::abs(omega - pair.alpha.s[i]);
            });
            report.residual = e;
            report.verdict = e <= atol ? Verdict::Pass : Verdict::Fail;
            report.note = "claim: |omega - s|, zero only at the intersection";
            break;
        }
    }
    return report;
}

} // namespace mink::verify
