// Acceptance harness: one check per published claim, each printed as a
// single PASS/FAIL line with its measured numbers. The process exit code is
// the number of failed criteria.
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "mink/associated.hpp"
#include "mink/curve.hpp"
#include "mink/errors.hpp"
#include "mink/io.hpp"
#include "mink/lorentz.hpp"
#include "mink/numeric.hpp"
#include "mink/position.hpp"
#include "mink/verify.hpp"

using namespace mink;

namespace {

constexpr double kRoot3 = 1.7320508075688772;

int failures = 0;

void report(int criterion, bool pass, const std::string& detail) {
    std::printf("criterion %d: %s - %s\n", criterion,
                pass ? "PASS" : "FAIL", detail.c_str());
    if (!pass) ++failures;
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

SampledCurve reference_helix(double s0, double s1) {
    return pos::timelike_helix(
        [](double) { return 6.0; },
        pos::HelixParams::sinh_family(1.0 / kRoot3,
                                      pos::AxisKind::SpacelikeAxis),
        s0, s1);
}

SampledCurve fig2_slant() {
    return pos::spacelike_slant_helix(
        [](double) { return 1.0; },
        pos::HelixParams::cosh_family(2.0 / kRoot3,
                                      pos::AxisKind::TimelikeAxis),
        -0.45, 0.45);
}

SampledCurve nonhelix_timelike() {
    CurvatureProfile profile;
    profile.kappa = [](double) { return 1.0; };
    profile.tau = [](double u) { return u; };
    profile.signature = CausalSignature::timelike();
    profile.s_begin = 0.0;
    profile.s_end = 1.0;
    return integrate_frenet(profile, standard_frame(CurveType::Timelike),
                            LVec3{0, 0, 0});
}

// Measured general-helix verdict of the associated curve, taken on its
// largest regular arc (speed >= 10% of max) to stay clear of the isolated
// zero-speed points some constructions have.
verify::VerificationReport
measured_helix_report(const assoc::AssociatedPair& pair) {
    const CausalSignature sig = pair.alpha.frames.front().sig;
    const std::size_t n = pair.f1.size();
    std::vector<double> speed(n);
    double vmax = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double q = sig.eps_t * pair.f1[i] * pair.f1[i] +
                         sig.eps_n * pair.f2[i] * pair.f2[i] +
                         sig.eps_b * pair.f3[i] * pair.f3[i];
        speed[i] = std::sqrt(std::abs(q));
        vmax = std::max(vmax, speed[i]);
    }
    std::size_t best_lo = 0, best_hi = 0, lo = 0;
    for (std::size_t i = 0; i <= n; ++i) {
        if (i < n && speed[i] >= 0.1 * vmax) continue;
        if (i - lo > best_hi - best_lo) {
            best_lo = lo;
            best_hi = i;
        }
        lo = i + 1;
    }
    const std::vector<double> t(pair.beta.s.begin() + best_lo,
                                pair.beta.s.begin() + best_hi);
    const std::vector<LVec3> p(pair.beta.p.begin() + best_lo,
                               pair.beta.p.begin() + best_hi);
    const SampledCurve rep = arc_length_reparametrize(t, p);
    const MeasuredFrames mf = frenet_from_samples(rep.s, rep.p);
    return verify::is_general_helix(rep.s, mf.kappa, mf.tau);
}

// Largest fraction of the associated curve's velocity that leaks out of the
// expected direction (N for the slant constructions), over the interior,
// optionally restricted to s >= s_min.
double off_axis_ratio(const assoc::AssociatedPair& pair, double s_min) {
    const std::vector<double>& s = pair.beta.s;
    const std::size_t n = s.size();
    std::vector<double> x1(n), x2(n), x3(n);
    for (std::size_t i = 0; i < n; ++i) {
        x1[i] = pair.beta.p[i].x1;
        x2[i] = pair.beta.p[i].x2;
        x3[i] = pair.beta.p[i].x3;
    }
    const std::vector<double> d1 = num::derivative(s, x1);
    const std::vector<double> d2 = num::derivative(s, x2);
    const std::vector<double> d3 = num::derivative(s, x3);
    double worst = 0.0;
    for (std::size_t i = 8; i + 8 < n; ++i) {
        if (s[i] < s_min) continue;
        const LVec3 v{d1[i], d2[i], d3[i]};
        const FrenetFrame& f = pair.alpha.frames[i];
        const double along_t = f.sig.eps_t * minkowski_inner(v, f.T);
        const double along_b = f.sig.eps_b * minkowski_inner(v, f.B);
        const double off = std::hypot(along_t, along_b) / lorentz_norm(v);
        worst = std::max(worst, off);
    }
    return worst;
}

double max_lorentz_gap(const std::vector<LVec3>& a,
                       const std::vector<LVec3>& b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        worst = std::max(worst, lorentz_norm(a[i] - b[i]));
    }
    return worst;
}

void criterion_1() {
    const SampledCurve closed = reference_helix(0.0, 1.0);
    CurvatureProfile profile;
    profile.kappa = [](double) { return 6.0; };
    profile.tau = [](double) { return 3.0; };
    profile.signature = CausalSignature::timelike();
    profile.s_begin = 0.0;
    profile.s_end = 1.0;
    const SampledCurve integrated =
        integrate_frenet(profile, closed.frames.front(), closed.p.front());

    const verify::VerificationReport frames = verify::check_frame_field(
        integrated.frames, CausalSignature::timelike(), integrated.s, 1e-7);
    const double gap = max_lorentz_gap(integrated.p, closed.p);
    const bool pass =
        frames.verdict == verify::Verdict::Pass && gap <= 1e-6;
    report(1, pass,
           "frame fidelity: worst frame residual " + fmt(frames.residual) +
               " (<= 1e-7), closed-form gap " + fmt(gap) + " (<= 1e-6)");
}

void criterion_2() {
    const SampledCurve helix = reference_helix(0.1, 0.9);
    assoc::FamilyParams p1;
    p1.c = 0.3;
    assoc::FamilyParams p2;
    p2.c = 1.0;
    const verify::VerificationReport h1 =
        measured_helix_report(assoc::hca_construct(helix, 1, p1));
    const verify::VerificationReport h2 =
        measured_helix_report(assoc::hca_construct(helix, 2, p2));

    const SampledCurve non = nonhelix_timelike();
    assoc::FamilyParams q2;
    q2.c = 0.5;
    const verify::VerificationReport n1 = measured_helix_report(
        assoc::hca_construct(non, 1, p1, assoc::Enforcement::Warn));
    const verify::VerificationReport n2 = measured_helix_report(
        assoc::hca_construct(non, 2, q2, assoc::Enforcement::Warn));

    const bool pass = h1.verdict == verify::Verdict::Pass &&
                      h2.verdict == verify::Verdict::Pass &&
                      n1.verdict == verify::Verdict::Fail &&
                      n2.verdict == verify::Verdict::Fail;
    report(2, pass,
           "helix transfer: on helix residuals " + fmt(h1.residual) + "/" +
               fmt(h2.residual) + " (<= 1e-4); on non-helix residuals " +
               fmt(n1.residual) + "/" + fmt(n2.residual) +
               " (must exceed 1e-4)");
}

void criterion_3() {
    const auto kappa = [](double u) { return 2.0 + std::sin(u); };
    const SampledCurve base = pos::spacelike_type2_helix(
        kappa,
        pos::HelixParams::cosh_family(1.5, pos::AxisKind::SpacelikeAxis),
        0.0, 1.0);
    assoc::FamilyParams params;
    params.c1 = 0.3;
    params.c2 = -0.2;
    const assoc::AssociatedPair pair = assoc::hca_construct(base, 5, params);

    // Independent route: classical Runge-Kutta on the second-order
    // coefficient equation a2'' - (kappa'/kappa) a2' + kappa^2 a2 = kappa.
    const std::vector<double>& s = base.s;
    const auto accel = [&](double u, double y, double v) {
        const double k = kappa(u);
        return (std::cos(u) / k) * v - k * k * y + k;
    };
    std::vector<double> a2(s.size());
    double y = params.c1 + 1.0 / kappa(s.front());
    double v = kappa(s.front()) * params.c2;
    a2.front() = y;
    for (std::size_t i = 0; i + 1 < s.size(); ++i) {
        const double h = s[i + 1] - s[i];
        const double u = s[i];
        const double k1y = v, k1v = accel(u, y, v);
        const double k2y = v + 0.5 * h * k1v;
        const double k2v = accel(u + 0.5 * h, y + 0.5 * h * k1y, k2y);
        const double k3y = v + 0.5 * h * k2v;
        const double k3v = accel(u + 0.5 * h, y + 0.5 * h * k2y, k3y);
        const double k4y = v + h * k3v;
        const double k4v = accel(u + h, y + h * k3y, k4y);
        y += h / 6.0 * (k1y + 2.0 * k2y + 2.0 * k3y + k4y);
        v += h / 6.0 * (k1v + 2.0 * k2v + 2.0 * k3v + k4v);
        a2[i + 1] = y;
    }
    double gap = 0.0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        gap = std::max(gap, std::abs(a2[i] - pair.coefficients.a2[i]));
    }
    report(3, gap <= 1e-6,
           "normal-coefficient oracle: closed form vs independent "
           "integration, max gap " +
               fmt(gap) + " (<= 1e-6)");
}

void criterion_4() {
    const SampledCurve helix = reference_helix(0.1, 0.9);
    assoc::FamilyParams p1;
    p1.c = 0.3;
    const assoc::DistanceReport d1 =
        assoc::distance_function(assoc::hca_construct(helix, 1, p1));
    double e1 = 0.0;
    for (const double d : d1.d) e1 = std::max(e1, std::abs(d - 1.0));

    assoc::FamilyParams p2;
    p2.c = 1.0;
    const assoc::DistanceReport d2 =
        assoc::distance_function(assoc::hca_construct(helix, 2, p2));
    const double expect2 = std::sqrt(1.0 - 0.25); // |c| sqrt(1 - m^2)
    double e2 = 0.0;
    for (const double d : d2.d) e2 = std::max(e2, std::abs(d - expect2));

    const SampledCurve slant = fig2_slant();
    assoc::FamilyParams p3;
    p3.omega = 0.2;
    const assoc::DistanceReport d3 =
        assoc::distance_function(assoc::shca_construct(slant, 3, p3));
    const std::vector<double>& s = slant.s;
    std::size_t nearest = 0, lowest = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (std::abs(s[i] - p3.omega) < std::abs(s[nearest] - p3.omega)) {
            nearest = i;
        }
        if (d3.d[i] < d3.d[lowest]) lowest = i;
    }
    bool monotone = true;
    for (std::size_t i = nearest + 1; i < s.size(); ++i) {
        monotone = monotone && d3.d[i] > d3.d[i - 1];
    }
    for (std::size_t i = nearest; i-- > 0;) {
        monotone = monotone && d3.d[i] > d3.d[i + 1];
    }
    const bool pass =
        e1 <= 1e-6 && e2 <= 1e-6 && lowest == nearest && monotone;
    report(4, pass,
           "distances: |d1 - 1| " + fmt(e1) + ", |d2 - sqrt(3)/2| " +
               fmt(e2) +
               " (<= 1e-6); d3 minimal at the sample nearest omega and "
               "strictly increasing away: " +
               (lowest == nearest && monotone ? "yes" : "no"));
}

void criterion_5() {
    const SampledCurve slant = fig2_slant();
    const verify::VerificationReport sl = verify::is_slant_helix(
        slant.s, slant.kappa, slant.tau, CausalSignature::spacelike_type1());

    assoc::FamilyParams q1;
    q1.c = 1.0;
    assoc::FamilyParams q2;
    q2.xi = 0.6;
    q2.zeta = -0.3;
    assoc::FamilyParams q3;
    q3.omega = 0.6;
    const assoc::AssociatedPair s1 = assoc::shca_construct(slant, 1, q1);
    const assoc::AssociatedPair s2 = assoc::shca_construct(slant, 2, q2);
    const assoc::AssociatedPair s3 = assoc::shca_construct(slant, 3, q3);

    const verify::VerificationReport h1 = measured_helix_report(s1);
    const verify::VerificationReport h2 = measured_helix_report(s2);
    const verify::VerificationReport h3 = measured_helix_report(s3);
    // The type-1 curve has a stationary point at the torsion zero; its
    // direction contract is checked on the arc above it.
    const double o1 = off_axis_ratio(s1, 0.1);
    const double o2 = off_axis_ratio(s2, -1e300);
    const double o3 = off_axis_ratio(s3, -1e300);
    const double worst_off = std::max({o1, o2, o3});

    const bool pass = sl.verdict == verify::Verdict::Pass &&
                      h1.verdict == verify::Verdict::Pass &&
                      h2.verdict == verify::Verdict::Pass &&
                      h3.verdict == verify::Verdict::Pass &&
                      worst_off <= 1e-5;
    report(5, pass,
           "slant pipeline: slant verdict " + to_string(sl.verdict) +
               ", associated helix residuals " + fmt(h1.residual) + "/" +
               fmt(h2.residual) + "/" + fmt(h3.residual) +
               " (<= 1e-4), worst off-normal velocity fraction " +
               fmt(worst_off) + " (<= 1e-5)");
}

void criterion_6() {
    const SampledCurve slant = fig2_slant();
    assoc::FamilyParams q3;
    q3.omega = 0.6;
    const verify::VerificationReport good = verify::check_equivalence_theorem(
        assoc::shca_construct(slant, 3, q3));

    CurvatureProfile profile;
    profile.kappa = [](double) { return 1.0; };
    profile.tau = [](double u) { return u * u; };
    profile.signature = CausalSignature::spacelike_type1();
    profile.s_begin = 0.0;
    profile.s_end = 1.0;
    const SampledCurve non = integrate_frenet(
        profile, standard_frame(CurveType::SpacelikeType1), LVec3{0, 0, 0});
    assoc::FamilyParams qn;
    qn.omega = 1.5;
    const verify::VerificationReport bad = verify::check_equivalence_theorem(
        assoc::shca_construct(non, 3, qn));

    const bool pass = good.verdict == verify::Verdict::Pass &&
                      bad.verdict == verify::Verdict::Pass;
    report(6, pass,
           "equivalence: slant instance '" + good.note +
               "'; non-slant instance '" + bad.note + "' (both must agree)");
}

void criterion_7() {
    const auto kappa6 = [](double) { return 6.0; };
    const pos::HelixParams helix_params = pos::HelixParams::sinh_family(
        1.0 / kRoot3, pos::AxisKind::SpacelikeAxis);

    pos::HcaConstants h1;
    h1.c = 0.3;
    const SampledCurve direct1 =
        pos::hca_position(1, kappa6, helix_params, h1, 0.1, 0.9);
    assoc::FamilyParams p1;
    p1.c = 0.3;
    const assoc::AssociatedPair c1 =
        assoc::hca_construct(reference_helix(0.1, 0.9), 1, p1);
    const double g1 = max_lorentz_gap(direct1.p, c1.beta.p);

    pos::HcaConstants h2;
    h2.c = 1.0;
    const SampledCurve direct2 =
        pos::hca_position(2, kappa6, helix_params, h2, 0.0, 1.0);
    assoc::FamilyParams p2;
    p2.c = 1.0;
    const assoc::AssociatedPair c2 =
        assoc::hca_construct(reference_helix(0.0, 1.0), 2, p2);
    const double g2 = max_lorentz_gap(direct2.p, c2.beta.p);

    const auto kappa1 = [](double) { return 1.0; };
    const pos::HelixParams slant_params = pos::HelixParams::cosh_family(
        2.0 / kRoot3, pos::AxisKind::TimelikeAxis);
    pos::ShcaConstants s3;
    s3.omega = 0.6;
    const pos::ShcaPositionResult direct3 =
        pos::shca_position(3, kappa1, slant_params, s3, -0.45, 0.45);
    assoc::FamilyParams p3;
    p3.omega = 0.6;
    const assoc::AssociatedPair c3 =
        assoc::shca_construct(fig2_slant(), 3, p3);
    const double g3 = max_lorentz_gap(direct3.curve.p, c3.beta.p);

    // Type 1: the printed closed form presumes a linear torsion integral;
    // the result must carry the constructive truth and quantify the gap.
    pos::ShcaConstants s1;
    s1.c3 = 1.0;
    const pos::ShcaPositionResult direct1s =
        pos::shca_position(1, kappa1, slant_params, s1, -0.45, 0.45);
    assoc::FamilyParams q1;
    q1.c = 1.0;
    const assoc::AssociatedPair c1s =
        assoc::shca_construct(fig2_slant(), 1, q1);
    const double g4 = max_lorentz_gap(direct1s.curve.p, c1s.beta.p);
    const bool documented =
        direct1s.note.find("linear") != std::string::npos &&
        direct1s.max_distance > 0.05;

    const bool pass =
        g1 <= 1e-4 && g2 <= 1e-4 && g3 <= 1e-4 && g4 <= 1e-4 && documented;
    report(7, pass,
           "dual routes: gaps " + fmt(g1) + "/" + fmt(g2) + "/" + fmt(g3) +
               "/" + fmt(g4) +
               " (<= 1e-4); verbatim type-1 form deviates by " +
               fmt(direct1s.max_distance) + " - " + direct1s.note);
}

void criterion_8() {
    const SampledCurve slant = fig2_slant();
    assoc::FamilyParams q2;
    q2.xi = 0.6;
    q2.zeta = -0.3;
    const assoc::AssociatedPair pair = assoc::shca_construct(slant, 2, q2);
    const std::vector<FrenetFrame> beta_frames =
        assoc::shca_frame(slant.frames, slant.kappa, slant.tau);

    // T_beta against the construction's normal direction, exactly.
    double tangent_gap = 0.0, binormal_gap = 0.0;
    for (std::size_t i = 0; i < beta_frames.size(); ++i) {
        const FrenetFrame& a = slant.frames[i];
        tangent_gap = std::max(tangent_gap,
                               euclidean_norm(beta_frames[i].T - a.N));
        const double norm2 = a.sig.eps_t * slant.tau[i] * slant.tau[i] +
                             a.sig.eps_b * slant.kappa[i] * slant.kappa[i];
        const LVec3 w = darboux_vector(a, slant.kappa[i],
                                       -a.sig.eps_n * slant.tau[i]);
        const LVec3 unit_w = w / std::sqrt(std::abs(norm2));
        binormal_gap = std::max(
            binormal_gap,
            std::min(euclidean_norm(beta_frames[i].B - unit_w),
                     euclidean_norm(beta_frames[i].B + unit_w)));
    }

    // T_beta against the actual measured direction of the curve.
    const std::vector<double>& s = pair.beta.s;
    std::vector<double> x1(s.size()), x2(s.size()), x3(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        x1[i] = pair.beta.p[i].x1;
        x2[i] = pair.beta.p[i].x2;
        x3[i] = pair.beta.p[i].x3;
    }
    const std::vector<double> d1 = num::derivative(s, x1);
    const std::vector<double> d2 = num::derivative(s, x2);
    const std::vector<double> d3 = num::derivative(s, x3);
    double angle_gap = 0.0;
    for (std::size_t i = 8; i + 8 < s.size(); ++i) {
        const LVec3 v{d1[i], d2[i], d3[i]};
        const LorentzAngle angle = lorentz_angle(v, beta_frames[i].T);
        angle_gap = std::max(angle_gap, std::abs(angle.value));
    }

    const bool pass =
        tangent_gap <= 1e-4 && angle_gap <= 1e-4 && binormal_gap <= 1e-4;
    report(8, pass,
           "associated frame: |T_b -+ N| " + fmt(tangent_gap) +
               ", direction angle to measured velocity " + fmt(angle_gap) +
               ", |B_b -+ W/|W|| " + fmt(binormal_gap) + " (all <= 1e-4)");
}

int run(const std::string& command) {
    const int rc = std::system(command.c_str());
    if (rc == -1 || !WIFEXITED(rc)) return -1;
    return WEXITSTATUS(rc);
}

std::string slurp(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    std::ostringstream os;
    os << is.rdbuf();
    return os.str();
}

std::size_t count_occurrences(const std::string& text,
                              const std::string& needle) {
    std::size_t count = 0;
    for (std::string::size_type at = text.find(needle);
         at != std::string::npos; at = text.find(needle, at + 1)) {
        ++count;
    }
    return count;
}

void criterion_9() {
    const std::string bin = MINKHELIX_BIN;
    char n_helix[40], n_slant[40];
    std::snprintf(n_helix, sizeof n_helix, "%.17g", 1.0 / kRoot3);
    std::snprintf(n_slant, sizeof n_slant, "%.17g", 2.0 / kRoot3);
    const std::string helix_base =
        std::string(" --kappa 6 --n ") + n_helix;
    const std::string type2_base = " --kappa 2 --n 1.5";
    const std::string slant_base = std::string(" --kappa 1 --n ") + n_slant +
                                   " --domain -0.45:0.45";
    const std::vector<std::string> fixtures = {
        "timelike-helix" + helix_base + " --domain 0:1",
        "spacelike-type2-helix" + type2_base + " --domain 0:1",
        std::string("slant-helix --kappa 1 --n ") + n_slant +
            " --domain -0.45:0.45",
        "hca1" + helix_base + " --c 0.3 --domain 0.1:0.9",
        "hca2" + helix_base + " --c 1 --domain 0:1",
        "hca3" + type2_base + " --domain 0:1",
        "hca4" + type2_base + " --nu 1.5 --domain 0:1",
        "hca5" + type2_base + " --domain 0:1",
        std::string("shca1 --kappa 1 --n ") + n_slant +
            " --c 1 --domain -0.45:0.45",
        std::string("shca2 --kappa 1 --n ") + n_slant +
            " --xi 0.6 --zeta -0.3 --domain -0.45:0.45",
        std::string("shca3 --kappa 1 --n ") + n_slant +
            " --omega 0.6 --domain -0.45:0.45",
    };
    (void)slant_base;

    int bad_round_trips = 0;
    for (std::size_t i = 0; i < fixtures.size(); ++i) {
        const std::string doc = "acceptance_doc.csv";
        const int gen = run(bin + " generate " + fixtures[i] + " --out " +
                            doc + " > /dev/null");
        const int ver =
            run(bin + " verify --in " + doc + " --suite all > /dev/null");
        if (gen != 0 || ver != 0) {
            ++bad_round_trips;
            std::printf("  round trip failed (generate %d, verify %d): %s\n",
                        gen, ver, fixtures[i].c_str());
        }
        std::remove(doc.c_str());
    }

    bool figures_ok = true;
    const std::size_t expected_polylines[3] = {3, 2, 2};
    for (int k = 1; k <= 3; ++k) {
        const std::string which = "fig" + std::to_string(k);
        const std::string a = "acceptance_" + which + "_a.svg";
        const std::string b = "acceptance_" + which + "_b.svg";
        const int ra = run(bin + " figure " + which + " --out " + a);
        const int rb = run(bin + " figure " + which + " --out " + b);
        const std::string body_a = slurp(a);
        const bool identical = ra == 0 && rb == 0 && !body_a.empty() &&
                               body_a == slurp(b);
        const bool count_ok =
            count_occurrences(body_a, "<polyline") ==
            expected_polylines[k - 1];
        if (!identical || !count_ok) {
            figures_ok = false;
            std::printf("  figure %s: identical=%d polyline count ok=%d\n",
                        which.c_str(), identical ? 1 : 0, count_ok ? 1 : 0);
        }
        std::remove(a.c_str());
        std::remove(b.c_str());
    }

    const bool pass = bad_round_trips == 0 && figures_ok;
    report(9, pass,
           "command line: " +
               std::to_string(fixtures.size() - bad_round_trips) + "/" +
               std::to_string(fixtures.size()) +
               " family round trips exit 0; figures byte-identical with "
               "expected curve counts: " +
               (figures_ok ? "yes" : "no"));
}

} // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    std::printf("RESULT: %d/9 criteria pass\n", 9 - failures);
    return failures;
}
