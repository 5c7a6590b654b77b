// Command-line front end: generate reference and associated curves to
// CSV/JSON documents, run verification suites over them, and render SVG
// projections of the worked parameter sets.
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mink/associated.hpp"
#include "mink/curve.hpp"
#include "mink/errors.hpp"
#include "mink/io.hpp"
#include "mink/lorentz.hpp"
#include "mink/verify.hpp"

namespace {

using mink::CausalSignature;
using mink::CurveType;
using mink::FrenetFrame;
using mink::LVec3;
using mink::SampledCurve;

struct GenerateArgs {
    std::string family;
    std::string domain;
    double step = 1e-3;
    std::string out;
    std::string format = "csv";
    std::map<std::string, double> params;
};

struct VerifyArgs {
    std::string in;
    std::string suite = "all";
    std::string json_out;
    double rel_tol = mink::num::kConstancyTol;
};

struct FigureArgs {
    std::string which;
    std::string out;
    std::string plane = "23";
};

void parse_domain(const std::string& text, double& begin, double& end) {
    const std::string::size_type at = text.find(':');
    if (at == std::string::npos || at == 0 || at + 1 == text.size()) {
        throw mink::InputError("domain must be given as begin:end");
    }
    const std::string lo = text.substr(0, at);
    const std::string hi = text.substr(at + 1);
    char* stop = nullptr;
    begin = std::strtod(lo.c_str(), &stop);
    if (stop == lo.c_str() || *stop != '\0') {
        throw mink::InputError("cannot parse domain bound '" + lo + "'");
    }
    end = std::strtod(hi.c_str(), &stop);
    if (stop == hi.c_str() || *stop != '\0') {
        throw mink::InputError("cannot parse domain bound '" + hi + "'");
    }
}

int cmd_generate(const GenerateArgs& args) {
    double begin = 0.0, end = 0.0;
    parse_domain(args.domain, begin, end);
    mink::io::GeneratedFamily made;
    try {
        made = mink::io::build_family(args.family, args.params, begin, end,
                                      args.step);
    } catch (const mink::InputError& e) {
        std::fprintf(stderr, "error: %s\n%s", e.what(),
                     mink::io::family_usage().c_str());
        return 2;
    }
    const std::string path =
        args.out.empty() ? args.family + "." + args.format : args.out;
    mink::io::write_document(made.document, path, args.format);
    return 0;
}

bool is_associated_family(const std::string& family) {
    return family.rfind("hca", 0) == 0 || family.rfind("shca", 0) == 0;
}

// Largest contiguous sample range where the associated curve's speed stays
// above ten percent of its maximum. The solved constructions may have
// isolated zero-speed points (the speed factor crosses zero); arc length
// and measured frames are only meaningful on a regular arc between them,
// and the finite-difference error of the measured frames grows like the
// inverse square of the speed near a cusp.
struct Block {
    std::size_t lo = 0;
    std::size_t hi = 0; // one past the end
    std::size_t size() const { return hi - lo; }
};

Block largest_regular_block(const mink::assoc::AssociatedPair& pair) {
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
    Block best;
    Block run;
    for (std::size_t i = 0; i <= n; ++i) {
        if (i < n && speed[i] >= 1e-1 * vmax) {
            run.hi = i + 1;
        } else {
            if (run.size() > best.size()) best = run;
            run.lo = i + 1;
            run.hi = i + 1;
        }
    }
    return best;
}

mink::verify::VerificationReport
helix_report_for_pair(const mink::assoc::AssociatedPair& pair,
                      const mink::verify::CheckOptions& opt) {
    const Block block = largest_regular_block(pair);
    if (block.size() < 50) {
        mink::verify::VerificationReport report;
        report.property = "general-helix";
        report.tolerance = opt.rel_tol;
        report.note = "associated curve has no regular arc long enough to "
                      "measure";
        return report;
    }
    const std::vector<double> t(pair.beta.s.begin() + block.lo,
                                pair.beta.s.begin() + block.hi);
    const std::vector<LVec3> p(pair.beta.p.begin() + block.lo,
                               pair.beta.p.begin() + block.hi);
    const SampledCurve rep = mink::arc_length_reparametrize(t, p);
    const mink::MeasuredFrames mf = mink::frenet_from_samples(rep.s, rep.p);
    return mink::verify::is_general_helix(rep.s, mf.kappa, mf.tau, opt);
}

// Data a verification suite reads from a document of a plain (non-pair)
// curve: columns when present, measured frames otherwise.
struct CurveData {
    std::vector<double> s;
    std::vector<LVec3> p;
    std::vector<FrenetFrame> frames;
    std::vector<double> kappa;
    std::vector<double> tau;
    CausalSignature sig;
};

CurveData curve_data(const mink::io::CurveDocument& doc) {
    CurveData data;
    data.s = doc.s;
    data.p = doc.p;
    if (doc.has_frames() && doc.has_curvatures()) {
        data.frames = doc.frames;
        data.kappa = doc.kappa;
        data.tau = doc.tau;
        data.sig = doc.frames.front().sig;
        return data;
    }
    const mink::MeasuredFrames mf = mink::frenet_from_samples(doc.s, doc.p);
    data.frames = mf.frames;
    data.kappa = mf.kappa;
    data.tau = mf.tau;
    data.sig = mf.signature;
    return data;
}

CurveData curve_data(const SampledCurve& curve) {
    CurveData data;
    data.s = curve.s;
    data.p = curve.p;
    data.frames = curve.frames;
    data.kappa = curve.kappa;
    data.tau = curve.tau;
    data.sig = curve.frames.front().sig;
    return data;
}

std::vector<std::string> suites_for(const std::string& requested,
                                    const std::string& family) {
    if (requested != "all") return {requested};
    if (is_associated_family(family)) {
        return {"helix", "slant", "darboux", "frames", "distance"};
    }
    if (family == "slant-helix") {
        // The base slant helix is not a general helix; the helix suite is
        // only meaningful for the curves this family produces.
        return {"slant", "darboux", "frames"};
    }
    return {"helix", "slant", "darboux", "frames"};
}

const char* verdict_label(mink::verify::Verdict v) {
    switch (v) {
        case mink::verify::Verdict::Pass: return "PASS";
        case mink::verify::Verdict::Fail: return "FAIL";
        case mink::verify::Verdict::Inconclusive: return "INCONCLUSIVE";
    }
    return "?";
}

int cmd_verify(const VerifyArgs& args) {
    const mink::io::CurveDocument doc = mink::io::read_document(args.in);
    mink::verify::CheckOptions opt;
    opt.rel_tol = args.rel_tol;

    std::optional<mink::assoc::AssociatedPair> pair;
    std::optional<CurveData> data;
    if (is_associated_family(doc.family)) {
        mink::io::GeneratedFamily regen = mink::io::build_family(
            doc.family, doc.params, doc.domain_begin, doc.domain_end,
            doc.step);
        if (regen.document.p.size() != doc.p.size()) {
            throw mink::InputError(
                "document samples do not match regeneration from metadata");
        }
        double scale = 0.0, diff = 0.0;
        for (std::size_t i = 0; i < doc.p.size(); ++i) {
            const LVec3 d = regen.document.p[i] - doc.p[i];
            diff = std::max(diff, mink::euclidean_norm(d));
            scale = std::max(scale, mink::euclidean_norm(doc.p[i]));
        }
        if (diff > 1e-9 * (1.0 + scale)) {
            throw mink::InputError(
                "document samples do not match regeneration from metadata");
        }
        pair = std::move(regen.pair);
        data = curve_data(pair->alpha);
    } else {
        data = curve_data(doc);
    }

    const std::vector<std::string> suites =
        suites_for(args.suite, doc.family);
    nlohmann::json reports = nlohmann::json::array();
    int fails = 0, inconclusive = 0;
    for (const std::string& suite : suites) {
        mink::verify::VerificationReport report;
        if (suite == "helix") {
            report = pair ? helix_report_for_pair(*pair, opt)
                          : mink::verify::is_general_helix(
                                data->s, data->kappa, data->tau, opt);
        } else if (suite == "slant") {
            report = mink::verify::is_slant_helix(data->s, data->kappa,
                                                  data->tau, data->sig, opt);
        } else if (suite == "darboux") {
            report = mink::verify::is_darboux_helix(
                data->s, data->frames, data->kappa, data->tau, {}, opt);
        } else if (suite == "frames") {
            report = mink::verify::check_frame_field(data->frames, data->sig,
                                                     data->s, 1e-6);
        } else if (suite == "distance") {
            if (!pair) {
                throw mink::InputError(
                    "distance suite needs an associated-curve document");
            }
            report = mink::verify::distance_constancy(*pair, opt);
        } else {
            throw mink::InputError("unknown suite '" + suite + "'");
        }
        std::printf("%s: %s (residual %.3g, tolerance %.3g)%s%s\n",
                    suite.c_str(), verdict_label(report.verdict),
                    report.residual, report.tolerance,
                    report.note.empty() ? "" : " - ", report.note.c_str());
        if (report.verdict == mink::verify::Verdict::Fail) ++fails;
        if (report.verdict == mink::verify::Verdict::Inconclusive) {
            ++inconclusive;
        }
        nlohmann::json j = mink::verify::to_json(report);
        j["suite"] = suite;
        reports.push_back(std::move(j));
    }
    if (!args.json_out.empty()) {
        std::ofstream os(args.json_out, std::ios::binary);
        if (!os) {
            throw mink::InputError("cannot open '" + args.json_out +
                                   "' for writing");
        }
        os << reports.dump(2) << "\n";
    }
    if (fails > 0) return 1;
    if (inconclusive > 0) return 4;
    return 0;
}

struct FigureCurve {
    std::string label;
    std::vector<LVec3> p;
};

std::vector<FigureCurve> figure_curves(const std::string& which) {
    const double n_helix = 1.0 / std::sqrt(3.0);
    const double n_slant = 2.0 / std::sqrt(3.0);
    const auto beta = [](mink::io::GeneratedFamily made) {
        return std::move(made.document.p);
    };
    if (which == "fig1") {
        std::map<std::string, double> base{{"kappa", 6.0}, {"n", n_helix}};
        std::map<std::string, double> p1 = base;
        p1["c"] = 0.0;
        std::map<std::string, double> p2 = base;
        p2["c"] = 1.0;
        return {
            {"alpha", beta(mink::io::build_family("timelike-helix", base,
                                                  0.0, 1.0, 1e-3))},
            {"hca1", beta(mink::io::build_family("hca1", p1, 0.0, 1.0, 1e-3))},
            {"hca2", beta(mink::io::build_family("hca2", p2, 0.0, 1.0, 1e-3))},
        };
    }
    std::map<std::string, double> base{{"kappa", 1.0}, {"n", n_slant}};
    if (which == "fig2") {
        std::map<std::string, double> p1 = base;
        p1["c"] = 1.0;
        return {
            {"alpha", beta(mink::io::build_family("slant-helix", base, -0.45,
                                                  0.45, 1e-3))},
            {"shca1",
             beta(mink::io::build_family("shca1", p1, -0.45, 0.45, 1e-3))},
        };
    }
    if (which == "fig3") {
        std::map<std::string, double> p2 = base;
        p2["xi"] = 0.2;
        p2["zeta"] = 0.3;
        std::map<std::string, double> p3 = base;
        p3["omega"] = 0.2;
        return {
            {"shca2",
             beta(mink::io::build_family("shca2", p2, -0.45, 0.45, 1e-3))},
            {"shca3",
             beta(mink::io::build_family("shca3", p3, -0.45, 0.45, 1e-3))},
        };
    }
    throw mink::InputError("unknown figure '" + which + "'");
}

std::string render_svg(const std::vector<FigureCurve>& curves,
                       const std::string& plane) {
    int ax = 1, ay = 2; // 0-based coordinate indices
    if (plane == "12") {
        ax = 0;
        ay = 1;
    } else if (plane == "13") {
        ax = 0;
        ay = 2;
    } else if (plane == "23") {
        ax = 1;
        ay = 2;
    } else {
        throw mink::InputError("plane must be 12, 13 or 23");
    }
    const auto coord = [&](const LVec3& v, int k) {
        return k == 0 ? v.x1 : (k == 1 ? v.x2 : v.x3);
    };

    double umin = 1e300, umax = -1e300, vmin = 1e300, vmax = -1e300;
    for (const FigureCurve& c : curves) {
        for (const LVec3& q : c.p) {
            umin = std::min(umin, coord(q, ax));
            umax = std::max(umax, coord(q, ax));
            vmin = std::min(vmin, coord(q, ay));
            vmax = std::max(vmax, coord(q, ay));
        }
    }
    const double du = std::max(umax - umin, 1e-12);
    const double dv = std::max(vmax - vmin, 1e-12);
    const double width = 640.0, height = 480.0, margin = 40.0;
    const double scale = std::min((width - 2.0 * margin) / (1.1 * du),
                                  (height - 2.0 * margin) / (1.1 * dv));
    const double ucenter = 0.5 * (umin + umax);
    const double vcenter = 0.5 * (vmin + vmax);
    const auto px = [&](double u) {
        return 0.5 * width + scale * (u - ucenter);
    };
    const auto py = [&](double v) {
        return 0.5 * height - scale * (v - vcenter);
    };

    static const char* const kPalette[3] = {"#1f77b4", "#d62728", "#2ca02c"};
    char buf[96];
    std::string svg;
    svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
           "width=\"640\" height=\"480\" viewBox=\"0 0 640 480\">\n";
    svg += "<rect width=\"640\" height=\"480\" fill=\"#ffffff\"/>\n";
    svg += "<line x1=\"40\" y1=\"440\" x2=\"600\" y2=\"440\" "
           "stroke=\"#333333\" stroke-width=\"1\"/>\n";
    svg += "<line x1=\"40\" y1=\"40\" x2=\"40\" y2=\"440\" "
           "stroke=\"#333333\" stroke-width=\"1\"/>\n";
    std::snprintf(buf, sizeof buf,
                  "<text x=\"590\" y=\"458\" font-family=\"sans-serif\" "
                  "font-size=\"12\" fill=\"#333333\">x%d</text>\n",
                  ax + 1);
    svg += buf;
    std::snprintf(buf, sizeof buf,
                  "<text x=\"14\" y=\"34\" font-family=\"sans-serif\" "
                  "font-size=\"12\" fill=\"#333333\">x%d</text>\n",
                  ay + 1);
    svg += buf;

    for (std::size_t k = 0; k < curves.size(); ++k) {
        const char* color = kPalette[k % 3];
        svg += "<polyline fill=\"none\" stroke=\"";
        svg += color;
        svg += "\" stroke-width=\"1.5\" points=\"";
        for (const LVec3& q : curves[k].p) {
            std::snprintf(buf, sizeof buf, "%.6f,%.6f ", px(coord(q, ax)),
                          py(coord(q, ay)));
            svg += buf;
        }
        if (!curves[k].p.empty()) svg.pop_back();
        svg += "\"/>\n";
        const LVec3& last = curves[k].p.back();
        std::snprintf(buf, sizeof buf,
                      "<text x=\"%.6f\" y=\"%.6f\" "
                      "font-family=\"sans-serif\" font-size=\"12\" "
                      "fill=\"%s\">%s</text>\n",
                      px(coord(last, ax)) + 6.0, py(coord(last, ay)) - 6.0,
                      color, curves[k].label.c_str());
        svg += buf;
    }
    svg += "</svg>\n";
    return svg;
}

int cmd_figure(const FigureArgs& args) {
    const std::vector<FigureCurve> curves = figure_curves(args.which);
    const std::string svg = render_svg(curves, args.plane);
    const std::string path =
        args.out.empty() ? args.which + ".svg" : args.out;
    std::ofstream os(path, std::ios::binary);
    if (!os) throw mink::InputError("cannot open '" + path + "' for writing");
    os << svg;
    if (!os.good()) throw mink::InputError("write to '" + path + "' failed");
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Curves in Minkowski 3-space: closed-form helices, "
                 "associated curves, verification suites and figures"};
    app.set_version_flag("--version",
                         std::string("minkhelix ") + mink::io::kToolVersion);
    app.require_subcommand(1);

    GenerateArgs gen;
    double kappa = 0, n = 0, m = 0, c = 0, nu = 0, c1 = 0, c2 = 0, xi = 0,
           zeta = 0, omega = 0;
    std::string axis;
    int branch = 1;
    CLI::App* generate =
        app.add_subcommand("generate", "Generate a curve family document");
    generate->add_option("family", gen.family, "Curve family tag")
        ->required();
    CLI::Option* o_kappa =
        generate->add_option("--kappa", kappa, "Constant curvature (> 0)");
    CLI::Option* o_n =
        generate->add_option("--n", n, "Axis-angle parameter n");
    CLI::Option* o_m =
        generate->add_option("--m", m, "Torsion ratio (cross-check only)");
    CLI::Option* o_axis =
        generate->add_option("--axis", axis, "Fixed axis kind")
            ->check(CLI::IsMember({"spacelike", "timelike"}));
    CLI::Option* o_branch =
        generate->add_option("--branch", branch, "Torsion branch (+1 or -1)");
    CLI::Option* o_c = generate->add_option("--c", c, "Family constant c");
    CLI::Option* o_nu = generate->add_option("--nu", nu, "Family constant nu");
    CLI::Option* o_c1 = generate->add_option("--c1", c1, "Family constant c1");
    CLI::Option* o_c2 = generate->add_option("--c2", c2, "Family constant c2");
    CLI::Option* o_xi = generate->add_option("--xi", xi, "Family constant xi");
    CLI::Option* o_zeta =
        generate->add_option("--zeta", zeta, "Family constant zeta");
    CLI::Option* o_omega =
        generate->add_option("--omega", omega, "Family constant omega");
    generate->add_option("--domain", gen.domain, "Arc-length range begin:end")
        ->required();
    generate->add_option("--step", gen.step, "Grid step");
    generate->add_option("--out", gen.out, "Output path");
    generate->add_option("--format", gen.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}));

    VerifyArgs ver;
    CLI::App* verify =
        app.add_subcommand("verify", "Run verification suites on a document");
    verify->add_option("--in", ver.in, "Input document")->required();
    verify->add_option("--suite", ver.suite, "Suite to run")
        ->check(CLI::IsMember(
            {"helix", "slant", "darboux", "frames", "distance", "all"}));
    verify->add_option("--json", ver.json_out, "Write reports as JSON");
    verify->add_option("--rel-tol,--tol", ver.rel_tol,
                       "Relative constancy tolerance");

    FigureArgs fig;
    CLI::App* figure =
        app.add_subcommand("figure", "Render a worked parameter set as SVG");
    figure->add_option("which", fig.which, "Figure id")
        ->required()
        ->check(CLI::IsMember({"fig1", "fig2", "fig3"}));
    figure->add_option("--out", fig.out, "Output path");
    figure->add_option("--plane", fig.plane, "Projection plane")
        ->check(CLI::IsMember({"12", "13", "23"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (generate->parsed()) {
            const auto put = [&](const CLI::Option* opt, const char* key,
                                 double value) {
                if (opt->count() > 0) gen.params[key] = value;
            };
            put(o_kappa, "kappa", kappa);
            put(o_n, "n", n);
            put(o_m, "m", m);
            put(o_branch, "branch", branch);
            put(o_c, "c", c);
            put(o_nu, "nu", nu);
            put(o_c1, "c1", c1);
            put(o_c2, "c2", c2);
            put(o_xi, "xi", xi);
            put(o_zeta, "zeta", zeta);
            put(o_omega, "omega", omega);
            if (o_axis->count() > 0) {
                gen.params["axis"] = axis == "timelike" ? 1.0 : 0.0;
            }
            return cmd_generate(gen);
        }
        if (verify->parsed()) return cmd_verify(ver);
        if (figure->parsed()) return cmd_figure(fig);
    } catch (const mink::InputError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const mink::DomainError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 2;
}
