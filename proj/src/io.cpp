#include "mink/io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include "mink/errors.hpp"
#include "mink/position.hpp"

namespace mink::io {

namespace {

std::string num17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

double parse_double(const std::string& text, const char* what) {
    const char* begin = text.c_str();
    char* end = nullptr;
    const double v = std::strtod(begin, &end);
    if (end == begin || *end != '\0') {
        throw InputError(std::string("cannot parse ") + what + " '" + text +
                         "'");
    }
    return v;
}

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> out;
    std::string::size_type from = 0;
    while (true) {
        const std::string::size_type at = line.find(sep, from);
        if (at == std::string::npos) {
            out.push_back(line.substr(from));
            return out;
        }
        out.push_back(line.substr(from, at - from));
        from = at + 1;
    }
}

CausalSignature signature_from_string(const std::string& name) {
    for (const CurveType type : {CurveType::Timelike, CurveType::SpacelikeType1,
                                 CurveType::SpacelikeType2}) {
        if (name == to_string(type)) return signature_of(type);
    }
    throw InputError("unknown signature '" + name + "' in document");
}

const char* const kFrameColumns[9] = {"T1", "T2", "T3", "N1", "N2",
                                      "N3", "B1", "B2", "B3"};

} // namespace

void write_csv(const CurveDocument& doc, std::ostream& os) {
    os << "# minkhelix " << doc.version << "\n";
    os << "# family: " << doc.family << "\n";
    os << "# signature: " << doc.signature << "\n";
    os << "# domain: " << num17(doc.domain_begin) << ":"
       << num17(doc.domain_end) << "\n";
    os << "# step: " << num17(doc.step) << "\n";
    for (const auto& [key, value] : doc.params) {
        os << "# param " << key << "=" << num17(value) << "\n";
    }
    os << "s,x1,x2,x3";
    if (doc.has_frames()) {
        for (const char* name : kFrameColumns) os << "," << name;
    }
    if (doc.has_curvatures()) os << ",kappa,tau";
    os << "\n";
    for (std::size_t i = 0; i < doc.s.size(); ++i) {
        os << num17(doc.s[i]) << "," << num17(doc.p[i].x1) << ","
           << num17(doc.p[i].x2) << "," << num17(doc.p[i].x3);
        if (doc.has_frames()) {
            const FrenetFrame& f = doc.frames[i];
            for (const LVec3* v : {&f.T, &f.N, &f.B}) {
                os << "," << num17(v->x1) << "," << num17(v->x2) << ","
                   << num17(v->x3);
            }
        }
        if (doc.has_curvatures()) {
            os << "," << num17(doc.kappa[i]) << "," << num17(doc.tau[i]);
        }
        os << "\n";
    }
}

CurveDocument read_csv(std::istream& is) {
    CurveDocument doc;
    std::string line;
    bool saw_header = false;
    bool with_frames = false;
    bool with_curvatures = false;
    std::size_t columns = 0;
    while (std::getline(is, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line.front() == '#') {
            const std::string body = line.substr(1);
            const auto starts = [&](const char* prefix) {
                return body.rfind(prefix, 0) == 0;
            };
            if (starts(" minkhelix ")) {
                doc.version = body.substr(11);
            } else if (starts(" family: ")) {
                doc.family = body.substr(9);
            } else if (starts(" signature: ")) {
                doc.signature = body.substr(12);
            } else if (starts(" domain: ")) {
                const std::vector<std::string> parts =
                    split(body.substr(9), ':');
                if (parts.size() != 2) {
                    throw InputError("malformed domain line in document");
                }
                doc.domain_begin = parse_double(parts[0], "domain bound");
                doc.domain_end = parse_double(parts[1], "domain bound");
            } else if (starts(" step: ")) {
                doc.step = parse_double(body.substr(7), "step");
            } else if (starts(" param ")) {
                const std::vector<std::string> parts =
                    split(body.substr(7), '=');
                if (parts.size() != 2) {
                    throw InputError("malformed param line in document");
                }
                doc.params[parts[0]] =
                    parse_double(parts[1], parts[0].c_str());
            }
            continue;
        }
        const std::vector<std::string> cells = split(line, ',');
        if (!saw_header) {
            if (cells.size() < 4 || cells[0] != "s" || cells[1] != "x1" ||
                cells[2] != "x2" || cells[3] != "x3") {
                throw InputError(
                    "document is missing the s,x1,x2,x3 header row");
            }
            std::size_t at = 4;
            if (cells.size() >= at + 9 && cells[at] == "T1") {
                for (std::size_t k = 0; k < 9; ++k) {
                    if (cells[at + k] != kFrameColumns[k]) {
                        throw InputError("unexpected frame column '" +
                                         cells[at + k] + "' in header");
                    }
                }
                with_frames = true;
                at += 9;
            }
            if (cells.size() >= at + 2 && cells[at] == "kappa" &&
                cells[at + 1] == "tau") {
                with_curvatures = true;
                at += 2;
            }
            if (at != cells.size()) {
                throw InputError("unexpected column '" + cells[at] +
                                 "' in header");
            }
            columns = at;
            saw_header = true;
            continue;
        }
        if (cells.size() != columns) {
            throw InputError("row has " + std::to_string(cells.size()) +
                             " cells, expected " + std::to_string(columns));
        }
        std::vector<double> row(columns);
        for (std::size_t k = 0; k < columns; ++k) {
            row[k] = parse_double(cells[k], "sample cell");
        }
        doc.s.push_back(row[0]);
        doc.p.push_back(LVec3{row[1], row[2], row[3]});
        std::size_t at = 4;
        if (with_frames) {
            FrenetFrame f;
            f.T = {row[at], row[at + 1], row[at + 2]};
            f.N = {row[at + 3], row[at + 4], row[at + 5]};
            f.B = {row[at + 6], row[at + 7], row[at + 8]};
            doc.frames.push_back(f);
            at += 9;
        }
        if (with_curvatures) {
            doc.kappa.push_back(row[at]);
            doc.tau.push_back(row[at + 1]);
        }
    }
    if (!saw_header) {
        throw InputError("document is missing the s,x1,x2,x3 header row");
    }
    if (doc.s.empty()) throw InputError("document has no sample rows");
    if (!doc.frames.empty()) {
        const CausalSignature sig = signature_from_string(doc.signature);
        for (FrenetFrame& f : doc.frames) f.sig = sig;
    }
    return doc;
}

nlohmann::json to_json(const CurveDocument& doc) {
    nlohmann::json j;
    j["metadata"] = {{"family", doc.family},
                     {"params", doc.params},
                     {"signature", doc.signature},
                     {"step", doc.step},
                     {"domain", {doc.domain_begin, doc.domain_end}},
                     {"version", doc.version}};
    nlohmann::json samples;
    std::vector<double> x1, x2, x3;
    x1.reserve(doc.p.size());
    for (const LVec3& v : doc.p) {
        x1.push_back(v.x1);
        x2.push_back(v.x2);
        x3.push_back(v.x3);
    }
    samples["s"] = doc.s;
    samples["x1"] = x1;
    samples["x2"] = x2;
    samples["x3"] = x3;
    j["samples"] = std::move(samples);
    if (doc.has_frames()) {
        nlohmann::json frames;
        for (std::size_t k = 0; k < 9; ++k) {
            std::vector<double> column;
            column.reserve(doc.frames.size());
            for (const FrenetFrame& f : doc.frames) {
                const LVec3& v = k < 3 ? f.T : (k < 6 ? f.N : f.B);
                const std::size_t c = k % 3;
                column.push_back(c == 0 ? v.x1 : (c == 1 ? v.x2 : v.x3));
            }
            frames[kFrameColumns[k]] = std::move(column);
        }
        j["frames"] = std::move(frames);
    }
    if (doc.has_curvatures()) {
        j["curvatures"] = {{"kappa", doc.kappa}, {"tau", doc.tau}};
    }
    return j;
}

CurveDocument from_json(const nlohmann::json& j) {
    CurveDocument doc;
    try {
        const nlohmann::json& meta = j.at("metadata");
        doc.family = meta.at("family").get<std::string>();
        doc.params =
            meta.at("params").get<std::map<std::string, double>>();
        doc.signature = meta.at("signature").get<std::string>();
        doc.step = meta.at("step").get<double>();
        doc.domain_begin = meta.at("domain").at(0).get<double>();
        doc.domain_end = meta.at("domain").at(1).get<double>();
        doc.version = meta.at("version").get<std::string>();
        const nlohmann::json& samples = j.at("samples");
        doc.s = samples.at("s").get<std::vector<double>>();
        const auto x1 = samples.at("x1").get<std::vector<double>>();
        const auto x2 = samples.at("x2").get<std::vector<double>>();
        const auto x3 = samples.at("x3").get<std::vector<double>>();
        if (x1.size() != doc.s.size() || x2.size() != doc.s.size() ||
            x3.size() != doc.s.size()) {
            throw InputError("sample columns differ in length");
        }
        doc.p.resize(doc.s.size());
        for (std::size_t i = 0; i < doc.s.size(); ++i) {
            doc.p[i] = LVec3{x1[i], x2[i], x3[i]};
        }
        if (j.contains("frames")) {
            const nlohmann::json& frames = j.at("frames");
            std::vector<std::vector<double>> cols(9);
            for (std::size_t k = 0; k < 9; ++k) {
                cols[k] =
                    frames.at(kFrameColumns[k]).get<std::vector<double>>();
                if (cols[k].size() != doc.s.size()) {
                    throw InputError("frame columns differ in length");
                }
            }
            const CausalSignature sig = signature_from_string(doc.signature);
            doc.frames.resize(doc.s.size());
            for (std::size_t i = 0; i < doc.s.size(); ++i) {
                FrenetFrame& f = doc.frames[i];
                f.T = {cols[0][i], cols[1][i], cols[2][i]};
                f.N = {cols[3][i], cols[4][i], cols[5][i]};
                f.B = {cols[6][i], cols[7][i], cols[8][i]};
                f.sig = sig;
            }
        }
        if (j.contains("curvatures")) {
            doc.kappa =
                j.at("curvatures").at("kappa").get<std::vector<double>>();
            doc.tau = j.at("curvatures").at("tau").get<std::vector<double>>();
            if (doc.kappa.size() != doc.s.size() ||
                doc.tau.size() != doc.s.size()) {
                throw InputError("curvature columns differ in length");
            }
        }
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("cannot parse document: ") + e.what());
    }
    if (doc.s.empty()) throw InputError("document has no sample rows");
    return doc;
}

void write_document(const CurveDocument& doc, const std::string& path,
                    const std::string& format) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw InputError("cannot open '" + path + "' for writing");
    if (format == "csv") {
        write_csv(doc, os);
    } else if (format == "json") {
        os << to_json(doc).dump(2) << "\n";
    } else {
        throw InputError("unknown format '" + format + "'");
    }
    if (!os.good()) throw InputError("write to '" + path + "' failed");
}

CurveDocument read_document(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw InputError("cannot open '" + path + "'");
    int first = is.peek();
    while (first == ' ' || first == '\n' || first == '\r' || first == '\t') {
        is.get();
        first = is.peek();
    }
    if (first == '{') {
        nlohmann::json j;
        try {
            is >> j;
        } catch (const nlohmann::json::exception& e) {
            throw InputError(std::string("cannot parse document: ") +
                             e.what());
        }
        return from_json(j);
    }
    return read_csv(is);
}

namespace {

// Named-parameter accessor that records which keys a family consumed so
// that stray parameters can be reported as usage errors.
class ParamReader {
public:
    ParamReader(const std::string& family,
                const std::map<std::string, double>& params)
        : family_(family), params_(params) {}

    double require(const char* key) {
        const auto it = params_.find(key);
        if (it == params_.end()) {
            throw InputError("family " + family_ +
                             " needs parameter " + key);
        }
        used_.insert(key);
        return it->second;
    }

    double optional(const char* key, double fallback) {
        used_.insert(key);
        const auto it = params_.find(key);
        return it == params_.end() ? fallback : it->second;
    }

    void finish() const {
        for (const auto& [key, value] : params_) {
            (void)value;
            if (!used_.count(key)) {
                throw InputError("parameter " + key +
                                 " is not used by family " + family_);
            }
        }
    }

private:
    std::string family_;
    const std::map<std::string, double>& params_;
    std::set<std::string> used_;
};

struct BaseSpec {
    CurveType type = CurveType::Timelike;
    pos::HelixParams hp;
    double kappa = 1.0;
    int branch = +1;
};

// Base-curve parameters shared by every family: kappa, n, the axis flag
// (0 spacelike, 1 timelike) and, for the slant base, the torsion branch.
// The factory relation (sinh or cosh) is fixed by curve type and axis.
BaseSpec read_base(ParamReader& reader, CurveType type, int default_axis) {
    BaseSpec base;
    base.type = type;
    base.kappa = reader.require("kappa");
    if (!(base.kappa > 0.0)) throw InputError("curvature must be positive");
    const double n = reader.require("n");
    const double axis_flag = reader.optional("axis", default_axis);
    if (axis_flag != 0.0 && axis_flag != 1.0) {
        throw InputError("axis must be 0 (spacelike) or 1 (timelike)");
    }
    const pos::AxisKind axis = axis_flag == 0.0
                                   ? pos::AxisKind::SpacelikeAxis
                                   : pos::AxisKind::TimelikeAxis;
    const bool sinh_relation =
        (type == CurveType::SpacelikeType2) ==
        (axis == pos::AxisKind::TimelikeAxis);
    base.hp = sinh_relation ? pos::HelixParams::sinh_family(n, axis)
                            : pos::HelixParams::cosh_family(n, axis);
    const double m = reader.optional("m", base.hp.m);
    if (std::abs(m - base.hp.m) > 1e-6 * (1.0 + std::abs(base.hp.m))) {
        throw InputError("parameter m is inconsistent with n for this axis");
    }
    if (type == CurveType::SpacelikeType1) {
        const double branch = reader.optional("branch", 1.0);
        if (branch != 1.0 && branch != -1.0) {
            throw InputError("branch must be +1 or -1");
        }
        base.branch = static_cast<int>(branch);
    }
    return base;
}

SampledCurve build_base(const BaseSpec& base, double s0, double s1,
                        double step) {
    const auto kappa = [k = base.kappa](double) { return k; };
    switch (base.type) {
        case CurveType::Timelike:
            return pos::timelike_helix(kappa, base.hp, s0, s1, step);
        case CurveType::SpacelikeType2:
            return pos::spacelike_type2_helix(kappa, base.hp, s0, s1, step);
        case CurveType::SpacelikeType1:
            return pos::spacelike_slant_helix(kappa, base.hp, s0, s1,
                                              base.branch, step);
    }
    throw InputError("unknown base curve type");
}

void record_base(CurveDocument& doc, const BaseSpec& base) {
    doc.params["kappa"] = base.kappa;
    doc.params["n"] = base.hp.n;
    doc.params["m"] = base.hp.m;
    doc.params["axis"] =
        base.hp.axis == pos::AxisKind::SpacelikeAxis ? 0.0 : 1.0;
    if (base.type == CurveType::SpacelikeType1) {
        doc.params["branch"] = base.branch;
    }
}

CurveDocument document_of_curve(const SampledCurve& curve) {
    CurveDocument doc;
    doc.s = curve.s;
    doc.p = curve.p;
    doc.frames = curve.frames;
    doc.kappa = curve.kappa;
    doc.tau = curve.tau;
    if (curve.signature) {
        doc.signature = to_string(type_of(*curve.signature));
    }
    return doc;
}

CurveDocument document_of_beta(const assoc::AssociatedPair& pair) {
    CurveDocument doc;
    doc.s = pair.beta.s;
    doc.p = pair.beta.p;
    if (pair.beta.signature) {
        doc.signature = to_string(type_of(*pair.beta.signature));
    }
    return doc;
}

} // namespace

GeneratedFamily build_family(const std::string& family,
                             const std::map<std::string, double>& params,
                             double domain_begin, double domain_end,
                             double step) {
    if (!(domain_end > domain_begin)) {
        throw InputError("domain end must exceed domain begin");
    }
    if (!(step > 0.0)) throw InputError("step must be positive");
    ParamReader reader(family, params);
    GeneratedFamily out;

    const auto base_family = [&](CurveType type, int default_axis) {
        const BaseSpec base = read_base(reader, type, default_axis);
        reader.finish();
        const SampledCurve curve =
            build_base(base, domain_begin, domain_end, step);
        out.document = document_of_curve(curve);
        record_base(out.document, base);
    };
    const auto assoc_family = [&](CurveType type, int default_axis, int kind,
                                  const assoc::FamilyParams& fp) {
        const BaseSpec base = read_base(reader, type, default_axis);
        reader.finish();
        const SampledCurve alpha =
            build_base(base, domain_begin, domain_end, step);
        out.pair = family[0] == 'h' ? assoc::hca_construct(alpha, kind, fp)
                                    : assoc::shca_construct(alpha, kind, fp);
        out.document = document_of_beta(*out.pair);
        record_base(out.document, base);
    };

    if (family == "timelike-helix") {
        base_family(CurveType::Timelike, 0);
    } else if (family == "spacelike-type2-helix") {
        base_family(CurveType::SpacelikeType2, 0);
    } else if (family == "slant-helix") {
        base_family(CurveType::SpacelikeType1, 1);
    } else if (family == "hca1") {
        assoc::FamilyParams fp;
        fp.c = reader.optional("c", 0.0);
        assoc_family(CurveType::Timelike, 0, 1, fp);
        out.document.params["c"] = fp.c;
    } else if (family == "hca2") {
        assoc::FamilyParams fp;
        fp.c = reader.require("c");
        if (fp.c == 0.0) throw InputError("c must be non-zero");
        assoc_family(CurveType::Timelike, 0, 2, fp);
        out.document.params["c"] = fp.c;
    } else if (family == "hca3") {
        assoc_family(CurveType::SpacelikeType2, 0, 3, assoc::FamilyParams{});
    } else if (family == "hca4") {
        assoc::FamilyParams fp;
        fp.nu = reader.require("nu");
        assoc_family(CurveType::SpacelikeType2, 0, 4, fp);
        out.document.params["nu"] = fp.nu;
    } else if (family == "hca5") {
        assoc::FamilyParams fp;
        fp.c1 = reader.optional("c1", 0.0);
        fp.c2 = reader.optional("c2", 0.0);
        assoc_family(CurveType::SpacelikeType2, 0, 5, fp);
        out.document.params["c1"] = fp.c1;
        out.document.params["c2"] = fp.c2;
    } else if (family == "shca1") {
        assoc::FamilyParams fp;
        fp.c = reader.optional("c", 0.0);
        assoc_family(CurveType::SpacelikeType1, 1, 1, fp);
        out.document.params["c"] = fp.c;
    } else if (family == "shca2") {
        assoc::FamilyParams fp;
        fp.xi = reader.require("xi");
        fp.zeta = reader.require("zeta");
        assoc_family(CurveType::SpacelikeType1, 1, 2, fp);
        out.document.params["xi"] = fp.xi;
        out.document.params["zeta"] = fp.zeta;
    } else if (family == "shca3") {
        assoc::FamilyParams fp;
        fp.omega = reader.require("omega");
        assoc_family(CurveType::SpacelikeType1, 1, 3, fp);
        out.document.params["omega"] = fp.omega;
    } else {
        throw InputError("unknown family '" + family + "'");
    }

    out.document.family = family;
    out.document.step = step;
    out.document.domain_begin = domain_begin;
    out.document.domain_end = domain_end;
    out.document.version = kToolVersion;
    return out;
}

std::string family_usage() {
    return "supported families and parameters:\n"
           "  timelike-helix          --kappa --n [--axis]\n"
           "  spacelike-type2-helix   --kappa --n [--axis]\n"
           "  slant-helix             --kappa --n [--axis] [--branch]\n"
           "  hca1                    --kappa --n [--axis] [--c]\n"
           "  hca2                    --kappa --n [--axis] --c (nonzero)\n"
           "  hca3                    --kappa --n [--axis]\n"
           "  hca4                    --kappa --n [--axis] --nu\n"
           "  hca5                    --kappa --n [--axis] [--c1] [--c2]\n"
           "  shca1                   --kappa --n [--axis] [--c]\n"
           "  shca2                   --kappa --n [--axis] --xi --zeta\n"
           "  shca3                   --kappa --n [--axis] --omega\n"
           "axis: spacelike or timelike; helix bases default to spacelike,\n"
           "the slant base to timelike. --m may be given as a cross-check.\n";
}

} // namespace mink::io
