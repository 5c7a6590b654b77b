#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "mink/associated.hpp"
#include "mink/curve.hpp"

namespace mink::io {

inline constexpr const char* kToolVersion = "0.1.0";

// Self-describing sampled-curve file: metadata sufficient to regenerate the
// samples, the position samples themselves, and optional frame and
// curvature columns. Parameters are a sorted name -> value map so that
// serialization is deterministic.
struct CurveDocument {
    std::string family;
    std::map<std::string, double> params;
    std::string signature;
    double step = 1e-3;
    double domain_begin = 0.0;
    double domain_end = 0.0;
    std::string version = kToolVersion;

    std::vector<double> s;
    std::vector<LVec3> p;
    std::vector<FrenetFrame> frames; // empty, or one per sample
    std::vector<double> kappa;       // empty, or one per sample
    std::vector<double> tau;

    bool has_frames() const { return !frames.empty(); }
    bool has_curvatures() const { return !kappa.empty(); }
};

// CSV layout: `#`-prefixed metadata lines, then a mandatory header row
// `s,x1,x2,x3[,T1..B3[,kappa,tau]]`, then one row per sample at 17
// significant digits, LF line endings.
void write_csv(const CurveDocument& doc, std::ostream& os);
CurveDocument read_csv(std::istream& is);

// JSON layout: top-level keys `metadata`, `samples`, and optional `frames`
// and `curvatures`, all columnar.
nlohmann::json to_json(const CurveDocument& doc);
CurveDocument from_json(const nlohmann::json& j);

// Path helpers; the reader sniffs the format from the first byte.
void write_document(const CurveDocument& doc, const std::string& path,
                    const std::string& format);
CurveDocument read_document(const std::string& path);

// A generated family: the document for the requested curve plus, for the
// associated constructions, the full pair backing the distance and helix
// verifications.
struct GeneratedFamily {
    CurveDocument document;
    std::optional<assoc::AssociatedPair> pair;
};

// Builds one of the supported families from named parameters:
//   timelike-helix          kappa, n, [axis], [m]
//   spacelike-type2-helix   kappa, n, [axis], [m]
//   slant-helix             kappa, n, [axis], [m], [branch]
//   hca1                    base params of timelike-helix, [c]
//   hca2                    base params of timelike-helix, c (nonzero)
//   hca3                    base params of spacelike-type2-helix
//   hca4                    base params of spacelike-type2-helix, nu
//   hca5                    base params of spacelike-type2-helix, [c1], [c2]
//   shca1                   base params of slant-helix, [c]
//   shca2                   base params of slant-helix, xi, zeta
//   shca3                   base params of slant-helix, omega
// axis is 0 for the spacelike axis and 1 for the timelike one; the default
// is the axis of the worked parameter sets (spacelike for the helix bases,
// timelike for the slant base). Unknown families, missing or inconsistent
// parameters throw InputError; validity-window violations propagate as
// DomainError.
GeneratedFamily build_family(const std::string& family,
                             const std::map<std::string, double>& params,
                             double domain_begin, double domain_end,
                             double step);

// One line of usage help per supported family.
std::string family_usage();

} // namespace mink::io
