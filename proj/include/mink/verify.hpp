#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "mink/associated.hpp"
#include "mink/curve.hpp"
#include "mink/lorentz.hpp"
#include "mink/numeric.hpp"

namespace mink::verify {

// Outcome of a property check. Inconclusive means the check's own
// preconditions failed (singular invariant, unusable estimates), not that
// the property failed.
enum class Verdict { Pass, Fail, Inconclusive };

std::string to_string(Verdict verdict);

// Sample location and value at an extremal residual contribution.
struct Witness {
    double s = 0.0;
    double value = 0.0;
};

struct VerificationReport {
    std::string property;
    Verdict verdict = Verdict::Inconclusive;
    double residual = 0.0;
    double tolerance = 0.0;
    std::vector<Witness> witnesses;
    std::string note;
};

// One-line human-readable summary.
std::string to_text(const VerificationReport& report);

// Structured form; the CLI emits arrays of these objects.
nlohmann::json to_json(const VerificationReport& report);

struct CheckOptions {
    // Relative tolerance of the constant-function criterion.
    double rel_tol = num::kConstancyTol;
    // Samples dropped at each end before judging constancy; measured
    // curvature/torsion carry a finite-difference boundary layer.
    std::size_t boundary_trim = 8;
};

// Constancy of tau/kappa, the general-helix criterion for every causal type
// handled here. Inconclusive when curvature is too small to trust the ratio.
VerificationReport is_general_helix(const std::vector<double>& s,
                                    const std::vector<double>& kappa,
                                    const std::vector<double>& tau,
                                    const CheckOptions& opt = {});

// Constancy of the slant-helix invariant
//     sigma = kappa^2 (tau/kappa)' / |eps_t tau^2 + eps_b kappa^2|^(3/2).
// The denominator is the squared norm of the frame rotation vector, which
// specializes to kappa^2 + tau^2, tau^2 - kappa^2 or kappa^2 - tau^2
// depending on the signature. Inconclusive where it vanishes.
VerificationReport is_slant_helix(const std::vector<double>& s,
                                  const std::vector<double>& kappa,
                                  const std::vector<double>& tau,
                                  const CausalSignature& sig,
                                  const CheckOptions& opt = {});

// Constancy of the inner product between the unit frame rotation vector and
// a fixed axis. Without a candidate axis the axis is estimated as the
// renormalized mean of the unit rotation vectors; Inconclusive when the
// rotation vector or the mean is near-lightlike.
VerificationReport is_darboux_helix(const std::vector<double>& s,
                                    const std::vector<FrenetFrame>& frames,
                                    const std::vector<double>& kappa,
                                    const std::vector<double>& tau,
                                    const std::optional<LVec3>& axis = {},
                                    const CheckOptions& opt = {});

// Worst deviation over the field from the nine frame invariants: the six
// orthonormality inner products and the three cross-product relations
// B = eps_t eps_n T x N, N = eps_b eps_t B x T, T = eps_n eps_b N x B.
// s, when given, labels the witness; otherwise the sample index is used.
VerificationReport check_frame_field(const std::vector<FrenetFrame>& frames,
                                     const CausalSignature& sig,
                                     const std::vector<double>& s = {},
                                     double tolerance = 1e-6);

// For a pair whose associated curve has normal-parallel velocity: checks
// that (i) the associated curve is a general helix, (ii) the base curve is
// a slant helix, and (iii) the base curve is a Darboux helix, and passes
// exactly when the three verdicts agree. Inconclusive when the
// normal-parallel contract fails.
VerificationReport check_equivalence_theorem(const assoc::AssociatedPair& pair,
                                             const CheckOptions& opt = {});

// Family-specific distance claim: constancy for Hca1/Hca2, the
// characterizing equivalences for Hca3/Hca5/Shca1, and the explicit distance
// profiles |nu - s|-type for Hca4/Shca2/Shca3. For a Generic pair the
// observed constancy is reported as such.
VerificationReport distance_constancy(const assoc::AssociatedPair& pair,
                                      const CheckOptions& opt = {});

} // namespace mink::verify
