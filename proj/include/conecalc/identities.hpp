#pragma once

#include <string>
#include <vector>

#include "conecalc/cells.hpp"

namespace conecalc {

/// The combinatorial identities checked by pointwise exact evaluation.
enum class IdentityId {
    euler,
    bgs_angle,
    bgs_dual,
    langlands_1,
    langlands_2,
    gamma_decomposition,
    gamma_dual_decomposition,
    gamma_duality,
    gamma_fan_refinement,
    htau_tau_sigma,
    sigma_support,
    sigma_norm_bound,
    relative_tau_hat_expansion,
};

const char* identity_name(IdentityId id);
IdentityId identity_from_name(const std::string& name);
std::vector<IdentityId> cone_identities();  ///< the ones taking a single cone

struct VerifyOptions {
    size_t samples = 1000;
    uint64_t seed = 2024;
    long max_coord = 20;
    size_t max_failures = 8;  ///< witnesses recorded before truncating
};

struct IdentityReport {
    std::string id;
    size_t cones_checked = 0;
    size_t samples_evaluated = 0;
    std::vector<std::string> failures;  ///< witness points with LHS/RHS values
    double elapsed_ms = 0;
    uint64_t seed = 0;
    std::string note;  ///< e.g. the certified constant of sigma_norm_bound

    bool pass() const { return failures.empty(); }
};

/// Runs one identity on one cone at exact rational sample points (random
/// points plus all face/dual representative points).
IdentityReport verify_cone_identity(IdentityId id, const Cone& c, const VerifyOptions& opts);

/// gamma_fan_refinement: C decomposed into pieces forming a fan. The fan
/// property (pairwise intersections are common faces, pieces lie in C) is
/// verified exactly first; a violation is an input error, not a failure.
IdentityReport verify_fan_refinement(const Cone& c, const std::vector<Cone>& pieces,
                                     const VerifyOptions& opts);
void validate_fan(const Cone& c, const std::vector<Cone>& pieces);  ///< throws on violation

/// Aggregates one identity over a whole corpus.
IdentityReport verify_corpus(IdentityId id, const std::vector<Cone>& corpus,
                             const VerifyOptions& opts);

}  // namespace conecalc
