#pragma once
/// @file identities.hpp
/// @brief Registry of the encoded reduction identities "2.1".."2.14" and the
///        specializations "4.1".."4.3"; the verification driver; and the
///        known-discrepancy ledger with verbatim/corrected variants.

#include <optional>
#include <string>
#include <vector>

#include "qreduce/bailey.hpp"
#include "qreduce/series.hpp"

namespace qreduce {

/// Which transcription of an identity to evaluate. The verbatim variant
/// reproduces the printed source exactly; the corrected variant differs only
/// where the discrepancy ledger documents a suspected misprint.
enum class Variant { Verbatim, Corrected };

inline const char* variant_name(Variant v) {
    return v == Variant::Verbatim ? "verbatim" : "corrected";
}

/// Static description of one registry entry.
struct IdentityInfo {
    std::string id;
    std::vector<std::string> symbols;         // required parameter symbols
    std::vector<std::string> verbatim_extra;  // extra symbols only the verbatim text uses
    int recipe = 0;                           // linked derivation recipe (1..14), 0 = none
    bool has_p = true;                        // false: p plays no role (or is fixed)
    std::optional<long> fixed_p;              // specializations pin p
    std::string note;            // discrepancy ledger entry (empty when none)
    std::string sensitivity;     // parameter used by the perturbation check
    std::string classical_tag;   // named classical limit for probing (may be empty)
};

/// A built identity: both sides as series products at concrete meta integers.
struct BuiltIdentity {
    IdentityInfo info;
    Variant variant = Variant::Corrected;
    long p = 0, D = 0, G = 0;
    SeriesProduct lhs, rhs;
};

/// One concrete evaluation point.
struct ParamAssignment {
    Rat b;
    Assignment values;
    long p = 0;
    std::vector<Rat> d, g;  // lengths set D and G
};

/// Outcome of one verification run, with everything a report needs.
struct VerificationReport {
    std::string id;
    std::string variant;
    long p = 0, D = 0, G = 0;
    Assignment params;
    Rat b;
    long order = 0;
    std::string status;  // "PASS", "MISMATCH", "INVALID"
    long mismatch_degree = -1;
    Rat lhs_coeff, rhs_coeff;
    bool has_coeffs = false;
    std::string reason;  // diagnostic for INVALID
    double elapsed_ms = 0.0;
};

/// All registered ids in presentation order.
const std::vector<std::string>& identity_ids();

/// Static info for an id; throws std::invalid_argument("unknown identity id").
const IdentityInfo& identity_info(const std::string& id);

/// Corrected where a ledger entry exists, verbatim otherwise.
Variant default_variant(const std::string& id);

/// true iff every index form of the identity stays nonnegative at this p.
bool valid_p(const std::string& id, long p);

/// Mechanically computed validity window intersected with {0, 1, 2}.
/// Identities that do not involve p report {0}.
std::vector<long> validity_window(const std::string& id);

/// Encodes both sides at concrete meta integers (p, D, G).
/// Throws std::invalid_argument("p out of range for identity") and
/// "unknown identity id".
BuiltIdentity build(const std::string& id, long p, long D, long G,
                    Variant variant = Variant::Corrected);

/// Binds both sides, extracts coefficients 0..N, compares exactly.
/// Binding or parameter problems come back as an INVALID report.
VerificationReport verify(const std::string& id, const ParamAssignment& a, long N,
                          Variant variant);

/// Deterministic seeded random pole-free assignments for one identity,
/// covering every p in the validity window each trial.
std::vector<VerificationReport> sweep(const std::string& id, long N, long trials,
                                      unsigned long long seed);

/// Expands sum alpha_n gamma_n and sum beta_n delta_n from the linked recipe
/// in powers of x and compares them against the registry LHS/RHS coefficient
/// streams up to degree N. Throws when the identity has no linked recipe.
ComparisonOutcome cross_check_with_bailey(const std::string& id,
                                          const ParamAssignment& a, long N);

/// Guards against a vacuously passing comparator: evaluates the LHS at the
/// given assignment but the RHS with the identity's designated sensitivity
/// parameter multiplied by q, and compares. A healthy verifier reports
/// MISMATCH at low degree.
VerificationReport sensitivity_check(const std::string& id, const ParamAssignment& a,
                                     long N);

/// A documented sample assignment for an identity (pole-free, in-window).
ParamAssignment sample_assignment(const std::string& id);

}  // namespace qreduce
