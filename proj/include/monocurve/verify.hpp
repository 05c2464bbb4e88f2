#pragma once

#include "monocurve/generators.hpp"
#include "monocurve/report.hpp"
#include "monocurve/syzygy.hpp"

#include <cstdint>
#include <span>

namespace monocurve {

// --- ideal side -----------------------------------------------------------

/// G' is a Groebner basis: every S-polynomial reduces to 0, Buchberger adds no
/// new leading monomial, and LT(G') is exactly {X_i X_j} u {X_{b+i} X_p^a}.
VerificationReport verify_groebner_G_prime(const CurveParams& params);
/// Same checks against an arbitrary generating list (e.g. a parsed dump).
VerificationReport verify_groebner_set(const CurveParams& params, std::span<const Polynomial> gens);

/// Pairwise leading-monomial non-divisibility and non-redundancy of G'.
/// With `closure`, each member is also reduced against a Groebner basis of the
/// remaining members and must leave a non-zero remainder.
VerificationReport verify_minimality(const CurveParams& params, bool closure = true);
VerificationReport verify_minimality_set(const CurveParams& params, std::span<const Polynomial> gens,
                                         bool closure = true);

/// Enumerates standard monomials (exponents <= bound), classifies their shape
/// and checks that no two distinct ones have equal eta-images.
VerificationReport verify_standard_monomials(const CurveParams& params, int bound);

/// G and G' generate the same ideal and have equal size; Patil rewriting identities.
VerificationReport verify_ideal_equality(const CurveParams& params);

/// |G'|, |G|, |A|, |B|, |L| against the closed-form counts and an index enumeration.
VerificationReport verify_cardinalities(const CurveParams& params);

/// Generator weight identities, and min_multiple_of_mp / min_multiple_of_m0 by
/// search against their closed forms. The n*m_0 form (a+d, a, b) is checked
/// as stated; the detail records whether (a+d+1, a, b) matches instead.
VerificationReport verify_semigroup_relations(const CurveParams& params);

// --- syzygy side ----------------------------------------------------------

/// Kernel, leading terms, S-vectors, Schreyer completeness and minimality of
/// the closed-form syzygy set.
VerificationReport verify_groebner_G_hat(const CurveParams& params);
/// Same checks against a caller-supplied basis (e.g. with a member removed).
VerificationReport verify_groebner_G_hat_with(const CurveParams& params,
                                              std::span<const LabeledSyzygy> basis);

/// The excluded leading-form families (exponents <= bound) avoid <LT(G^)>.
VerificationReport verify_excluded_leading_forms(const CurveParams& params, int bound);

/// varpi(F) == LM(phi_map(F)) on `samples` seeded random single-term elements.
VerificationReport verify_varpi_leading_monomial(const CurveParams& params, int samples,
                                                 std::uint64_t seed);

// --- bundle ---------------------------------------------------------------

struct VerifyOptions {
  int bound = 6;
  int samples = 1000;
  std::uint64_t seed = 20090101;
  bool syzygies = true;
  bool minimality_closure = true;  // Buchberger closure of G' minus one member
};

/// Every check except the semigroup relations, for one parameter set.
VerificationReport verify_all(const CurveParams& params, const VerifyOptions& options);

}  // namespace monocurve
