#pragma once

#include "amalgam/amalgam_ring.hpp"
#include "amalgam/ring.hpp"

namespace amalgam {

/// Extension I*D of an ideal I of A to D, computed as the ideal closure of
/// iota(I). The identity with the explicit set {(i, f(i)+b) : b in (f(I)B)J}
/// is asserted internally; a mismatch raises invariant_violation, since it
/// would falsify the extension formula.
IdealSet extend_ideal(const AmalgamRing& D, const IdealSet& I);

/// Non-throwing variant used by the suites; compares the two routes and
/// reports a witness instead.
CheckResult check_extension_formula(const AmalgamRing& D, const IdealSet& I);

/// {x : x^k in I for some k <= |R|}; equals the preimage of the nilradical
/// of R/I (both routes computed, equality asserted).
IdealSet radical(const RingPtr& ring, const IdealSet& I);

struct RadicalReport {
    bool in_hypothesis = false;   // every prime of B off V(J) pulls back away from M
    bool nontrivial = false;      // J != 0 and some checked I != M
    std::size_t checked_ideals = 0;
    std::string out_of_hypothesis_reason;
};

/// For local A: every ideal I with radical M extends to an ideal of D with
/// radical M |><| J, under the hypothesis f^{-1}(Q) != M for all primes Q of
/// B off V(J). Also checks, whenever J <= Jac(B), that extensions of
/// M-primary ideals have the maximal ideal of D as radical (primariness).
CheckResult check_radical_corollary(const AmalgamRing& D, RadicalReport* report);

struct HomCriterionReport {
    bool lambda_surjective = false;  // image(Lambda) == Ann_D(J0)
    bool annihilator_zero = false;   // Ann_{f(A)+J}(J) == 0
};

/// Module-hom criterion: Hom_D(A, D) is realized concretely as Ann_D(J0);
/// the canonical embedding x -> (x, 0) of f^{-1}(J) always lands inside it,
/// and fills it exactly when Ann_{f(A)+J}(J) = 0. Both directions of the
/// equivalence are checked, plus the cardinality identity
/// |Ann_D(J0)| = |f^{-1}(J)| in the surjective case.
CheckResult check_hom_description(const AmalgamRing& D, HomCriterionReport* report);

}  // namespace amalgam
