#pragma once

#include "amalgam/amalgam_ring.hpp"
#include "amalgam/ring.hpp"

namespace amalgam {

/// Local data of a finite local ring: the maximal ideal, the residue field
/// size q, the embedding dimension log_q |M/M^2|, and the socle Ann(M) with
/// its dimension. For a field the socle is the whole ring and socle_dim = 1.
struct LocalProfile {
    RingPtr ring;
    IdealSet maximal;
    std::size_t residue_size = 0;
    unsigned embdim = 0;
    IdealSet socle;
    unsigned socle_dim = 0;
};

LocalProfile local_profile(const RingPtr& ring);

/// Minimal number of generators of an ideal. Local ring: log_q |J / Jac(B)J|
/// (Nakayama). Otherwise: decompose into idempotent factors and take the max
/// of the per-factor counts.
unsigned min_gens(const RingPtr& ring, const IdealSet& J);

/// Oracle for min_gens: smallest k such that some k-subset of the members
/// generates J. Exponential; intended for |ring| <= 32.
unsigned brute_force_min_gens(const RingPtr& ring, const IdealSet& J);

/// Length of a module over a finite local ring with residue size q: every
/// composition factor is the residue field, so length = log_q(size).
/// A size that is not a power of q is rejected as a non-module.
unsigned length_from_size(std::size_t residue_size, std::size_t module_size);

/// log_q |E| for an ideal E of the profiled local ring.
unsigned length(const LocalProfile& profile, const IdealSet& E);

/// Artinian Gorenstein test: one-dimensional socle.
bool is_gorenstein_artinian(const LocalProfile& profile);

struct EmbdimReport {
    unsigned embdim_A = 0;
    unsigned embdim_D = 0;
    unsigned nu_J = 0;          // minimal generators of J over f(A)+J
    bool is_duplication = false;
    bool brute_checked = false;  // embdim_D cross-validated by brute force
};

/// embdim(A) <= embdim(D) <= embdim(A) + nu(J) for local D. nu is computed
/// in the corestricted ring f(A)+J, which carries the same amalgamation;
/// over the full ring B the upper bound can genuinely fail. Also checks the
/// quotient-length identity length_D(D / I|><|J) = length_A(A / I) for every
/// ideal I of A, and cross-validates embdim against brute-force generator
/// search when |D| <= 32.
CheckResult check_embdim_bounds(const AmalgamRing& D, EmbdimReport* report);

/// Exact equality embdim(D) = embdim(A) + nu(J) under f(M)B <= Jac(B) and
/// J <= Jac(B) (the first containment is verified, and f(M)B = B is asserted
/// never to occur for finite carriers, where f(M) is nilpotent).
CheckResult check_embdim_equality(const AmalgamRing& D, EmbdimReport* report);

}  // namespace amalgam
