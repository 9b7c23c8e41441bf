#pragma once

#include <cstddef>
#include <vector>

#include "amalgam/amalgam_ring.hpp"
#include "amalgam/ring.hpp"

namespace amalgam {

struct PrimeIdeal {
    enum class Tag { untagged, lift_from_A, lift_from_B };
    IdealSet ideal;
    Tag tag = Tag::untagged;
    int source_index = -1;  // index into the source spectrum when lifted
};

/// Spectrum of a finite ring. Finiteness makes the ring Artinian, so primes,
/// maximals and minimals coincide; the report asserts this instead of
/// assuming it (maximality via field quotients, minimality via inclusion).
struct SpecReport {
    std::vector<PrimeIdeal> primes;          // sorted by member lists
    std::vector<std::size_t> maximal_indices;
    std::vector<std::size_t> minimal_indices;
};

/// Prime enumeration via the nilradical quotient and a complete splitting
/// into primitive idempotents of the reduced ring; each prime is the
/// preimage of the annihilator of one primitive idempotent.
SpecReport primes(const RingPtr& ring);

bool is_prime_ideal(const FiniteRing& ring, const std::vector<Elem>& members);

/// P'^f = P |><|^f J, the lift of a prime of A; always prime, contains J0.
PrimeIdeal lift_prime_A(const AmalgamRing& D, const IdealSet& P);

/// Qbar^f = {(a, f(a)+j) : f(a)+j in Q}, the lift of a prime Q of B with
/// J not contained in Q (hypothesis checked); prime, avoids J0.
PrimeIdeal lift_prime_B(const AmalgamRing& D, const IdealSet& Q);

/// Spec(D) is exactly the two lifted families, disjointly, and maximality
/// transfers both ways; also checks the V(J0) / V(J1) cover and the locality
/// criterion against is_local_amalgam.
CheckResult check_spec_partition(const AmalgamRing& D);

/// Minimal-prime partition: Min(D)\V(J0) matches Min(B)\V(J), and
/// Min(D) meet V(J0) matches Min(A) minus the excluded locus
/// X = union of V(f^{-1}(Q+J)) over Q in Spec(B)\V(J).
CheckResult check_min_partition(const AmalgamRing& D);

struct Localization {
    RingPtr ring;
    RingHom projection;  // R -> R_P, multiplication by the factor idempotent
};

/// R_P for a prime P of a finite ring: the factor of the idempotent
/// decomposition whose idempotent lies outside P.
Localization localize(const RingPtr& ring, const IdealSet& P);

/// The three localization isomorphisms of D at its primes, each verified by
/// building the canonical comparison map (never by isomorphism search) and
/// checking it is a well-defined bijective hom:
///   (1) D at Qbar^f  ~ B_Q                      for Q in Spec(B)\V(J)
///   (2) D at P'^f    ~ A_P                      for P not containing f^{-1}(J)
///   (3) D at P'^f    ~ A_P |><|^{f_P} J_S       for P containing f^{-1}(J),
///       with S = f(A\P)+J inverted in B.
CheckResult check_localizations(const AmalgamRing& D);

/// gamma induces a bijection Spec((f(A)+J)/J) <-> {primes containing both
/// J0 and J1}; when f is surjective the intersection also matches V(J) in B.
CheckResult check_gamma_intersection(const AmalgamRing& D);

}  // namespace amalgam
