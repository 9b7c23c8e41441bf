#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "amalgam/ring.hpp"

namespace amalgam {

/// The amalgamated algebra D = A |><|^f J = {(a, f(a)+j) : a in A, j in J},
/// realized inside the product A x B, together with its canonical map bundle.
///
/// Construction enumerates the defining pairs directly (the decomposition
/// (a, f(a)+j) is unique since j = b - f(a)), and verifies at build time:
///   - the carrier is exactly the defining set, of size |A| * |J|
///   - pA o iota = id on A
///   - Ker(pA) = {0} x J elementwise
///   - Ker(pB) = f^{-1}(J) x {0}; image(pB) = f(A) + J
///   - gamma: D -> (f(A)+J)/J is surjective with kernel f^{-1}(J) x J
struct AmalgamRing {
    RingPtr ring;  // the carrier D
    RingPtr A;
    RingPtr B;
    RingHom f;   // A -> B
    IdealSet J;  // ideal of B

    RingPtr ambient;                                // A x B
    std::vector<Elem> carrier_ambient;              // sorted ambient indices
    std::vector<std::pair<Elem, Elem>> pair_of;     // D index -> (a, b)
    std::vector<Elem> j_of;                         // D index -> j = b - f(a)

    RingHom iota;   // A -> D
    RingHom pA;     // D -> A
    RingHom pB;     // D -> B
    RingHom gamma;  // D -> (f(A)+J)/J

    Subring fAJ;           // the subring f(A)+J of B
    IdealSet J_in_fAJ;     // J as an ideal of fAJ.ring
    RingPtr gamma_target;  // fAJ.ring / J

    /// D index of the pair (a, b), if (a, b) lies in the carrier.
    std::optional<Elem> index_of_pair(Elem a, Elem b) const;

    /// J0 = {0} x J and J1 = f^{-1}(J) x {0}, as ideals of D.
    IdealSet j_zero() const;
    IdealSet j_one() const;
};

AmalgamRing amalgamate(const RingPtr& A, const RingPtr& B, const RingHom& f,
                       const IdealSet& J, std::size_t cap = kDefaultCap);

/// The ideal I |><|^f H = {(i, f(i)+h)} for an ideal I of A and a subset H of
/// B with f(I)J <= H <= J and H an (f(A)+J)-submodule (all hypotheses checked).
struct JoinedIdeal {
    IdealSet I;                   // on A
    std::vector<Elem> H;          // subset of B
    IdealSet join;                // on D
};

JoinedIdeal join_ideal(const AmalgamRing& D, const IdealSet& I,
                       const std::vector<Elem>& H);

/// Returns the maximal ideal M |><|^f J when D is local (A local and
/// J <= Jac(B)), empty otherwise. Cross-checked against the maximal-ideal
/// count of the spectrum enumeration.
std::optional<IdealSet> is_local_amalgam(const AmalgamRing& D);

}  // namespace amalgam
