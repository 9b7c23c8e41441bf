#pragma once

#include <cstdint>
#include <vector>

#include "amalgam/errors.hpp"

namespace amalgam {

/// A numerical semigroup: a cofinite additive submonoid of N, given by
/// coprime generators. Membership is a bitset up to the conductor (past
/// which everything belongs). Models the value semigroup of k[[t^S]] with
/// a symbolically infinite residue field: only value sets ever matter.
struct NumericalSemigroup {
    std::vector<unsigned> gens;  // minimal generators, sorted
    long frobenius = -1;         // largest gap, -1 for N itself
    std::vector<unsigned> gaps;
    unsigned multiplicity = 1;   // least positive element
    unsigned conductor = 0;      // frobenius + 1
    std::vector<bool> member_bits;

    bool contains(long n) const {
        if (n < 0) return false;
        if (static_cast<std::size_t>(n) >= member_bits.size())
            return n >= static_cast<long>(conductor);
        return member_bits[static_cast<std::size_t>(n)];
    }
    unsigned embdim() const { return static_cast<unsigned>(gens.size()); }
    unsigned genus() const { return static_cast<unsigned>(gaps.size()); }
    bool operator==(const NumericalSemigroup& other) const { return gens == other.gens; }
};

NumericalSemigroup semigroup(std::vector<unsigned> gens);

/// A relative ideal E = union of (g + S) over the generators: E + S <= E and
/// E contains every integer past tail_start. E need not sit inside S (the
/// canonical ideal usually does not); ring-level duplication requires E <= S
/// and checks it where needed.
struct SemigroupIdeal {
    NumericalSemigroup ambient;
    std::vector<unsigned> gens;
    unsigned tail_start = 0;  // all n >= tail_start are members
    std::vector<bool> member_bits;

    bool contains(long n) const {
        if (n < 0) return false;
        if (static_cast<std::size_t>(n) >= member_bits.size())
            return n >= static_cast<long>(tail_start);
        return member_bits[static_cast<std::size_t>(n)];
    }
    unsigned min_element() const;
    bool subset_of_ambient() const;
};

SemigroupIdeal semigroup_ideal(const NumericalSemigroup& S, std::vector<unsigned> gens);

/// Canonical ideal K(S) = {z in N : F - z not in S}. Contains S; equals S
/// exactly when S is symmetric.
SemigroupIdeal canonical_ideal(const NumericalSemigroup& S);

/// Minimal generators of E: members not reachable as e' + s with s > 0.
std::vector<unsigned> minimal_generators(const SemigroupIdeal& E);

/// nu(E) = number of minimal generators.
unsigned nu(const SemigroupIdeal& E);

/// |E \ (x + E)|, the length of E / (t^x E); equals x for every relative
/// ideal of a numerical semigroup (eventual cofiniteness).
unsigned colength_shift(const SemigroupIdeal& E, unsigned x);

struct DuplicationInvariants {
    unsigned multiplicity = 0;  // e of the duplication = m + |E \ (m+E)|
    unsigned embdim = 0;        // embdim(S) + nu(E)
    bool is_cm = true;          // nonzero ideal of a 1-dim CM domain
    bool is_gorenstein = false; // E is a translate of K(S)
};

/// Invariants of the duplication of k[[t^S]] along the monomial ideal with
/// value set E (E <= S required).
DuplicationInvariants duplication_invariants(const NumericalSemigroup& S,
                                             const SemigroupIdeal& E);

/// Truncation bound for the basis oracle below.
unsigned scaled_truncation_bound(const NumericalSemigroup& S, unsigned d,
                                 const NumericalSemigroup& T, const SemigroupIdeal& E);

/// Multiplicity of k[[t^S]] |><|^f J for the monomial map t^s -> t^{ds} into
/// k[[t^T]] (requires d*S <= T) and the monomial ideal J with value set E in
/// T. Returns m + |E \ (dm + E)| and asserts agreement with an independent
/// truncated-basis oracle: count the k-basis pairs of the carrier modulo the
/// extension of the minimal reduction (t^m).
unsigned scaled_amalgam_multiplicity(const NumericalSemigroup& S, unsigned d,
                                     const NumericalSemigroup& T,
                                     const SemigroupIdeal& E);

}  // namespace amalgam
