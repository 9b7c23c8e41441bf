#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "amalgam/errors.hpp"

namespace amalgam {

/// Default cap on carrier sizes. Configurable per call; the CLI threads
/// --cap / AMALGAM_CAP through to the constructors.
inline constexpr std::size_t kDefaultCap = 256;

/// Hard implementation limit: element indices are 16-bit and the axiom
/// scans are cubic, so carriers beyond this are rejected outright.
inline constexpr std::size_t kHardCarrierLimit = 4096;

/// A finite commutative ring with identity, as explicit element tables.
///
/// Elements are indices 0..size-1 into the carrier. Every constructor fixes
/// a deterministic enumeration:
///   - build_zmod:            residues 0..n-1 ascending
///   - build_field_poly_quot: residue polynomials c0+c1*x+... encoded as the
///                            base-p integer sum(ci * p^i), ascending
///   - product:               row-major pairs, index = i1*|R2| + i2
///   - quotient:              cosets by ascending minimal representative
///   - subring_closure:       ascending ambient index
///
/// All eight ring axioms are verified exhaustively at construction. Instances
/// are immutable after construction and safe to share across threads.
struct FiniteRing {
    using Elem = std::uint16_t;

    std::size_t size = 0;
    std::vector<Elem> add_table;  // row-major size x size
    std::vector<Elem> mul_table;
    std::vector<Elem> neg_table;  // additive inverses, derived from add_table
    Elem zero = 0;
    Elem one = 0;
    std::string label;

    Elem add(Elem a, Elem b) const { return add_table[a * size + b]; }
    Elem mul(Elem a, Elem b) const { return mul_table[a * size + b]; }
    Elem neg(Elem a) const { return neg_table[a]; }
    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
    bool is_zero_ring() const { return size == 1; }

    /// a^k with a^0 = 1.
    Elem pow(Elem a, std::size_t k) const;
};

using RingPtr = std::shared_ptr<const FiniteRing>;
using Elem = FiniteRing::Elem;

/// A verified unital ring homomorphism, stored as a full element map.
struct RingHom {
    RingPtr source;
    RingPtr target;
    std::vector<Elem> map;

    Elem operator()(Elem a) const { return map[a]; }
};

/// An ideal of a carrier: an explicitly closed subset (sorted member list)
/// with an optional generator certificate.
struct IdealSet {
    RingPtr ring;
    std::vector<Elem> members;  // sorted, unique, contains zero
    std::optional<std::vector<Elem>> generators;

    bool contains(Elem x) const;
    std::size_t size() const { return members.size(); }
    bool is_zero() const { return members.size() == 1; }
    bool is_unit() const { return ring && members.size() == ring->size; }
};

bool same_members(const IdealSet& a, const IdealSet& b);

/// Exhaustive verification of all ring axioms; returns a witness on failure.
CheckResult verify_ring_axioms(const FiniteRing& ring);

/// Validating constructor from raw tables; the primitive behind everything.
RingPtr ring_from_tables(std::size_t size, std::vector<Elem> add_table,
                         std::vector<Elem> mul_table, Elem zero, Elem one,
                         std::string label);

/// Z/n with residues 0..n-1.
RingPtr build_zmod(unsigned n, std::size_t cap = kDefaultCap);

/// F_p[x]/(modulus) for a monic modulus of degree >= 1, coefficients c0..cd.
/// The modulus need not be irreducible, so nilpotents are allowed.
RingPtr build_field_poly_quot(unsigned p, const std::vector<unsigned>& modulus,
                              std::size_t cap = kDefaultCap);

struct ProductRing {
    RingPtr ring;
    RingHom proj1;
    RingHom proj2;
    Elem pair_index(Elem a, Elem b) const;
};

/// Componentwise product R1 x R2 with projection homs.
ProductRing product(const RingPtr& r1, const RingPtr& r2,
                    std::size_t cap = kDefaultCap);

struct QuotientRing {
    RingPtr ring;
    RingHom projection;  // canonical surjection
};

/// R/I with cosets represented by their minimal element index.
QuotientRing quotient(const RingPtr& ring, const IdealSet& ideal);

struct Subring {
    RingPtr ring;
    RingHom inclusion;
    std::vector<Elem> carrier;  // ambient indices, sorted (== inclusion.map)
};

/// Smallest subset containing seeds, 0 and 1, closed under +, -, *.
Subring subring_closure(const RingPtr& ring, const std::vector<Elem>& seeds);

/// Builds the ring structure induced on an explicitly closed subset of an
/// ambient ring. `zero`/`one` are ambient indices; for genuine subrings they
/// are the ambient 0 and 1, while idempotent factors pass e as the identity.
Subring ring_from_subset(const RingPtr& ring, std::vector<Elem> carrier,
                         Elem zero, Elem one, std::string label);

/// Validates a candidate element map as a unital hom. The scan order is
/// additivity over all pairs, multiplicativity over all pairs, then 1 -> 1;
/// the error names the first witness pair.
RingHom hom_from_map(const RingPtr& source, const RingPtr& target,
                     std::vector<Elem> map);

bool is_ideal(const FiniteRing& ring, const std::vector<Elem>& members);

/// Smallest ideal containing gens; generator certificate = gens.
IdealSet ideal_generated(const RingPtr& ring, std::vector<Elem> gens);

IdealSet zero_ideal(const RingPtr& ring);
IdealSet unit_ideal(const RingPtr& ring);

/// Validating IdealSet constructor (closure checks; generator closure when
/// a certificate is present).
IdealSet make_ideal(const RingPtr& ring, std::vector<Elem> members,
                    std::optional<std::vector<Elem>> generators = std::nullopt);

/// {x : x^k = 0 for some k <= |R|}.
IdealSet nilradical(const RingPtr& ring);

/// Intersection of all maximal ideals, computed from the spectrum.
IdealSet jacobson(const RingPtr& ring);

/// Elements with a multiplicative inverse.
std::vector<Elem> units(const RingPtr& ring);

/// Elementwise preimage of an ideal of the target.
IdealSet preimage(const RingHom& hom, const IdealSet& ideal);

/// Image of a hom as a sorted element list of the target.
std::vector<Elem> image(const RingHom& hom);

/// Kernel of a hom as an ideal of the source.
IdealSet kernel(const RingHom& hom);

/// Sum I + I' and product I*I' (the ideal generated by pairwise products).
IdealSet ideal_sum(const IdealSet& a, const IdealSet& b);
IdealSet ideal_product(const IdealSet& a, const IdealSet& b);

/// {x : x*s = 0 for all s in subset}.
IdealSet annihilator(const RingPtr& ring, const std::vector<Elem>& subset);

/// Every ideal of R, enumerated by closure BFS over single-element
/// extensions; sorted by (size, members).
std::vector<IdealSet> all_ideals(const RingPtr& ring);

/// A small generating subset of `members` under ideal closure (greedy,
/// deterministic; used for readable serialization).
std::vector<Elem> minimal_generating_subset(const RingPtr& ring,
                                            const std::vector<Elem>& members);

/// All unital ring homs source -> target. Homs are determined by the images
/// of a ring generating sequence of the source; candidates are enumerated
/// over target elements and validated exhaustively.
std::vector<RingHom> all_homs(const RingPtr& source, const RingPtr& target);

/// Harness self-test hook: rebuilds a ring with one table entry overwritten,
/// bypassing validation. Only the suite runner uses this, to verify that a
/// corrupted instance is reported falsified with a witness.
RingPtr corrupt_table_for_selftest(const RingPtr& ring, const std::string& table,
                                   Elem row, Elem col, Elem value);

std::string describe_elem(const FiniteRing& ring, Elem x);

}  // namespace amalgam
