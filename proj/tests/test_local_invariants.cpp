#include <doctest.h>

#include "amalgam/local_invariants.hpp"
#include "amalgam/ring.hpp"

using namespace amalgam;

namespace {

AmalgamRing duplication(const RingPtr& a, const std::vector<Elem>& j_gens) {
    std::vector<Elem> id_map(a->size);
    for (Elem x = 0; x < a->size; ++x) id_map[x] = x;
    RingHom id = hom_from_map(a, a, id_map);
    return amalgamate(a, a, id, ideal_generated(a, j_gens));
}

// F2[x,y]/(x,y)^2 realized inside F2[x]/(x^2) x F2[y]/(y^2): the subring
// generated by (x, 0) and (0, y).
RingPtr two_variable_square_zero() {
    RingPtr dual = build_field_poly_quot(2, {0, 0, 1});
    ProductRing p = product(dual, dual);
    // x has index 2 in the dual numbers; (x,0) = 2*4+0 = 8, (0,y) = 0*4+2 = 2
    Subring s = subring_closure(p.ring, {8, 2});
    return s.ring;
}

}  // namespace

TEST_CASE("local_profile") {
    SUBCASE("a field has embdim 0 and socle dimension 1") {
        LocalProfile profile = local_profile(build_field_poly_quot(2, {1, 1, 1}));
        CHECK(profile.embdim == 0);
        CHECK(profile.socle_dim == 1);
        CHECK(profile.residue_size == 4);
    }
    SUBCASE("dual numbers: embdim 1, socle (x)") {
        LocalProfile profile = local_profile(build_field_poly_quot(2, {0, 0, 1}));
        CHECK(profile.embdim == 1);
        CHECK(profile.socle.members == std::vector<Elem>{0, 2});
        CHECK(profile.socle_dim == 1);
    }
    SUBCASE("two variables with square zero: embdim 2, socle dimension 2") {
        LocalProfile profile = local_profile(two_variable_square_zero());
        CHECK(profile.ring->size == 8);
        CHECK(profile.embdim == 2);
        CHECK(profile.socle_dim == 2);
    }
    SUBCASE("non-local input is rejected with the maximal list") {
        CHECK_THROWS_AS(local_profile(build_zmod(6)), AmalgamError);
        CHECK_THROWS_AS(local_profile(build_zmod(1)), AmalgamError);
    }
}

TEST_CASE("min_gens") {
    SUBCASE("zero ideal needs no generators") {
        RingPtr z8 = build_zmod(8);
        CHECK(min_gens(z8, zero_ideal(z8)) == 0);
    }
    SUBCASE("principal ideals in a local ring need one") {
        RingPtr z8 = build_zmod(8);
        CHECK(min_gens(z8, ideal_generated(z8, {2})) == 1);
        CHECK(min_gens(z8, ideal_generated(z8, {4})) == 1);
    }
    SUBCASE("the maximal ideal of F2[x,y]/(x,y)^2 needs two") {
        RingPtr r = two_variable_square_zero();
        LocalProfile profile = local_profile(r);
        CHECK(min_gens(r, profile.maximal) == 2);
        CHECK(brute_force_min_gens(r, profile.maximal) == 2);
    }
    SUBCASE("Nakayama count matches brute force on small local rings") {
        for (const RingPtr& r : {build_zmod(8), build_zmod(9),
                                 build_field_poly_quot(2, {0, 0, 0, 1}),
                                 two_variable_square_zero()})
            for (const IdealSet& I : all_ideals(r)) {
                CAPTURE(r->label); CAPTURE(I.members);
                CHECK(min_gens(r, I) == brute_force_min_gens(r, I));
            }
    }
    SUBCASE("product rings take the factor maximum") {
        ProductRing p = product(build_zmod(4), build_zmod(2));
        IdealSet j = ideal_generated(p.ring, {2});  // (1,0)-style generator
        CHECK(min_gens(p.ring, j) == brute_force_min_gens(p.ring, j));
    }
}

TEST_CASE("length") {
    SUBCASE("a field has length 1 over itself") {
        LocalProfile profile = local_profile(build_field_poly_quot(3, {0, 1}));
        CHECK(length(profile, unit_ideal(profile.ring)) == 1);
    }
    SUBCASE("Z/8 has length 3 over itself") {
        LocalProfile profile = local_profile(build_zmod(8));
        CHECK(length(profile, unit_ideal(profile.ring)) == 3);
    }
    SUBCASE("additivity along the chain (0) < (4) < (2) < (1) in Z/8") {
        RingPtr z8 = build_zmod(8);
        LocalProfile profile = local_profile(z8);
        unsigned l4 = length(profile, ideal_generated(z8, {4}));  // |{0,4}| -> 1
        unsigned l2 = length(profile, ideal_generated(z8, {2}));  // |{0,2,4,6}| -> 2
        // length(R) = length(R/(4)) + length((4)) and length((2)/(4)) fits
        CHECK(length_from_size(2, 8 / 2) + l4 == length(profile, unit_ideal(z8)));
        CHECK(l2 - l4 == length_from_size(2, 4 / 2));
    }
    SUBCASE("non-power sizes are rejected") {
        CHECK_THROWS_AS(length_from_size(2, 6), AmalgamError);
    }
}

TEST_CASE("gorenstein oracle") {
    SUBCASE("fields are Gorenstein") {
        CHECK(is_gorenstein_artinian(local_profile(build_field_poly_quot(2, {0, 1}))));
    }
    SUBCASE("F2[x]/(x^n) is Gorenstein for n up to 5") {
        for (unsigned n = 2; n <= 5; ++n) {
            std::vector<unsigned> modulus(n + 1, 0);
            modulus[n] = 1;
            CHECK(is_gorenstein_artinian(local_profile(build_field_poly_quot(2, modulus))));
        }
    }
    SUBCASE("two variables with square zero is not Gorenstein") {
        CHECK(!is_gorenstein_artinian(local_profile(two_variable_square_zero())));
    }
}

TEST_CASE("socle of the amalgam when J matches the canonical module") {
    // A = F2 is Gorenstein local and J = (x^{n-1}) in F2[x]/(x^n) is free of
    // rank one over A, so the amalgam must come out Gorenstein.
    RingPtr f2 = build_field_poly_quot(2, {0, 1});
    for (unsigned n = 2; n <= 5; ++n) {
        CAPTURE(n);
        std::vector<unsigned> modulus(n + 1, 0);
        modulus[n] = 1;
        RingPtr b = build_field_poly_quot(2, modulus);
        RingHom f = hom_from_map(f2, b, {0, 1});
        IdealSet j = ideal_generated(b, {static_cast<Elem>(1u << (n - 1))});
        CHECK(j.members.size() == 2);
        AmalgamRing d = amalgamate(f2, b, f, j);
        LocalProfile profile = local_profile(d.ring);
        CHECK(profile.socle_dim == 1);
        CHECK(is_gorenstein_artinian(profile));
    }
}

TEST_CASE("embdim bounds and equality") {
    SUBCASE("J = 0 keeps the embedding dimension") {
        AmalgamRing d = duplication(build_zmod(4), {});
        EmbdimReport report;
        CHECK(check_embdim_bounds(d, &report).ok);
        CHECK(report.embdim_A == 1);
        CHECK(report.embdim_D == 1);
        CHECK(report.nu_J == 0);
        CHECK(check_embdim_equality(d, &report).ok);
    }
    SUBCASE("duplication of Z/4 along (2): 1 <= 2 <= 1+1") {
        AmalgamRing d = duplication(build_zmod(4), {2});
        EmbdimReport report;
        CHECK(check_embdim_bounds(d, &report).ok);
        CHECK(report.embdim_A == 1);
        CHECK(report.embdim_D == 2);
        CHECK(report.nu_J == 1);
        CHECK(report.brute_checked);  // |D| = 8 <= 32
        CHECK(check_embdim_equality(d, &report).ok);
        CHECK(report.is_duplication);
    }
    SUBCASE("duplication of F2[x]/(x^3) along (x^2) adds one") {
        RingPtr a = build_field_poly_quot(2, {0, 0, 0, 1});
        AmalgamRing d = duplication(a, {4});  // x^2 has index 4
        EmbdimReport report;
        CHECK(check_embdim_equality(d, &report).ok);
        CHECK(report.embdim_A == 1);
        CHECK(report.embdim_D == 2);
        CHECK(report.nu_J == 1);
    }
    SUBCASE("the corestricted nu rescues the bound where the B-side count fails") {
        // A = F2 diagonally into B = F2[x]/(x^2) x F2[x]/(x^2), J = Jac(B):
        // J is principal over B yet embdim(D) = 2; over f(A)+J, nu(J) = 2.
        RingPtr f2 = build_field_poly_quot(2, {0, 1});
        RingPtr dual = build_field_poly_quot(2, {0, 0, 1});
        ProductRing b = product(dual, dual);
        RingHom diag = hom_from_map(f2, b.ring, {0, 5});  // 1 -> (1,1) = 1*4+1
        IdealSet j = ideal_generated(b.ring, {8, 2});     // (x,0) and (0,x)
        AmalgamRing d = amalgamate(f2, b.ring, diag, j);
        CHECK(min_gens(b.ring, j) == 1);  // principal over B
        EmbdimReport report;
        CHECK(check_embdim_bounds(d, &report).ok);
        CHECK(report.embdim_A == 0);
        CHECK(report.embdim_D == 2);
        CHECK(report.nu_J == 2);
        CHECK(check_embdim_equality(d, &report).ok);
    }
    SUBCASE("non-local amalgams are rejected") {
        RingPtr f2 = build_field_poly_quot(2, {0, 1});
        AmalgamRing d = duplication(f2, {1});  // J = A, not inside Jac
        CHECK_THROWS_AS(check_embdim_bounds(d, nullptr), AmalgamError);
    }
}
