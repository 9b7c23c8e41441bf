#include <doctest.h>

#include <algorithm>
#include <set>

#include "amalgam/ideal_calculus.hpp"
#include "amalgam/ring.hpp"

using namespace amalgam;

namespace {

AmalgamRing duplication(const RingPtr& a, const std::vector<Elem>& j_gens) {
    std::vector<Elem> id_map(a->size);
    for (Elem x = 0; x < a->size; ++x) id_map[x] = x;
    RingHom id = hom_from_map(a, a, id_map);
    return amalgamate(a, a, id, ideal_generated(a, j_gens));
}

AmalgamRing f2_into_dual_numbers(std::vector<Elem> j_gens) {
    RingPtr f2 = build_field_poly_quot(2, {0, 1});
    RingPtr b = build_field_poly_quot(2, {0, 0, 1});
    RingHom f = hom_from_map(f2, b, {0, 1});
    return amalgamate(f2, b, f, ideal_generated(b, std::move(j_gens)));
}

}  // namespace

TEST_CASE("extend_ideal") {
    AmalgamRing d = duplication(build_zmod(4), {2});
    SUBCASE("the zero ideal extends to zero") {
        IdealSet ext = extend_ideal(d, zero_ideal(d.A));
        CHECK(ext.members == std::vector<Elem>{0});
    }
    SUBCASE("duplication along (2): extension of (2) is iota((2)), two elements") {
        IdealSet ext = extend_ideal(d, ideal_generated(d.A, {2}));
        CHECK(ext.members.size() == 2);
        // (f(I)A)J = (2)(2) = (0), so the formula set is {(i, i)}
        for (Elem x : ext.members) {
            auto [a, b] = d.pair_of[x];
            CHECK(a == b);
        }
    }
    SUBCASE("unit ideal: f(I)B = B forces extension = I |><| J") {
        IdealSet ext = extend_ideal(d, unit_ideal(d.A));
        CHECK(ext.members.size() == d.ring->size);
        JoinedIdeal join = join_ideal(d, unit_ideal(d.A), d.J.members);
        CHECK(ext.members == join.join.members);
    }
    SUBCASE("formula check runs for every ideal of every small duplication") {
        for (unsigned n : {4u, 6u, 8u, 9u}) {
            AmalgamRing dn = duplication(build_zmod(n), {static_cast<Elem>(n / 2)});
            for (const IdealSet& I : all_ideals(dn.A)) {
                CAPTURE(n); CAPTURE(I.members);
                CHECK(check_extension_formula(dn, I).ok);
            }
        }
    }
}

TEST_CASE("radical") {
    RingPtr z8 = build_zmod(8);
    SUBCASE("radical of the unit ideal is the unit ideal") {
        CHECK(radical(z8, unit_ideal(z8)).members.size() == 8);
    }
    SUBCASE("radical of zero is the nilradical") {
        CHECK(radical(z8, zero_ideal(z8)).members == nilradical(z8).members);
    }
    SUBCASE("radical of (4) in Z/8 is (2)") {
        CHECK(radical(z8, ideal_generated(z8, {4})).members ==
              std::vector<Elem>{0, 2, 4, 6});
    }
    SUBCASE("idempotent, monotone, meets distribute") {
        RingPtr z36 = build_zmod(36);
        for (const IdealSet& I : all_ideals(z36)) {
            IdealSet r = radical(z36, I);
            CHECK(radical(z36, r).members == r.members);
            for (const IdealSet& I2 : all_ideals(z36)) {
                std::vector<Elem> meet;
                std::set_intersection(I.members.begin(), I.members.end(),
                                      I2.members.begin(), I2.members.end(),
                                      std::back_inserter(meet));
                IdealSet both = make_ideal(z36, meet);
                std::vector<Elem> expected;
                IdealSet r2 = radical(z36, I2);
                std::set_intersection(r.members.begin(), r.members.end(),
                                      r2.members.begin(), r2.members.end(),
                                      std::back_inserter(expected));
                CHECK(radical(z36, both).members == expected);
            }
        }
    }
}

TEST_CASE("radical corollary") {
    SUBCASE("duplication of Z/4 along (2): in hypothesis, nontrivial") {
        AmalgamRing d = duplication(build_zmod(4), {2});
        RadicalReport report;
        CHECK(check_radical_corollary(d, &report).ok);
        CHECK(report.in_hypothesis);
        CHECK(report.nontrivial);
        CHECK(report.checked_ideals >= 2);  // (0) and (2) both have radical M
    }
    SUBCASE("field base: only I = (0), radical of extension is J0") {
        AmalgamRing d = f2_into_dual_numbers({2});
        RadicalReport report;
        CHECK(check_radical_corollary(d, &report).ok);
        CHECK(report.in_hypothesis);
        IdealSet ext = extend_ideal(d, zero_ideal(d.A));
        CHECK(radical(d.ring, ext).members == kernel(d.pA).members);
    }
    SUBCASE("out of hypothesis: some prime off V(J) pulls back to M") {
        RingPtr z4 = build_zmod(4);
        RingPtr f2 = build_field_poly_quot(2, {0, 1});
        ProductRing b = product(z4, f2);
        // a -> (a, a mod 2); row-major index = a*2 + (a mod 2)
        RingHom f = hom_from_map(z4, b.ring, {0, 3, 4, 7});
        // J = 0 x F2 is not nilpotent, so Z/4 x 0 is a prime off V(J) and
        // it pulls back to M
        IdealSet j = ideal_generated(b.ring, {1});
        AmalgamRing d = amalgamate(z4, b.ring, f, j);
        RadicalReport report;
        CHECK(check_radical_corollary(d, &report).ok);
        CHECK(!report.in_hypothesis);
        CHECK(!report.out_of_hypothesis_reason.empty());
    }
}

TEST_CASE("hom criterion") {
    SUBCASE("obstructed side: A = F2, B = F2[x]/(x^2), J = (x)") {
        AmalgamRing d = f2_into_dual_numbers({2});
        HomCriterionReport report;
        CHECK(check_hom_description(d, &report).ok);
        CHECK(!report.annihilator_zero);  // x kills J
        CHECK(!report.lambda_surjective);
    }
    SUBCASE("surjective side: duplication of F2 along the unit ideal") {
        RingPtr f2 = build_field_poly_quot(2, {0, 1});
        AmalgamRing d = duplication(f2, {1});
        HomCriterionReport report;
        CHECK(check_hom_description(d, &report).ok);
        CHECK(report.annihilator_zero);
        CHECK(report.lambda_surjective);
    }
    SUBCASE("J = 0 in a nonzero ring leaves Lambda short of Ann(J0) = D") {
        AmalgamRing d = duplication(build_zmod(4), {});
        HomCriterionReport report;
        CHECK(check_hom_description(d, &report).ok);
        CHECK(!report.annihilator_zero);
        CHECK(!report.lambda_surjective);
    }
}
