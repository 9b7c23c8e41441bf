#include <doctest.h>

#include <algorithm>
#include <set>

#include "amalgam/ring.hpp"
#include "amalgam/spectrum.hpp"

using namespace amalgam;

namespace {

// Brute-force oracle: enumerate every ideal and keep those whose quotient is
// an integral domain, decided directly (no idempotents, no localization).
std::vector<std::vector<Elem>> oracle_primes(const RingPtr& ring) {
    std::set<std::vector<Elem>> ideals;
    std::vector<std::vector<Elem>> queue{ideal_generated(ring, {}).members};
    ideals.insert(queue[0]);
    for (std::size_t head = 0; head < queue.size(); ++head)
        for (Elem x = 0; x < ring->size; ++x) {
            std::vector<Elem> gens = queue[head];
            gens.push_back(x);
            auto bigger = ideal_generated(ring, gens).members;
            if (ideals.insert(bigger).second) queue.push_back(bigger);
        }
    std::vector<std::vector<Elem>> result;
    for (const auto& members : ideals) {
        if (std::binary_search(members.begin(), members.end(), ring->one)) continue;
        bool domain = true;
        for (Elem a = 0; a < ring->size && domain; ++a) {
            if (std::binary_search(members.begin(), members.end(), a)) continue;
            for (Elem b = 0; b < ring->size && domain; ++b) {
                if (std::binary_search(members.begin(), members.end(), b)) continue;
                if (std::binary_search(members.begin(), members.end(), ring->mul(a, b)))
                    domain = false;
            }
        }
        if (domain) result.push_back(members);
    }
    std::sort(result.begin(), result.end());
    return result;
}

AmalgamRing duplication(const RingPtr& a, const std::vector<Elem>& j_gens) {
    std::vector<Elem> id_map(a->size);
    for (Elem x = 0; x < a->size; ++x) id_map[x] = x;
    RingHom id = hom_from_map(a, a, id_map);
    return amalgamate(a, a, id, ideal_generated(a, j_gens));
}

}  // namespace

TEST_CASE("primes on basic rings") {
    SUBCASE("a field has exactly one prime") {
        SpecReport spec = primes(build_field_poly_quot(2, {1, 1, 1}));
        REQUIRE(spec.primes.size() == 1);
        CHECK(spec.primes[0].ideal.members == std::vector<Elem>{0});
    }
    SUBCASE("Z/6 splits into (2) and (3)") {
        SpecReport spec = primes(build_zmod(6));
        REQUIRE(spec.primes.size() == 2);
        CHECK(spec.primes[0].ideal.members == std::vector<Elem>{0, 2, 4});
        CHECK(spec.primes[1].ideal.members == std::vector<Elem>{0, 3});
    }
    SUBCASE("Z/4 has the single prime {0,2}") {
        SpecReport spec = primes(build_zmod(4));
        REQUIRE(spec.primes.size() == 1);
        CHECK(spec.primes[0].ideal.members == std::vector<Elem>{0, 2});
    }
    SUBCASE("the zero ring has no spectrum") {
        CHECK_THROWS_AS(primes(build_zmod(1)), AmalgamError);
    }
}

TEST_CASE("primes agrees with the ideal-enumeration oracle") {
    std::vector<RingPtr> rings;
    for (unsigned n : {2u, 4u, 6u, 8u, 9u, 12u, 30u, 36u, 60u, 64u})
        rings.push_back(build_zmod(n));
    rings.push_back(build_field_poly_quot(2, {1, 1, 1}));
    rings.push_back(build_field_poly_quot(2, {0, 0, 0, 1}));
    rings.push_back(build_field_poly_quot(3, {0, 0, 1}));
    rings.push_back(product(build_zmod(4), build_zmod(9)).ring);
    rings.push_back(product(build_field_poly_quot(2, {0, 0, 1}),
                            build_field_poly_quot(2, {1, 1, 1})).ring);
    rings.push_back(
        product(build_zmod(4), product(build_zmod(2), build_zmod(3)).ring).ring);
    for (const RingPtr& ring : rings) {
        CAPTURE(ring->label);
        SpecReport spec = primes(ring);
        std::vector<std::vector<Elem>> got;
        for (const auto& prime : spec.primes) got.push_back(prime.ideal.members);
        CHECK(got == oracle_primes(ring));
        // Artinian: primes = maximals = minimals
        CHECK(spec.maximal_indices.size() == spec.primes.size());
        CHECK(spec.minimal_indices.size() == spec.primes.size());
    }
}

TEST_CASE("prime lifts") {
    SUBCASE("J = 0: lifting is a bijection Spec(A) -> Spec(D)") {
        RingPtr z6 = build_zmod(6);
        AmalgamRing d = duplication(z6, {});
        SpecReport spec_a = primes(z6);
        std::set<std::vector<Elem>> lifted;
        for (const auto& p : spec_a.primes)
            lifted.insert(lift_prime_A(d, p.ideal).ideal.members);
        SpecReport spec_d = primes(d.ring);
        CHECK(lifted.size() == spec_d.primes.size());
    }
    SUBCASE("duplication of Z/4: the lift of (2) has four elements") {
        AmalgamRing d = duplication(build_zmod(4), {2});
        PrimeIdeal lift = lift_prime_A(d, ideal_generated(d.A, {2}));
        CHECK(lift.ideal.members.size() == 4);
        CHECK(lift.tag == PrimeIdeal::Tag::lift_from_A);
    }
    SUBCASE("lift from B requires J off Q") {
        RingPtr f2 = build_field_poly_quot(2, {0, 1});
        ProductRing b = product(f2, f2);
        RingHom diag = hom_from_map(f2, b.ring, {0, 3});
        IdealSet j = ideal_generated(b.ring, {2});  // F2 x 0
        AmalgamRing d = amalgamate(f2, b.ring, diag, j);
        SpecReport spec_b = primes(b.ring);
        // Q = 0 x F2 = {0, 1} avoids J; the other contains it
        const IdealSet& q_good = spec_b.primes[0].ideal.members == std::vector<Elem>{0, 1}
                                     ? spec_b.primes[0].ideal
                                     : spec_b.primes[1].ideal;
        PrimeIdeal lift = lift_prime_B(d, q_good);
        CHECK(is_prime_ideal(*d.ring, lift.ideal.members));
        const IdealSet& q_bad = spec_b.primes[0].ideal.members == std::vector<Elem>{0, 1}
                                    ? spec_b.primes[1].ideal
                                    : spec_b.primes[0].ideal;
        CHECK_THROWS_AS(lift_prime_B(d, q_bad), AmalgamError);
    }
}

TEST_CASE("spectrum partition and minimal partition") {
    std::vector<AmalgamRing> instances;
    instances.push_back(duplication(build_zmod(4), {2}));
    instances.push_back(duplication(build_zmod(6), {}));
    instances.push_back(duplication(build_zmod(6), {3}));
    instances.push_back(duplication(build_zmod(6), {1}));
    {
        RingPtr f2 = build_field_poly_quot(2, {0, 1});
        ProductRing b = product(f2, f2);
        RingHom diag = hom_from_map(f2, b.ring, {0, 3});
        instances.push_back(amalgamate(f2, b.ring, diag, ideal_generated(b.ring, {2})));
    }
    for (const AmalgamRing& d : instances) {
        CAPTURE(d.ring->label);
        CHECK(check_spec_partition(d).ok);
        CHECK(check_min_partition(d).ok);
        CHECK(check_gamma_intersection(d).ok);
        CHECK(check_localizations(d).ok);
    }
}

TEST_CASE("localize") {
    SUBCASE("a local ring localizes to itself") {
        RingPtr z4 = build_zmod(4);
        Localization loc = localize(z4, primes(z4).primes[0].ideal);
        CHECK(loc.ring->size == 4);
    }
    SUBCASE("Z/6 at (2) is the two-element factor") {
        RingPtr z6 = build_zmod(6);
        IdealSet p = make_ideal(z6, {0, 2, 4});
        CHECK(localize(z6, p).ring->size == 2);
    }
    SUBCASE("Z/12 at (3) is the three-element factor") {
        RingPtr z12 = build_zmod(12);
        IdealSet p = make_ideal(z12, {0, 3, 6, 9});
        CHECK(localize(z12, p).ring->size == 3);
    }
    SUBCASE("factors reconstruct the ring") {
        for (unsigned n : {6u, 12u, 30u, 36u}) {
            RingPtr r = build_zmod(n);
            std::size_t total = 1;
            for (const auto& prime : primes(r).primes)
                total *= localize(r, prime.ideal).ring->size;
            CHECK(total == r->size);
        }
    }
}

TEST_CASE("localization case over V(f^-1(J)): duplication of Z/4") {
    AmalgamRing d = duplication(build_zmod(4), {2});
    CHECK(check_localizations(d).ok);
}
