#include "amalgam/spectrum.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace amalgam {

namespace {

/// Complete list of primitive idempotents, found by repeatedly splitting an
/// orthogonal decomposition of 1 on the smallest nontrivial idempotent below
/// a part. Deterministic: parts scanned in order, candidates ascending.
std::vector<Elem> primitive_idempotents(const FiniteRing& ring) {
    std::vector<Elem> parts{ring.one};
    bool split = true;
    while (split) {
        split = false;
        for (std::size_t k = 0; k < parts.size() && !split; ++k) {
            Elem u = parts[k];
            for (Elem x = 0; x < ring.size; ++x) {
                Elem e = ring.mul(x, u);
                if (e == ring.zero || e == u) continue;
                if (ring.mul(e, e) != e) continue;
                parts[k] = e;
                parts.push_back(ring.sub(u, e));
                split = true;
                break;
            }
        }
    }
    std::sort(parts.begin(), parts.end());
    return parts;
}

bool ideal_includes(const IdealSet& big, const IdealSet& small) {
    return std::includes(big.members.begin(), big.members.end(),
                         small.members.begin(), small.members.end());
}

std::string members_string(const std::vector<Elem>& members) {
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < members.size(); ++i)
        os << (i ? "," : "") << members[i];
    os << "}";
    return os.str();
}

}  // namespace

bool is_prime_ideal(const FiniteRing& ring, const std::vector<Elem>& members) {
    if (!is_ideal(ring, members)) return false;
    if (std::binary_search(members.begin(), members.end(), ring.one)) return false;
    for (Elem a = 0; a < ring.size; ++a) {
        if (std::binary_search(members.begin(), members.end(), a)) continue;
        for (Elem b = 0; b < ring.size; ++b) {
            if (std::binary_search(members.begin(), members.end(), b)) continue;
            if (std::binary_search(members.begin(), members.end(), ring.mul(a, b)))
                return false;
        }
    }
    return true;
}

SpecReport primes(const RingPtr& ring) {
    if (ring->is_zero_ring())
        fail(ErrorKind::empty_spectrum, "primes: the zero ring has empty spectrum");

    IdealSet nil = nilradical(ring);
    QuotientRing reduced = quotient(ring, nil);
    std::vector<Elem> idempotents = primitive_idempotents(*reduced.ring);

    std::vector<std::vector<Elem>> member_lists;
    for (Elem e : idempotents) {
        std::vector<Elem> members;
        for (Elem x = 0; x < ring->size; ++x)
            if (reduced.ring->mul(reduced.projection(x), e) == reduced.ring->zero)
                members.push_back(x);
        member_lists.push_back(std::move(members));
    }
    std::sort(member_lists.begin(), member_lists.end());
    member_lists.erase(std::unique(member_lists.begin(), member_lists.end()),
                       member_lists.end());

    SpecReport report;
    for (auto& members : member_lists) {
        if (!is_prime_ideal(*ring, members))
            fail(ErrorKind::invariant_violation,
                 "primes: enumerated ideal is not prime in " + ring->label);
        PrimeIdeal prime;
        prime.ideal = make_ideal(ring, std::move(members));
        report.primes.push_back(std::move(prime));
    }

    // Artinian sanity, asserted rather than assumed: every prime is maximal
    // (quotient is a field) and minimal (no strictly smaller prime).
    for (std::size_t i = 0; i < report.primes.size(); ++i) {
        QuotientRing q = quotient(ring, report.primes[i].ideal);
        for (Elem x = 0; x < q.ring->size; ++x) {
            if (x == q.ring->zero) continue;
            bool invertible = false;
            for (Elem y = 0; y < q.ring->size; ++y)
                if (q.ring->mul(x, y) == q.ring->one) { invertible = true; break; }
            if (!invertible)
                fail(ErrorKind::invariant_violation,
                     "primes: non-maximal prime in a finite ring: " + ring->label);
        }
        report.maximal_indices.push_back(i);
        bool minimal = true;
        for (std::size_t k = 0; k < report.primes.size(); ++k) {
            if (k == i) continue;
            if (ideal_includes(report.primes[i].ideal, report.primes[k].ideal))
                minimal = false;
        }
        if (!minimal)
            fail(ErrorKind::invariant_violation,
                 "primes: non-minimal prime in a finite ring: " + ring->label);
        report.minimal_indices.push_back(i);
    }
    return report;
}

PrimeIdeal lift_prime_A(const AmalgamRing& D, const IdealSet& P) {
    if (P.ring != D.A)
        fail(ErrorKind::invalid_parameter, "lift_prime_A: P not an ideal of A");
    if (!is_prime_ideal(*D.A, P.members))
        fail(ErrorKind::invariant_violation, "lift_prime_A: P is not prime");
    std::vector<Elem> members;
    for (Elem p : P.members)
        for (Elem j : D.J.members) {
            auto idx = D.index_of_pair(p, D.B->add(D.f(p), j));
            if (!idx)
                fail(ErrorKind::invariant_violation, "lift_prime_A: pair missing");
            members.push_back(*idx);
        }
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    if (!is_prime_ideal(*D.ring, members))
        fail(ErrorKind::invariant_violation,
             "lift_prime_A: lifted ideal is not prime in " + D.ring->label);
    IdealSet j0 = D.j_zero();
    for (Elem x : j0.members)
        if (!std::binary_search(members.begin(), members.end(), x))
            fail(ErrorKind::invariant_violation, "lift_prime_A: lift does not contain J0");
    PrimeIdeal result;
    result.ideal = make_ideal(D.ring, std::move(members));
    result.tag = PrimeIdeal::Tag::lift_from_A;
    return result;
}

PrimeIdeal lift_prime_B(const AmalgamRing& D, const IdealSet& Q) {
    if (Q.ring != D.B)
        fail(ErrorKind::invalid_parameter, "lift_prime_B: Q not an ideal of B");
    if (!is_prime_ideal(*D.B, Q.members))
        fail(ErrorKind::invariant_violation, "lift_prime_B: Q is not prime");
    bool j_inside = true;
    for (Elem j : D.J.members)
        if (!Q.contains(j)) { j_inside = false; break; }
    if (j_inside)
        fail(ErrorKind::hypothesis_violation,
             "lift_prime_B: J is contained in Q; the lift is only defined off V(J)");
    std::vector<Elem> members;
    for (Elem d = 0; d < D.ring->size; ++d)
        if (Q.contains(D.pair_of[d].second)) members.push_back(d);
    if (!is_prime_ideal(*D.ring, members))
        fail(ErrorKind::invariant_violation,
             "lift_prime_B: lifted ideal is not prime in " + D.ring->label);
    IdealSet j0 = D.j_zero();
    bool contains_j0 = std::includes(members.begin(), members.end(),
                                     j0.members.begin(), j0.members.end());
    if (contains_j0)
        fail(ErrorKind::invariant_violation, "lift_prime_B: lift contains J0");
    PrimeIdeal result;
    result.ideal = make_ideal(D.ring, std::move(members));
    result.tag = PrimeIdeal::Tag::lift_from_B;
    return result;
}

CheckResult check_spec_partition(const AmalgamRing& D) {
    SpecReport spec_A = primes(D.A);
    SpecReport spec_B = primes(D.B);
    SpecReport spec_D = primes(D.ring);
    IdealSet j0 = D.j_zero();
    IdealSet j1 = D.j_one();

    std::map<std::vector<Elem>, std::string> expected;  // members -> origin
    std::vector<std::vector<Elem>> family_a, family_b;
    for (std::size_t i = 0; i < spec_A.primes.size(); ++i) {
        PrimeIdeal lift = lift_prime_A(D, spec_A.primes[i].ideal);
        family_a.push_back(lift.ideal.members);
        auto [it, inserted] =
            expected.emplace(lift.ideal.members, "A#" + std::to_string(i));
        if (!inserted)
            return CheckResult::fail("lift from A not injective at prime #" +
                                     std::to_string(i));
        (void)it;
    }
    for (std::size_t i = 0; i < spec_B.primes.size(); ++i) {
        const IdealSet& Q = spec_B.primes[i].ideal;
        bool contains_J = std::includes(Q.members.begin(), Q.members.end(),
                                        D.J.members.begin(), D.J.members.end());
        if (contains_J) continue;
        PrimeIdeal lift = lift_prime_B(D, Q);
        family_b.push_back(lift.ideal.members);
        auto [it, inserted] =
            expected.emplace(lift.ideal.members, "B#" + std::to_string(i));
        if (!inserted)
            return CheckResult::fail("families collide or lift from B not injective "
                                     "at B-prime #" + std::to_string(i) +
                                     " (other: " + it->second + ")");
    }

    if (expected.size() != spec_D.primes.size())
        return CheckResult::fail("lifted family count " + std::to_string(expected.size()) +
                                 " != |Spec(D)| = " + std::to_string(spec_D.primes.size()));
    for (const auto& prime : spec_D.primes)
        if (!expected.count(prime.ideal.members))
            return CheckResult::fail("prime of D not of lifted type: " +
                                     members_string(prime.ideal.members));

    // The A-family is exactly V(J0), the B-family its complement; the whole
    // spectrum is covered by V(J0) and V(J1).
    for (const auto& members : family_a)
        if (!std::includes(members.begin(), members.end(), j0.members.begin(),
                           j0.members.end()))
            return CheckResult::fail("A-lift outside V(J0)");
    for (const auto& members : family_b)
        if (std::includes(members.begin(), members.end(), j0.members.begin(),
                          j0.members.end()))
            return CheckResult::fail("B-lift inside V(J0)");
    for (const auto& prime : spec_D.primes) {
        bool in_v0 = std::includes(prime.ideal.members.begin(), prime.ideal.members.end(),
                                   j0.members.begin(), j0.members.end());
        bool in_v1 = std::includes(prime.ideal.members.begin(), prime.ideal.members.end(),
                                   j1.members.begin(), j1.members.end());
        if (!in_v0 && !in_v1)
            return CheckResult::fail("prime avoids both V(J0) and V(J1): " +
                                     members_string(prime.ideal.members));
    }

    // Maximality transfer in both directions for both lifts. In an Artinian
    // carrier both sides are always maximal; the transfer is still computed
    // from the reports rather than assumed.
    auto is_maximal_in = [](const SpecReport& spec, const std::vector<Elem>& members) {
        for (std::size_t k : spec.maximal_indices)
            if (spec.primes[k].ideal.members == members) return true;
        return false;
    };
    for (std::size_t i = 0; i < spec_A.primes.size(); ++i)
        if (is_maximal_in(spec_A, spec_A.primes[i].ideal.members) !=
            is_maximal_in(spec_D, family_a[i]))
            return CheckResult::fail("maximality transfer fails for A-prime #" +
                                     std::to_string(i));
    {
        std::size_t bi = 0;
        for (std::size_t i = 0; i < spec_B.primes.size(); ++i) {
            const IdealSet& Q = spec_B.primes[i].ideal;
            if (std::includes(Q.members.begin(), Q.members.end(), D.J.members.begin(),
                              D.J.members.end()))
                continue;
            if (is_maximal_in(spec_B, Q.members) != is_maximal_in(spec_D, family_b[bi]))
                return CheckResult::fail("maximality transfer fails for B-prime #" +
                                         std::to_string(i));
            ++bi;
        }
    }

    // Locality criterion: D local iff A local and J <= Jac(B); agreement with
    // the maximal-ideal count is re-verified inside is_local_amalgam.
    std::optional<IdealSet> local = is_local_amalgam(D);
    if (local.has_value() != (spec_D.maximal_indices.size() == 1))
        return CheckResult::fail("locality criterion disagrees with maximal count");
    if (local) {
        const IdealSet& M = spec_A.primes[spec_A.maximal_indices[0]].ideal;
        PrimeIdeal lifted_max = lift_prime_A(D, M);
        if (lifted_max.ideal.members != local->members)
            return CheckResult::fail("maximal ideal of local D is not M |><| J");
    }
    return CheckResult::pass();
}

CheckResult check_min_partition(const AmalgamRing& D) {
    SpecReport spec_A = primes(D.A);
    SpecReport spec_B = primes(D.B);
    SpecReport spec_D = primes(D.ring);
    IdealSet j0 = D.j_zero();

    std::set<std::vector<Elem>> min_d_in_v0, min_d_off_v0;
    for (std::size_t k : spec_D.minimal_indices) {
        const auto& members = spec_D.primes[k].ideal.members;
        bool in_v0 = std::includes(members.begin(), members.end(), j0.members.begin(),
                                   j0.members.end());
        (in_v0 ? min_d_in_v0 : min_d_off_v0).insert(members);
    }

    std::set<std::vector<Elem>> rhs_b;
    std::vector<const IdealSet*> b_primes_off_vj;
    for (std::size_t k : spec_B.minimal_indices) {
        const IdealSet& Q = spec_B.primes[k].ideal;
        if (std::includes(Q.members.begin(), Q.members.end(), D.J.members.begin(),
                          D.J.members.end()))
            continue;
        rhs_b.insert(lift_prime_B(D, Q).ideal.members);
    }
    if (rhs_b != min_d_off_v0)
        return CheckResult::fail("Min(D)\\V(J0) does not match Min(B)\\V(J)");

    // Excluded locus: X = union over Q in Spec(B)\V(J) of V(f^{-1}(Q+J)).
    std::vector<IdealSet> excluded_below;
    for (const auto& prime : spec_B.primes) {
        const IdealSet& Q = prime.ideal;
        if (std::includes(Q.members.begin(), Q.members.end(), D.J.members.begin(),
                          D.J.members.end()))
            continue;
        excluded_below.push_back(preimage(D.f, ideal_sum(Q, D.J)));
    }
    std::set<std::vector<Elem>> rhs_a;
    for (std::size_t k : spec_A.minimal_indices) {
        const IdealSet& P = spec_A.primes[k].ideal;
        bool in_x = false;
        for (const IdealSet& lower : excluded_below)
            if (std::includes(P.members.begin(), P.members.end(), lower.members.begin(),
                              lower.members.end())) {
                in_x = true;
                break;
            }
        if (!in_x) rhs_a.insert(lift_prime_A(D, P).ideal.members);
    }
    if (rhs_a != min_d_in_v0)
        return CheckResult::fail("Min(D) inside V(J0) does not match Min(A)\\X");
    return CheckResult::pass();
}

Localization localize(const RingPtr& ring, const IdealSet& P) {
    if (P.ring != ring)
        fail(ErrorKind::invalid_parameter, "localize: prime not on this ring");
    if (!is_prime_ideal(*ring, P.members))
        fail(ErrorKind::invariant_violation, "localize: ideal is not prime");
    std::vector<Elem> idempotents = primitive_idempotents(*ring);
    Elem chosen = ring->one;
    int found = 0;
    for (Elem e : idempotents)
        if (!P.contains(e)) { chosen = e; ++found; }
    if (found != 1)
        fail(ErrorKind::invariant_violation,
             "localize: prime does not select a unique factor of " + ring->label);
    std::set<Elem> factor;
    for (Elem x = 0; x < ring->size; ++x) factor.insert(ring->mul(x, chosen));
    Subring sub = ring_from_subset(ring, std::vector<Elem>(factor.begin(), factor.end()),
                                   ring->zero, chosen,
                                   ring->label + "@e" + std::to_string(chosen));
    std::vector<int> pos(ring->size, -1);
    for (std::size_t k = 0; k < sub.carrier.size(); ++k)
        pos[sub.carrier[k]] = static_cast<int>(k);
    std::vector<Elem> proj(ring->size);
    for (Elem x = 0; x < ring->size; ++x)
        proj[x] = static_cast<Elem>(pos[ring->mul(x, chosen)]);
    Localization result;
    result.ring = sub.ring;
    result.projection = hom_from_map(ring, sub.ring, std::move(proj));
    return result;
}

namespace {

/// Map induced on localizations by `base`: sends proj_src(x) to
/// proj_tgt(base(x)). Returns the map or a witness that it is ill-defined.
struct InducedMap {
    bool ok = false;
    std::vector<Elem> map;
    std::string witness;
};

InducedMap induce(const RingHom& proj_src, const RingHom& base,
                  const RingHom& proj_tgt) {
    InducedMap result;
    const std::size_t m = proj_src.target->size;
    result.map.assign(m, 0);
    std::vector<bool> have(m, false);
    for (Elem x = 0; x < proj_src.source->size; ++x) {
        Elem z = proj_src(x);
        Elem v = proj_tgt(base(x));
        if (have[z] && result.map[z] != v) {
            result.witness = "induced map ill-defined at class of x=" + std::to_string(x);
            return result;
        }
        result.map[z] = v;
        have[z] = true;
    }
    for (Elem z = 0; z < m; ++z)
        if (!have[z]) {
            result.witness = "projection not surjective at " + std::to_string(z);
            return result;
        }
    result.ok = true;
    return result;
}

CheckResult canonical_bijection(const RingPtr& src, const RingPtr& tgt,
                                InducedMap induced, const std::string& what) {
    if (!induced.ok) return CheckResult::fail(what + ": " + induced.witness);
    RingHom hom;
    try {
        hom = hom_from_map(src, tgt, std::move(induced.map));
    } catch (const AmalgamError& e) {
        return CheckResult::fail(what + ": canonical map not a hom: " + e.what());
    }
    if (src->size != tgt->size || image(hom).size() != tgt->size)
        return CheckResult::fail(what + ": canonical map not bijective (" +
                                 std::to_string(src->size) + " vs " +
                                 std::to_string(tgt->size) + ")");
    return CheckResult::pass();
}

/// S^{-1}B for a multiplicative subset S of a finite ring: the product of the
/// idempotent factors on which every element of S acts invertibly.
Localization localize_at_multiplicative_set(const RingPtr& ring,
                                            const std::vector<Elem>& mult_set) {
    std::vector<Elem> idempotents = primitive_idempotents(*ring);
    Elem total = ring->zero;
    for (Elem e : idempotents) {
        bool all_invertible = true;
        for (Elem s : mult_set) {
            Elem se = ring->mul(s, e);
            bool invertible = false;
            for (Elem t = 0; t < ring->size; ++t)
                if (ring->mul(t, se) == e) { invertible = true; break; }
            if (!invertible) { all_invertible = false; break; }
        }
        if (all_invertible) total = ring->add(total, e);
    }
    std::set<Elem> factor;
    for (Elem x = 0; x < ring->size; ++x) factor.insert(ring->mul(x, total));
    Subring sub = ring_from_subset(ring, std::vector<Elem>(factor.begin(), factor.end()),
                                   ring->zero, total,
                                   ring->label + "@S" + std::to_string(total));
    std::vector<int> pos(ring->size, -1);
    for (std::size_t k = 0; k < sub.carrier.size(); ++k)
        pos[sub.carrier[k]] = static_cast<int>(k);
    std::vector<Elem> proj(ring->size);
    for (Elem x = 0; x < ring->size; ++x)
        proj[x] = static_cast<Elem>(pos[ring->mul(x, total)]);
    Localization result;
    result.ring = sub.ring;
    result.projection = hom_from_map(ring, sub.ring, std::move(proj));
    return result;
}

}  // namespace

CheckResult check_localizations(const AmalgamRing& D) {
    SpecReport spec_A = primes(D.A);
    SpecReport spec_B = primes(D.B);
    IdealSet f_inv_J = preimage(D.f, D.J);

    // (1) off V(J): D at Qbar^f matches B_Q through pB
    for (const auto& prime : spec_B.primes) {
        const IdealSet& Q = prime.ideal;
        if (std::includes(Q.members.begin(), Q.members.end(), D.J.members.begin(),
                          D.J.members.end()))
            continue;
        PrimeIdeal lift = lift_prime_B(D, Q);
        Localization loc_d = localize(D.ring, lift.ideal);
        Localization loc_b = localize(D.B, Q);
        CheckResult check = canonical_bijection(
            loc_d.ring, loc_b.ring, induce(loc_d.projection, D.pB, loc_b.projection),
            "D at Qbar vs B_Q, Q=" + members_string(Q.members));
        if (!check) return check;
    }

    for (const auto& prime : spec_A.primes) {
        const IdealSet& P = prime.ideal;
        bool over_f_inv_j = std::includes(P.members.begin(), P.members.end(),
                                          f_inv_J.members.begin(), f_inv_J.members.end());
        PrimeIdeal lift = lift_prime_A(D, P);
        Localization loc_d = localize(D.ring, lift.ideal);

        if (!over_f_inv_j) {
            // (2) off V(f^{-1}(J)): D at P'^f matches A_P through pA
            Localization loc_a = localize(D.A, P);
            CheckResult check = canonical_bijection(
                loc_d.ring, loc_a.ring, induce(loc_d.projection, D.pA, loc_a.projection),
                "D at P' vs A_P, P=" + members_string(P.members));
            if (!check) return check;
            continue;
        }

        // (3) over V(f^{-1}(J)): D at P'^f matches A_P |><|^{f_P} J_S, where
        // S = f(A\P)+J is inverted in B and f_P is induced by f.
        Localization loc_a = localize(D.A, P);
        std::vector<Elem> mult_set;
        {
            std::set<Elem> s;
            for (Elem a = 0; a < D.A->size; ++a) {
                if (P.contains(a)) continue;
                for (Elem j : D.J.members) s.insert(D.B->add(D.f(a), j));
            }
            mult_set.assign(s.begin(), s.end());
        }
        Localization loc_b = localize_at_multiplicative_set(D.B, mult_set);

        InducedMap fp = induce(loc_a.projection, D.f, loc_b.projection);
        if (!fp.ok)
            return CheckResult::fail("induced f_P ill-defined at P=" +
                                     members_string(P.members) + ": " + fp.witness);
        RingHom f_p;
        try {
            f_p = hom_from_map(loc_a.ring, loc_b.ring, std::move(fp.map));
        } catch (const AmalgamError& e) {
            return CheckResult::fail("induced f_P not a hom: " + std::string(e.what()));
        }

        std::vector<Elem> j_s_members;
        for (Elem j : D.J.members) j_s_members.push_back(loc_b.projection(j));
        std::sort(j_s_members.begin(), j_s_members.end());
        j_s_members.erase(std::unique(j_s_members.begin(), j_s_members.end()),
                          j_s_members.end());
        IdealSet j_s = make_ideal(loc_b.ring, std::move(j_s_members));

        AmalgamRing local_amalgam;
        try {
            local_amalgam = amalgamate(loc_a.ring, loc_b.ring, f_p, j_s,
                                       loc_a.ring->size * loc_b.ring->size);
        } catch (const AmalgamError& e) {
            return CheckResult::fail("localized amalgam fails to build: " +
                                     std::string(e.what()));
        }

        // comparison map z = class(x) -> (pi_A(pA(x)), pi_S(pB(x)))
        const std::size_t m = loc_d.ring->size;
        std::vector<Elem> cmp(m, 0);
        std::vector<bool> have(m, false);
        for (Elem x = 0; x < D.ring->size; ++x) {
            Elem z = loc_d.projection(x);
            auto idx = local_amalgam.index_of_pair(loc_a.projection(D.pA(x)),
                                                   loc_b.projection(D.pB(x)));
            if (!idx)
                return CheckResult::fail("comparison image misses localized carrier at x=" +
                                         std::to_string(x));
            if (have[z] && cmp[z] != *idx)
                return CheckResult::fail("comparison map ill-defined at class of x=" +
                                         std::to_string(x));
            cmp[z] = *idx;
            have[z] = true;
        }
        RingHom comparison;
        try {
            comparison = hom_from_map(loc_d.ring, local_amalgam.ring, std::move(cmp));
        } catch (const AmalgamError& e) {
            return CheckResult::fail("comparison map not a hom: " + std::string(e.what()));
        }
        if (loc_d.ring->size != local_amalgam.ring->size ||
            image(comparison).size() != local_amalgam.ring->size)
            return CheckResult::fail("comparison map not bijective at P=" +
                                     members_string(P.members));
    }
    return CheckResult::pass();
}

CheckResult check_gamma_intersection(const AmalgamRing& D) {
    IdealSet j0 = D.j_zero();
    IdealSet j1 = D.j_one();
    SpecReport spec_D = primes(D.ring);

    std::set<std::vector<Elem>> intersection;
    for (const auto& prime : spec_D.primes) {
        const auto& members = prime.ideal.members;
        bool in0 = std::includes(members.begin(), members.end(), j0.members.begin(),
                                 j0.members.end());
        bool in1 = std::includes(members.begin(), members.end(), j1.members.begin(),
                                 j1.members.end());
        if (in0 && in1) intersection.insert(members);
    }

    std::set<std::vector<Elem>> pulled;
    if (!D.gamma_target->is_zero_ring()) {
        SpecReport spec_C = primes(D.gamma_target);
        for (const auto& prime : spec_C.primes) {
            IdealSet pull = preimage(D.gamma, prime.ideal);
            if (!is_prime_ideal(*D.ring, pull.members))
                return CheckResult::fail("gamma pullback of a prime is not prime");
            pulled.insert(pull.members);
        }
        if (pulled.size() != spec_C.primes.size())
            return CheckResult::fail("gamma pullback not injective on Spec((f(A)+J)/J)");
    }
    if (pulled != intersection)
        return CheckResult::fail("gamma does not put Spec((f(A)+J)/J) in bijection "
                                 "with V(J0) meet V(J1)");

    // surjective f: the intersection also matches V(J) inside Spec(B)
    if (image(D.f).size() == D.B->size && !D.B->is_zero_ring()) {
        SpecReport spec_B = primes(D.B);
        std::size_t v_j = 0;
        for (const auto& prime : spec_B.primes)
            if (std::includes(prime.ideal.members.begin(), prime.ideal.members.end(),
                              D.J.members.begin(), D.J.members.end()))
                ++v_j;
        if (v_j != intersection.size())
            return CheckResult::fail("surjective f: |V(J0) meet V(J1)| != |V(J)|");
    }
    return CheckResult::pass();
}

}  // namespace amalgam
