#include "amalgam/ring.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "amalgam/spectrum.hpp"

namespace amalgam {

namespace {

std::string elem_pair(const FiniteRing& ring, Elem a, Elem b) {
    std::ostringstream os;
    os << "(" << describe_elem(ring, a) << ", " << describe_elem(ring, b) << ")";
    return os.str();
}

std::vector<Elem> sorted_unique(std::vector<Elem> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

bool is_prime_number(unsigned n) {
    if (n < 2) return false;
    for (unsigned d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace

std::string describe_elem(const FiniteRing& ring, Elem x) {
    return "e" + std::to_string(x) + "@" + ring.label;
}

Elem FiniteRing::pow(Elem a, std::size_t k) const {
    Elem r = one;
    for (std::size_t i = 0; i < k; ++i) r = mul(r, a);
    return r;
}

bool IdealSet::contains(Elem x) const {
    return std::binary_search(members.begin(), members.end(), x);
}

bool same_members(const IdealSet& a, const IdealSet& b) {
    return a.members == b.members;
}

CheckResult verify_ring_axioms(const FiniteRing& r) {
    const std::size_t n = r.size;
    if (n == 0) return CheckResult::fail("empty carrier");
    if (r.add_table.size() != n * n || r.mul_table.size() != n * n)
        return CheckResult::fail("table shape mismatch");
    for (std::size_t i = 0; i < n * n; ++i)
        if (r.add_table[i] >= n || r.mul_table[i] >= n)
            return CheckResult::fail("table entry out of range at slot " +
                                     std::to_string(i));
    if (r.zero >= n || r.one >= n) return CheckResult::fail("0/1 out of range");
    if (n > 1 && r.one == r.zero)
        return CheckResult::fail("one == zero in a ring of size > 1");

    for (Elem a = 0; a < n; ++a) {
        if (r.add(a, r.zero) != a)
            return CheckResult::fail("additive identity fails at " +
                                     describe_elem(r, a));
        if (r.mul(a, r.one) != a)
            return CheckResult::fail("multiplicative identity fails at " +
                                     describe_elem(r, a));
        bool has_inverse = false;
        for (Elem b = 0; b < n; ++b)
            if (r.add(a, b) == r.zero) { has_inverse = true; break; }
        if (!has_inverse)
            return CheckResult::fail("no additive inverse for " +
                                     describe_elem(r, a));
    }
    for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b) {
            if (r.add(a, b) != r.add(b, a))
                return CheckResult::fail("add not commutative at " + elem_pair(r, a, b));
            if (r.mul(a, b) != r.mul(b, a))
                return CheckResult::fail("mul not commutative at " + elem_pair(r, a, b));
        }
    for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b)
            for (Elem c = 0; c < n; ++c) {
                if (r.add(r.add(a, b), c) != r.add(a, r.add(b, c)))
                    return CheckResult::fail("add not associative at (" +
                                             std::to_string(a) + "," + std::to_string(b) +
                                             "," + std::to_string(c) + ") in " + r.label);
                if (r.mul(r.mul(a, b), c) != r.mul(a, r.mul(b, c)))
                    return CheckResult::fail("mul not associative at (" +
                                             std::to_string(a) + "," + std::to_string(b) +
                                             "," + std::to_string(c) + ") in " + r.label);
                if (r.mul(a, r.add(b, c)) != r.add(r.mul(a, b), r.mul(a, c)))
                    return CheckResult::fail("distributivity fails at (" +
                                             std::to_string(a) + "," + std::to_string(b) +
                                             "," + std::to_string(c) + ") in " + r.label);
            }
    return CheckResult::pass();
}

RingPtr ring_from_tables(std::size_t size, std::vector<Elem> add_table,
                         std::vector<Elem> mul_table, Elem zero, Elem one,
                         std::string label) {
    if (size > kHardCarrierLimit)
        fail(ErrorKind::resource_limit,
             "carrier size " + std::to_string(size) + " exceeds the hard limit " +
                 std::to_string(kHardCarrierLimit));
    auto ring = std::make_shared<FiniteRing>();
    ring->size = size;
    ring->add_table = std::move(add_table);
    ring->mul_table = std::move(mul_table);
    ring->zero = zero;
    ring->one = one;
    ring->label = std::move(label);
    CheckResult check = verify_ring_axioms(*ring);
    if (!check)
        fail(ErrorKind::invariant_violation,
             "ring axioms fail for " + ring->label + ": " + check.witness);
    ring->neg_table.assign(size, 0);
    for (Elem a = 0; a < size; ++a)
        for (Elem b = 0; b < size; ++b)
            if (ring->add(a, b) == ring->zero) { ring->neg_table[a] = b; break; }
    return ring;
}

RingPtr build_zmod(unsigned n, std::size_t cap) {
    if (n == 0)
        fail(ErrorKind::invalid_parameter, "zmod: n must be positive");
    if (n > cap)
        fail(ErrorKind::invalid_parameter,
             "zmod: n=" + std::to_string(n) + " exceeds cap " + std::to_string(cap));
    if (n > kHardCarrierLimit)
        fail(ErrorKind::resource_limit, "zmod: n exceeds the hard carrier limit");
    std::vector<Elem> add(n * n), mul(n * n);
    for (unsigned a = 0; a < n; ++a)
        for (unsigned b = 0; b < n; ++b) {
            add[a * n + b] = static_cast<Elem>((a + b) % n);
            mul[a * n + b] = static_cast<Elem>((a * b) % n);
        }
    return ring_from_tables(n, std::move(add), std::move(mul), 0,
                            n == 1 ? 0 : 1, "Z/" + std::to_string(n));
}

RingPtr build_field_poly_quot(unsigned p, const std::vector<unsigned>& modulus,
                              std::size_t cap) {
    if (!is_prime_number(p))
        fail(ErrorKind::invalid_parameter,
             "poly_quot: p=" + std::to_string(p) + " is not prime");
    if (modulus.size() < 2)
        fail(ErrorKind::invalid_parameter, "poly_quot: modulus must have degree >= 1");
    std::vector<unsigned> mod(modulus);
    for (auto& c : mod) c %= p;
    const std::size_t degree = mod.size() - 1;
    if (mod.back() != 1)
        fail(ErrorKind::invalid_parameter, "poly_quot: modulus must be monic");

    std::size_t size = 1;
    for (std::size_t i = 0; i < degree; ++i) {
        size *= p;
        if (size > cap || size > kHardCarrierLimit)
            fail(ErrorKind::invalid_parameter,
                 "poly_quot: p^deg exceeds cap " + std::to_string(cap));
    }

    // Element index <-> coefficient vector via base-p digits, c0 least
    // significant. Index order is degree-then-value.
    auto decode = [&](std::size_t idx) {
        std::vector<unsigned> c(degree, 0);
        for (std::size_t i = 0; i < degree; ++i) { c[i] = idx % p; idx /= p; }
        return c;
    };
    auto encode = [&](const std::vector<unsigned>& c) {
        std::size_t idx = 0;
        for (std::size_t i = degree; i-- > 0;) idx = idx * p + c[i];
        return static_cast<Elem>(idx);
    };

    // x^degree reduced mod the modulus: x^d = -(c0 + c1 x + ...)/1.
    std::vector<unsigned> top(degree, 0);
    for (std::size_t i = 0; i < degree; ++i) top[i] = (p - mod[i]) % p;

    std::vector<Elem> add(size * size), mul(size * size);
    for (std::size_t a = 0; a < size; ++a) {
        auto ca = decode(a);
        for (std::size_t b = 0; b < size; ++b) {
            auto cb = decode(b);
            std::vector<unsigned> s(degree, 0);
            for (std::size_t i = 0; i < degree; ++i) s[i] = (ca[i] + cb[i]) % p;
            add[a * size + b] = encode(s);

            std::vector<unsigned> prod(2 * degree - 1, 0);
            for (std::size_t i = 0; i < degree; ++i)
                for (std::size_t j = 0; j < degree; ++j)
                    prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p;
            // reduce degrees >= degree using x^degree = top
            for (std::size_t d = prod.size(); d-- > degree;) {
                unsigned coeff = prod[d];
                if (coeff == 0) continue;
                prod[d] = 0;
                for (std::size_t i = 0; i < degree; ++i)
                    prod[d - degree + i] = (prod[d - degree + i] + coeff * top[i]) % p;
            }
            std::vector<unsigned> m(prod.begin(), prod.begin() + degree);
            mul[a * size + b] = encode(m);
        }
    }

    std::ostringstream name;
    name << "F_" << p << "[x]/(";
    bool first = true;
    for (std::size_t i = mod.size(); i-- > 0;) {
        if (mod[i] == 0) continue;
        if (!first) name << "+";
        first = false;
        if (i == 0 || mod[i] != 1) name << mod[i];
        if (i >= 1) name << "x";
        if (i >= 2) name << "^" << i;
    }
    name << ")";
    return ring_from_tables(size, std::move(add), std::move(mul), 0, 1, name.str());
}

Elem ProductRing::pair_index(Elem a, Elem b) const {
    return static_cast<Elem>(a * proj2.target->size + b);
}

ProductRing product(const RingPtr& r1, const RingPtr& r2, std::size_t cap) {
    const std::size_t n1 = r1->size, n2 = r2->size, n = n1 * n2;
    if (n > cap || n > kHardCarrierLimit)
        fail(ErrorKind::resource_limit,
             "product: size " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
    std::vector<Elem> add(n * n), mul(n * n);
    for (std::size_t a = 0; a < n; ++a) {
        Elem a1 = static_cast<Elem>(a / n2), a2 = static_cast<Elem>(a % n2);
        for (std::size_t b = 0; b < n; ++b) {
            Elem b1 = static_cast<Elem>(b / n2), b2 = static_cast<Elem>(b % n2);
            add[a * n + b] = static_cast<Elem>(r1->add(a1, b1) * n2 + r2->add(a2, b2));
            mul[a * n + b] = static_cast<Elem>(r1->mul(a1, b1) * n2 + r2->mul(a2, b2));
        }
    }
    Elem zero = static_cast<Elem>(r1->zero * n2 + r2->zero);
    Elem one = static_cast<Elem>(r1->one * n2 + r2->one);
    RingPtr ring = ring_from_tables(n, std::move(add), std::move(mul), zero, one,
                                    "(" + r1->label + " x " + r2->label + ")");
    std::vector<Elem> m1(n), m2(n);
    for (std::size_t a = 0; a < n; ++a) {
        m1[a] = static_cast<Elem>(a / n2);
        m2[a] = static_cast<Elem>(a % n2);
    }
    ProductRing result;
    result.ring = ring;
    result.proj1 = hom_from_map(ring, r1, std::move(m1));
    result.proj2 = hom_from_map(ring, r2, std::move(m2));
    return result;
}

QuotientRing quotient(const RingPtr& ring, const IdealSet& ideal) {
    if (ideal.ring != ring)
        fail(ErrorKind::invalid_parameter, "quotient: ideal belongs to another ring");
    if (!is_ideal(*ring, ideal.members))
        fail(ErrorKind::invariant_violation, "quotient: subset is not an ideal of " + ring->label);

    const std::size_t n = ring->size;
    // coset of x = { x + i : i in I }; representative = minimal index
    std::vector<Elem> rep(n);
    for (Elem x = 0; x < n; ++x) {
        Elem best = x;
        for (Elem i : ideal.members) best = std::min(best, ring->add(x, i));
        rep[x] = best;
    }
    std::vector<Elem> reps;
    for (Elem x = 0; x < n; ++x)
        if (rep[x] == x) reps.push_back(x);
    std::vector<Elem> index_of(n, 0);
    for (std::size_t k = 0; k < reps.size(); ++k) index_of[reps[k]] = static_cast<Elem>(k);

    const std::size_t m = reps.size();
    std::vector<Elem> add(m * m), mul(m * m);
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) {
            add[a * m + b] = index_of[rep[ring->add(reps[a], reps[b])]];
            mul[a * m + b] = index_of[rep[ring->mul(reps[a], reps[b])]];
        }
    std::string gens_label;
    {
        auto gens = ideal.generators ? *ideal.generators
                                     : minimal_generating_subset(ring, ideal.members);
        std::ostringstream os;
        for (std::size_t i = 0; i < gens.size(); ++i)
            os << (i ? "," : "") << gens[i];
        gens_label = os.str();
    }
    RingPtr q = ring_from_tables(m, std::move(add), std::move(mul),
                                 index_of[rep[ring->zero]], index_of[rep[ring->one]],
                                 ring->label + "/(" + gens_label + ")");
    std::vector<Elem> proj(n);
    for (Elem x = 0; x < n; ++x) proj[x] = index_of[rep[x]];
    QuotientRing result;
    result.ring = q;
    result.projection = hom_from_map(ring, q, std::move(proj));
    return result;
}

Subring ring_from_subset(const RingPtr& ring, std::vector<Elem> carrier,
                         Elem zero, Elem one, std::string label) {
    carrier = sorted_unique(std::move(carrier));
    const std::size_t m = carrier.size();
    std::vector<int> pos(ring->size, -1);
    for (std::size_t k = 0; k < m; ++k) pos[carrier[k]] = static_cast<int>(k);
    if (pos[zero] < 0 || pos[one] < 0)
        fail(ErrorKind::invalid_parameter, "ring_from_subset: 0/1 not in subset");
    std::vector<Elem> add(m * m), mul(m * m);
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) {
            Elem s = ring->add(carrier[a], carrier[b]);
            Elem p = ring->mul(carrier[a], carrier[b]);
            if (pos[s] < 0 || pos[p] < 0)
                fail(ErrorKind::invariant_violation,
                     "ring_from_subset: subset of " + ring->label +
                         " not closed at " + elem_pair(*ring, carrier[a], carrier[b]));
            add[a * m + b] = static_cast<Elem>(pos[s]);
            mul[a * m + b] = static_cast<Elem>(pos[p]);
        }
    RingPtr sub = ring_from_tables(m, std::move(add), std::move(mul),
                                   static_cast<Elem>(pos[zero]),
                                   static_cast<Elem>(pos[one]), std::move(label));
    Subring result;
    result.ring = sub;
    result.carrier = carrier;
    // An idempotent factor carries its own identity; the carrier embedding is
    // a unital hom only when the identities agree (a genuine subring).
    if (one == ring->one) result.inclusion = hom_from_map(sub, ring, carrier);
    return result;
}

Subring subring_closure(const RingPtr& ring, const std::vector<Elem>& seeds) {
    for (Elem s : seeds)
        if (s >= ring->size)
            fail(ErrorKind::invalid_parameter, "subring_closure: seed out of range");
    std::set<Elem> closure(seeds.begin(), seeds.end());
    closure.insert(ring->zero);
    closure.insert(ring->one);
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<Elem> current(closure.begin(), closure.end());
        for (Elem a : current) {
            if (closure.insert(ring->neg(a)).second) grew = true;
            for (Elem b : current) {
                if (closure.insert(ring->add(a, b)).second) grew = true;
                if (closure.insert(ring->mul(a, b)).second) grew = true;
            }
        }
    }
    std::vector<Elem> carrier(closure.begin(), closure.end());
    std::ostringstream label;
    label << ring->label << "[";
    for (std::size_t i = 0; i < seeds.size(); ++i) label << (i ? "," : "") << seeds[i];
    label << "]";
    return ring_from_subset(ring, std::move(carrier), ring->zero, ring->one, label.str());
}

RingHom hom_from_map(const RingPtr& source, const RingPtr& target,
                     std::vector<Elem> map) {
    if (map.size() != source->size)
        fail(ErrorKind::invalid_parameter, "hom: map length != source size");
    for (Elem v : map)
        if (v >= target->size)
            fail(ErrorKind::invalid_parameter, "hom: map value out of target range");
    const std::size_t n = source->size;
    for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b)
            if (map[source->add(a, b)] != target->add(map[a], map[b]))
                fail(ErrorKind::not_a_homomorphism,
                     "addition not preserved: witness (" + std::to_string(a) + "," +
                         std::to_string(b) + ") in " + source->label);
    for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b)
            if (map[source->mul(a, b)] != target->mul(map[a], map[b]))
                fail(ErrorKind::not_a_homomorphism,
                     "multiplication not preserved: witness (" + std::to_string(a) +
                         "," + std::to_string(b) + ") in " + source->label);
    if (map[source->one] != target->one)
        fail(ErrorKind::not_a_homomorphism,
             "unit not preserved: witness 1 of " + source->label);
    RingHom hom;
    hom.source = source;
    hom.target = target;
    hom.map = std::move(map);
    return hom;
}

bool is_ideal(const FiniteRing& ring, const std::vector<Elem>& members) {
    if (members.empty()) return false;
    if (!std::binary_search(members.begin(), members.end(), ring.zero)) return false;
    for (Elem a : members) {
        if (a >= ring.size) return false;
        for (Elem b : members)
            if (!std::binary_search(members.begin(), members.end(), ring.add(a, b)))
                return false;
        for (Elem r = 0; r < ring.size; ++r)
            if (!std::binary_search(members.begin(), members.end(), ring.mul(r, a)))
                return false;
    }
    return true;
}

IdealSet make_ideal(const RingPtr& ring, std::vector<Elem> members,
                    std::optional<std::vector<Elem>> generators) {
    members = sorted_unique(std::move(members));
    if (!is_ideal(*ring, members))
        fail(ErrorKind::invariant_violation,
             "subset of " + ring->label + " fails ideal closure");
    if (generators) {
        IdealSet closure = ideal_generated(ring, *generators);
        if (closure.members != members)
            fail(ErrorKind::invariant_violation,
                 "generator certificate does not span the ideal in " + ring->label);
    }
    IdealSet ideal;
    ideal.ring = ring;
    ideal.members = std::move(members);
    ideal.generators = std::move(generators);
    return ideal;
}

IdealSet ideal_generated(const RingPtr& ring, std::vector<Elem> gens) {
    for (Elem g : gens)
        if (g >= ring->size)
            fail(ErrorKind::invalid_parameter, "ideal_generated: generator out of range");
    // multiples of the generators, then additive closure
    std::set<Elem> members;
    members.insert(ring->zero);
    for (Elem g : gens)
        for (Elem r = 0; r < ring->size; ++r) members.insert(ring->mul(r, g));
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<Elem> current(members.begin(), members.end());
        for (Elem a : current)
            for (Elem b : current)
                if (members.insert(ring->add(a, b)).second) grew = true;
    }
    IdealSet ideal;
    ideal.ring = ring;
    ideal.members.assign(members.begin(), members.end());
    ideal.generators = sorted_unique(std::move(gens));
    return ideal;
}

IdealSet zero_ideal(const RingPtr& ring) { return ideal_generated(ring, {}); }

IdealSet unit_ideal(const RingPtr& ring) { return ideal_generated(ring, {ring->one}); }

IdealSet nilradical(const RingPtr& ring) {
    std::vector<Elem> members;
    for (Elem x = 0; x < ring->size; ++x) {
        Elem p = x;
        for (std::size_t k = 1; k <= ring->size; ++k) {
            if (p == ring->zero) { members.push_back(x); break; }
            p = ring->mul(p, x);
        }
        if (p == ring->zero && (members.empty() || members.back() != x))
            members.push_back(x);
    }
    return make_ideal(ring, sorted_unique(std::move(members)));
}

IdealSet jacobson(const RingPtr& ring) {
    if (ring->is_zero_ring()) return make_ideal(ring, {ring->zero});
    SpecReport spec = primes(ring);
    std::vector<Elem> meet;
    for (Elem x = 0; x < ring->size; ++x) {
        bool in_all = true;
        for (std::size_t k : spec.maximal_indices)
            if (!spec.primes[k].ideal.contains(x)) { in_all = false; break; }
        if (in_all) meet.push_back(x);
    }
    return make_ideal(ring, std::move(meet));
}

std::vector<Elem> units(const RingPtr& ring) {
    std::vector<Elem> result;
    for (Elem x = 0; x < ring->size; ++x)
        for (Elem y = 0; y < ring->size; ++y)
            if (ring->mul(x, y) == ring->one) { result.push_back(x); break; }
    return result;
}

IdealSet preimage(const RingHom& hom, const IdealSet& ideal) {
    if (ideal.ring != hom.target)
        fail(ErrorKind::invalid_parameter, "preimage: ideal not on hom target");
    std::vector<Elem> members;
    for (Elem x = 0; x < hom.source->size; ++x)
        if (ideal.contains(hom(x))) members.push_back(x);
    return make_ideal(hom.source, std::move(members));
}

std::vector<Elem> image(const RingHom& hom) {
    return sorted_unique(hom.map);
}

IdealSet kernel(const RingHom& hom) {
    std::vector<Elem> members;
    for (Elem x = 0; x < hom.source->size; ++x)
        if (hom(x) == hom.target->zero) members.push_back(x);
    return make_ideal(hom.source, std::move(members));
}

IdealSet ideal_sum(const IdealSet& a, const IdealSet& b) {
    std::vector<Elem> members;
    for (Elem x : a.members)
        for (Elem y : b.members) members.push_back(a.ring->add(x, y));
    return make_ideal(a.ring, sorted_unique(std::move(members)));
}

IdealSet ideal_product(const IdealSet& a, const IdealSet& b) {
    std::vector<Elem> gens;
    for (Elem x : a.members)
        for (Elem y : b.members) gens.push_back(a.ring->mul(x, y));
    IdealSet result = ideal_generated(a.ring, sorted_unique(std::move(gens)));
    result.generators.reset();
    return result;
}

IdealSet annihilator(const RingPtr& ring, const std::vector<Elem>& subset) {
    std::vector<Elem> members;
    for (Elem x = 0; x < ring->size; ++x) {
        bool kills = true;
        for (Elem s : subset)
            if (ring->mul(x, s) != ring->zero) { kills = false; break; }
        if (kills) members.push_back(x);
    }
    return make_ideal(ring, std::move(members));
}

std::vector<IdealSet> all_ideals(const RingPtr& ring) {
    std::set<std::vector<Elem>> seen;
    std::vector<std::vector<Elem>> queue;
    queue.push_back(zero_ideal(ring).members);
    seen.insert(queue.back());
    for (std::size_t head = 0; head < queue.size(); ++head) {
        std::vector<Elem> current = queue[head];
        for (Elem x = 0; x < ring->size; ++x) {
            if (std::binary_search(current.begin(), current.end(), x)) continue;
            std::vector<Elem> gens = current;
            gens.push_back(x);
            IdealSet bigger = ideal_generated(ring, std::move(gens));
            if (seen.insert(bigger.members).second) queue.push_back(bigger.members);
        }
    }
    std::vector<IdealSet> result;
    result.reserve(queue.size());
    std::sort(queue.begin(), queue.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    for (auto& members : queue) {
        IdealSet ideal;
        ideal.ring = ring;
        ideal.members = std::move(members);
        result.push_back(std::move(ideal));
    }
    return result;
}

std::vector<Elem> minimal_generating_subset(const RingPtr& ring,
                                            const std::vector<Elem>& members) {
    std::vector<Elem> gens;
    IdealSet span = zero_ideal(ring);
    for (Elem x : members) {
        if (span.contains(x)) continue;
        gens.push_back(x);
        span = ideal_generated(ring, gens);
        if (span.members == members) break;
    }
    if (span.members != members)
        fail(ErrorKind::invariant_violation, "minimal_generating_subset: input not an ideal");
    return gens;
}

namespace {

// Closure from {0, 1, gens...} recording how each element was first formed,
// so a candidate image assignment can be replayed in the target.
struct ClosureRecipe {
    enum class Op { seed, add, mul, neg };
    struct Step { Op op; Elem lhs; Elem rhs; };  // operands are source elements
    std::vector<Elem> order;                     // discovery order
    std::map<Elem, Step> step;
    bool complete;                               // closure == whole source ring
};

ClosureRecipe closure_recipe(const FiniteRing& ring, const std::vector<Elem>& gens) {
    ClosureRecipe recipe;
    auto emit = [&](Elem x, ClosureRecipe::Op op, Elem lhs, Elem rhs) {
        if (recipe.step.count(x)) return false;
        recipe.step[x] = {op, lhs, rhs};
        recipe.order.push_back(x);
        return true;
    };
    emit(ring.zero, ClosureRecipe::Op::seed, 0, 0);
    emit(ring.one, ClosureRecipe::Op::seed, 0, 0);
    for (Elem g : gens) emit(g, ClosureRecipe::Op::seed, 0, 0);
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<Elem> current = recipe.order;
        for (Elem a : current) {
            if (emit(ring.neg(a), ClosureRecipe::Op::neg, a, 0)) grew = true;
            for (Elem b : current) {
                if (emit(ring.add(a, b), ClosureRecipe::Op::add, a, b)) grew = true;
                if (emit(ring.mul(a, b), ClosureRecipe::Op::mul, a, b)) grew = true;
            }
        }
    }
    recipe.complete = recipe.order.size() == ring.size;
    return recipe;
}

// Greedy ring generating sequence: extend the prime subring by the smallest
// uncovered element until the closure is everything.
std::vector<Elem> ring_generators(const FiniteRing& ring) {
    std::vector<Elem> gens;
    while (true) {
        ClosureRecipe recipe = closure_recipe(ring, gens);
        if (recipe.complete) return gens;
        Elem next = 0;
        while (recipe.step.count(next)) ++next;
        gens.push_back(next);
    }
}

}  // namespace

std::vector<RingHom> all_homs(const RingPtr& source, const RingPtr& target) {
    std::vector<Elem> gens = ring_generators(*source);
    ClosureRecipe recipe = closure_recipe(*source, gens);

    std::vector<RingHom> homs;
    std::vector<Elem> choice(gens.size(), 0);
    const std::size_t t = target->size;

    auto try_choice = [&]() {
        std::vector<Elem> map(source->size, 0);
        std::vector<bool> have(source->size, false);
        auto set_image = [&](Elem x, Elem v) {
            if (have[x] && map[x] != v) return false;
            map[x] = v;
            have[x] = true;
            return true;
        };
        if (!set_image(source->zero, target->zero)) return;
        if (!set_image(source->one, target->one)) return;
        for (std::size_t i = 0; i < gens.size(); ++i)
            if (!set_image(gens[i], choice[i])) return;
        for (Elem x : recipe.order) {
            const auto& step = recipe.step.at(x);
            switch (step.op) {
                case ClosureRecipe::Op::seed: break;
                case ClosureRecipe::Op::neg:
                    if (!set_image(x, target->neg(map[step.lhs]))) return;
                    break;
                case ClosureRecipe::Op::add:
                    if (!set_image(x, target->add(map[step.lhs], map[step.rhs]))) return;
                    break;
                case ClosureRecipe::Op::mul:
                    if (!set_image(x, target->mul(map[step.lhs], map[step.rhs]))) return;
                    break;
            }
        }
        try {
            homs.push_back(hom_from_map(source, target, std::move(map)));
        } catch (const AmalgamError&) {
            // candidate fails an axiom; skip
        }
    };

    std::size_t total = 1;
    for (std::size_t i = 0; i < gens.size(); ++i) total *= t;
    for (std::size_t n = 0; n < total; ++n) {
        std::size_t v = n;
        for (std::size_t i = 0; i < gens.size(); ++i) {
            choice[i] = static_cast<Elem>(v % t);
            v /= t;
        }
        try_choice();
    }
    std::sort(homs.begin(), homs.end(),
              [](const RingHom& a, const RingHom& b) { return a.map < b.map; });
    return homs;
}

RingPtr corrupt_table_for_selftest(const RingPtr& ring, const std::string& table,
                                   Elem row, Elem col, Elem value) {
    if (row >= ring->size || col >= ring->size || value >= ring->size)
        fail(ErrorKind::invalid_parameter, "corrupt: index out of range");
    auto copy = std::make_shared<FiniteRing>(*ring);
    if (table == "add")
        copy->add_table[row * copy->size + col] = value;
    else if (table == "mul")
        copy->mul_table[row * copy->size + col] = value;
    else
        fail(ErrorKind::invalid_parameter, "corrupt: table must be add or mul");
    copy->label += "[corrupted]";
    return copy;
}

}  // namespace amalgam
