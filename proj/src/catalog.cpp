#include "amalgam/catalog.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace amalgam {

using nlohmann::json;

namespace {

json zmod_tree(unsigned n) { return json{{"op", "zmod"}, {"n", n}}; }

json poly_tree(unsigned p, std::vector<unsigned> modulus) {
    return json{{"op", "poly_quot"}, {"p", p}, {"modulus", modulus}};
}

json product_tree(std::vector<json> factors) {
    return json{{"op", "product"}, {"factors", std::move(factors)}};
}

/// The base stock of local rings serving as A (and as product factors for B).
std::vector<json> base_ring_trees() {
    return {
        zmod_tree(2),
        zmod_tree(4),
        zmod_tree(8),
        poly_tree(2, {0, 1}),        // F_2
        poly_tree(2, {1, 1, 1}),     // F_4
        poly_tree(2, {0, 0, 1}),     // F_2[x]/(x^2)
        poly_tree(2, {0, 0, 0, 1}),  // F_2[x]/(x^3)
        poly_tree(3, {0, 1}),        // F_3
        zmod_tree(9),
        poly_tree(3, {0, 0, 1}),     // F_3[x]/(x^2)
    };
}

std::string gens_label(const std::vector<unsigned>& gens) {
    std::string s = "<";
    for (std::size_t i = 0; i < gens.size(); ++i)
        s += (i ? "," : "") + std::to_string(gens[i]);
    return s + ">";
}

}  // namespace

CatalogBounds bounds_from_json(const json& j) {
    CatalogBounds bounds;
    if (j.contains("max_b_size")) bounds.max_b_size = j["max_b_size"].get<std::size_t>();
    if (j.contains("pair_products")) bounds.pair_products = j["pair_products"].get<bool>();
    if (j.contains("triple_products"))
        bounds.triple_products = j["triple_products"].get<bool>();
    if (j.contains("semigroup_frobenius_max"))
        bounds.semigroup_frobenius_max = j["semigroup_frobenius_max"].get<unsigned>();
    if (j.contains("semigroup_max_gens"))
        bounds.semigroup_max_gens = j["semigroup_max_gens"].get<unsigned>();
    if (j.contains("ideal_max_gens"))
        bounds.ideal_max_gens = j["ideal_max_gens"].get<unsigned>();
    if (j.contains("scaled_frobenius_max"))
        bounds.scaled_frobenius_max = j["scaled_frobenius_max"].get<unsigned>();
    if (j.contains("scaled_d_max")) bounds.scaled_d_max = j["scaled_d_max"].get<unsigned>();
    if (j.contains("cap")) bounds.cap = j["cap"].get<std::size_t>();
    return bounds;
}

json bounds_to_json(const CatalogBounds& b) {
    return json{{"max_b_size", b.max_b_size},
                {"pair_products", b.pair_products},
                {"triple_products", b.triple_products},
                {"semigroup_frobenius_max", b.semigroup_frobenius_max},
                {"semigroup_max_gens", b.semigroup_max_gens},
                {"ideal_max_gens", b.ideal_max_gens},
                {"scaled_frobenius_max", b.scaled_frobenius_max},
                {"scaled_d_max", b.scaled_d_max},
                {"cap", b.cap}};
}

std::vector<NumericalSemigroup> enumerate_semigroups(unsigned frobenius_max,
                                                     unsigned max_gens) {
    std::vector<NumericalSemigroup> result;
    result.push_back(semigroup({1}));  // N itself, Frobenius -1

    // Minimal generators lie in [m, m + F]; enumerate candidate tuples and
    // keep those that are exactly the minimal generating set within bounds.
    for (unsigned m = 2; m <= frobenius_max + 1; ++m) {
        std::vector<unsigned> pool;
        for (unsigned g = m + 1; g <= m + frobenius_max; ++g)
            if (g % m != 0) pool.push_back(g);
        unsigned extra_max = std::min<unsigned>(max_gens - 1,
                                                static_cast<unsigned>(pool.size()));
        for (unsigned k = 1; k <= extra_max; ++k) {
            std::vector<bool> mask(pool.size(), false);
            std::fill(mask.begin(), mask.begin() + k, true);
            do {
                std::vector<unsigned> gens{m};
                for (std::size_t i = 0; i < pool.size(); ++i)
                    if (mask[i]) gens.push_back(pool[i]);
                unsigned g = 0;
                for (unsigned x : gens) g = std::gcd(g, x);
                if (g != 1) continue;
                NumericalSemigroup s = semigroup(gens);
                if (s.frobenius > static_cast<long>(frobenius_max)) continue;
                if (s.gens != gens) continue;  // not the minimal generating set
                result.push_back(std::move(s));
            } while (std::prev_permutation(mask.begin(), mask.end()));
        }
    }
    std::sort(result.begin(), result.end(),
              [](const NumericalSemigroup& a, const NumericalSemigroup& b) {
                  return a.gens < b.gens;
              });
    return result;
}

namespace {

void append_finite_instances(const CatalogBounds& bounds,
                             std::vector<InstanceSpec>& out) {
    RingBuilder builder(bounds.cap);
    std::vector<json> base = base_ring_trees();

    std::vector<json> b_trees = base;
    if (bounds.pair_products) {
        for (const json& t1 : base)
            for (const json& t2 : base) {
                if (builder.build(t1)->size * builder.build(t2)->size > bounds.max_b_size)
                    continue;
                b_trees.push_back(product_tree({t1, t2}));
            }
    }
    if (bounds.triple_products) {
        for (const json& t1 : base)
            for (const json& t2 : base)
                for (const json& t3 : base) {
                    std::size_t size = builder.build(t1)->size *
                                       builder.build(t2)->size * builder.build(t3)->size;
                    if (size > bounds.max_b_size) continue;
                    b_trees.push_back(product_tree({t1, t2, t3}));
                }
    }

    for (const json& a_tree : base) {
        RingPtr A = builder.build(a_tree);
        for (const json& b_tree : b_trees) {
            RingPtr B = builder.build(b_tree);
            if (A->size * B->size > bounds.cap) continue;
            std::vector<RingHom> homs = all_homs(A, B);
            if (homs.empty()) continue;
            std::vector<IdealSet> ideals = all_ideals(B);
            for (std::size_t h = 0; h < homs.size(); ++h) {
                for (std::size_t ji = 0; ji < ideals.size(); ++ji) {
                    InstanceSpec spec;
                    spec.kind = "finite";
                    spec.a_tree = a_tree;
                    spec.b_tree = b_tree;
                    spec.f_spec = json{{"map", homs[h].map}};
                    spec.j_gens = minimal_generating_subset(B, ideals[ji].members);
                    std::ostringstream label;
                    label << "finite/A=" << A->label << "/B=" << B->label << "/f" << h
                          << "/J" << ji;
                    spec.label = label.str();
                    out.push_back(std::move(spec));
                }
            }
        }
    }

    // curated Gorenstein family: A = F_2, B = F_2[x]/(x^n), J = (x^{n-1})
    for (unsigned n = 2; n <= 5; ++n) {
        std::vector<unsigned> modulus(n + 1, 0);
        modulus[n] = 1;
        InstanceSpec spec;
        spec.kind = "finite";
        spec.a_tree = poly_tree(2, {0, 1});
        spec.b_tree = poly_tree(2, modulus);
        RingPtr A = builder.build(spec.a_tree);
        RingPtr B = builder.build(spec.b_tree);
        std::vector<RingHom> homs = all_homs(A, B);
        if (homs.size() != 1)
            fail(ErrorKind::invariant_violation,
                 "curated family: expected a unique hom F_2 -> F_2[x]/(x^n)");
        spec.f_spec = json{{"map", homs[0].map}};
        spec.j_gens = {static_cast<Elem>(1u << (n - 1))};  // x^{n-1} in base-2 encoding
        spec.label = "gorenstein/J=omega/n=" + std::to_string(n);
        out.push_back(std::move(spec));
    }
}

/// The smallest integral translate of the canonical ideal inside S.
std::vector<unsigned> canonical_translate_gens(const NumericalSemigroup& S) {
    SemigroupIdeal K = canonical_ideal(S);
    for (unsigned shift = 0; shift <= S.conductor; ++shift) {
        bool inside = true;
        unsigned window = std::max<unsigned>(K.tail_start, S.conductor) + S.multiplicity + 1;
        for (unsigned k = 0; k < window && inside; ++k)
            if (K.contains(k) && !S.contains(static_cast<long>(k) + shift)) inside = false;
        if (!inside) continue;
        std::vector<unsigned> gens;
        for (unsigned g : K.gens) gens.push_back(g + shift);
        return gens;
    }
    fail(ErrorKind::invariant_violation, "canonical translate: no shift fits");
}

void append_semigroup_instances(const CatalogBounds& bounds,
                                std::vector<InstanceSpec>& out) {
    std::vector<NumericalSemigroup> semigroups =
        enumerate_semigroups(bounds.semigroup_frobenius_max, bounds.semigroup_max_gens);
    for (const NumericalSemigroup& S : semigroups) {
        std::set<std::vector<unsigned>> ideal_gens;
        std::vector<unsigned> pool;
        for (unsigned g = 0; g <= S.conductor; ++g)
            if (S.contains(g)) pool.push_back(g);
        unsigned max_k = std::min<unsigned>(bounds.ideal_max_gens,
                                            static_cast<unsigned>(pool.size()));
        for (unsigned k = 1; k <= max_k; ++k) {
            std::vector<bool> mask(pool.size(), false);
            std::fill(mask.begin(), mask.begin() + k, true);
            do {
                std::vector<unsigned> gens;
                for (std::size_t i = 0; i < pool.size(); ++i)
                    if (mask[i]) gens.push_back(pool[i]);
                SemigroupIdeal E = semigroup_ideal(S, gens);
                if (minimal_generators(E) != gens) continue;  // canonical form only
                ideal_gens.insert(gens);
            } while (std::prev_permutation(mask.begin(), mask.end()));
        }
        ideal_gens.insert(canonical_translate_gens(S));

        for (const auto& gens : ideal_gens) {
            InstanceSpec spec;
            spec.kind = "semigroup";
            spec.s_gens = S.gens;
            spec.e_gens = gens;
            spec.label = "sg/S=" + gens_label(S.gens) + "/E=" + gens_label(gens);
            out.push_back(std::move(spec));
        }
    }
}

void append_scaled_instances(const CatalogBounds& bounds,
                             std::vector<InstanceSpec>& out) {
    std::vector<NumericalSemigroup> semigroups =
        enumerate_semigroups(bounds.scaled_frobenius_max, 3);
    for (const NumericalSemigroup& S : semigroups) {
        for (unsigned d = 1; d <= bounds.scaled_d_max; ++d) {
            std::vector<std::vector<unsigned>> t_candidates;
            t_candidates.push_back({1});  // T = N
            if (d == 1) {
                t_candidates.push_back(S.gens);
            } else {
                // T generated by d*gens(S) plus one coprime element
                std::vector<unsigned> scaled;
                for (unsigned g : S.gens) scaled.push_back(d * g);
                for (unsigned t : {d * S.multiplicity + 1, d * S.multiplicity - 1}) {
                    if (t < 1) continue;
                    std::vector<unsigned> gens = scaled;
                    gens.push_back(t);
                    unsigned g = 0;
                    for (unsigned x : gens) g = std::gcd(g, x);
                    if (g != 1) continue;
                    t_candidates.push_back(gens);
                    break;
                }
            }
            // dedupe by the minimal generating tuple of the built semigroup
            std::vector<NumericalSemigroup> t_options;
            std::set<std::vector<unsigned>> seen_t;
            for (const auto& t_gens : t_candidates) {
                NumericalSemigroup T = semigroup(t_gens);
                if (seen_t.insert(T.gens).second) t_options.push_back(std::move(T));
            }
            for (const NumericalSemigroup& T : t_options) {
                std::set<std::vector<unsigned>> e_options;
                unsigned count = 0;
                for (unsigned g = 0; g <= T.conductor && count < 8; ++g) {
                    if (!T.contains(g)) continue;
                    e_options.insert({g});
                    ++count;
                }
                e_options.insert(T.gens);  // the maximal ideal (or T itself for N)
                e_options.insert(canonical_translate_gens(T));
                for (const auto& e_gens : e_options) {
                    InstanceSpec spec;
                    spec.kind = "scaled-semigroup";
                    spec.s_gens = S.gens;
                    spec.t_gens = T.gens;
                    spec.e_gens = e_gens;
                    spec.d = d;
                    spec.label = "scaled/S=" + gens_label(S.gens) + "/d=" +
                                 std::to_string(d) + "/T=" + gens_label(T.gens) +
                                 "/E=" + gens_label(e_gens);
                    out.push_back(std::move(spec));
                }
            }
        }
    }
}

void append_series_instances(std::vector<InstanceSpec>& out) {
    for (unsigned p : {2u, 3u, 5u})
        for (unsigned prec : {2u, 5u, 8u}) {
            InstanceSpec spec;
            spec.kind = "series-witness";
            spec.p = p;
            spec.prec = prec;
            spec.label = "series/p=" + std::to_string(p) + "/N=" + std::to_string(prec);
            out.push_back(std::move(spec));
        }
}

}  // namespace

std::vector<InstanceSpec> generate_catalog(const CatalogBounds& bounds) {
    std::vector<InstanceSpec> out;
    append_finite_instances(bounds, out);
    append_semigroup_instances(bounds, out);
    append_scaled_instances(bounds, out);
    append_series_instances(out);
    return out;
}

}  // namespace amalgam
