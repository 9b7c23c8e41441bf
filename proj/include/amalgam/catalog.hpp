#pragma once

#include <json.hpp>
#include <vector>

#include "amalgam/instance.hpp"
#include "amalgam/semigroup.hpp"

namespace amalgam {

/// Enumeration bounds for the default instance catalog. Everything is
/// deterministic; shrinking any bound yields a subset of the default.
struct CatalogBounds {
    std::size_t max_b_size = 16;      // products of base rings up to this size
    bool pair_products = true;
    bool triple_products = true;
    unsigned semigroup_frobenius_max = 25;
    unsigned semigroup_max_gens = 4;
    unsigned ideal_max_gens = 3;
    unsigned scaled_frobenius_max = 12;
    unsigned scaled_d_max = 3;
    std::size_t cap = kDefaultCap;
};

CatalogBounds bounds_from_json(const nlohmann::json& j);
nlohmann::json bounds_to_json(const CatalogBounds& bounds);

/// Every numerical semigroup with Frobenius number <= frobenius_max and at
/// most max_gens minimal generators, sorted by generator tuples.
std::vector<NumericalSemigroup> enumerate_semigroups(unsigned frobenius_max,
                                                     unsigned max_gens);

/// The deterministic default catalog:
///   - finite amalgamations: every hom between the base local rings (and
///     products for B) crossed with every ideal of B, plus a curated
///     Gorenstein family A = F_2, B = F_2[x]/(x^n), J = (x^{n-1}), n = 2..5
///   - semigroup duplications: every S within bounds, with every ideal
///     generated by at most ideal_max_gens members below the conductor,
///     plus the integral translate of the canonical ideal
///   - scaled semigroup maps (S, d, T, E) with d <= scaled_d_max
///   - series witnesses p in {2,3,5} x N in {2,5,8}
std::vector<InstanceSpec> generate_catalog(const CatalogBounds& bounds);

}  // namespace amalgam
