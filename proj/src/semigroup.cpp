#include "amalgam/semigroup.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

namespace amalgam {

namespace {

std::string gens_string(const std::vector<unsigned>& gens) {
    std::string s = "<";
    for (std::size_t i = 0; i < gens.size(); ++i)
        s += (i ? "," : "") + std::to_string(gens[i]);
    return s + ">";
}

}  // namespace

NumericalSemigroup semigroup(std::vector<unsigned> gens) {
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    if (!gens.empty() && gens.front() == 0) gens.erase(gens.begin());
    if (gens.empty())
        fail(ErrorKind::invalid_parameter, "semigroup: no positive generators");
    unsigned g = 0;
    for (unsigned x : gens) g = std::gcd(g, x);
    if (g != 1)
        fail(ErrorKind::invalid_parameter,
             "semigroup: gcd of generators " + gens_string(gens) + " is " +
                 std::to_string(g) + ", not 1");

    NumericalSemigroup s;
    unsigned m = gens.front();
    // Sieve, growing until a run of m consecutive members appears; from the
    // start of such a run everything is a member.
    std::size_t bound = 2 * gens.back() + 2;
    std::vector<bool> bits;
    std::size_t run_start = 0;
    while (true) {
        bits.assign(bound, false);
        bits[0] = true;
        for (std::size_t n = 1; n < bound; ++n)
            for (unsigned x : gens)
                if (n >= x && bits[n - x]) { bits[n] = true; break; }
        std::size_t run = 0;
        bool found = false;
        for (std::size_t n = 1; n < bound; ++n) {
            run = bits[n] ? run + 1 : 0;
            if (run >= m) {
                run_start = n - m + 1;
                found = true;
                break;
            }
        }
        if (found) break;
        bound *= 2;
    }
    long frobenius = -1;
    for (std::size_t n = 0; n < run_start; ++n)
        if (!bits[n]) {
            frobenius = static_cast<long>(n);
            s.gaps.push_back(static_cast<unsigned>(n));
        }
    s.frobenius = frobenius;
    s.conductor = static_cast<unsigned>(frobenius + 1);
    s.multiplicity = m;
    s.member_bits.assign(bits.begin(),
                         bits.begin() + std::min(bound, static_cast<std::size_t>(
                                                            s.conductor + 2 * m + 2)));
    for (std::size_t n = s.conductor; n < s.member_bits.size(); ++n)
        s.member_bits[n] = true;

    // minimal generators: positive members not sums of two positive members
    for (unsigned e = 1; e <= s.conductor + m; ++e) {
        if (!s.contains(e)) continue;
        bool decomposable = false;
        for (unsigned a = 1; a < e; ++a)
            if (s.contains(a) && s.contains(static_cast<long>(e) - a)) {
                decomposable = true;
                break;
            }
        if (!decomposable) s.gens.push_back(e);
    }
    return s;
}

unsigned SemigroupIdeal::min_element() const {
    for (std::size_t n = 0; n < member_bits.size(); ++n)
        if (member_bits[n]) return static_cast<unsigned>(n);
    return tail_start;
}

bool SemigroupIdeal::subset_of_ambient() const {
    for (std::size_t n = 0; n < member_bits.size(); ++n)
        if (member_bits[n] && !ambient.contains(static_cast<long>(n))) return false;
    return true;  // past the window both are cofinal
}

SemigroupIdeal semigroup_ideal(const NumericalSemigroup& S, std::vector<unsigned> gens) {
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    if (gens.empty())
        fail(ErrorKind::invalid_parameter, "semigroup_ideal: empty generator list");
    SemigroupIdeal e;
    e.ambient = S;
    e.gens = gens;
    e.tail_start = gens.back() + S.conductor;
    std::size_t window = e.tail_start + 2 * S.multiplicity + 2;
    e.member_bits.assign(window, false);
    for (unsigned g : gens)
        for (std::size_t n = g; n < window; ++n)
            if (S.contains(static_cast<long>(n) - g)) e.member_bits[n] = true;
    return e;
}

SemigroupIdeal canonical_ideal(const NumericalSemigroup& S) {
    SemigroupIdeal k;
    k.ambient = S;
    k.tail_start = S.conductor;
    std::size_t window = S.conductor + 2 * S.multiplicity + 2;
    k.member_bits.assign(window, false);
    for (std::size_t z = 0; z < window; ++z)
        k.member_bits[z] = !S.contains(S.frobenius - static_cast<long>(z));
    // S <= K(S): z and F-z cannot both be members
    for (std::size_t z = 0; z < window; ++z)
        if (S.contains(static_cast<long>(z)) && !k.member_bits[z])
            fail(ErrorKind::invariant_violation, "canonical ideal does not contain S");
    k.gens = minimal_generators(k);
    return k;
}

std::vector<unsigned> minimal_generators(const SemigroupIdeal& E) {
    const NumericalSemigroup& S = E.ambient;
    std::vector<unsigned> result;
    // any member >= tail_start + m is (member - m) + m, so the scan window
    // below is exhaustive
    for (unsigned e = 0; e < E.tail_start + S.multiplicity; ++e) {
        if (!E.contains(e)) continue;
        bool reachable = false;
        for (unsigned s = 1; s <= e && !reachable; ++s)
            if (S.contains(s) && E.contains(static_cast<long>(e) - s)) reachable = true;
        if (!reachable) result.push_back(e);
    }
    return result;
}

unsigned nu(const SemigroupIdeal& E) {
    return static_cast<unsigned>(minimal_generators(E).size());
}

unsigned colength_shift(const SemigroupIdeal& E, unsigned x) {
    // The count is the length of E/(x+E) only when x+E <= E, i.e. when the
    // shift lies in the ambient semigroup; outside it the quotient is not a
    // module and the identity |E \ (x+E)| = x genuinely fails.
    if (!E.ambient.contains(x))
        fail(ErrorKind::hypothesis_violation,
             "colength_shift: shift " + std::to_string(x) +
                 " is not a member of the ambient semigroup");
    unsigned count = 0;
    for (unsigned e = 0; e < E.tail_start + x; ++e)
        if (E.contains(e) && !E.contains(static_cast<long>(e) - x)) ++count;
    return count;
}

DuplicationInvariants duplication_invariants(const NumericalSemigroup& S,
                                             const SemigroupIdeal& E) {
    if (E.gens.empty())
        fail(ErrorKind::invalid_parameter, "duplication: empty ideal");
    if (!E.subset_of_ambient())
        fail(ErrorKind::hypothesis_violation,
             "duplication: E must be an integral ideal of S");
    DuplicationInvariants inv;
    inv.multiplicity = S.multiplicity + colength_shift(E, S.multiplicity);
    inv.embdim = S.embdim() + nu(E);
    inv.is_cm = true;  // a nonzero ideal of a 1-dim CM domain is maximal CM

    // Gorenstein iff E is a translate of the canonical ideal: normalize both
    // by their minimum and compare membership over a common window.
    SemigroupIdeal K = canonical_ideal(S);
    unsigned e_min = E.min_element();
    unsigned k_min = K.min_element();  // 0, but do not rely on it
    long shift = static_cast<long>(e_min) - static_cast<long>(k_min);
    unsigned window =
        std::max(E.tail_start, static_cast<unsigned>(K.tail_start + shift)) +
        S.multiplicity + 1;
    bool translate = true;
    for (unsigned n = 0; n < window && translate; ++n)
        if (E.contains(n) != K.contains(static_cast<long>(n) - shift)) translate = false;
    inv.is_gorenstein = translate;
    return inv;
}

unsigned scaled_truncation_bound(const NumericalSemigroup& S, unsigned d,
                                 const NumericalSemigroup& T, const SemigroupIdeal& E) {
    unsigned base = d * (T.conductor + d * S.multiplicity) + 1;
    unsigned s_part = S.conductor + S.multiplicity + 1;
    unsigned e_part = E.tail_start + d * S.multiplicity + 1;
    return std::max({base, s_part, e_part});
}

unsigned scaled_amalgam_multiplicity(const NumericalSemigroup& S, unsigned d,
                                     const NumericalSemigroup& T,
                                     const SemigroupIdeal& E) {
    if (d == 0) fail(ErrorKind::invalid_parameter, "scaling factor must be positive");
    // d*S <= T, checked up to the conductor of T (beyond it T is full)
    for (unsigned s = 0; s < T.conductor; ++s)
        if (S.contains(s) && !T.contains(static_cast<long>(d) * s))
            fail(ErrorKind::hypothesis_violation,
                 "d*S is not contained in T at s=" + std::to_string(s));

    const unsigned m = S.multiplicity;
    unsigned result = m + colength_shift(E, d * m);

    // Independent truncated-basis oracle. The carrier has k-basis
    //   {(t^s, t^{ds}) : s in S}  u  {(0, t^z) : z in E},
    // and the extension of (t^m) has basis the same sets shifted by m and
    // d*m. Count the surviving basis elements below the truncation bound.
    const unsigned bound = scaled_truncation_bound(S, d, T, E);
    std::set<std::pair<long, long>> basis_d, basis_id;
    for (unsigned s = 0; s < bound; ++s)
        if (S.contains(s)) basis_d.insert({s, static_cast<long>(d) * s});
    for (unsigned z = 0; z < bound; ++z)
        if (E.contains(z)) basis_d.insert({-1, z});
    for (unsigned s = 0; s < bound; ++s)
        if (S.contains(s)) basis_id.insert({s + m, static_cast<long>(d) * (s + m)});
    for (unsigned z = 0; z < bound; ++z)
        if (E.contains(z)) basis_id.insert({-1, static_cast<long>(z) + d * m});
    unsigned survivors = 0;
    for (const auto& pair : basis_d)
        if (!basis_id.count(pair)) ++survivors;
    // within the truncation window the shifted basis must sit inside the
    // carrier basis, or the count above would be meaningless
    for (const auto& pair : basis_id) {
        long witness = pair.first >= 0 ? pair.first : pair.second;
        if (witness < static_cast<long>(bound) && !basis_d.count(pair))
            fail(ErrorKind::invariant_violation,
                 "oracle: shifted basis escapes the carrier basis");
    }
    if (survivors != result)
        fail(ErrorKind::invariant_violation,
             "multiplicity " + std::to_string(result) +
                 " disagrees with basis oracle count " + std::to_string(survivors));
    return result;
}

}  // namespace amalgam
