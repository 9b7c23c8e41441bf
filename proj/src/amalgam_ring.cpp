#include "amalgam/amalgam_ring.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "amalgam/spectrum.hpp"

namespace amalgam {

namespace {

void require(bool condition, const std::string& message) {
    if (!condition) fail(ErrorKind::invariant_violation, message);
}

}  // namespace

std::optional<Elem> AmalgamRing::index_of_pair(Elem a, Elem b) const {
    Elem ambient_index = static_cast<Elem>(a * B->size + b);
    auto it = std::lower_bound(carrier_ambient.begin(), carrier_ambient.end(),
                               ambient_index);
    if (it == carrier_ambient.end() || *it != ambient_index) return std::nullopt;
    return static_cast<Elem>(it - carrier_ambient.begin());
}

IdealSet AmalgamRing::j_zero() const {
    std::vector<Elem> members;
    for (Elem j : J.members) {
        auto idx = index_of_pair(A->zero, j);
        require(idx.has_value(), "J0: pair (0, j) missing from carrier");
        members.push_back(*idx);
    }
    return make_ideal(ring, std::move(members));
}

IdealSet AmalgamRing::j_one() const {
    IdealSet fJ = preimage(f, J);
    std::vector<Elem> members;
    for (Elem x : fJ.members) {
        auto idx = index_of_pair(x, B->zero);
        require(idx.has_value(), "J1: pair (x, 0) missing from carrier");
        members.push_back(*idx);
    }
    return make_ideal(ring, std::move(members));
}

AmalgamRing amalgamate(const RingPtr& A, const RingPtr& B, const RingHom& f,
                       const IdealSet& J, std::size_t cap) {
    if (f.source != A || f.target != B)
        fail(ErrorKind::invalid_parameter, "amalgamate: f must map A to B");
    if (J.ring != B)
        fail(ErrorKind::invalid_parameter, "amalgamate: J must be an ideal of B");
    if (!is_ideal(*B, J.members))
        fail(ErrorKind::invariant_violation, "amalgamate: J fails ideal closure in B");

    AmalgamRing D;
    D.A = A;
    D.B = B;
    D.f = f;
    D.J = J;

    ProductRing ambient = product(A, B, cap);
    D.ambient = ambient.ring;

    // Carrier by direct pair enumeration; (a, j) -> (a, f(a)+j) is injective.
    std::set<Elem> carrier;
    for (Elem a = 0; a < A->size; ++a)
        for (Elem j : J.members)
            carrier.insert(ambient.pair_index(a, B->add(f(a), j)));
    require(carrier.size() == A->size * J.members.size(),
            "amalgamate: carrier size != |A| * |J|");
    D.carrier_ambient.assign(carrier.begin(), carrier.end());

    std::ostringstream label;
    label << A->label << "|><|" << "J" << "(" << B->label << ")";
    Subring sub = ring_from_subset(ambient.ring, D.carrier_ambient,
                                   ambient.ring->zero, ambient.ring->one, label.str());
    D.ring = sub.ring;

    const std::size_t n = D.ring->size;
    D.pair_of.resize(n);
    D.j_of.resize(n);
    std::vector<Elem> pa_map(n), pb_map(n);
    for (std::size_t d = 0; d < n; ++d) {
        Elem ambient_index = D.carrier_ambient[d];
        Elem a = static_cast<Elem>(ambient_index / B->size);
        Elem b = static_cast<Elem>(ambient_index % B->size);
        D.pair_of[d] = {a, b};
        D.j_of[d] = B->sub(b, f(a));
        require(J.contains(D.j_of[d]), "amalgamate: b - f(a) not in J");
        pa_map[d] = a;
        pb_map[d] = b;
    }
    D.pA = hom_from_map(D.ring, A, std::move(pa_map));
    D.pB = hom_from_map(D.ring, B, std::move(pb_map));

    std::vector<Elem> iota_map(A->size);
    for (Elem a = 0; a < A->size; ++a) {
        auto idx = D.index_of_pair(a, f(a));
        require(idx.has_value(), "amalgamate: iota image missing from carrier");
        iota_map[a] = *idx;
    }
    D.iota = hom_from_map(A, D.ring, std::move(iota_map));

    // retraction: pA o iota = id
    for (Elem a = 0; a < A->size; ++a)
        require(D.pA(D.iota(a)) == a, "amalgamate: pA o iota != id at a=" +
                                          std::to_string(a));

    // Ker(pA) = {0} x J
    {
        IdealSet ker = kernel(D.pA);
        std::vector<Elem> expected;
        for (Elem j : J.members) {
            auto idx = D.index_of_pair(A->zero, j);
            require(idx.has_value(), "amalgamate: (0, j) missing");
            expected.push_back(*idx);
        }
        std::sort(expected.begin(), expected.end());
        require(ker.members == expected, "amalgamate: Ker(pA) != {0} x J");
    }

    // Ker(pB) = f^{-1}(J) x {0}; image(pB) = f(A) + J
    IdealSet f_inv_J = preimage(f, J);
    {
        IdealSet ker = kernel(D.pB);
        std::vector<Elem> expected;
        for (Elem x : f_inv_J.members) {
            auto idx = D.index_of_pair(x, B->zero);
            require(idx.has_value(), "amalgamate: (x, 0) missing for x in f^-1(J)");
            expected.push_back(*idx);
        }
        std::sort(expected.begin(), expected.end());
        require(ker.members == expected, "amalgamate: Ker(pB) != f^-1(J) x {0}");
    }
    std::vector<Elem> pb_image = image(D.pB);
    {
        std::set<Elem> expected;
        for (Elem a = 0; a < A->size; ++a)
            for (Elem j : J.members) expected.insert(B->add(f(a), j));
        require(pb_image == std::vector<Elem>(expected.begin(), expected.end()),
                "amalgamate: image(pB) != f(A) + J");
    }

    // Materialize f(A)+J as a subring of B and J as an ideal of it, then
    // gamma: D -> (f(A)+J)/J, (a, f(a)+j) -> f(a) + J.
    D.fAJ = ring_from_subset(B, pb_image, B->zero, B->one,
                             "f(" + A->label + ")+J in " + B->label);
    {
        std::vector<Elem> j_members;
        for (std::size_t k = 0; k < D.fAJ.carrier.size(); ++k)
            if (J.contains(D.fAJ.carrier[k])) j_members.push_back(static_cast<Elem>(k));
        D.J_in_fAJ = make_ideal(D.fAJ.ring, std::move(j_members));
        require(D.J_in_fAJ.members.size() == J.members.size(),
                "amalgamate: J does not embed in f(A)+J");
    }
    QuotientRing gamma_quot = quotient(D.fAJ.ring, D.J_in_fAJ);
    D.gamma_target = gamma_quot.ring;
    {
        std::vector<int> pos(B->size, -1);
        for (std::size_t k = 0; k < D.fAJ.carrier.size(); ++k)
            pos[D.fAJ.carrier[k]] = static_cast<int>(k);
        std::vector<Elem> gamma_map(n);
        for (std::size_t d = 0; d < n; ++d) {
            Elem b = D.pair_of[d].second;
            require(pos[b] >= 0, "amalgamate: pB value outside f(A)+J");
            gamma_map[d] = gamma_quot.projection(static_cast<Elem>(pos[b]));
        }
        D.gamma = hom_from_map(D.ring, D.gamma_target, std::move(gamma_map));
    }
    {
        // gamma surjective with kernel f^{-1}(J) x J
        std::vector<Elem> gamma_image = image(D.gamma);
        require(gamma_image.size() == D.gamma_target->size,
                "amalgamate: gamma not surjective");
        IdealSet ker = kernel(D.gamma);
        std::vector<Elem> expected;
        for (Elem x : f_inv_J.members)
            for (Elem j : J.members) {
                auto idx = D.index_of_pair(x, B->add(f(x), j));
                require(idx.has_value(), "amalgamate: kernel pair missing");
                expected.push_back(*idx);
            }
        std::sort(expected.begin(), expected.end());
        expected.erase(std::unique(expected.begin(), expected.end()), expected.end());
        require(ker.members == expected, "amalgamate: Ker(gamma) != f^-1(J) x J");
    }

    return D;
}

JoinedIdeal join_ideal(const AmalgamRing& D, const IdealSet& I,
                       const std::vector<Elem>& H_input) {
    if (I.ring != D.A)
        fail(ErrorKind::invalid_parameter, "join_ideal: I must be an ideal of A");
    if (!is_ideal(*D.A, I.members))
        fail(ErrorKind::invariant_violation, "join_ideal: I fails ideal closure");

    std::vector<Elem> H(H_input);
    std::sort(H.begin(), H.end());
    H.erase(std::unique(H.begin(), H.end()), H.end());

    const FiniteRing& B = *D.B;
    for (Elem h : H)
        if (!D.J.contains(h))
            fail(ErrorKind::hypothesis_violation,
                 "join_ideal: H not inside J, witness " + describe_elem(B, h));
    // f(I) J <= H
    for (Elem i : I.members)
        for (Elem j : D.J.members) {
            Elem v = B.mul(D.f(i), j);
            if (!std::binary_search(H.begin(), H.end(), v))
                fail(ErrorKind::hypothesis_violation,
                     "join_ideal: f(I)J not inside H, witness f(" + std::to_string(i) +
                         ")*" + std::to_string(j));
        }
    // H an (f(A)+J)-submodule: additively closed, 0 in H, stable under f(a)+j
    if (!std::binary_search(H.begin(), H.end(), B.zero))
        fail(ErrorKind::hypothesis_violation, "join_ideal: 0 not in H");
    for (Elem h1 : H)
        for (Elem h2 : H)
            if (!std::binary_search(H.begin(), H.end(), B.add(h1, h2)))
                fail(ErrorKind::hypothesis_violation,
                     "join_ideal: H not additively closed at (" + std::to_string(h1) +
                         "," + std::to_string(h2) + ")");
    for (Elem c : D.fAJ.carrier)
        for (Elem h : H)
            if (!std::binary_search(H.begin(), H.end(), B.mul(c, h)))
                fail(ErrorKind::hypothesis_violation,
                     "join_ideal: H not an (f(A)+J)-submodule, witness (" +
                         std::to_string(c) + "," + std::to_string(h) + ")");

    std::vector<Elem> members;
    for (Elem i : I.members)
        for (Elem h : H) {
            auto idx = D.index_of_pair(i, B.add(D.f(i), h));
            if (!idx)
                fail(ErrorKind::invariant_violation, "join_ideal: pair missing from carrier");
            members.push_back(*idx);
        }
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    if (members.size() != I.members.size() * H.size())
        fail(ErrorKind::invariant_violation, "join_ideal: |I rejoin H| != |I|*|H|");

    JoinedIdeal result;
    result.I = I;
    result.H = std::move(H);
    result.join = make_ideal(D.ring, std::move(members));  // closure verified here
    return result;
}

std::optional<IdealSet> is_local_amalgam(const AmalgamRing& D) {
    if (D.A->is_zero_ring())
        fail(ErrorKind::not_local, "is_local_amalgam: zero ring A admits no local query");

    SpecReport spec_A = primes(D.A);
    bool a_local = spec_A.maximal_indices.size() == 1;

    IdealSet jac_B = jacobson(D.B);
    bool j_in_jac = std::includes(jac_B.members.begin(), jac_B.members.end(),
                                  D.J.members.begin(), D.J.members.end());

    // Cross-check against the maximal-ideal count of D itself.
    SpecReport spec_D = primes(D.ring);
    bool d_local = spec_D.maximal_indices.size() == 1;
    if (d_local != (a_local && j_in_jac))
        fail(ErrorKind::invariant_violation,
             "is_local_amalgam: locality criterion disagrees with the spectrum "
             "of D for " + D.ring->label);

    if (!d_local) return std::nullopt;

    const IdealSet& M = spec_A.primes[spec_A.maximal_indices[0]].ideal;
    JoinedIdeal mj = join_ideal(D, M, D.J.members);
    const IdealSet& max_D = spec_D.primes[spec_D.maximal_indices[0]].ideal;
    if (mj.join.members != max_D.members)
        fail(ErrorKind::invariant_violation,
             "is_local_amalgam: M |><| J is not the maximal ideal of D");
    return mj.join;
}

}  // namespace amalgam
