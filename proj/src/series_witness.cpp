#include "amalgam/series_witness.hpp"

#include <sstream>

namespace amalgam {

using boost::multiprecision::cpp_int;

bool in_z_localized(const Rational& q, unsigned p) {
    return denominator(q) % p != 0;
}

TruncatedSeries TruncatedSeries::constant(const Rational& c, unsigned prec) {
    TruncatedSeries s;
    s.prec = prec;
    s.coeffs.assign(prec + 1, Rational(0));
    s.coeffs[0] = c;
    return s;
}

TruncatedSeries TruncatedSeries::monomial(const Rational& c, unsigned degree,
                                          unsigned prec) {
    TruncatedSeries s;
    s.prec = prec;
    s.coeffs.assign(prec + 1, Rational(0));
    if (degree <= prec) s.coeffs[degree] = c;
    return s;
}

TruncatedSeries TruncatedSeries::add(const TruncatedSeries& other) const {
    if (prec != other.prec)
        fail(ErrorKind::invalid_parameter, "series: mixed precisions");
    TruncatedSeries s = *this;
    for (unsigned i = 0; i <= prec; ++i) s.coeffs[i] += other.coeffs[i];
    return s;
}

TruncatedSeries TruncatedSeries::mul(const TruncatedSeries& other) const {
    if (prec != other.prec)
        fail(ErrorKind::invalid_parameter, "series: mixed precisions");
    TruncatedSeries s;
    s.prec = prec;
    s.coeffs.assign(prec + 1, Rational(0));
    for (unsigned i = 0; i <= prec; ++i)
        for (unsigned j = 0; i + j <= prec; ++j)
            s.coeffs[i + j] += coeffs[i] * other.coeffs[j];
    return s;
}

TruncatedSeries TruncatedSeries::scale(const Rational& c) const {
    TruncatedSeries s = *this;
    for (auto& coeff : s.coeffs) coeff *= c;
    return s;
}

std::string TruncatedSeries::to_string() const {
    std::ostringstream os;
    bool any = false;
    for (unsigned i = 0; i <= prec; ++i) {
        if (coeffs[i] == 0) continue;
        if (any) os << " + ";
        os << coeffs[i];
        if (i >= 1) os << "*T";
        if (i >= 2) os << "^" << i;
        any = true;
    }
    if (!any) os << "0";
    return os.str();
}

bool in_witness_ring(const TruncatedSeries& s, unsigned p) {
    return in_z_localized(s.coeffs[0], p);
}

std::vector<Rational> default_test_basis(unsigned p) {
    Rational ip(1, p);
    return {Rational(1), ip, Rational(p), Rational(1) + ip};
}

namespace {

DivisionTranscript divide_by_prime(const TruncatedSeries& input, unsigned p) {
    DivisionTranscript t;
    t.input = input;
    t.quotient = input.scale(Rational(1, p));
    t.quotient_in_ring = in_witness_ring(t.quotient, p);
    t.remultiplies = t.quotient.scale(Rational(p)) == input;
    return t;
}

}  // namespace

PrincipalityReport witness_check_principal_maximal(unsigned p, unsigned prec) {
    return witness_check_principal_maximal(p, prec, default_test_basis(p));
}

PrincipalityReport witness_check_principal_maximal(unsigned p, unsigned prec,
                                                   const std::vector<Rational>& basis) {
    if (p < 2) fail(ErrorKind::invalid_parameter, "p must be a prime");
    for (unsigned d = 2; d * d <= p; ++d)
        if (p % d == 0) fail(ErrorKind::invalid_parameter, "p must be a prime");
    if (prec < 2) fail(ErrorKind::invalid_parameter, "precision must be at least 2");

    PrincipalityReport report;
    std::vector<TruncatedSeries> family;
    family.push_back(TruncatedSeries::constant(Rational(p), prec));
    for (const Rational& q : basis) {
        family.push_back(TruncatedSeries::monomial(q, 1, prec));
        // mixed elements p + T*q and p + T^k*q at the top degree
        family.push_back(TruncatedSeries::constant(Rational(p), prec)
                             .add(TruncatedSeries::monomial(q, 1, prec)));
        family.push_back(TruncatedSeries::constant(Rational(p), prec)
                             .add(TruncatedSeries::monomial(q, prec, prec)));
    }

    for (const TruncatedSeries& x : family) {
        // every family member lies in N = p*Z_(p) + T*Q[[T]]
        if (!in_z_localized(x.coeffs[0] / p, p))
            fail(ErrorKind::witness_failure,
                 "family member outside the maximal ideal: " + x.to_string());
        DivisionTranscript t = divide_by_prime(x, p);
        if (!t.quotient_in_ring)
            fail(ErrorKind::witness_failure,
                 "division by p leaves the ring: (" + x.to_string() + ")/" +
                     std::to_string(p) + " has constant term " +
                     t.quotient.coeffs[0].str());
        if (!t.remultiplies)
            fail(ErrorKind::witness_failure,
                 "division transcript does not re-multiply: " + x.to_string());
        report.transcripts.push_back(std::move(t));
    }

    // conversely p*S <= N: p * (ring element) has constant term in p*Z_(p)
    for (const Rational& q : basis) {
        TruncatedSeries s =
            TruncatedSeries::constant(Rational(1), prec)
                .add(TruncatedSeries::monomial(q, 1, prec));
        if (!in_witness_ring(s, p))
            fail(ErrorKind::witness_failure, "test element escaped the ring");
        TruncatedSeries ps = s.scale(Rational(p));
        if (!in_z_localized(ps.coeffs[0] / p, p))
            fail(ErrorKind::witness_failure,
                 "p*S escapes the maximal ideal at " + s.to_string());
    }
    report.ok = true;
    return report;
}

EmbdimWitness witness_embdim_equality(unsigned p, unsigned prec) {
    PrincipalityReport principal = witness_check_principal_maximal(p, prec);
    if (!principal.ok)
        fail(ErrorKind::witness_failure, "principality check failed");

    // f(M)B = B: p is invertible in Q[[T]]; exhibit the inverse exactly.
    TruncatedSeries p_series = TruncatedSeries::constant(Rational(p), prec);
    TruncatedSeries inverse = TruncatedSeries::constant(Rational(1, p), prec);
    if (!(p_series.mul(inverse) == TruncatedSeries::constant(Rational(1), prec)))
        fail(ErrorKind::witness_failure, "1/p is not an exact inverse");

    // embdim(A) = 1 for A = Z_(p): M = (p) is principal and p is not in M^2,
    // since p / p^2 = 1/p lies outside Z_(p).
    if (in_z_localized(Rational(1, p), p))
        fail(ErrorKind::witness_failure, "1/p unexpectedly inside Z_(p)");

    // embdim(D) = 1: N = pS is principal (above) and p escapes N^2 = p^2 S,
    // again because 1/p is outside Z_(p). nu(J) = 1 for the principal J = TB.
    EmbdimWitness witness;
    witness.embdim_a = 1;
    witness.embdim_d = 1;
    witness.upper_bound = 2;
    return witness;
}

}  // namespace amalgam
