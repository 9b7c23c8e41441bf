#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

#include "amalgam/errors.hpp"

namespace amalgam {

using Rational = boost::multiprecision::cpp_rational;

/// q lies in the localization Z_(p): its reduced denominator is coprime to p.
bool in_z_localized(const Rational& q, unsigned p);

/// A power series over Q truncated at degree `prec`, with exact coefficients.
/// No floating point anywhere in this module.
struct TruncatedSeries {
    unsigned prec = 0;
    std::vector<Rational> coeffs;  // c0..c_prec

    static TruncatedSeries constant(const Rational& c, unsigned prec);
    static TruncatedSeries monomial(const Rational& c, unsigned degree, unsigned prec);

    TruncatedSeries add(const TruncatedSeries& other) const;
    TruncatedSeries mul(const TruncatedSeries& other) const;  // truncated product
    TruncatedSeries scale(const Rational& c) const;
    bool operator==(const TruncatedSeries& other) const = default;
    std::string to_string() const;
};

/// Membership in S = Z_(p) + T*Q[[T]]: decided by the constant term alone.
bool in_witness_ring(const TruncatedSeries& s, unsigned p);

/// One exact division step: input = p * quotient, re-multiplied and compared.
struct DivisionTranscript {
    TruncatedSeries input;
    TruncatedSeries quotient;
    bool quotient_in_ring = false;
    bool remultiplies = false;
};

struct PrincipalityReport {
    bool ok = false;
    std::vector<DivisionTranscript> transcripts;
};

/// Denominator-stressing coefficients for the T-part of the spanning family:
/// {1, 1/p, p, 1 + 1/p}.
std::vector<Rational> default_test_basis(unsigned p);

/// The maximal ideal N = p*Z_(p) + T*Q[[T]] of S is principal, generated by
/// p: a spanning family of N (the constant p, and T*q over the rational test
/// basis, mixed sums) divides exactly by p with quotient inside S, and
/// conversely p*S lands back in N. Failure raises witness_failure, since it
/// would falsify the principality claim.
PrincipalityReport witness_check_principal_maximal(unsigned p, unsigned prec);
PrincipalityReport witness_check_principal_maximal(unsigned p, unsigned prec,
                                                   const std::vector<Rational>& basis);

struct EmbdimWitness {
    unsigned embdim_a = 0;
    unsigned embdim_d = 0;
    unsigned upper_bound = 0;  // embdim_a + nu(J), strictly larger here
};

/// The lower-bound witness: for A = Z_(p), B = Q[[T]], J = T*B, the image of
/// the maximal ideal generates the unit ideal of B (1/p exists), the maximal
/// ideal of the amalgamation is principal, and so embdim stays 1 on both
/// sides while embdim(A) + nu(J) = 2.
EmbdimWitness witness_embdim_equality(unsigned p, unsigned prec);

}  // namespace amalgam
