#include <doctest.h>

#include "amalgam/series_witness.hpp"

using namespace amalgam;

TEST_CASE("localized-integer membership") {
    CHECK(in_z_localized(Rational(3, 4), 3));
    CHECK(!in_z_localized(Rational(1, 3), 3));
    CHECK(in_z_localized(Rational(6, 2), 3));  // reduces to 3/1
    CHECK(in_z_localized(Rational(0), 2));
}

TEST_CASE("truncated series arithmetic is exact") {
    TruncatedSeries a = TruncatedSeries::constant(Rational(1, 3), 4);
    TruncatedSeries t = TruncatedSeries::monomial(Rational(1, 7), 1, 4);
    TruncatedSeries sum = a.add(t);
    CHECK(sum.coeffs[0] == Rational(1, 3));
    CHECK(sum.coeffs[1] == Rational(1, 7));
    TruncatedSeries square = sum.mul(sum);
    CHECK(square.coeffs[0] == Rational(1, 9));
    CHECK(square.coeffs[1] == Rational(2, 21));
    CHECK(square.coeffs[2] == Rational(1, 49));
    // truncation: degree-5 terms vanish
    TruncatedSeries top = TruncatedSeries::monomial(Rational(1), 4, 4);
    CHECK(top.mul(t).coeffs == TruncatedSeries::constant(Rational(0), 4).coeffs);
}

TEST_CASE("principal maximal ideal witness") {
    SUBCASE("p = 2, N = 5: T divides by 2 with quotient T/2 inside the ring") {
        PrincipalityReport report = witness_check_principal_maximal(2, 5);
        CHECK(report.ok);
        bool saw_t = false;
        for (const auto& t : report.transcripts) {
            CHECK(t.quotient_in_ring);
            CHECK(t.remultiplies);
            if (t.input.coeffs[1] == Rational(1) && t.input.coeffs[0] == Rational(0)) {
                saw_t = true;
                CHECK(t.quotient.coeffs[1] == Rational(1, 2));
            }
        }
        CHECK(saw_t);
    }
    SUBCASE("p = 3, N = 8: (3 + T + T^2)/3 has unit constant term") {
        PrincipalityReport report = witness_check_principal_maximal(3, 8);
        CHECK(report.ok);
        TruncatedSeries mixed = TruncatedSeries::constant(Rational(3), 8)
                                    .add(TruncatedSeries::monomial(Rational(1), 1, 8))
                                    .add(TruncatedSeries::monomial(Rational(1), 2, 8));
        TruncatedSeries quotient = mixed.scale(Rational(1, 3));
        CHECK(quotient.coeffs[0] == Rational(1));
        CHECK(in_witness_ring(quotient, 3));
        CHECK(quotient.scale(Rational(3)).coeffs == mixed.coeffs);
    }
    SUBCASE("bad parameters") {
        CHECK_THROWS_AS(witness_check_principal_maximal(4, 5), AmalgamError);
        CHECK_THROWS_AS(witness_check_principal_maximal(2, 1), AmalgamError);
    }
}

TEST_CASE("embedding dimension witness grid") {
    for (unsigned p : {2u, 3u, 5u})
        for (unsigned prec : {2u, 5u, 8u}) {
            CAPTURE(p); CAPTURE(prec);
            EmbdimWitness witness = witness_embdim_equality(p, prec);
            CHECK(witness.embdim_a == 1);
            CHECK(witness.embdim_d == 1);
            CHECK(witness.upper_bound == 2);
            CHECK(witness.embdim_d < witness.upper_bound);
        }
}
