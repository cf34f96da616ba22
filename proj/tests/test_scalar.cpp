#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "composa/pair_scalar.hpp"

using namespace composa;

TEST_CASE("arithmetic respects the unit square") {
    for (int eps : {-1, 0, 1}) {
        PairScalar j = PairScalar::unit_j(eps);
        CHECK(j * j == PairScalar::from_rational(eps, eps));
        PairScalar a(Rational(1, 2), Rational(3), eps);
        PairScalar b(Rational(-2), Rational(1, 4), eps);
        CHECK((a + b) - b == a);
        CHECK(a * b == b * a);
        CHECK(a * (b + b) == a * b + a * b);
    }
}

TEST_CASE("epsilon mismatch is a hard error") {
    PairScalar a = PairScalar::one(-1);
    PairScalar b = PairScalar::one(0);
    CHECK_THROWS_AS(a + b, ClassMismatchError);
    CHECK_THROWS_AS(a * b, ClassMismatchError);
    CHECK_THROWS_AS(PairScalar(1, 1, 5), ClassMismatchError);
}

TEST_CASE("modulus and inversion") {
    // Complex: 3+4J has modulus 25.
    PairScalar c(3, 4, -1);
    CHECK(c.modulus() == 25);
    CHECK(c * c.inverse() == PairScalar::one(-1));

    // Dual: (2+3u)^-1 = 1/2 - 3/4 u; pure-dual elements are singular.
    PairScalar d(2, 3, 0);
    CHECK(d.inverse() == PairScalar(Rational(1, 2), Rational(-3, 4), 0));
    CHECK_THROWS_AS(PairScalar(0, 5, 0).inverse(), NotInvertibleError);

    // Split-complex: 1+u lies on the null cone.
    CHECK_THROWS_AS(PairScalar(1, 1, 1).inverse(), NotInvertibleError);
    PairScalar h(2, 1, 1);
    CHECK(h.modulus() == 3);
    CHECK(h * h.inverse() == PairScalar::one(1));
}

TEST_CASE("conjugation and printing") {
    PairScalar c(Rational(1, 2), Rational(-3, 4), -1);
    CHECK(c.conjugate().im() == Rational(3, 4));
    CHECK((c * c.conjugate()).is_rational());
    CHECK(c.str() == "1/2 - 3/4*J");
    CHECK(PairScalar(0, 1, -1).str() == "J");
    CHECK(PairScalar(5, 0, -1).str() == "5");
    CHECK(PairScalar(1, 1, -1).str() == "1 + J");
}
