#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "composa/bidiff.hpp"
#include "composa/sampler.hpp"

using namespace composa;

namespace {
const int E = -1;  // elliptic epsilon for the Moyal checks
PhasePoly Q() { return PhasePoly::var_q(0, 1, E); }
PhasePoly P() { return PhasePoly::var_p(0, 1, E); }
PhasePoly H() { return PhasePoly::var_hbar(1, E); }
CompositionClass formal_elliptic() { return CompositionClass::elliptic(std::nullopt); }
}  // namespace

TEST_CASE("polynomial ring basics") {
    PhasePoly f = Q() * Q() + P() * Rational(3);
    CHECK(f.qp_degree() == 2);
    CHECK((f - f).is_zero());
    CHECK(f * PhasePoly::one(1, E) == f);
    CHECK(f.derivative(0, false) == Q() * Rational(2));
    CHECK(f.derivative(0, true) == PhasePoly::constant(PairScalar::from_rational(3, E)));
    CHECK(Q().pow(3).qp_degree() == 3);
    // dof promotion keeps exponents attached to the right variables
    PhasePoly g = PhasePoly::var_q(1, 2, E);
    CHECK((f + g).dof() == 2);
    CHECK((f + g).derivative(1, false) == PhasePoly::one(2, E));
}

TEST_CASE("bi-vector powers against hand values") {
    PhasePoly q2 = Q().pow(2), p2 = P().pow(2);
    CHECK(bidiff_power(q2, p2, 0) == q2 * p2);
    CHECK(bidiff_power(q2, p2, 1) == Q() * P() * Rational(4));
    CHECK(bidiff_power(q2, p2, 2) == PhasePoly::constant(PairScalar::from_rational(4, E)));
    CHECK(bidiff_power(q2, p2, 3).is_zero());
    CHECK(poisson(Q(), P()) == PhasePoly::one(1, E));
    CHECK(poisson(P(), Q()) == -PhasePoly::one(1, E));
}

TEST_CASE("Poisson bracket identities on random draws") {
    Sampler s(7);
    for (int i = 0; i < 20; ++i) {
        PhasePoly f = s.poly(2, 3, E), g = s.poly(2, 3, E), h = s.poly(2, 3, E);
        CHECK((poisson(f, g) + poisson(g, f)).is_zero());
        // Leibniz rule for the pointwise product
        CHECK(poisson(f, g * h) == poisson(f, g) * h + g * poisson(f, h));
        // Jacobi
        CHECK((poisson(f, poisson(g, h)) + poisson(h, poisson(f, g)) + poisson(g, poisson(h, f)))
                  .is_zero());
    }
}

TEST_CASE("Moyal sine bracket frozen values") {
    auto cls = formal_elliptic();
    // sin bracket of q^3, p^3: 9 q^2 p^2 - (3/2) hbar^2
    PhasePoly expect = Q().pow(2) * P().pow(2) * Rational(9) - H().pow(2) * Rational(3, 2);
    CHECK(moyal_sine(Q().pow(3), P().pow(3), cls) == expect);
    // lowest order is the Poisson bracket
    CHECK(moyal_sine(Q(), P(), cls) == PhasePoly::one(1, E));
    CHECK(moyal_sine(Q().pow(2), P(), cls) == Q() * Rational(2));
}

TEST_CASE("Moyal cosine bracket frozen values") {
    auto cls = formal_elliptic();
    // cos bracket of q^2, p^2: q^2 p^2 - hbar^2 / 2
    PhasePoly expect = Q().pow(2) * P().pow(2) - H().pow(2) * Rational(1, 2);
    CHECK(moyal_cosine(Q().pow(2), P().pow(2), cls) == expect);
    CHECK(moyal_cosine(Q(), P(), cls) == Q() * P());
    CHECK(moyal_cosine(PhasePoly::one(1, E), Q(), cls) == Q());
}

TEST_CASE("star product and the canonical commutator") {
    auto cls = formal_elliptic();
    PhasePoly qp = star(Q(), P(), cls, +1);
    PhasePoly pq = star(P(), Q(), cls, +1);
    CHECK(qp - pq == H() * PairScalar::unit_j(E));
    CHECK(qp + pq == Q() * P() * Rational(2));
    // star recombines from the sine and cosine brackets
    Sampler s(11);
    for (int i = 0; i < 10; ++i) {
        PhasePoly f = s.poly(1, 4, E), g = s.poly(1, 4, E);
        PhasePoly via = moyal_cosine(f, g, cls) +
                        moyal_sine(f, g, cls).mul_hbar(1) * (PairScalar::unit_j(E) * Rational(1, 2));
        CHECK(star(f, g, cls, +1) == via);
    }
}

TEST_CASE("classical limit of the brackets") {
    auto cls = formal_elliptic();
    Sampler s(13);
    for (int i = 0; i < 25; ++i) {
        PhasePoly f = s.poly(2, 4, E), g = s.poly(2, 4, E);
        CHECK(moyal_sine(f, g, cls).hbar_coefficient(0) == poisson(f, g));
        CHECK(moyal_cosine(f, g, cls).hbar_coefficient(0) == f * g);
    }
}

TEST_CASE("moyal brackets reject non-elliptic classes") {
    CHECK_THROWS_AS(moyal_sine(Q(), P(), CompositionClass::parabolic()),
                    UnsupportedRepresentationError);
    CHECK_THROWS_AS(star(Q(), P(), CompositionClass::hyperbolic(), +1),
                    UnsupportedRepresentationError);
}

TEST_CASE("printing") {
    CHECK((Q().pow(2) * P() - PhasePoly::one(1, E)).str() == "-1 + q^2*p");
    CHECK((Q() * PairScalar(1, Rational(1, 2), E)).str() == "(1 + 1/2*J)*q");
    CHECK(PhasePoly::zero(1, E).str() == "0");
}
