#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "composa/algebra.hpp"
#include "composa/sampler.hpp"

using namespace composa;

namespace {

/// Check every defining identity of the two-product structure on random
/// triples from one algebra.
template <class A, class Draw>
void check_identities(const A& alg, Draw draw, unsigned count, bool parabolic) {
    for (unsigned i = 0; i < count; ++i) {
        auto f = draw(), g = draw(), h = draw();
        CAPTURE(i);
        CHECK(A::is_zero(antisymmetry_defect_alpha(alg, f, g)));
        CHECK(A::is_zero(symmetry_defect_sigma(alg, f, g)));
        CHECK(A::is_zero(jacobi_defect(alg, f, g, h)));
        CHECK(A::is_zero(jordan_defect(alg, f, g)));
        CHECK(A::is_zero(leibniz_defect(alg, f, g, h, Product::Alpha)));
        CHECK(A::is_zero(leibniz_defect(alg, f, g, h, Product::Sigma)));
        CHECK(A::is_zero(compatibility_defect(alg, f, g, h)));
        CHECK(A::is_zero(associator(alg, Product::BetaPlus, f, g, h)));
        CHECK(A::is_zero(associator(alg, Product::BetaMinus, f, g, h)));
        if (parabolic) CHECK(A::is_zero(associator(alg, Product::Sigma, f, g, h)));
        // unit laws
        auto u = alg.unit();
        CHECK(A::is_zero(alg.alpha(u, f)));
        CHECK(A::is_zero(alg.alpha(f, u)));
        CHECK(A::is_zero(alg.sigma(u, f) - f));
        CHECK(A::is_zero(alg.sigma(f, u) - f));
    }
}

}  // namespace

TEST_CASE("elliptic matrix algebra satisfies all identities") {
    MatrixAlgebra alg{CompositionClass::elliptic(), 3};
    Sampler s(21);
    check_identities(alg, [&] { return s.matrix(3, -1); }, 25, false);
}

TEST_CASE("hyperbolic matrix algebra satisfies all identities") {
    MatrixAlgebra alg{CompositionClass::hyperbolic(Rational(2)), 2};
    Sampler s(22);
    check_identities(alg, [&] { return s.matrix(2, 1); }, 25, false);
}

TEST_CASE("elliptic phase algebra satisfies all identities") {
    PhaseAlgebra alg(CompositionClass::elliptic(Rational(1, 3)), 1);
    Sampler s(23);
    check_identities(alg, [&] { return s.poly(1, 3, -1); }, 15, false);
}

TEST_CASE("elliptic phase algebra with formal hbar") {
    PhaseAlgebra alg(CompositionClass::elliptic(std::nullopt), 2);
    Sampler s(24);
    check_identities(alg, [&] { return s.poly(2, 3, -1); }, 10, false);
}

TEST_CASE("parabolic phase algebra satisfies all identities") {
    PhaseAlgebra alg(CompositionClass::parabolic(), 2);
    Sampler s(25);
    check_identities(alg, [&] { return s.poly(2, 3, 0); }, 15, true);
}

TEST_CASE("beta products recombine sigma and alpha") {
    MatrixAlgebra alg{CompositionClass::elliptic(), 2};
    Sampler s(26);
    for (int i = 0; i < 10; ++i) {
        auto a = s.matrix(2, -1), b = s.matrix(2, -1);
        // beta+ + beta- = 2 sigma; beta+ - beta- = J hbar alpha
        auto bp = alg.beta(a, b, +1), bm = alg.beta(a, b, -1);
        CHECK(bp + bm == alg.sigma(a, b) * Rational(2));
        CHECK(bp - bm == alg.alpha(a, b) * PairScalar::unit_j(-1));
        // elliptic beta- is the plain matrix product
        CHECK(bm == a * b);
        CHECK(bp == b * a);
    }
}

TEST_CASE("phase beta matches the star product") {
    CompositionClass cls = CompositionClass::elliptic(Rational(1, 2));
    PhaseAlgebra alg(cls, 1);
    Sampler s(27);
    for (int i = 0; i < 10; ++i) {
        auto f = s.poly(1, 3, -1), g = s.poly(1, 3, -1);
        CHECK(alg.beta(f, g, +1) == star(f, g, cls, +1).substitute_hbar(Rational(1, 2)));
    }
}

TEST_CASE("unsupported class and representation pairings") {
    CHECK_THROWS_AS(PhaseAlgebra(CompositionClass::hyperbolic(), 1), UnsupportedRepresentationError);
    MatrixAlgebra bad{CompositionClass::parabolic(), 2};
    Sampler s(1);
    CHECK_THROWS_AS(bad.alpha(s.matrix(2, 0), s.matrix(2, 0)), UnsupportedRepresentationError);
}
