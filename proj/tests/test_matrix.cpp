#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "composa/matrix.hpp"
#include "composa/sampler.hpp"

using namespace composa;

TEST_CASE("matrix ring basics") {
    Sampler s(3);
    auto a = s.matrix(3, -1), b = s.matrix(3, -1), c = s.matrix(3, -1);
    auto id = SquareMatrix::identity(3, -1);
    CHECK(a * id == a);
    CHECK(id * a == a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - a).is_zero());
    CHECK_THROWS_AS(a + s.matrix(2, -1), DimMismatchError);
    CHECK_THROWS_AS(a + s.matrix(3, 1), ClassMismatchError);
}

TEST_CASE("conjugate transpose and hermitean split") {
    Sampler s(5);
    auto a = s.matrix(3, -1);
    CHECK(a.conjugate_transpose().conjugate_transpose() == a);
    auto [h, k] = hermitean_split(a);
    CHECK(h + k == a);
    CHECK(h.conjugate_transpose() == h);
    CHECK(k.conjugate_transpose() == -k);
    CHECK_THROWS_AS(hermitean_split(s.matrix(2, 1)), UnsupportedRepresentationError);
}

TEST_CASE("kron is bilinear and multiplicative") {
    Sampler s(9);
    auto a = s.matrix(2, -1), b = s.matrix(3, -1), c = s.matrix(2, -1), d = s.matrix(3, -1);
    CHECK(kron(a, b) * kron(c, d) == kron(a * c, b * d));
    CHECK(kron(a + c, b) == kron(a, b) + kron(c, b));
    CHECK(kron(SquareMatrix::identity(2, -1), SquareMatrix::identity(3, -1)) ==
          SquareMatrix::identity(6, -1));
}

TEST_CASE("pauli matrices and the scaled commutator") {
    CompositionClass cls = CompositionClass::elliptic();
    auto sx = pauli_x(-1), sy = pauli_y(-1), sz = pauli_z(-1);
    // hbar = 1: sx alpha sy = J(sx sy - sy sx) = -2 sz
    CHECK(mat_alpha(sx, sy, cls) == sz * Rational(-2));
    CHECK(mat_sigma(sx, sy).is_zero());
    CHECK(mat_sigma(sx, sx) == SquareMatrix::identity(2, -1));
    // scaling check with hbar = 1/2
    CompositionClass half = CompositionClass::elliptic(Rational(1, 2));
    CHECK(mat_alpha(sx, sy, half) == sz * Rational(-4));
}

TEST_CASE("J action squares to epsilon") {
    for (int eps : {-1, 1}) {
        CompositionClass cls = eps == -1 ? CompositionClass::elliptic() : CompositionClass::hyperbolic();
        Sampler s(1);
        auto a = s.matrix(2, eps);
        CHECK(apply_J(apply_J(a, cls), cls) == a * Rational(eps));
    }
}

TEST_CASE("matrix representation rejects the parabolic class") {
    Sampler s(2);
    auto a = s.matrix(2, 0), b = s.matrix(2, 0);
    CHECK_THROWS_AS(mat_alpha(a, b, CompositionClass::parabolic()), UnsupportedRepresentationError);
    // epsilon must match the class
    auto c = s.matrix(2, 1), d = s.matrix(2, 1);
    CHECK_THROWS_AS(mat_alpha(c, d, CompositionClass::elliptic()), ClassMismatchError);
}

TEST_CASE("printing") {
    CHECK(pauli_x(-1).str() == "[[0, 1], [1, 0]]");
    CHECK(pauli_y(-1).str() == "[[0, -J], [J, 0]]");
}
