#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "composa/parser.hpp"
#include "composa/sampler.hpp"

using namespace composa;

namespace {
PhasePoly poly(const std::string& text, int eps = -1) {
    return std::get<PhasePoly>(parse_expression(text, eps));
}
SquareMatrix mat(const std::string& text, int eps = -1) {
    return std::get<SquareMatrix>(parse_expression(text, eps));
}
}  // namespace

TEST_CASE("scalars and variables") {
    CHECK(poly("3/4") == PhasePoly::constant(PairScalar::from_rational(Rational(3, 4), -1)));
    CHECK(poly("-2") == PhasePoly::constant(PairScalar::from_rational(-2, -1)));
    CHECK(poly("J") == PhasePoly::constant(PairScalar::unit_j(-1)));
    CHECK(poly("J", 0) == PhasePoly::constant(PairScalar::unit_j(0)));
    CHECK(poly("q") == PhasePoly::var_q(0, 1, -1));
    CHECK(poly("p2") == PhasePoly::var_p(1, 2, -1));
    CHECK(poly("hbar") == PhasePoly::var_hbar(1, -1));
}

TEST_CASE("precedence and grouping") {
    PhasePoly q = PhasePoly::var_q(0, 1, -1), p = PhasePoly::var_p(0, 1, -1);
    CHECK(poly("q + p*q") == q + p * q);
    CHECK(poly("(q + p)*q") == (q + p) * q);
    CHECK(poly("q^2*p - 1/2") ==
          q.pow(2) * p - PhasePoly::constant(PairScalar::from_rational(Rational(1, 2), -1)));
    CHECK(poly("-q - p") == -(q + p));
    CHECK(poly("2*q^3") == q.pow(3) * Rational(2));
}

TEST_CASE("matrix literals") {
    CHECK(mat("[[0, 1], [1, 0]]") == pauli_x(-1));
    CHECK(mat("[[0, -J], [J, 0]]") == pauli_y(-1));
    CHECK(mat("[[1, 0], [0, -1]]") == pauli_z(-1));
    // entries are full scalar expressions
    CHECK(mat("[[1/2 + J, 0], [0, 2*3]]").at(0, 0) == PairScalar(Rational(1, 2), 1, -1));
    // matrix arithmetic inside the expression
    CHECK(mat("[[0,1],[1,0]] * [[0,1],[1,0]]") == SquareMatrix::identity(2, -1));
    CHECK(mat("2 * [[1,0],[0,1]]") == SquareMatrix::identity(2, -1) * Rational(2));
    CHECK(mat("[[1,1],[0,1]]^2") == mat("[[1,2],[0,1]]"));
}

TEST_CASE("parse errors carry byte offsets") {
    auto offset_of = [](const std::string& text) {
        try {
            parse_expression(text, -1);
        } catch (const ParseError& e) {
            return e.offset;
        }
        return std::size_t(-1);
    };
    CHECK(offset_of("q^") == 2);
    CHECK(offset_of("q +") == 3);
    CHECK(offset_of("1/0") == 2);
    CHECK(offset_of("[[1,2],[3]]") != std::size_t(-1));
    CHECK(offset_of("q @ p") == 2);
    CHECK(offset_of("[[q]]") != std::size_t(-1));  // matrix entries must be constant
}

TEST_CASE("mixing matrices and variables is rejected") {
    CHECK_THROWS_AS(parse_expression("q + [[1,0],[0,1]]", -1), ParseError);
    CHECK_THROWS_AS(parse_expression("q * [[1,0],[0,1]]", -1), ParseError);
}

TEST_CASE("round trip through the printer") {
    Sampler s(51);
    for (int i = 0; i < 40; ++i) {
        PhasePoly f = s.poly(2, 4, -1);
        CHECK(poly(f.str()) == f);
    }
    for (int i = 0; i < 20; ++i) {
        SquareMatrix m = s.matrix(3, -1);
        CHECK(mat(m.str()) == m);
    }
    // dual and split-complex coefficients round-trip too
    for (int eps : {0, 1}) {
        for (int i = 0; i < 10; ++i) {
            PhasePoly f = s.poly(1, 3, eps);
            CHECK(std::get<PhasePoly>(parse_expression(f.str(), eps)) == f);
        }
    }
}
