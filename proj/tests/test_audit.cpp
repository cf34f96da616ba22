#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "composa/audit.hpp"

using namespace composa;

TEST_CASE("clean audits pass for every supported pairing") {
    CHECK(run_audit(CompositionClass::elliptic(), "matrix", 6, 1).pass);
    CHECK(run_audit(CompositionClass::hyperbolic(), "matrix", 6, 1).pass);
    CHECK(run_audit(CompositionClass::elliptic(), "phase", 4, 1).pass);
    CHECK(run_audit(CompositionClass::parabolic(), "phase", 4, 1).pass);
}

TEST_CASE("unsupported pairings are rejected") {
    CHECK_THROWS_AS(run_audit(CompositionClass::parabolic(), "matrix", 2, 1),
                    UnsupportedRepresentationError);
    CHECK_THROWS_AS(run_audit(CompositionClass::elliptic(), "spins", 2, 1),
                    UnsupportedRepresentationError);
    CHECK_THROWS_AS(run_audit(CompositionClass::elliptic(), "matrix", 0, 1), std::invalid_argument);
}

TEST_CASE("reports are byte-identical for equal seeds") {
    auto a = run_audit(CompositionClass::elliptic(), "matrix", 8, 77);
    auto b = run_audit(CompositionClass::elliptic(), "matrix", 8, 77);
    CHECK(a.to_json().dump(2) == b.to_json().dump(2));
    auto c = run_audit(CompositionClass::elliptic(), "matrix", 8, 78);
    CHECK(a.to_json().dump(2) != c.to_json().dump(2));
}

TEST_CASE("forged b11 fails with a recorded witness") {
    auto r = run_audit(CompositionClass::elliptic(), "matrix", 6, 5, Rational(1));
    CHECK_FALSE(r.pass);
    CHECK(r.forged_b11 == "1");
    bool witnessed = false;
    for (const auto& row : r.rows)
        if (row.failures > 0) {
            CHECK(row.witness_sample.has_value());
            witnessed = true;
        }
    CHECK(witnessed);
    // the honest table with the same seed passes
    CHECK(run_audit(CompositionClass::elliptic(), "matrix", 6, 5, Rational(-1, 4)).pass);
}

TEST_CASE("report schema contains one row per identity") {
    auto r = run_audit(CompositionClass::parabolic(), "phase", 3, 9);
    auto j = r.to_json();
    CHECK(j["schema"] == 1);
    CHECK(j["class"] == "parabolic");
    CHECK(j["pass"] == true);
    std::vector<std::string> names;
    for (const auto& row : j["rows"]) names.push_back(row["identity"]);
    CHECK(std::is_sorted(names.begin(), names.end()));
    // parabolic audits add the sigma associativity row
    CHECK(std::count(names.begin(), names.end(), "sigma_associativity") == 1);
    CHECK(std::count(names.begin(), names.end(), "jacobi") == 1);
    CHECK(std::count(names.begin(), names.end(), "unit_laws") == 1);
}
