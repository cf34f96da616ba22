#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "composa/chsh.hpp"

using namespace composa;

TEST_CASE("singlet correlation matches the closed form") {
    const double angles[] = {0.0, 0.3, M_PI / 4, 1.1, 2.9, -0.7};
    for (double ta : angles)
        for (double tb : angles) {
            double e = detail::singlet_correlation(detail::spin_observable(ta),
                                                   detail::spin_observable(tb));
            CHECK(e == doctest::Approx(chsh_correlation_oracle(ta, tb)).epsilon(1e-12));
        }
}

TEST_CASE("quantum value at the optimal settings") {
    auto r = chsh_quantum(chsh_optimal_angles[0], chsh_optimal_angles[1], chsh_optimal_angles[2],
                          chsh_optimal_angles[3]);
    CHECK(std::fabs(r.abs_value - chsh_tsirelson) < 1e-9);
    CHECK(r.optimal);
}

TEST_CASE("suboptimal settings stay below the bound") {
    auto r = chsh_quantum(0.0, 1.0, 0.2, 0.9);
    CHECK(r.abs_value < chsh_tsirelson + 1e-12);
    CHECK_FALSE(r.optimal);
}

TEST_CASE("classical maximum is exactly two") {
    auto r = chsh_classical_max();
    CHECK(r.value == 2.0);
    CHECK(r.abs_value == 2.0);
    // the all-plus strategy attains it and is reported as the witness
    CHECK(r.strategy == std::array<int, 4>{1, 1, 1, 1});
    CHECK(chsh_strategy_value(r.strategy) == 2.0);
    // every deterministic strategy is bounded by two
    for (int bits = 0; bits < 16; ++bits) {
        std::array<int, 4> s;
        for (int i = 0; i < 4; ++i) s[i] = (bits >> i & 1) ? -1 : 1;
        CHECK(std::fabs(chsh_strategy_value(s)) <= 2.0);
    }
}
