#pragma once

#include <array>
#include <cmath>
#include <string>

namespace composa {

/// CHSH demonstration. The only floating-point corner of the library:
/// optimal settings need irrational matrix entries, so the exact core
/// stays untouched and the demo lives here. The singlet construction is
/// standard quantum mechanics, imported as an extension of the algebra.
struct ChshResult {
    std::string mode;  // "quantum" | "classical"
    double value = 0;  // signed S
    double abs_value = 0;
    bool optimal = false;
    std::array<double, 4> angles{};    // quantum: (a, a', b, b')
    std::array<int, 4> strategy{};     // classical: (A(a), A(a'), B(b), B(b'))
};

inline constexpr double chsh_tsirelson = 2.8284271247461903;  // 2*sqrt(2)

/// Spin-convention optimal settings for S = E(a,b) - E(a,b') + E(a',b) + E(a',b')
/// with singlet correlations E = -cos(theta_a - theta_b).
inline constexpr std::array<double, 4> chsh_optimal_angles = {0.0, M_PI / 2, M_PI / 4,
                                                             3 * M_PI / 4};

namespace detail {

using C2 = std::array<std::array<double, 2>, 2>;

/// Spin observable in the x-z plane: cos(theta) sz + sin(theta) sx.
/// Real entries suffice; it is Hermitean and squares to the identity.
inline C2 spin_observable(double theta) {
    return C2{{{std::cos(theta), std::sin(theta)}, {std::sin(theta), -std::cos(theta)}}};
}

/// <psi-| A (x) B |psi-> with the singlet |psi-> = (|01> - |10>)/sqrt(2),
/// evaluated through the explicit 4x4 Kronecker observable.
inline double singlet_correlation(const C2& a, const C2& b) {
    double k[4][4];
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int m = 0; m < 2; ++m)
                for (int n = 0; n < 2; ++n) k[2 * i + m][2 * j + n] = a[i][j] * b[m][n];
    const double inv = 1.0 / std::sqrt(2.0);
    double psi[4] = {0.0, inv, -inv, 0.0};
    double e = 0;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) e += psi[r] * k[r][c] * psi[c];
    return e;
}

}  // namespace detail

/// Closed-form oracle for the singlet: E(a,b) = -cos(theta_a - theta_b).
inline double chsh_correlation_oracle(double ta, double tb) { return -std::cos(ta - tb); }

inline ChshResult chsh_quantum(double a, double a2, double b, double b2) {
    ChshResult r;
    r.mode = "quantum";
    r.angles = {a, a2, b, b2};
    auto E = [](double x, double y) {
        return detail::singlet_correlation(detail::spin_observable(x), detail::spin_observable(y));
    };
    r.value = E(a, b) - E(a, b2) + E(a2, b) + E(a2, b2);
    r.abs_value = std::fabs(r.value);
    r.optimal = r.abs_value >= chsh_tsirelson - 1e-9;
    return r;
}

inline double chsh_strategy_value(const std::array<int, 4>& s) {
    // s = (A(a), A(a'), B(b), B(b'))
    return double(s[0] * s[2] - s[0] * s[3] + s[1] * s[2] + s[1] * s[3]);
}

/// Brute force over all 16 deterministic local strategies; the maximum is
/// exactly 2 (the Bell limit, parabolic-class counterpart).
inline ChshResult chsh_classical_max() {
    ChshResult r;
    r.mode = "classical";
    r.value = -4;
    for (int bits = 0; bits < 16; ++bits) {
        std::array<int, 4> s;
        for (int i = 0; i < 4; ++i) s[i] = (bits >> i & 1) ? -1 : 1;
        double v = chsh_strategy_value(s);
        if (v > r.value) {
            r.value = v;
            r.strategy = s;
        }
    }
    r.abs_value = r.value;
    r.optimal = true;
    return r;
}

}  // namespace composa
