#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "composa/errors.hpp"
#include "composa/rational.hpp"

namespace composa {

/// A composition class: the value of J^2 plus the deformation parameter.
/// hbar is either a positive rational or formal (kept as a polynomial
/// variable by the phase-space representation).
struct CompositionClass {
    int j_squared;                 // -1 elliptic, 0 parabolic, +1 hyperbolic
    std::optional<Rational> hbar;  // nullopt == formal

    static CompositionClass elliptic(std::optional<Rational> h = Rational(1)) {
        return make(-1, std::move(h));
    }
    static CompositionClass parabolic() { return make(0, std::nullopt); }
    static CompositionClass hyperbolic(std::optional<Rational> h = Rational(1)) {
        return make(+1, std::move(h));
    }

    static CompositionClass make(int j2, std::optional<Rational> h) {
        if (j2 < -1 || j2 > 1) throw ClassMismatchError("j_squared must be -1, 0 or +1");
        if (h && *h <= 0) throw std::invalid_argument("numeric hbar must be positive");
        return CompositionClass{j2, std::move(h)};
    }

    bool hbar_formal() const { return !hbar.has_value(); }

    const Rational& numeric_hbar() const {
        if (!hbar) throw std::invalid_argument("numeric hbar required, got formal");
        return *hbar;
    }

    std::string name() const {
        switch (j_squared) {
            case -1: return "elliptic";
            case 0: return "parabolic";
            default: return "hyperbolic";
        }
    }

    bool operator==(const CompositionClass& o) const = default;
};

}  // namespace composa
