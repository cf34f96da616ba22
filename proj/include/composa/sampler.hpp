#pragma once

#include <random>

#include "composa/matrix.hpp"
#include "composa/phase_poly.hpp"

namespace composa {

/// Deterministic sample generator. Uses raw mt19937_64 draws with modulo
/// reduction so the same seed produces the same stream on every platform
/// (std::uniform_int_distribution is implementation-defined).
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}

    std::uint64_t draw(std::uint64_t bound) { return rng_() % bound; }

    /// Numerator in [-9, 9], denominator in [1, 4].
    Rational rational() {
        long num = static_cast<long>(draw(19)) - 9;
        long den = static_cast<long>(draw(4)) + 1;
        return Rational(num, den);
    }

    PairScalar scalar(int eps) { return PairScalar(rational(), rational(), eps); }

    SquareMatrix matrix(unsigned dim, int eps) {
        SquareMatrix m(dim, eps);
        for (unsigned i = 0; i < dim; ++i)
            for (unsigned j = 0; j < dim; ++j) m.at(i, j) = scalar(eps);
        return m;
    }

    /// Random polynomial: `terms` monomials of total q/p degree <= maxdeg
    /// (no hbar powers; those only arise from the brackets themselves).
    PhasePoly poly(unsigned n, unsigned maxdeg, int eps, unsigned terms = 3) {
        PhasePoly f(n, eps);
        for (unsigned t = 0; t < terms; ++t) {
            PhasePoly::Key k(2 * n + 1, 0);
            unsigned budget = draw(maxdeg + 1);
            for (unsigned d = 0; d < budget; ++d) ++k[draw(2 * n)];
            f.add_term(k, scalar(eps));
        }
        return f;
    }

private:
    std::mt19937_64 rng_;
};

}  // namespace composa
