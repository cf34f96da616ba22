#pragma once

#include <vector>

#include "composa/composition_class.hpp"
#include "composa/phase_poly.hpp"

namespace composa {

/// Weighted (left, right) polynomial pairs: a finite element of the formal
/// tensor square, the intermediate state for iterating the Poisson
/// bi-vector. Collapsible by multiplication.
struct BidiffState {
    struct Pair {
        Rational weight;
        PhasePoly left, right;
    };
    std::vector<Pair> pairs;

    static BidiffState start(const PhasePoly& f, const PhasePoly& g) {
        return BidiffState{{Pair{1, f, g}}};
    }
};

/// One application of the bi-vector
///   sum_i (d/dq_i (x) d/dp_i  -  d/dp_i (x) d/dq_i)
/// to every pair.
inline BidiffState bidiff_apply(const BidiffState& state) {
    BidiffState out;
    for (const auto& pr : state.pairs) {
        unsigned n = std::max(pr.left.dof(), pr.right.dof());
        PhasePoly l = pr.left.promoted(n), r = pr.right.promoted(n);
        for (unsigned i = 0; i < n; ++i) {
            PhasePoly lq = l.derivative(i, false), rp = r.derivative(i, true);
            if (!lq.is_zero() && !rp.is_zero())
                out.pairs.push_back({pr.weight, std::move(lq), std::move(rp)});
            PhasePoly lp = l.derivative(i, true), rq = r.derivative(i, false);
            if (!lp.is_zero() && !rq.is_zero())
                out.pairs.push_back({-pr.weight, std::move(lp), std::move(rq)});
        }
    }
    return out;
}

inline PhasePoly bidiff_collapse(const BidiffState& state, unsigned n, int eps) {
    PhasePoly sum = PhasePoly::zero(n, eps);
    for (const auto& pr : state.pairs) sum += (pr.left * pr.right) * pr.weight;
    return sum;
}

/// Collapse of k applications of the bi-vector; k = 0 gives f*g.
inline PhasePoly bidiff_power(const PhasePoly& f, const PhasePoly& g, unsigned k) {
    BidiffState s = BidiffState::start(f, g);
    for (unsigned i = 0; i < k; ++i) {
        s = bidiff_apply(s);
        if (s.pairs.empty()) break;
    }
    return bidiff_collapse(s, std::max(f.dof(), g.dof()), f.epsilon());
}

/// The Poisson bracket {f, g}; equals a single bi-vector application.
inline PhasePoly poisson(const PhasePoly& f, const PhasePoly& g) {
    return bidiff_power(f, g, 1);
}

namespace detail {
inline void require_elliptic(const CompositionClass& cls, const char* what) {
    if (cls.j_squared != -1)
        throw UnsupportedRepresentationError(std::string(what) + " requires the elliptic class");
}
/// Largest useful bi-vector order: higher derivatives annihilate.
inline unsigned bidiff_cutoff(const PhasePoly& f, const PhasePoly& g) {
    int df = f.qp_degree(), dg = g.qp_degree();
    int m = std::min(df, dg);
    return m < 0 ? 0 : static_cast<unsigned>(m);
}
}  // namespace detail

/// Moyal sine bracket (2/hbar) sin((hbar/2) bi-vector), as an exact finite
/// sum in the formal hbar:
///   sum_m (-1)^m hbar^(2m) / (4^m (2m+1)!) * bidiff^(2m+1).
inline PhasePoly moyal_sine(const PhasePoly& f, const PhasePoly& g, const CompositionClass& cls) {
    detail::require_elliptic(cls, "moyal_sine");
    unsigned cutoff = detail::bidiff_cutoff(f, g);
    unsigned n = std::max(f.dof(), g.dof());
    PhasePoly sum = PhasePoly::zero(n, f.epsilon());
    BidiffState s = BidiffState::start(f, g);
    for (unsigned k = 1; k <= cutoff; ++k) {
        s = bidiff_apply(s);
        if (s.pairs.empty()) break;
        if (k % 2 == 0) continue;
        unsigned m = (k - 1) / 2;
        Rational w(((m % 2) ? Integer(-1) : Integer(1)), integer_pow(4, m) * factorial(k));
        sum += bidiff_collapse(s, n, f.epsilon()).mul_hbar(2 * m) * w;
    }
    return sum;
}

/// Moyal cosine bracket cos((hbar/2) bi-vector):
///   sum_m (-1)^m hbar^(2m) / (4^m (2m)!) * bidiff^(2m).
inline PhasePoly moyal_cosine(const PhasePoly& f, const PhasePoly& g, const CompositionClass& cls) {
    detail::require_elliptic(cls, "moyal_cosine");
    unsigned cutoff = detail::bidiff_cutoff(f, g);
    unsigned n = std::max(f.dof(), g.dof());
    PhasePoly sum = PhasePoly::zero(n, f.epsilon());
    BidiffState s = BidiffState::start(f, g);
    for (unsigned k = 0; k <= cutoff; ++k) {
        if (k > 0) {
            s = bidiff_apply(s);
            if (s.pairs.empty()) break;
        }
        if (k % 2 == 1) continue;
        unsigned m = k / 2;
        Rational w(((m % 2) ? Integer(-1) : Integer(1)), integer_pow(4, m) * factorial(k));
        sum += bidiff_collapse(s, n, f.epsilon()).mul_hbar(2 * m) * w;
    }
    return sum;
}

/// Star product f e^{sign (J hbar / 2) bi-vector} g:
///   sum_k (sign J hbar / 2)^k / k! * bidiff^k.
inline PhasePoly star(const PhasePoly& f, const PhasePoly& g, const CompositionClass& cls, int sign) {
    detail::require_elliptic(cls, "star");
    if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
    unsigned cutoff = detail::bidiff_cutoff(f, g);
    unsigned n = std::max(f.dof(), g.dof());
    int eps = f.epsilon();
    PhasePoly sum = PhasePoly::zero(n, eps);
    BidiffState s = BidiffState::start(f, g);
    PairScalar ju = PairScalar::unit_j(eps) * Rational(sign);
    PairScalar jpow = PairScalar::one(eps);  // (sign*J)^k
    for (unsigned k = 0; k <= cutoff; ++k) {
        if (k > 0) {
            s = bidiff_apply(s);
            jpow *= ju;
            if (s.pairs.empty()) break;
        }
        Rational w(1, integer_pow(2, k) * factorial(k));
        sum += bidiff_collapse(s, n, eps).mul_hbar(k) * (jpow * w);
    }
    return sum;
}

}  // namespace composa
