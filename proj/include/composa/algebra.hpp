#pragma once

#include "composa/bidiff.hpp"
#include "composa/composition_class.hpp"
#include "composa/matrix.hpp"
#include "composa/phase_poly.hpp"

namespace composa {

/// Product selector for associators and Leibniz inner products.
enum class Product { Alpha, Sigma, BetaPlus, BetaMinus };

inline const char* product_name(Product p) {
    switch (p) {
        case Product::Alpha: return "alpha";
        case Product::Sigma: return "sigma";
        case Product::BetaPlus: return "beta+";
        default: return "beta-";
    }
}

/// Hilbert-space-style two-product algebra on exact square matrices.
/// alpha is the scaled commutator, sigma the anticommutator half.
struct MatrixAlgebra {
    using Element = SquareMatrix;

    CompositionClass cls;
    unsigned dim;

    Element unit() const { return SquareMatrix::identity(dim, cls.j_squared); }
    Element zero() const { return SquareMatrix::zero(dim, cls.j_squared); }

    Element alpha(const Element& a, const Element& b) const { return mat_alpha(a, b, cls); }
    Element sigma(const Element& a, const Element& b) const { return mat_sigma(a, b); }

    /// beta = sigma + sign*(J hbar / 2) alpha. For the elliptic class the
    /// sign -1 variant recovers the ordinary matrix product AB.
    Element beta(const Element& a, const Element& b, int sign) const {
        PairScalar jh2 = PairScalar(0, Rational(sign) * cls.numeric_hbar() / 2, cls.j_squared);
        return sigma(a, b) + alpha(a, b) * jh2;
    }

    /// Multiply by the compatibility coefficient J^2 hbar^2 / 4.
    Element compat_scale(const Element& a) const {
        Rational h = cls.numeric_hbar();
        return a * (Rational(cls.j_squared) * h * h / 4);
    }

    Element apply(Product p, const Element& a, const Element& b) const {
        switch (p) {
            case Product::Alpha: return alpha(a, b);
            case Product::Sigma: return sigma(a, b);
            case Product::BetaPlus: return beta(a, b, +1);
            default: return beta(a, b, -1);
        }
    }

    static bool is_zero(const Element& e) { return e.is_zero(); }
};

/// Phase-space two-product algebra on exact polynomials. Elliptic class:
/// Moyal sine / cosine brackets; parabolic: Poisson bracket and pointwise
/// multiplication. The hyperbolic class has no phase representation here.
struct PhaseAlgebra {
    using Element = PhasePoly;

    CompositionClass cls;
    unsigned dof = 1;

    PhaseAlgebra(CompositionClass c, unsigned n = 1) : cls(std::move(c)), dof(n) {
        if (cls.j_squared == 1)
            throw UnsupportedRepresentationError("phase representation has no hyperbolic class");
    }

    Element unit() const { return PhasePoly::one(dof, cls.j_squared); }
    Element zero() const { return PhasePoly::zero(dof, cls.j_squared); }

    Element alpha(const Element& f, const Element& g) const {
        if (cls.j_squared == 0) return poisson(f, g);
        return settle(moyal_sine(f, g, cls));
    }
    Element sigma(const Element& f, const Element& g) const {
        if (cls.j_squared == 0) return f * g;
        return settle(moyal_cosine(f, g, cls));
    }

    /// Parabolic beta collapses to sigma (the J alpha term is absent from
    /// the classical representation); elliptic beta is the star product.
    Element beta(const Element& f, const Element& g, int sign) const {
        if (cls.j_squared == 0) return f * g;
        return settle(star(f, g, cls, sign));
    }

    Element compat_scale(const Element& f) const {
        if (cls.j_squared == 0) return zero();
        Element scaled = f * Rational(cls.j_squared, 4);
        if (cls.hbar_formal()) return scaled.mul_hbar(2);
        Rational h = cls.numeric_hbar();
        return scaled * (h * h);
    }

    Element apply(Product p, const Element& f, const Element& g) const {
        switch (p) {
            case Product::Alpha: return alpha(f, g);
            case Product::Sigma: return sigma(f, g);
            case Product::BetaPlus: return beta(f, g, +1);
            default: return beta(f, g, -1);
        }
    }

    static bool is_zero(const Element& e) { return e.is_zero(); }

private:
    Element settle(Element e) const {
        if (!cls.hbar_formal()) return e.substitute_hbar(cls.numeric_hbar());
        return e;
    }
};

// ---- Defect functionals: each returns the exact defect element, zero
// ---- exactly when the identity holds on the given arguments.

template <class A>
typename A::Element associator(const A& alg, Product p, const typename A::Element& f,
                               const typename A::Element& g, const typename A::Element& h) {
    return alg.apply(p, alg.apply(p, f, g), h) - alg.apply(p, f, alg.apply(p, g, h));
}

/// f alpha (g o h) - (f alpha g) o h - g o (f alpha h), o in {alpha, sigma}.
template <class A>
typename A::Element leibniz_defect(const A& alg, const typename A::Element& f,
                                   const typename A::Element& g, const typename A::Element& h,
                                   Product inner) {
    auto o = [&](const typename A::Element& x, const typename A::Element& y) {
        return alg.apply(inner, x, y);
    };
    return alg.alpha(f, o(g, h)) - o(alg.alpha(f, g), h) - o(g, alg.alpha(f, h));
}

/// f a (g a h) + h a (f a g) + g a (h a f).
template <class A>
typename A::Element jacobi_defect(const A& alg, const typename A::Element& f,
                                  const typename A::Element& g, const typename A::Element& h) {
    return alg.alpha(f, alg.alpha(g, h)) + alg.alpha(h, alg.alpha(f, g)) + alg.alpha(g, alg.alpha(h, f));
}

template <class A>
typename A::Element symmetry_defect_sigma(const A& alg, const typename A::Element& f,
                                          const typename A::Element& g) {
    return alg.sigma(f, g) - alg.sigma(g, f);
}

template <class A>
typename A::Element antisymmetry_defect_alpha(const A& alg, const typename A::Element& f,
                                              const typename A::Element& g) {
    return alg.alpha(f, g) + alg.alpha(g, f);
}

/// [f,g,h]_sigma + (J^2 hbar^2 / 4) [f,g,h]_alpha.
template <class A>
typename A::Element compatibility_defect(const A& alg, const typename A::Element& f,
                                         const typename A::Element& g, const typename A::Element& h) {
    return associator(alg, Product::Sigma, f, g, h) +
           alg.compat_scale(associator(alg, Product::Alpha, f, g, h));
}

/// Jordan power associativity: [f, g, f sigma f]_sigma.
template <class A>
typename A::Element jordan_defect(const A& alg, const typename A::Element& f,
                                  const typename A::Element& g) {
    return associator(alg, Product::Sigma, f, g, alg.sigma(f, f));
}

}  // namespace composa
