#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "composa/algebra.hpp"

namespace composa {

/// The eight coefficients of the bipartite ansatz
///   (f1 (x) f2) alpha12 (g1 (x) g2) = sum a_ij (f1 o_i g1) (x) (f2 o_j g2)
///   (f1 (x) f2) sigma12 (g1 (x) g2) = sum b_ij (f1 o_i g1) (x) (f2 o_j g2)
/// with o_1 = alpha, o_2 = sigma. Entries may be unknown while the solver
/// is still working on them.
struct CoproductTable {
    std::array<std::optional<PairScalar>, 8> entries;  // a11,a12,a21,a22,b11,b12,b21,b22

    static constexpr const char* names[8] = {"a11", "a12", "a21", "a22", "b11", "b12", "b21", "b22"};

    std::optional<PairScalar>& a(unsigned i, unsigned j) { return entries[(i - 1) * 2 + (j - 1)]; }
    std::optional<PairScalar>& b(unsigned i, unsigned j) { return entries[4 + (i - 1) * 2 + (j - 1)]; }
    const std::optional<PairScalar>& a(unsigned i, unsigned j) const { return entries[(i - 1) * 2 + (j - 1)]; }
    const std::optional<PairScalar>& b(unsigned i, unsigned j) const { return entries[4 + (i - 1) * 2 + (j - 1)]; }

    bool fully_known() const {
        for (const auto& e : entries)
            if (!e) return false;
        return true;
    }
};

/// a = (0, 1, 1, 0); b = (J^2 hbar^2 / 4, 0, 0, 1).
inline CoproductTable canonical_table(const CompositionClass& cls) {
    int eps = cls.j_squared;
    Rational h = cls.j_squared == 0 ? Rational(0) : cls.numeric_hbar();
    CoproductTable t;
    auto r = [&](int v) { return PairScalar::from_rational(v, eps); };
    t.a(1, 1) = r(0);
    t.a(1, 2) = r(1);
    t.a(2, 1) = r(1);
    t.a(2, 2) = r(0);
    t.b(1, 1) = PairScalar::from_rational(Rational(cls.j_squared) * h * h / 4, eps);
    t.b(1, 2) = r(0);
    t.b(2, 1) = r(0);
    t.b(2, 2) = r(1);
    return t;
}

/// Formal linear combination of pure tensors over one representation
/// family A. Kept un-flattened; Kronecker flattening is a matrix-side
/// oracle only.
template <class A>
struct TensorElement {
    struct Summand {
        PairScalar coeff;
        typename A::Element left, right;
    };
    std::vector<Summand> summands;

    static TensorElement pure(typename A::Element l, typename A::Element r) {
        TensorElement t;
        PairScalar one = PairScalar::one(l.epsilon());
        t.summands.push_back({one, std::move(l), std::move(r)});
        return t;
    }

    TensorElement operator+(const TensorElement& o) const {
        TensorElement r = *this;
        r.summands.insert(r.summands.end(), o.summands.begin(), o.summands.end());
        r.merge();
        return r;
    }
    TensorElement operator-(const TensorElement& o) const { return *this + (o * Rational(-1)); }
    TensorElement operator*(const PairScalar& s) const {
        TensorElement r;
        if (s.is_zero()) return r;
        for (const auto& t : summands) r.summands.push_back({t.coeff * s, t.left, t.right});
        return r;
    }
    TensorElement operator*(const Rational& s) const {
        TensorElement r;
        if (s == 0) return r;
        for (const auto& t : summands) r.summands.push_back({t.coeff * s, t.left, t.right});
        return r;
    }

    /// Merge syntactically identical pure tensors (bilinear normal form).
    void merge() {
        std::vector<Summand> out;
        for (auto& s : summands) {
            if (s.coeff.is_zero() || A::is_zero(s.left) || A::is_zero(s.right)) continue;
            bool found = false;
            for (auto& o : out)
                if (o.left == s.left && o.right == s.right) {
                    o.coeff += s.coeff;
                    found = true;
                    break;
                }
            if (!found) out.push_back(std::move(s));
        }
        std::erase_if(out, [](const Summand& s) { return s.coeff.is_zero(); });
        summands = std::move(out);
    }

    /// Faithful coordinates on the tensor product: keyed by pairs of
    /// component coordinates. Zero iff the element is zero, even when
    /// syntactically distinct summands are linearly dependent.
    std::map<std::pair<std::string, std::string>, PairScalar> coordinates() const {
        std::map<std::pair<std::string, std::string>, PairScalar> out;
        for (const auto& s : summands) {
            auto lc = s.left.coordinates();
            auto rc = s.right.coordinates();
            for (const auto& [lk, lv] : lc)
                for (const auto& [rk, rv] : rc) {
                    auto key = std::make_pair(lk, rk);
                    auto it = out.find(key);
                    PairScalar v = s.coeff * lv * rv;
                    if (it == out.end()) {
                        if (!v.is_zero()) out.emplace(key, v);
                    } else {
                        it->second += v;
                        if (it->second.is_zero()) out.erase(it);
                    }
                }
        }
        return out;
    }

    bool is_zero_element() const { return coordinates().empty(); }
    bool equals(const TensorElement& o) const { return (*this - o).is_zero_element(); }
};

/// Bipartite composite algebra: the coproduct table drives alpha12 and
/// sigma12 over formal tensor elements of the inner representation.
template <class A>
struct TensorAlgebra {
    using Element = TensorElement<A>;

    A inner;
    CoproductTable table;

    TensorAlgebra(A in, CoproductTable t) : inner(std::move(in)), table(std::move(t)) {}

    Element unit() const { return Element::pure(inner.unit(), inner.unit()); }

    Element compose(bool sigma_row, const Element& f, const Element& g) const {
        if (!table.fully_known())
            throw std::invalid_argument("coproduct table has unknown entries");
        Element out;
        for (const auto& sf : f.summands)
            for (const auto& sg : g.summands) {
                PairScalar c = sf.coeff * sg.coeff;
                for (unsigned i = 1; i <= 2; ++i)
                    for (unsigned j = 1; j <= 2; ++j) {
                        const PairScalar& w = sigma_row ? *table.b(i, j) : *table.a(i, j);
                        if (w.is_zero()) continue;
                        auto l = i == 1 ? inner.alpha(sf.left, sg.left) : inner.sigma(sf.left, sg.left);
                        auto r = j == 1 ? inner.alpha(sf.right, sg.right) : inner.sigma(sf.right, sg.right);
                        out.summands.push_back({c * w, std::move(l), std::move(r)});
                    }
            }
        out.merge();
        return out;
    }

    Element alpha(const Element& f, const Element& g) const { return compose(false, f, g); }
    Element sigma(const Element& f, const Element& g) const { return compose(true, f, g); }

    Element beta(const Element& f, const Element& g, int sign) const {
        PairScalar jh2 =
            PairScalar(0, Rational(sign) * inner.cls.numeric_hbar() / 2, inner.cls.j_squared);
        return sigma(f, g) + alpha(f, g) * jh2;
    }

    Element compat_scale(const Element& f) const {
        Rational h = inner.cls.numeric_hbar();
        return f * (Rational(inner.cls.j_squared) * h * h / 4);
    }

    Element apply(Product p, const Element& f, const Element& g) const {
        switch (p) {
            case Product::Alpha: return alpha(f, g);
            case Product::Sigma: return sigma(f, g);
            case Product::BetaPlus: return beta(f, g, +1);
            default: return beta(f, g, -1);
        }
    }

    static bool is_zero(const Element& e) { return e.is_zero_element(); }
};

/// sum c_k kron(left_k, right_k); the oracle bridge to matrix-rep.
inline SquareMatrix kronecker_flatten(const TensorElement<MatrixAlgebra>& t, unsigned ldim,
                                      unsigned rdim, int eps) {
    SquareMatrix out(ldim * rdim, eps);
    for (const auto& s : t.summands) {
        if (s.left.dim() != ldim || s.right.dim() != rdim)
            throw DimMismatchError("tensor summand dimensions are not uniform");
        out += kron(s.left, s.right) * s.coeff;
    }
    return out;
}

}  // namespace composa
