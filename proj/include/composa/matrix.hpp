#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "composa/composition_class.hpp"
#include "composa/pair_scalar.hpp"

namespace composa {

/// Dense square matrix over PairScalar; all entries share one epsilon.
class SquareMatrix {
public:
    SquareMatrix(unsigned dim, int eps)
        : dim_(dim), eps_(eps), entries_(std::size_t(dim) * dim, PairScalar::zero(eps)) {
        if (dim == 0) throw std::invalid_argument("matrix dimension must be >= 1");
    }

    static SquareMatrix identity(unsigned dim, int eps) {
        SquareMatrix m(dim, eps);
        for (unsigned i = 0; i < dim; ++i) m.at(i, i) = PairScalar::one(eps);
        return m;
    }
    static SquareMatrix zero(unsigned dim, int eps) { return SquareMatrix(dim, eps); }

    unsigned dim() const { return dim_; }
    int epsilon() const { return eps_; }

    PairScalar& at(unsigned i, unsigned j) { return entries_[std::size_t(i) * dim_ + j]; }
    const PairScalar& at(unsigned i, unsigned j) const { return entries_[std::size_t(i) * dim_ + j]; }

    bool is_zero() const {
        for (const auto& e : entries_)
            if (!e.is_zero()) return false;
        return true;
    }

    SquareMatrix operator-() const {
        SquareMatrix r(dim_, eps_);
        for (std::size_t i = 0; i < entries_.size(); ++i) r.entries_[i] = -entries_[i];
        return r;
    }
    SquareMatrix operator+(const SquareMatrix& o) const {
        require_compatible(o);
        SquareMatrix r(dim_, eps_);
        for (std::size_t i = 0; i < entries_.size(); ++i) r.entries_[i] = entries_[i] + o.entries_[i];
        return r;
    }
    SquareMatrix operator-(const SquareMatrix& o) const { return *this + (-o); }
    SquareMatrix operator*(const SquareMatrix& o) const {
        require_compatible(o);
        SquareMatrix r(dim_, eps_);
        for (unsigned i = 0; i < dim_; ++i)
            for (unsigned k = 0; k < dim_; ++k) {
                const PairScalar& a = at(i, k);
                if (a.is_zero()) continue;
                for (unsigned j = 0; j < dim_; ++j) r.at(i, j) += a * o.at(k, j);
            }
        return r;
    }
    SquareMatrix operator*(const PairScalar& s) const {
        SquareMatrix r(dim_, eps_);
        for (std::size_t i = 0; i < entries_.size(); ++i) r.entries_[i] = entries_[i] * s;
        return r;
    }
    SquareMatrix operator*(const Rational& s) const { return *this * PairScalar::from_rational(s, eps_); }
    SquareMatrix& operator+=(const SquareMatrix& o) { return *this = *this + o; }
    SquareMatrix& operator-=(const SquareMatrix& o) { return *this = *this - o; }

    SquareMatrix conjugate_transpose() const {
        SquareMatrix r(dim_, eps_);
        for (unsigned i = 0; i < dim_; ++i)
            for (unsigned j = 0; j < dim_; ++j) r.at(i, j) = at(j, i).conjugate();
        return r;
    }

    bool operator==(const SquareMatrix& o) const {
        return dim_ == o.dim_ && eps_ == o.eps_ && entries_ == o.entries_;
    }
    bool operator!=(const SquareMatrix& o) const { return !(*this == o); }
    bool operator<(const SquareMatrix& o) const {
        if (dim_ != o.dim_) return dim_ < o.dim_;
        for (std::size_t i = 0; i < entries_.size(); ++i) {
            auto c = entries_[i] <=> o.entries_[i];
            if (c != 0) return c < 0;
        }
        return false;
    }

    std::map<std::string, PairScalar> coordinates() const {
        std::map<std::string, PairScalar> out;
        for (unsigned i = 0; i < dim_; ++i)
            for (unsigned j = 0; j < dim_; ++j)
                if (!at(i, j).is_zero())
                    out.emplace(std::to_string(i) + "," + std::to_string(j), at(i, j));
        return out;
    }

    std::string str() const {
        std::string s = "[";
        for (unsigned i = 0; i < dim_; ++i) {
            if (i) s += ", ";
            s += "[";
            for (unsigned j = 0; j < dim_; ++j) {
                if (j) s += ", ";
                s += at(i, j).str();
            }
            s += "]";
        }
        return s + "]";
    }

private:
    void require_compatible(const SquareMatrix& o) const {
        if (eps_ != o.eps_) throw ClassMismatchError("matrix epsilon mismatch");
        if (dim_ != o.dim_)
            throw DimMismatchError("matrix dimension mismatch: " + std::to_string(dim_) + " vs " +
                                   std::to_string(o.dim_));
    }

    unsigned dim_;
    int eps_;
    std::vector<PairScalar> entries_;
};

inline SquareMatrix kron(const SquareMatrix& a, const SquareMatrix& b) {
    if (a.epsilon() != b.epsilon()) throw ClassMismatchError("kron epsilon mismatch");
    SquareMatrix r(a.dim() * b.dim(), a.epsilon());
    for (unsigned i = 0; i < a.dim(); ++i)
        for (unsigned j = 0; j < a.dim(); ++j) {
            if (a.at(i, j).is_zero()) continue;
            for (unsigned k = 0; k < b.dim(); ++k)
                for (unsigned l = 0; l < b.dim(); ++l)
                    r.at(i * b.dim() + k, j * b.dim() + l) = a.at(i, j) * b.at(k, l);
        }
    return r;
}

namespace detail {
inline void require_matrix_class(const CompositionClass& cls, int eps) {
    if (cls.j_squared == 0)
        throw UnsupportedRepresentationError("matrix representation has no parabolic class");
    if (eps != cls.j_squared)
        throw ClassMismatchError("matrix epsilon does not match composition class");
}
}  // namespace detail

/// A alpha B = (J/hbar)(AB - BA), the scaled commutator.
inline SquareMatrix mat_alpha(const SquareMatrix& a, const SquareMatrix& b, const CompositionClass& cls) {
    detail::require_matrix_class(cls, a.epsilon());
    PairScalar j_over_h = PairScalar(0, Rational(1) / cls.numeric_hbar(), a.epsilon());
    return (a * b - b * a) * j_over_h;
}

/// A sigma B = (AB + BA)/2, the anticommutator half.
inline SquareMatrix mat_sigma(const SquareMatrix& a, const SquareMatrix& b) {
    return (a * b + b * a) * Rational(1, 2);
}

/// Entrywise multiplication by the class unit J; applied twice equals
/// multiplication by epsilon.
inline SquareMatrix apply_J(const SquareMatrix& a, const CompositionClass& cls) {
    detail::require_matrix_class(cls, a.epsilon());
    return a * PairScalar::unit_j(a.epsilon());
}

/// A = H + K with H the conjugate-transpose-fixed part (elliptic class).
inline std::pair<SquareMatrix, SquareMatrix> hermitean_split(const SquareMatrix& a) {
    if (a.epsilon() != -1)
        throw UnsupportedRepresentationError("hermitean_split requires the elliptic class");
    SquareMatrix h = (a + a.conjugate_transpose()) * Rational(1, 2);
    return {h, a - h};
}

/// Convenient Pauli basis for tests and the coproduct witnesses.
inline SquareMatrix pauli_x(int eps) {
    SquareMatrix m(2, eps);
    m.at(0, 1) = m.at(1, 0) = PairScalar::one(eps);
    return m;
}
inline SquareMatrix pauli_y(int eps) {
    SquareMatrix m(2, eps);
    m.at(0, 1) = PairScalar(0, -1, eps);
    m.at(1, 0) = PairScalar(0, 1, eps);
    return m;
}
inline SquareMatrix pauli_z(int eps) {
    SquareMatrix m(2, eps);
    m.at(0, 0) = PairScalar::one(eps);
    m.at(1, 1) = -PairScalar::one(eps);
    return m;
}

}  // namespace composa
