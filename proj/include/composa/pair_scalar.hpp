#pragma once

#include <string>

#include "composa/errors.hpp"
#include "composa/rational.hpp"

namespace composa {

/// Paired scalar a + b*u with u^2 = epsilon in {-1, 0, +1}.
///
/// One type covers complex (epsilon = -1), dual (epsilon = 0) and
/// split-complex (epsilon = +1) scalars; epsilon never changes under
/// arithmetic and mixing epsilons is a hard error.
class PairScalar {
public:
    PairScalar() : re_(0), im_(0), eps_(-1) {}
    PairScalar(Rational re, Rational im, int eps) : re_(std::move(re)), im_(std::move(im)), eps_(eps) {
        check_epsilon(eps_);
    }

    static PairScalar from_rational(Rational r, int eps) { return PairScalar(std::move(r), 0, eps); }
    static PairScalar zero(int eps) { return from_rational(0, eps); }
    static PairScalar one(int eps) { return from_rational(1, eps); }
    /// The unit u itself (called J throughout the composition classes).
    static PairScalar unit_j(int eps) { return PairScalar(0, 1, eps); }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }
    int epsilon() const { return eps_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_rational() const { return im_ == 0; }

    PairScalar operator-() const { return PairScalar(-re_, -im_, eps_); }

    PairScalar operator+(const PairScalar& o) const {
        require_same(o);
        return PairScalar(re_ + o.re_, im_ + o.im_, eps_);
    }
    PairScalar operator-(const PairScalar& o) const {
        require_same(o);
        return PairScalar(re_ - o.re_, im_ - o.im_, eps_);
    }
    /// (a+bu)(c+du) = (ac + eps*bd) + (ad + bc)u
    PairScalar operator*(const PairScalar& o) const {
        require_same(o);
        return PairScalar(re_ * o.re_ + Rational(eps_) * im_ * o.im_, re_ * o.im_ + im_ * o.re_, eps_);
    }
    PairScalar operator*(const Rational& r) const { return PairScalar(re_ * r, im_ * r, eps_); }

    PairScalar& operator+=(const PairScalar& o) { return *this = *this + o; }
    PairScalar& operator-=(const PairScalar& o) { return *this = *this - o; }
    PairScalar& operator*=(const PairScalar& o) { return *this = *this * o; }

    PairScalar conjugate() const { return PairScalar(re_, -im_, eps_); }

    /// a^2 - eps*b^2; zero exactly for the non-invertible elements.
    Rational modulus() const { return re_ * re_ - Rational(eps_) * im_ * im_; }

    PairScalar inverse() const {
        Rational m = modulus();
        if (m == 0)
            throw NotInvertibleError("pair scalar " + str() + " has zero modulus");
        return PairScalar(re_ / m, -im_ / m, eps_);
    }

    PairScalar operator/(const PairScalar& o) const { return *this * o.inverse(); }

    bool operator==(const PairScalar& o) const { return eps_ == o.eps_ && re_ == o.re_ && im_ == o.im_; }
    bool operator!=(const PairScalar& o) const { return !(*this == o); }
    /// Total order for use as a container key; epsilon participates.
    auto operator<=>(const PairScalar& o) const {
        if (auto c = eps_ <=> o.eps_; c != 0) return c;
        if (re_ < o.re_) return std::strong_ordering::less;
        if (o.re_ < re_) return std::strong_ordering::greater;
        if (im_ < o.im_) return std::strong_ordering::less;
        if (o.im_ < im_) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    /// "a/b + c/d*J"; pure parts collapse to "a/b" or "c/d*J".
    std::string str() const {
        if (im_ == 0) return rational_str(re_);
        std::string j = (im_ == 1) ? "J" : (im_ == -1 ? "-J" : rational_str(im_) + "*J");
        if (re_ == 0) return j;
        if (im_ > 0) return rational_str(re_) + " + " + (im_ == 1 ? std::string("J") : rational_str(im_) + "*J");
        Rational n = -im_;
        return rational_str(re_) + " - " + (n == 1 ? std::string("J") : rational_str(n) + "*J");
    }

    static void check_epsilon(int eps) {
        if (eps < -1 || eps > 1)
            throw ClassMismatchError("epsilon must be -1, 0 or +1");
    }

private:
    void require_same(const PairScalar& o) const {
        if (eps_ != o.eps_)
            throw ClassMismatchError("epsilon mismatch: " + std::to_string(eps_) + " vs " + std::to_string(o.eps_));
    }

    Rational re_, im_;
    int eps_;
};

inline PairScalar operator*(const Rational& r, const PairScalar& s) { return s * r; }

}  // namespace composa
