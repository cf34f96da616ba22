#pragma once

#include <map>
#include <string>
#include <vector>

#include "composa/errors.hpp"
#include "composa/pair_scalar.hpp"

namespace composa {

/// Exact multivariate polynomial in q_1..q_n, p_1..p_n and the formal
/// deformation symbol hbar, with PairScalar coefficients.
///
/// Exponent keys have length 2n+1: q exponents, then p exponents, then
/// the hbar exponent. Zero coefficients are never stored.
class PhasePoly {
public:
    using Key = std::vector<unsigned>;

    explicit PhasePoly(unsigned n, int eps) : n_(n ? n : 1), eps_(eps) {}

    static PhasePoly zero(unsigned n, int eps) { return PhasePoly(n, eps); }
    static PhasePoly constant(const PairScalar& c, unsigned n = 1) {
        PhasePoly r(n, c.epsilon());
        r.add_term(Key(2 * r.n_ + 1, 0), c);
        return r;
    }
    static PhasePoly one(unsigned n, int eps) { return constant(PairScalar::one(eps), n); }
    static PhasePoly var_q(unsigned i, unsigned n, int eps) { return variable(i, n, eps, /*is_p=*/false); }
    static PhasePoly var_p(unsigned i, unsigned n, int eps) { return variable(i, n, eps, /*is_p=*/true); }
    static PhasePoly var_hbar(unsigned n, int eps) {
        PhasePoly r(n, eps);
        Key k(2 * n + 1, 0);
        k[2 * n] = 1;
        r.add_term(k, PairScalar::one(eps));
        return r;
    }

    unsigned dof() const { return n_; }
    int epsilon() const { return eps_; }
    const std::map<Key, PairScalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    bool is_constant() const {
        if (terms_.empty()) return true;
        if (terms_.size() > 1) return false;
        const Key& k = terms_.begin()->first;
        for (unsigned e : k)
            if (e) return false;
        return true;
    }
    PairScalar constant_value() const {
        if (terms_.empty()) return PairScalar::zero(eps_);
        return terms_.begin()->second;
    }

    /// Total degree in q and p only (hbar excluded); -1 for the zero poly.
    int qp_degree() const {
        int d = -1;
        for (const auto& [k, c] : terms_) {
            int s = 0;
            for (unsigned i = 0; i < 2 * n_; ++i) s += static_cast<int>(k[i]);
            if (s > d) d = s;
        }
        return d;
    }

    PhasePoly promoted(unsigned n) const {
        if (n <= n_) return *this;
        PhasePoly r(n, eps_);
        for (const auto& [k, c] : terms_) {
            Key nk(2 * n + 1, 0);
            for (unsigned i = 0; i < n_; ++i) {
                nk[i] = k[i];
                nk[n + i] = k[n_ + i];
            }
            nk[2 * n] = k[2 * n_];
            r.terms_.emplace(std::move(nk), c);
        }
        return r;
    }

    PhasePoly operator-() const {
        PhasePoly r(n_, eps_);
        for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
        return r;
    }

    PhasePoly operator+(const PhasePoly& o) const {
        auto [a, b] = aligned(*this, o);
        for (const auto& [k, c] : b.terms_) a.add_term(k, c);
        return a;
    }
    PhasePoly operator-(const PhasePoly& o) const { return *this + (-o); }

    PhasePoly operator*(const PhasePoly& o) const {
        auto [a, b] = aligned(*this, o);
        PhasePoly r(a.n_, a.eps_);
        for (const auto& [ka, ca] : a.terms_)
            for (const auto& [kb, cb] : b.terms_) {
                Key k(ka.size());
                for (std::size_t i = 0; i < ka.size(); ++i) k[i] = ka[i] + kb[i];
                r.add_term(k, ca * cb);
            }
        return r;
    }

    PhasePoly operator*(const PairScalar& s) const {
        PhasePoly r(n_, eps_);
        if (s.is_zero()) return r;
        for (const auto& [k, c] : terms_) r.add_term(k, c * s);
        return r;
    }
    PhasePoly operator*(const Rational& s) const { return *this * PairScalar::from_rational(s, eps_); }

    PhasePoly& operator+=(const PhasePoly& o) { return *this = *this + o; }
    PhasePoly& operator-=(const PhasePoly& o) { return *this = *this - o; }

    PhasePoly pow(unsigned e) const {
        PhasePoly r = one(n_, eps_);
        for (unsigned i = 0; i < e; ++i) r = r * *this;
        return r;
    }

    /// d/dq_i (is_p = false) or d/dp_i (is_p = true), i zero-based.
    PhasePoly derivative(unsigned i, bool is_p) const {
        PhasePoly r(n_, eps_);
        unsigned idx = is_p ? n_ + i : i;
        for (const auto& [k, c] : terms_) {
            if (k[idx] == 0) continue;
            Key nk = k;
            unsigned e = nk[idx]--;
            r.add_term(nk, c * Rational(e));
        }
        return r;
    }

    PhasePoly mul_hbar(unsigned power) const {
        PhasePoly r(n_, eps_);
        for (const auto& [k, c] : terms_) {
            Key nk = k;
            nk[2 * n_] += power;
            r.terms_.emplace(std::move(nk), c);
        }
        return r;
    }

    PhasePoly substitute_hbar(const Rational& value) const {
        PhasePoly r(n_, eps_);
        for (const auto& [k, c] : terms_) {
            Key nk = k;
            unsigned e = nk[2 * n_];
            nk[2 * n_] = 0;
            r.add_term(nk, c * rational_pow(value, e));
        }
        return r;
    }

    /// Coefficient of hbar^power, as a polynomial with hbar exponent zero.
    PhasePoly hbar_coefficient(unsigned power) const {
        PhasePoly r(n_, eps_);
        for (const auto& [k, c] : terms_) {
            if (k[2 * n_] != power) continue;
            Key nk = k;
            nk[2 * n_] = 0;
            r.terms_.emplace(std::move(nk), c);
        }
        return r;
    }

    bool operator==(const PhasePoly& o) const {
        if (eps_ != o.eps_) return false;
        auto [a, b] = aligned(*this, o);
        return a.terms_ == b.terms_;
    }
    bool operator!=(const PhasePoly& o) const { return !(*this == o); }
    bool operator<(const PhasePoly& o) const {
        auto [a, b] = aligned(*this, o);
        return a.terms_ < b.terms_;
    }

    void add_term(const Key& k, const PairScalar& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(k);
        if (it == terms_.end()) {
            terms_.emplace(k, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    /// Faithful scalar coordinates, keyed by a serialized monomial.
    std::map<std::string, PairScalar> coordinates() const {
        std::map<std::string, PairScalar> out;
        for (const auto& [k, c] : terms_) out.emplace(key_str(k), c);
        return out;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [k, c] : terms_) {
            std::string mono = mono_str(k);
            bool plain = c.is_rational();
            if (first) {
                out += coeff_str(c, mono);
            } else if (plain && c.re() < 0) {
                out += " - " + coeff_str(-c, mono);
            } else {
                out += " + " + coeff_str(c, mono);
            }
            first = false;
        }
        return out;
    }

private:
    static PhasePoly variable(unsigned i, unsigned n, int eps, bool is_p) {
        if (i >= n) throw std::invalid_argument("variable index out of range");
        PhasePoly r(n, eps);
        Key k(2 * n + 1, 0);
        k[is_p ? n + i : i] = 1;
        r.add_term(k, PairScalar::one(eps));
        return r;
    }

    static std::pair<PhasePoly, PhasePoly> aligned(const PhasePoly& a, const PhasePoly& b) {
        if (a.eps_ != b.eps_)
            throw ClassMismatchError("phase polynomial epsilon mismatch");
        unsigned n = std::max(a.n_, b.n_);
        return {a.promoted(n), b.promoted(n)};
    }

    static std::string key_str(const Key& k) {
        std::string s;
        for (unsigned e : k) {
            s += std::to_string(e);
            s += ',';
        }
        return s;
    }

    std::string mono_str(const Key& k) const {
        std::string s;
        auto piece = [&](const std::string& name, unsigned e) {
            if (!e) return;
            if (!s.empty()) s += "*";
            s += name;
            if (e > 1) s += "^" + std::to_string(e);
        };
        for (unsigned i = 0; i < n_; ++i)
            piece(n_ == 1 ? "q" : "q" + std::to_string(i + 1), k[i]);
        for (unsigned i = 0; i < n_; ++i)
            piece(n_ == 1 ? "p" : "p" + std::to_string(i + 1), k[n_ + i]);
        piece("hbar", k[2 * n_]);
        return s;
    }

    static std::string coeff_str(const PairScalar& c, const std::string& mono) {
        if (mono.empty()) return c.is_rational() ? c.str() : "(" + c.str() + ")";
        if (c.is_rational()) {
            if (c.re() == 1) return mono;
            if (c.re() == -1) return "-" + mono;
            return c.str() + "*" + mono;
        }
        return "(" + c.str() + ")*" + mono;
    }

    unsigned n_;
    int eps_;
    std::map<Key, PairScalar> terms_;
};

inline PhasePoly operator*(const PairScalar& s, const PhasePoly& f) { return f * s; }

}  // namespace composa
