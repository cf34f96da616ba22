#pragma once

#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "composa/sampler.hpp"
#include "composa/tensor.hpp"

namespace composa {

// Unknown indices follow CoproductTable order.
enum Unknown : unsigned { A11 = 0, A12, A21, A22, B11, B12, B21, B22 };
inline const char* unknown_name(unsigned u) { return CoproductTable::names[u]; }

/// Exact polynomial in the eight ansatz unknowns with PairScalar
/// coefficients. Degree stays <= 2 throughout the derivation.
class ConstraintPoly {
public:
    using Key = std::array<std::uint8_t, 8>;

    ConstraintPoly() = default;

    static ConstraintPoly constant(const PairScalar& c) {
        ConstraintPoly p;
        p.add(Key{}, c);
        return p;
    }
    static ConstraintPoly variable(unsigned u, int eps) {
        ConstraintPoly p;
        Key k{};
        k[u] = 1;
        p.add(k, PairScalar::one(eps));
        return p;
    }

    const std::map<Key, PairScalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add(const Key& k, const PairScalar& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(k);
        if (it == terms_.end())
            terms_.emplace(k, c);
        else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    ConstraintPoly operator+(const ConstraintPoly& o) const {
        ConstraintPoly r = *this;
        for (const auto& [k, c] : o.terms_) r.add(k, c);
        return r;
    }
    ConstraintPoly operator-() const {
        ConstraintPoly r;
        for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
        return r;
    }
    ConstraintPoly operator-(const ConstraintPoly& o) const { return *this + (-o); }
    ConstraintPoly operator*(const ConstraintPoly& o) const {
        ConstraintPoly r;
        for (const auto& [ka, ca] : terms_)
            for (const auto& [kb, cb] : o.terms_) {
                Key k;
                for (unsigned i = 0; i < 8; ++i) k[i] = static_cast<std::uint8_t>(ka[i] + kb[i]);
                r.add(k, ca * cb);
            }
        return r;
    }
    ConstraintPoly operator*(const PairScalar& s) const {
        ConstraintPoly r;
        for (const auto& [k, c] : terms_) r.add(k, c * s);
        return r;
    }

    bool uses(unsigned u) const {
        for (const auto& [k, c] : terms_)
            if (k[u]) return true;
        return false;
    }

    unsigned degree() const {
        unsigned d = 0;
        for (const auto& [k, c] : terms_) {
            unsigned s = 0;
            for (unsigned i = 0; i < 8; ++i) s += k[i];
            d = std::max(d, s);
        }
        return d;
    }

    ConstraintPoly substituted(unsigned u, const PairScalar& value) const {
        ConstraintPoly r;
        for (const auto& [k, c] : terms_) {
            Key nk = k;
            unsigned e = nk[u];
            nk[u] = 0;
            PairScalar v = c;
            for (unsigned i = 0; i < e; ++i) v *= value;
            r.add(nk, v);
        }
        return r;
    }

    PairScalar evaluate(const std::map<unsigned, PairScalar>& assignment, int eps) const {
        PairScalar sum = PairScalar::zero(eps);
        for (const auto& [k, c] : terms_) {
            PairScalar v = c;
            for (unsigned i = 0; i < 8; ++i)
                for (unsigned e = 0; e < k[i]; ++e) v *= assignment.at(i);
            sum += v;
        }
        return sum;
    }

    /// Split into pure-rational-coefficient parts (the unknowns are
    /// rational-valued, so real and J parts constrain independently).
    std::vector<ConstraintPoly> rational_parts(int eps) const {
        ConstraintPoly re, im;
        for (const auto& [k, c] : terms_) {
            re.add(k, PairScalar::from_rational(c.re(), eps));
            im.add(k, PairScalar::from_rational(c.im(), eps));
        }
        std::vector<ConstraintPoly> out;
        if (!re.is_zero()) out.push_back(std::move(re));
        if (!im.is_zero()) out.push_back(std::move(im));
        return out;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [k, c] : terms_) {
            if (!out.empty()) out += " + ";
            std::string mono;
            for (unsigned i = 0; i < 8; ++i) {
                if (!k[i]) continue;
                if (!mono.empty()) mono += "*";
                mono += unknown_name(i);
                if (k[i] > 1) mono += "^" + std::to_string(k[i]);
            }
            if (mono.empty())
                out += "(" + c.str() + ")";
            else
                out += "(" + c.str() + ")*" + mono;
        }
        return out;
    }

private:
    std::map<Key, PairScalar> terms_;
};

/// One equation "poly = 0" with the sample/axiom that generated it.
struct AnsatzConstraint {
    ConstraintPoly poly;
    std::string axiom;       // e.g. "unit-left/alpha", "bipartite-leibniz/alpha-path"
    std::string provenance;  // sample description
    bool primary = true;     // false for full-expansion extras
};

/// The solved/free status of the eight unknowns.
struct SolutionFamily {
    std::map<unsigned, PairScalar> fixed;
    std::vector<unsigned> free_unknowns;
    std::vector<std::string> witnesses;  // resolution notes, transcript-ready
    bool a11_certified_square = false;

    bool satisfies(const std::vector<AnsatzConstraint>& constraints,
                   const std::map<unsigned, PairScalar>& free_values, int eps) const {
        std::map<unsigned, PairScalar> assignment = fixed;
        for (unsigned u : free_unknowns) assignment[u] = free_values.at(u);
        for (const auto& c : constraints)
            if (!c.poly.evaluate(assignment, eps).is_zero()) return false;
        return true;
    }
};

// ---- Symbolic tensor machinery -------------------------------------------

template <class A>
struct SymTensor {
    struct Summand {
        ConstraintPoly coeff;
        typename A::Element left, right;
    };
    std::vector<Summand> summands;

    static SymTensor pure(typename A::Element l, typename A::Element r, int eps) {
        SymTensor t;
        t.summands.push_back({ConstraintPoly::constant(PairScalar::one(eps)), std::move(l), std::move(r)});
        return t;
    }

    SymTensor operator-(const SymTensor& o) const {
        SymTensor r = *this;
        for (const auto& s : o.summands) r.summands.push_back({-s.coeff, s.left, s.right});
        return r;
    }

    std::map<std::pair<std::string, std::string>, ConstraintPoly> coordinates() const {
        std::map<std::pair<std::string, std::string>, ConstraintPoly> out;
        for (const auto& s : summands) {
            auto lc = s.left.coordinates();
            auto rc = s.right.coordinates();
            for (const auto& [lk, lv] : lc)
                for (const auto& [rk, rv] : rc)
                    out[{lk, rk}] = out[{lk, rk}] + s.coeff * (lv * rv);
        }
        std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
        return out;
    }
};

/// Bipartite composition with symbolic table row coefficients; row order
/// is (alpha,alpha), (alpha,sigma), (sigma,alpha), (sigma,sigma).
template <class A>
SymTensor<A> compose_sym(const A& inner, const std::array<ConstraintPoly, 4>& row,
                         const SymTensor<A>& f, const SymTensor<A>& g) {
    SymTensor<A> out;
    for (const auto& sf : f.summands)
        for (const auto& sg : g.summands)
            for (unsigned i = 0; i < 2; ++i)
                for (unsigned j = 0; j < 2; ++j) {
                    const ConstraintPoly& w = row[i * 2 + j];
                    if (w.is_zero()) continue;
                    auto l = i == 0 ? inner.alpha(sf.left, sg.left) : inner.sigma(sf.left, sg.left);
                    if (A::is_zero(l)) continue;
                    auto r = j == 0 ? inner.alpha(sf.right, sg.right) : inner.sigma(sf.right, sg.right);
                    if (A::is_zero(r)) continue;
                    out.summands.push_back({sf.coeff * sg.coeff * w, std::move(l), std::move(r)});
                }
    return out;
}

namespace detail {

template <class A>
void extract_constraints(const SymTensor<A>& defect, const std::string& axiom,
                         const std::string& provenance, bool primary,
                         std::vector<AnsatzConstraint>& out) {
    for (const auto& [key, poly] : defect.coordinates())
        out.push_back({poly, axiom, provenance, primary});
}

/// Exact RREF over the rationals for the linear stage. Returns pinned
/// unknowns; throws on an inconsistent system.
inline std::map<unsigned, Rational> solve_linear(
    const std::vector<std::pair<std::array<Rational, 9>, std::string>>& rows_in) {
    auto rows = rows_in;
    std::size_t pivot_row = 0;
    for (unsigned col = 0; col < 8 && pivot_row < rows.size(); ++col) {
        std::size_t sel = rows.size();
        for (std::size_t r = pivot_row; r < rows.size(); ++r)
            if (rows[r].first[col] != 0) {
                sel = r;
                break;
            }
        if (sel == rows.size()) continue;
        std::swap(rows[pivot_row], rows[sel]);
        Rational inv = Rational(1) / rows[pivot_row].first[col];
        for (auto& v : rows[pivot_row].first) v *= inv;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == pivot_row || rows[r].first[col] == 0) continue;
            Rational factor = rows[r].first[col];
            for (unsigned c = 0; c < 9; ++c) rows[r].first[c] -= factor * rows[pivot_row].first[c];
        }
        ++pivot_row;
    }
    std::map<unsigned, Rational> pinned;
    for (const auto& [row, prov] : rows) {
        unsigned nz = 0, last = 0;
        for (unsigned c = 0; c < 8; ++c)
            if (row[c] != 0) {
                ++nz;
                last = c;
            }
        if (nz == 0 && row[8] != 0)
            throw NoSolutionError(prov, "inconsistent linear constraint set");
        if (nz == 1) pinned[last] = row[8] / row[last];
    }
    return pinned;
}

}  // namespace detail

// ---- Constraint generation ------------------------------------------------

/// Draw one generic (non-unit-proportional) element.
template <class A>
typename A::Element generic_sample(const A& alg, Sampler& s);

inline SquareMatrix generic_sample_impl(const MatrixAlgebra& alg, Sampler& s) {
    return s.matrix(alg.dim, alg.cls.j_squared);
}
inline PhasePoly generic_sample_impl(const PhaseAlgebra& alg, Sampler& s) {
    return s.poly(alg.dof, 3, alg.cls.j_squared);
}
template <class A>
typename A::Element generic_sample(const A& alg, Sampler& s) {
    return generic_sample_impl(alg, s);
}

/// Constraints from the unit slots: picking f1 = g1 = 1 (and mirrored)
/// must reduce the bipartite products to the single-system ones.
template <class A>
std::vector<AnsatzConstraint> unit_constraints(const A& alg, Sampler& sampler, unsigned count) {
    std::vector<AnsatzConstraint> out;
    if (count == 0) return out;
    int eps = alg.cls.j_squared;
    std::array<ConstraintPoly, 4> arow, brow;
    for (unsigned i = 0; i < 4; ++i) {
        arow[i] = ConstraintPoly::variable(i, eps);
        brow[i] = ConstraintPoly::variable(4 + i, eps);
    }
    auto u = alg.unit();
    for (unsigned n = 0; n < count; ++n) {
        auto f = generic_sample(alg, sampler);
        auto g = generic_sample(alg, sampler);
        std::string prov = "sample " + std::to_string(n);
        auto fl = SymTensor<A>::pure(u, f, eps), gl = SymTensor<A>::pure(u, g, eps);
        auto fr = SymTensor<A>::pure(f, u, eps), gr = SymTensor<A>::pure(g, u, eps);
        detail::extract_constraints(
            compose_sym(alg, arow, fl, gl) - SymTensor<A>::pure(u, alg.alpha(f, g), eps),
            "unit-left/alpha", prov, true, out);
        detail::extract_constraints(
            compose_sym(alg, brow, fl, gl) - SymTensor<A>::pure(u, alg.sigma(f, g), eps),
            "unit-left/sigma", prov, true, out);
        detail::extract_constraints(
            compose_sym(alg, arow, fr, gr) - SymTensor<A>::pure(alg.alpha(f, g), u, eps),
            "unit-right/alpha", prov, true, out);
        detail::extract_constraints(
            compose_sym(alg, brow, fr, gr) - SymTensor<A>::pure(alg.sigma(f, g), u, eps),
            "unit-right/sigma", prov, true, out);
    }
    // Rank check: the six unit-determined unknowns must actually be pinned.
    std::vector<std::pair<std::array<Rational, 9>, std::string>> rows;
    for (const auto& c : out)
        for (const auto& part : c.poly.rational_parts(eps)) {
            std::array<Rational, 9> row{};
            for (const auto& [k, v] : part.terms()) {
                unsigned idx = 9;
                for (unsigned i = 0; i < 8; ++i)
                    if (k[i]) idx = i;
                if (idx == 9)
                    row[8] -= v.re();
                else
                    row[idx] += v.re();
            }
            rows.push_back({row, c.provenance});
        }
    auto pinned = detail::solve_linear(rows);
    for (unsigned u6 : {A12, A21, A22, B12, B21, B22})
        if (!pinned.contains(u6))
            throw InsufficientRankError("degenerate sampler: unit constraints do not pin " +
                                        std::string(unknown_name(u6)));
    return out;
}

/// Bipartite Leibniz constraints with the unit-stage values substituted.
/// Primary family: projection onto the pure-alpha product path (paper
/// staging; shape a11^2 * c). Extras: the full-expansion residual, kept
/// and reported rather than suppressed.
template <class A>
std::vector<AnsatzConstraint> leibniz_constraints(const A& alg, Sampler& sampler, unsigned count,
                                                  const std::map<unsigned, PairScalar>& unit_fixed) {
    int eps = alg.cls.j_squared;
    for (unsigned u6 : {A12, A21, A22, B12, B21, B22})
        if (!unit_fixed.contains(u6))
            throw std::invalid_argument("leibniz_constraints requires the unit stage result");

    std::array<ConstraintPoly, 4> full_arow, alpha_only;
    full_arow[0] = ConstraintPoly::variable(A11, eps);
    full_arow[1] = ConstraintPoly::constant(unit_fixed.at(A12));
    full_arow[2] = ConstraintPoly::constant(unit_fixed.at(A21));
    full_arow[3] = ConstraintPoly::constant(unit_fixed.at(A22));
    alpha_only[0] = ConstraintPoly::variable(A11, eps);

    std::vector<AnsatzConstraint> out;
    auto defect = [&](const std::array<ConstraintPoly, 4>& row, const SymTensor<A>& f,
                      const SymTensor<A>& g, const SymTensor<A>& h) {
        return compose_sym(alg, row, f, compose_sym(alg, row, g, h)) -
               compose_sym(alg, row, compose_sym(alg, row, f, g), h) -
               compose_sym(alg, row, g, compose_sym(alg, row, f, h));
    };

    for (unsigned n = 0; n < count; ++n) {
        bool ok = false;
        for (unsigned attempt = 0; attempt <= 10 && !ok; ++attempt) {
            auto f = SymTensor<A>::pure(generic_sample(alg, sampler), generic_sample(alg, sampler), eps);
            auto g = SymTensor<A>::pure(generic_sample(alg, sampler), generic_sample(alg, sampler), eps);
            auto h = SymTensor<A>::pure(generic_sample(alg, sampler), generic_sample(alg, sampler), eps);
            std::string prov = "sample " + std::to_string(n);
            std::vector<AnsatzConstraint> primary;
            detail::extract_constraints(defect(alpha_only, f, g, h), "bipartite-leibniz/alpha-path",
                                        prov, true, primary);
            if (primary.empty()) continue;  // degenerate draw, resample
            ok = true;
            out.insert(out.end(), primary.begin(), primary.end());
            detail::extract_constraints(defect(full_arow, f, g, h), "bipartite-leibniz/full", prov,
                                        false, out);
        }
        if (!ok)
            throw InsufficientRankError("degenerate sampler: all alpha-path coefficients vanish");
    }
    return out;
}

// ---- Solving --------------------------------------------------------------

/// Staged exact solve: linear unit constraints, substitution, certified
/// pure-power detection for the quadratic stage, free-variable scan.
inline SolutionFamily solve(const std::vector<AnsatzConstraint>& constraints, int eps) {
    SolutionFamily fam;

    // Stage 1: linear constraints.
    std::vector<std::pair<std::array<Rational, 9>, std::string>> rows;
    for (const auto& c : constraints) {
        if (c.poly.degree() > 1) continue;
        for (const auto& part : c.poly.rational_parts(eps)) {
            std::array<Rational, 9> row{};
            for (const auto& [k, v] : part.terms()) {
                unsigned idx = 9;
                for (unsigned i = 0; i < 8; ++i)
                    if (k[i]) idx = i;
                if (idx == 9)
                    row[8] -= v.re();
                else
                    row[idx] += v.re();
            }
            rows.push_back({row, c.axiom + " " + c.provenance});
        }
    }
    for (const auto& [u, v] : detail::solve_linear(rows)) {
        fam.fixed[u] = PairScalar::from_rational(v, eps);
        fam.witnesses.push_back(std::string(unknown_name(u)) + " = " + v.str() + " (linear stage)");
    }

    // Stage 2: substitute, then pin unknowns forced to zero by pure-power
    // constraints; iterate to a fixpoint.
    std::vector<std::pair<ConstraintPoly, const AnsatzConstraint*>> pending;
    for (const auto& c : constraints) {
        ConstraintPoly p = c.poly;
        for (const auto& [u, v] : fam.fixed) p = p.substituted(u, v);
        if (!p.is_zero()) pending.push_back({std::move(p), &c});
    }
    bool changed = true;
    while (changed) {
        changed = false;
        for (auto& [p, src] : pending) {
            if (p.is_zero() || p.terms().size() != 1) continue;
            const auto& [key, coeff] = *p.terms().begin();
            unsigned var = 9, power = 0, nvars = 0;
            for (unsigned i = 0; i < 8; ++i)
                if (key[i]) {
                    var = i;
                    power = key[i];
                    ++nvars;
                }
            if (nvars != 1) continue;
            if (fam.fixed.contains(var)) continue;
            // c * x^k = 0 with c != 0 forces x = 0 over the rationals.
            fam.fixed[var] = PairScalar::zero(eps);
            if (var == A11 && power == 2) fam.a11_certified_square = true;
            fam.witnesses.push_back(std::string(unknown_name(var)) + " = 0 (pure power " +
                                    std::to_string(power) + " constraint, " + src->axiom + " " +
                                    src->provenance + ")");
            for (auto& [q, s] : pending) q = q.substituted(var, PairScalar::zero(eps));
            changed = true;
        }
    }
    for (const auto& [p, src] : pending) {
        if (p.is_zero()) continue;
        if (p.degree() == 0)
            throw NoSolutionError(src->axiom + " " + src->provenance,
                                  "inconsistent constraint " + src->poly.str());
        throw InsufficientRankError("unresolved constraint " + p.str() + " from " + src->axiom);
    }

    // Free-variable scan: unknowns untouched by every constraint.
    for (unsigned u = 0; u < 8; ++u) {
        if (fam.fixed.contains(u)) continue;
        bool appears = false;
        for (const auto& c : constraints)
            if (c.poly.uses(u)) appears = true;
        if (!appears) {
            fam.free_unknowns.push_back(u);
            fam.witnesses.push_back(std::string(unknown_name(u)) + " free (absent from all constraints)");
        } else {
            throw InsufficientRankError(std::string(unknown_name(u)) + " constrained but not pinned");
        }
    }
    return fam;
}

// ---- Single-product collapse ----------------------------------------------

/// Witness that the one-product ansatz a (f alpha g) (x) (f alpha g)
/// collapses: the unit slot forces f alpha g = 0 for the pair below,
/// yet the product value is nonzero.
template <class A>
struct InfeasibilityWitness {
    typename A::Element f, g;
    typename A::Element product;  // f alpha g, nonzero
};

/// Returns a witness pair for every nontrivial representation; nullopt
/// when alpha is identically zero (single product then consistent).
template <class A>
std::optional<InfeasibilityWitness<A>> single_product_infeasibility(const A& alg, Sampler& sampler,
                                                                    unsigned attempts = 32) {
    for (unsigned n = 0; n < attempts; ++n) {
        auto f = generic_sample(alg, sampler);
        auto g = generic_sample(alg, sampler);
        auto v = alg.alpha(f, g);
        if (!A::is_zero(v)) return InfeasibilityWitness<A>{std::move(f), std::move(g), std::move(v)};
    }
    return std::nullopt;
}

// ---- Full derivation with transcript --------------------------------------

/// Human-readable derivation record: one row per generated constraint,
/// ordered units first, then the a11 stage, then the b11-free report.
struct DerivationTranscript {
    struct Row {
        std::string axiom, sample, constraint, resolution;
    };
    std::vector<Row> rows;
    SolutionFamily family;
    bool b11_certified_free = false;  // b11 in {-1, 0, 1, 7/3} all satisfy
};

template <class A>
DerivationTranscript derive_coproduct(const A& alg, std::uint64_t seed, unsigned unit_samples = 5,
                                      unsigned leibniz_samples = 3) {
    int eps = alg.cls.j_squared;
    Sampler sampler(seed);
    auto constraints = unit_constraints(alg, sampler, unit_samples);
    SolutionFamily unit_family = solve(constraints, eps);
    auto quad = leibniz_constraints(alg, sampler, leibniz_samples, unit_family.fixed);
    constraints.insert(constraints.end(), quad.begin(), quad.end());

    DerivationTranscript t;
    t.family = solve(constraints, eps);
    for (const PairScalar& v :
         {PairScalar::from_rational(-1, eps), PairScalar::zero(eps), PairScalar::one(eps),
          PairScalar::from_rational(Rational(7, 3), eps)}) {
        std::map<unsigned, PairScalar> free_values;
        for (unsigned u : t.family.free_unknowns) free_values[u] = v;
        t.b11_certified_free = t.family.satisfies(constraints, free_values, eps);
        if (!t.b11_certified_free) break;
    }

    auto resolution_for = [&](const AnsatzConstraint& c) {
        std::string s;
        for (unsigned u = 0; u < 8; ++u) {
            if (!c.poly.uses(u)) continue;
            if (!s.empty()) s += ", ";
            auto it = t.family.fixed.find(u);
            if (it != t.family.fixed.end())
                s += std::string(unknown_name(u)) + " = " + it->second.str();
            else
                s += std::string(unknown_name(u)) + " free";
        }
        if (!c.primary) s += s.empty() ? "satisfied at solution" : "; satisfied at solution";
        return s;
    };
    for (const auto& c : constraints)
        t.rows.push_back({c.axiom, c.provenance, c.poly.str(), resolution_for(c)});
    for (unsigned u : t.family.free_unknowns)
        t.rows.push_back({"free-variable", "-", std::string(unknown_name(u)),
                          std::string(unknown_name(u)) + " undetermined; normalized later by the "
                                                         "compatibility/Kronecker checks"});
    return t;
}

}  // namespace composa
