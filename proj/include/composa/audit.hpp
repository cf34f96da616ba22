#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "composa/algebra.hpp"
#include "composa/sampler.hpp"
#include "composa/solver.hpp"
#include "composa/tensor.hpp"

namespace composa {

inline std::string element_str(const SquareMatrix& m) { return m.str(); }
inline std::string element_str(const PhasePoly& p) { return p.str(); }
template <class A>
std::string element_str(const TensorElement<A>& t) {
    if (t.summands.empty()) return "0";
    std::string s;
    for (const auto& sm : t.summands) {
        if (!s.empty()) s += " + ";
        s += "(" + sm.coeff.str() + ")*(" + element_str(sm.left) + ")(x)(" + element_str(sm.right) + ")";
    }
    return s;
}

struct AuditRow {
    std::string identity;
    unsigned checked = 0;
    unsigned failures = 0;
    std::optional<unsigned> witness_sample;  // lowest failing sample index
    std::string witness_detail;
};

struct AuditReport {
    std::string composition_class;
    std::string representation;
    std::string hbar;
    std::uint64_t seed = 0;
    unsigned samples = 0;
    std::optional<std::string> forged_b11;
    std::vector<AuditRow> rows;  // sorted by identity name
    bool pass = true;

    nlohmann::ordered_json to_json() const {
        nlohmann::ordered_json j;
        j["schema"] = 1;
        j["class"] = composition_class;
        j["representation"] = representation;
        j["hbar"] = hbar;
        j["seed"] = seed;
        j["samples"] = samples;
        if (forged_b11) j["forged_b11"] = *forged_b11;
        j["rows"] = nlohmann::ordered_json::array();
        for (const auto& r : rows) {
            nlohmann::ordered_json row;
            row["identity"] = r.identity;
            row["checked"] = r.checked;
            row["failures"] = r.failures;
            if (r.witness_sample)
                row["witness"] = {{"sample", *r.witness_sample}, {"defect", r.witness_detail}};
            else
                row["witness"] = nullptr;
            j["rows"].push_back(row);
        }
        j["pass"] = pass;
        return j;
    }
};

namespace detail {

template <class A>
void record(std::map<std::string, AuditRow>& rows, const std::string& name, unsigned sample,
            const typename A::Element& defect) {
    AuditRow& r = rows[name];
    r.identity = name;
    ++r.checked;
    if (!A::is_zero(defect)) {
        ++r.failures;
        if (!r.witness_sample) {
            r.witness_sample = sample;
            r.witness_detail = element_str(defect);
        }
    }
}

/// Run every identity of the composability two-product algebra on one
/// sampled triple.
template <class A>
void audit_triple(const A& alg, const typename A::Element& f, const typename A::Element& g,
                  const typename A::Element& h, unsigned i, bool parabolic,
                  std::map<std::string, AuditRow>& rows) {
    record<A>(rows, "alpha_antisymmetry", i, antisymmetry_defect_alpha(alg, f, g));
    record<A>(rows, "sigma_symmetry", i, symmetry_defect_sigma(alg, f, g));
    record<A>(rows, "jacobi", i, jacobi_defect(alg, f, g, h));
    record<A>(rows, "jordan", i, jordan_defect(alg, f, g));
    record<A>(rows, "leibniz_alpha", i, leibniz_defect(alg, f, g, h, Product::Alpha));
    record<A>(rows, "leibniz_sigma", i, leibniz_defect(alg, f, g, h, Product::Sigma));
    record<A>(rows, "compatibility", i, compatibility_defect(alg, f, g, h));
    record<A>(rows, "beta_plus_associativity", i, associator(alg, Product::BetaPlus, f, g, h));
    record<A>(rows, "beta_minus_associativity", i, associator(alg, Product::BetaMinus, f, g, h));
    if (parabolic)
        record<A>(rows, "sigma_associativity", i, associator(alg, Product::Sigma, f, g, h));
    // Unit laws 1aF = Fa1 = 0 and 1sF = Fs1 = F, reported as one row with
    // the first violated clause as witness.
    auto u = alg.unit();
    auto unit_defect = alg.alpha(u, f);
    if (A::is_zero(unit_defect)) unit_defect = alg.alpha(f, u);
    if (A::is_zero(unit_defect)) unit_defect = alg.sigma(u, f) - f;
    if (A::is_zero(unit_defect)) unit_defect = alg.sigma(f, u) - f;
    record<A>(rows, "unit_laws", i, unit_defect);
}

}  // namespace detail

/// Deterministic identity audit over one (class, representation) pair.
/// Matrix samples cycle dims 2, 3, 4; phase samples cycle 1 and 2 degrees
/// of freedom at total degree <= 4. With forged_b11 set, the audit runs
/// on the bipartite composite built from the forged coproduct table.
inline AuditReport run_audit(const CompositionClass& cls, const std::string& rep, unsigned samples,
                             std::uint64_t seed, std::optional<Rational> forged_b11 = std::nullopt) {
    if (samples < 1) throw std::invalid_argument("n_samples must be >= 1");
    AuditReport report;
    report.composition_class = cls.name();
    report.representation = rep;
    report.hbar = cls.hbar_formal() ? "formal" : cls.numeric_hbar().str();
    report.seed = seed;
    report.samples = samples;

    Sampler sampler(seed);
    std::map<std::string, AuditRow> rows;
    bool parabolic = cls.j_squared == 0;

    if (rep == "matrix") {
        if (parabolic)
            throw UnsupportedRepresentationError("matrix representation has no parabolic class");
        if (forged_b11) {
            report.forged_b11 = forged_b11->str();
            CoproductTable table = canonical_table(cls);
            table.b(1, 1) = PairScalar::from_rational(*forged_b11, cls.j_squared);
            TensorAlgebra<MatrixAlgebra> alg(MatrixAlgebra{cls, 2}, table);
            for (unsigned i = 0; i < samples; ++i) {
                auto mk = [&] {
                    return TensorElement<MatrixAlgebra>::pure(sampler.matrix(2, cls.j_squared),
                                                              sampler.matrix(2, cls.j_squared));
                };
                detail::audit_triple(alg, mk(), mk(), mk(), i, parabolic, rows);
            }
        } else {
            for (unsigned i = 0; i < samples; ++i) {
                unsigned dim = 2 + i % 3;
                MatrixAlgebra alg{cls, dim};
                detail::audit_triple(alg, sampler.matrix(dim, cls.j_squared),
                                     sampler.matrix(dim, cls.j_squared),
                                     sampler.matrix(dim, cls.j_squared), i, parabolic, rows);
            }
        }
    } else if (rep == "phase") {
        if (forged_b11) {
            if (parabolic || cls.hbar_formal())
                throw UnsupportedRepresentationError(
                    "forged-table audit needs an elliptic class with numeric hbar");
            report.forged_b11 = forged_b11->str();
            CoproductTable table = canonical_table(cls);
            table.b(1, 1) = PairScalar::from_rational(*forged_b11, cls.j_squared);
            TensorAlgebra<PhaseAlgebra> alg(PhaseAlgebra(cls, 1), table);
            for (unsigned i = 0; i < samples; ++i) {
                auto mk = [&] {
                    return TensorElement<PhaseAlgebra>::pure(sampler.poly(1, 3, cls.j_squared),
                                                             sampler.poly(1, 3, cls.j_squared));
                };
                detail::audit_triple(alg, mk(), mk(), mk(), i, parabolic, rows);
            }
        } else {
            for (unsigned i = 0; i < samples; ++i) {
                unsigned n = 1 + i % 2;
                PhaseAlgebra alg(cls, n);
                detail::audit_triple(alg, sampler.poly(n, 4, cls.j_squared),
                                     sampler.poly(n, 4, cls.j_squared),
                                     sampler.poly(n, 4, cls.j_squared), i, parabolic, rows);
            }
        }
    } else {
        throw UnsupportedRepresentationError("unknown representation: " + rep);
    }

    for (auto& [name, row] : rows) {
        if (row.failures) report.pass = false;
        report.rows.push_back(std::move(row));
    }
    return report;
}

}  // namespace composa
