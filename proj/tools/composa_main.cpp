// composa: exact two-product algebra toolkit CLI.
//
// Subcommands: bracket, star, compose, audit, solve-coproduct, chsh.
// Exit codes: 0 pass, 1 audit/identity failure, 2 usage or parse error.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "composa/audit.hpp"
#include "composa/chsh.hpp"
#include "composa/parser.hpp"
#include "composa/solver.hpp"

using namespace composa;
using nlohmann::ordered_json;

namespace {

struct CommonOpts {
    std::string cls = "elliptic";
    std::string rep = "matrix";
    std::string hbar = "1";
    std::uint64_t seed = 42;
    unsigned samples = 200;
    bool json = false;
};

CompositionClass make_class(const CommonOpts& o) {
    std::optional<Rational> h;
    if (o.hbar != "formal") h = Rational(o.hbar);
    int j2 = o.cls == "elliptic" ? -1 : (o.cls == "parabolic" ? 0 : 1);
    if (o.cls == "parabolic") return CompositionClass::make(0, std::nullopt);
    return CompositionClass::make(j2, h);
}

void add_common(CLI::App* cmd, CommonOpts& o, bool with_sampling = false) {
    cmd->add_option("--class", o.cls, "composition class")
        ->check(CLI::IsMember({"elliptic", "parabolic", "hyperbolic"}));
    cmd->add_option("--rep", o.rep, "representation")->check(CLI::IsMember({"matrix", "phase"}));
    cmd->add_option("--hbar", o.hbar, "rational value or 'formal'");
    if (with_sampling) {
        cmd->add_option("--seed", o.seed, "deterministic sampling seed");
        cmd->add_option("--samples", o.samples, "number of random samples");
    }
    cmd->add_flag("--json", o.json, "JSON output");
}

Product parse_product(const std::string& name) {
    if (name == "alpha") return Product::Alpha;
    if (name == "sigma") return Product::Sigma;
    if (name == "beta+") return Product::BetaPlus;
    if (name == "beta-") return Product::BetaMinus;
    throw CLI::ValidationError("--product must be alpha, sigma, beta+ or beta-");
}

int run_bracket(const CommonOpts& o, const std::string& product, const std::string& lhs,
                const std::string& rhs) {
    CompositionClass cls = make_class(o);
    Product p = parse_product(product);
    ParsedValue a = parse_expression(lhs, cls.j_squared);
    ParsedValue b = parse_expression(rhs, cls.j_squared);
    std::string out;
    if (std::holds_alternative<SquareMatrix>(a) && std::holds_alternative<SquareMatrix>(b)) {
        const auto& ma = std::get<SquareMatrix>(a);
        MatrixAlgebra alg{cls, ma.dim()};
        out = alg.apply(p, ma, std::get<SquareMatrix>(b)).str();
    } else if (std::holds_alternative<PhasePoly>(a) && std::holds_alternative<PhasePoly>(b)) {
        const auto& fa = std::get<PhasePoly>(a);
        const auto& fb = std::get<PhasePoly>(b);
        PhaseAlgebra alg(cls, std::max(fa.dof(), fb.dof()));
        out = alg.apply(p, fa, fb).str();
    } else {
        throw ParseError(0, "operands mix matrix and phase expressions");
    }
    if (o.json) {
        ordered_json j{{"schema", 1}, {"product", product}, {"result", out}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << out << "\n";
    }
    return 0;
}

int run_star(const CommonOpts& o, int sign, const std::string& lhs, const std::string& rhs) {
    CompositionClass cls = make_class(o);
    PhasePoly f = std::get<PhasePoly>(parse_expression(lhs, cls.j_squared));
    PhasePoly g = std::get<PhasePoly>(parse_expression(rhs, cls.j_squared));
    PhasePoly r = star(f, g, cls, sign);
    if (!cls.hbar_formal()) r = r.substitute_hbar(cls.numeric_hbar());
    std::cout << r.str() << "\n";
    return 0;
}

int run_compose(const CommonOpts& o, const std::string& product,
                const std::vector<std::string>& exprs) {
    CompositionClass cls = make_class(o);
    bool sigma_row = product == "sigma";
    if (!sigma_row && product != "alpha")
        throw CLI::ValidationError("--product must be alpha or sigma");
    CoproductTable table = canonical_table(cls);
    std::string out;
    if (o.rep == "matrix") {
        std::vector<SquareMatrix> m;
        for (const auto& e : exprs) m.push_back(std::get<SquareMatrix>(parse_expression(e, cls.j_squared)));
        TensorAlgebra<MatrixAlgebra> alg(MatrixAlgebra{cls, m[0].dim()}, table);
        auto F = TensorElement<MatrixAlgebra>::pure(m[0], m[1]);
        auto G = TensorElement<MatrixAlgebra>::pure(m[2], m[3]);
        out = element_str(alg.compose(sigma_row, F, G));
    } else {
        std::vector<PhasePoly> f;
        unsigned n = 1;
        for (const auto& e : exprs) {
            f.push_back(std::get<PhasePoly>(parse_expression(e, cls.j_squared)));
            n = std::max(n, f.back().dof());
        }
        TensorAlgebra<PhaseAlgebra> alg(PhaseAlgebra(cls, n), table);
        auto F = TensorElement<PhaseAlgebra>::pure(f[0], f[1]);
        auto G = TensorElement<PhaseAlgebra>::pure(f[2], f[3]);
        out = element_str(alg.compose(sigma_row, F, G));
    }
    std::cout << out << "\n";
    return 0;
}

int run_audit_cmd(const CommonOpts& o, const std::string& forge_b11) {
    CompositionClass cls = make_class(o);
    std::optional<Rational> forged;
    if (!forge_b11.empty()) forged = Rational(forge_b11);
    AuditReport report = run_audit(cls, o.rep, o.samples, o.seed, forged);
    if (o.json) {
        std::cout << report.to_json().dump(2) << "\n";
    } else {
        std::cout << "audit " << report.composition_class << "/" << report.representation
                  << " seed=" << report.seed << " samples=" << report.samples << "\n";
        for (const auto& r : report.rows) {
            std::cout << "  " << r.identity << ": " << r.checked << " checked, " << r.failures
                      << " failed";
            if (r.witness_sample) std::cout << " (first witness: sample " << *r.witness_sample << ")";
            std::cout << "\n";
        }
        std::cout << (report.pass ? "PASS" : "FAIL") << "\n";
    }
    return report.pass ? 0 : 1;
}

ordered_json transcript_json(const DerivationTranscript& t, const CommonOpts& o) {
    ordered_json j;
    j["schema"] = 1;
    j["class"] = o.cls;
    j["representation"] = o.rep;
    j["seed"] = o.seed;
    j["rows"] = ordered_json::array();
    for (const auto& r : t.rows)
        j["rows"].push_back({{"axiom", r.axiom},
                             {"sample", r.sample},
                             {"constraint", r.constraint},
                             {"resolution", r.resolution}});
    ordered_json fixed;
    for (const auto& [u, v] : t.family.fixed) fixed[unknown_name(u)] = v.str();
    ordered_json fam;
    fam["fixed"] = fixed;
    fam["free"] = ordered_json::array();
    for (unsigned u : t.family.free_unknowns) fam["free"].push_back(unknown_name(u));
    fam["a11_certified_square"] = t.family.a11_certified_square;
    fam["b11_certified_free"] = t.b11_certified_free;
    j["family"] = fam;
    return j;
}

int run_solve(const CommonOpts& o, bool single_product) {
    CompositionClass cls = make_class(o);
    if (single_product) {
        Sampler sampler(o.seed);
        ordered_json j{{"schema", 1}, {"mode", "single-product"}, {"class", o.cls}, {"rep", o.rep}};
        auto fill = [&](const auto& w) {
            if (w) {
                j["infeasible"] = true;
                j["witness"] = {{"f", element_str(w->f)},
                                {"g", element_str(w->g)},
                                {"f_alpha_g", element_str(w->product)}};
                j["note"] = "unit slot forces f alpha g = 0, so a lone alpha must be trivial";
            } else {
                j["infeasible"] = false;
            }
        };
        if (o.rep == "matrix")
            fill(single_product_infeasibility(MatrixAlgebra{cls, 2}, sampler));
        else
            fill(single_product_infeasibility(PhaseAlgebra(cls, 1), sampler));
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    DerivationTranscript t = o.rep == "matrix"
                                 ? derive_coproduct(MatrixAlgebra{cls, 2}, o.seed)
                                 : derive_coproduct(PhaseAlgebra(cls, 1), o.seed);
    if (o.json) {
        std::cout << transcript_json(t, o).dump(2) << "\n";
    } else {
        for (const auto& r : t.rows) {
            std::cout << r.axiom << " [" << r.sample << "]  " << r.constraint;
            if (r.axiom != "free-variable") std::cout << " = 0";
            std::cout << "   => " << r.resolution << "\n";
        }
        std::cout << "family: ";
        for (const auto& [u, v] : t.family.fixed) std::cout << unknown_name(u) << "=" << v.str() << " ";
        std::cout << "| free:";
        for (unsigned u : t.family.free_unknowns) std::cout << " " << unknown_name(u);
        std::cout << "\n";
    }
    return 0;
}

int run_chsh(const std::string& mode, std::vector<double> angles, bool json) {
    ChshResult r;
    if (mode == "classical") {
        r = chsh_classical_max();
    } else {
        if (angles.empty())
            angles = {chsh_optimal_angles[0], chsh_optimal_angles[1], chsh_optimal_angles[2],
                      chsh_optimal_angles[3]};
        if (angles.size() != 4) throw CLI::ValidationError("--angles needs exactly 4 values");
        r = chsh_quantum(angles[0], angles[1], angles[2], angles[3]);
    }
    if (json) {
        ordered_json j{{"schema", 1},
                       {"mode", r.mode},
                       {"value", r.value},
                       {"abs_value", r.abs_value},
                       {"optimal", r.optimal}};
        if (r.mode == "quantum")
            j["angles"] = r.angles;
        else
            j["strategy"] = r.strategy;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << r.mode << " S = " << r.value << " (|S| = " << r.abs_value << ")"
                  << (r.optimal ? " [optimal]" : "") << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "composa: exact composability two-product algebra toolkit\n"
        "Identity audits, Moyal/star brackets, bipartite composition, coproduct\n"
        "derivation, and a CHSH classical-vs-quantum demo (the CHSH singlet\n"
        "construction is a standard extension, not part of the algebra itself)."};
    app.require_subcommand(1);

    CommonOpts bro, sto, cmo, auo, soo;
    std::string product = "alpha";
    std::string lhs, rhs;
    auto* bracket = app.add_subcommand("bracket", "compute alpha/sigma/beta of two expressions");
    add_common(bracket, bro);
    bracket->add_option("--product", product, "alpha | sigma | beta+ | beta-");
    bracket->add_option("lhs", lhs, "left expression")->required();
    bracket->add_option("rhs", rhs, "right expression")->required();

    int star_sign = 1;
    std::string slhs, srhs;
    auto* star_cmd = app.add_subcommand("star", "star product of two phase-space expressions");
    add_common(star_cmd, sto);
    star_cmd->add_option("--sign", star_sign, "+1 or -1 exponent sign")->check(CLI::IsMember({1, -1}));
    star_cmd->add_option("lhs", slhs)->required();
    star_cmd->add_option("rhs", srhs)->required();

    std::string cproduct = "alpha";
    std::vector<std::string> cexprs;
    auto* compose = app.add_subcommand("compose", "bipartite product (f1(x)f2) o12 (g1(x)g2)");
    add_common(compose, cmo);
    compose->add_option("--product", cproduct, "alpha | sigma");
    compose->add_option("exprs", cexprs, "f1 f2 g1 g2")->expected(4);

    std::string forge_b11;
    auto* audit = app.add_subcommand("audit", "run the identity audit suite");
    add_common(audit, auo, true);
    audit->add_option("--forge-b11", forge_b11,
                      "audit the bipartite composite with a forged b11 table entry");

    bool single_product = false;
    auto* solve_cmd = app.add_subcommand("solve-coproduct", "derive the coproduct coefficients");
    add_common(solve_cmd, soo, true);
    solve_cmd->add_flag("--single-product", single_product,
                        "check the one-product ansatz instead (emits the collapse witness)");

    std::string chsh_mode = "quantum";
    std::vector<double> chsh_angles;
    bool chsh_json = false;
    auto* chsh = app.add_subcommand("chsh", "CHSH demo: quantum singlet vs classical strategies");
    chsh->add_option("--mode", chsh_mode)->check(CLI::IsMember({"quantum", "classical"}));
    chsh->add_option("--angles", chsh_angles, "a a' b b' (radians); default optimal");
    chsh->add_flag("--json", chsh_json);

    try {
        app.parse(argc, argv);
        if (bracket->parsed()) return run_bracket(bro, product, lhs, rhs);
        if (star_cmd->parsed()) return run_star(sto, star_sign, slhs, srhs);
        if (compose->parsed()) return run_compose(cmo, cproduct, cexprs);
        if (audit->parsed()) return run_audit_cmd(auo, forge_b11);
        if (solve_cmd->parsed()) return run_solve(soo, single_product);
        if (chsh->parsed()) return run_chsh(chsh_mode, chsh_angles, chsh_json);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const CLI::Error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
