#include "nabext/abelian.hpp"
#include "nabext/builtin.hpp"
#include "nabext/dgla.hpp"
#include "nabext/extensions.hpp"
#include "nabext/json_io.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

using namespace nabext;

namespace {

// Exit codes: 0 success / affirmative verdict, 1 negative mathematical
// verdict, 2 input error, 3 undecided witness search, 4 internal error.
constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitInput = 2;
constexpr int kExitUnknown = 3;
constexpr int kExitInternal = 4;

struct Output {
    bool as_json = false;
    std::string path;  // empty means stdout

    void emit(const ordered_json& doc) const {
        const std::string text = canonical_dump(doc);
        if (path.empty())
            std::cout << text;
        else
            write_text_file(path, text);
    }
};

std::string vec_text(const Vec& v, const std::vector<std::string>& names) {
    std::string s;
    bool any = false;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_zero())
            continue;
        if (any)
            s += " + ";
        s += "(" + v[i].str() + ")*" + names[i];
        any = true;
    }
    return any ? s : "0";
}

LieAlgebra load_algebra(const std::string& path) { return algebra_from_json(load_json_file(path)); }

NonAbelianCocycle load_cocycle(const std::string& path, const LieAlgebra& g,
                               const LieAlgebra& h) {
    return cocycle_from_json(load_json_file(path), g.dim(), h.dim());
}

int cmd_validate(const std::string& file, const Output& out) {
    const LieAlgebra a = load_algebra(file);
    const LieReport rep = validate_lie(a);
    if (out.as_json) {
        out.emit(lie_report_to_json(rep, a));
    } else {
        std::cout << (rep.valid ? "valid\n" : "invalid\n");
        for (const auto& v : rep.violations) {
            std::cout << "  "
                      << (v.kind == LieViolation::Kind::Jacobi ? "jacobi identity"
                                                               : "antisymmetry")
                      << " fails at (";
            bool first = true;
            for (int i : v.indices)
                if (i >= 0) {
                    std::cout << (first ? "" : ", ") << a.basis_name(i);
                    first = false;
                }
            std::cout << "): defect = " << vec_text(v.defect, a.basis_names()) << "\n";
        }
    }
    return rep.valid ? kExitOk : kExitNegative;
}

int cmd_mc_check(const std::string& gf, const std::string& hf, const std::string& cf,
                 const Output& out) {
    const LieAlgebra g = load_algebra(gf), h = load_algebra(hf);
    const NonAbelianCocycle c = load_cocycle(cf, g, h);
    const CocycleReport rep = is_nonabelian_cocycle(g, h, c);
    const DgLaContext ctx = build_context(g, h);
    const LElement defect = mc_defect(ctx, cocycle_to_mc(ctx, c));
    const bool mc_zero = defect.is_zero();
    if (out.as_json) {
        ordered_json j;
        j["is_cocycle"] = rep.valid;
        j["report"] = cocycle_report_to_json(rep);
        j["mc_defect_zero"] = mc_zero;
        j["agree"] = (rep.valid == mc_zero);
        out.emit(j);
    } else {
        std::cout << "cocycle: " << (rep.valid ? "yes" : "no") << "\n";
        for (const auto& v : rep.violations) {
            const char* eq = v.kind == CocycleViolation::Kind::Derivation ? "derivation"
                             : v.kind == CocycleViolation::Kind::ActionCompat
                                 ? "action compatibility"
                                 : "cyclic sum";
            std::cout << "  " << eq << " fails at (";
            for (std::size_t i = 0; i < v.indices.size(); ++i)
                std::cout << (i ? ", " : "") << v.indices[i];
            std::cout << ")\n";
        }
        std::cout << "maurer-cartan defect: " << (mc_zero ? "zero" : "nonzero") << "\n";
    }
    if (rep.valid != mc_zero) {
        std::cerr << "internal error: cocycle equations and maurer-cartan defect disagree\n";
        return kExitInternal;
    }
    return rep.valid ? kExitOk : kExitNegative;
}

int cmd_jacobiator(const std::string& file, int gdim, const Output& out) {
    const LieAlgebra total = load_algebra(file);
    const ExtensionBracket ext = as_extension_bracket(total, gdim);
    const JacobiatorReport rep = jacobiator_components(ext);
    const std::pair<const char*, const Cochain*> comps[] = {
        {"J^G_GGG", &rep.jg_ggg}, {"J^G_GGH", &rep.jg_ggh}, {"J^G_GHH", &rep.jg_ghh},
        {"J^G_HHH", &rep.jg_hhh}, {"J^H_GGG", &rep.jh_ggg}, {"J^H_GGH", &rep.jh_ggh},
        {"J^H_GHH", &rep.jh_ghh}, {"J^H_HHH", &rep.jh_hhh},
    };
    if (out.as_json) {
        ordered_json j;
        for (const auto& [name, c] : comps) {
            ordered_json o;
            o["zero"] = c->is_zero();
            o["cochain"] = cochain_to_json(*c);
            j[name] = std::move(o);
        }
        j["lie"] = rep.g_components_zero() && rep.h_components_zero();
        out.emit(j);
    } else {
        for (const auto& [name, c] : comps)
            std::cout << name << ": " << (c->is_zero() ? "zero" : "NONZERO") << "\n";
    }
    return (rep.g_components_zero() && rep.h_components_zero()) ? kExitOk : kExitNegative;
}

int cmd_gauge(const std::string& gf, const std::string& hf, const std::string& cf,
              const std::string& bf, const Output& out) {
    const LieAlgebra g = load_algebra(gf), h = load_algebra(hf);
    const NonAbelianCocycle c = load_cocycle(cf, g, h);
    const Matrix beta = matrix_from_json(load_json_file(bf));
    if (beta.rows() != h.dim() || beta.cols() != g.dim())
        throw ParseError("gauge: beta must be a dim(h) x dim(g) matrix");
    out.emit(cocycle_to_json(cocycle_equiv_apply(g, h, c, beta)));
    return kExitOk;
}

int cmd_equiv(const std::string& gf, const std::string& hf, const std::string& c1f,
              const std::string& c2f, const Output& out) {
    const LieAlgebra g = load_algebra(gf), h = load_algebra(hf);
    const NonAbelianCocycle c1 = load_cocycle(c1f, g, h);
    const NonAbelianCocycle c2 = load_cocycle(c2f, g, h);
    if (!is_nonabelian_cocycle(g, h, c1).valid || !is_nonabelian_cocycle(g, h, c2).valid) {
        std::cerr << "equiv: inputs must be valid cocycles\n";
        return kExitInput;
    }
    const WitnessResult w = find_witness(g, h, c1, c2);
    if (out.as_json)
        out.emit(witness_to_json(w));
    else {
        switch (w.kind) {
            case WitnessResult::Kind::Found:
                std::cout << "equivalent; witness beta (rows = h-coordinates, cols = g-basis):\n";
                for (int r = 0; r < w.beta->rows(); ++r) {
                    std::cout << " ";
                    for (int c = 0; c < w.beta->cols(); ++c)
                        std::cout << " " << w.beta->at(r, c).str();
                    std::cout << "\n";
                }
                break;
            case WitnessResult::Kind::NotEquivalent:
                std::cout << "not equivalent (stage " << w.failing_stage << ")\n";
                break;
            case WitnessResult::Kind::Unknown:
                std::cout << "unknown: residual system over";
                for (const auto& p : w.residual.parameter_names)
                    std::cout << " " << p;
                std::cout << "\n";
                break;
        }
    }
    switch (w.kind) {
        case WitnessResult::Kind::Found: return kExitOk;
        case WitnessResult::Kind::NotEquivalent: return kExitNegative;
        default: return kExitUnknown;
    }
}

int cmd_cohomology(const std::string& af, const std::string& mf, int degree, const Output& out) {
    const LieAlgebra a = load_algebra(af);
    const ModuleStructure m = module_from_json(load_json_file(mf), a);
    if (!module_check(m).valid) {
        std::cerr << "cohomology: module does not validate\n";
        return kExitInput;
    }
    const CohomologyResult r = ce_cohomology(a, m, degree);
    if (out.as_json)
        out.emit(cohomology_to_json(r));
    else {
        std::cout << "dim Z^" << degree << " = " << r.dim_cocycles << "\n"
                  << "dim B^" << degree << " = " << r.dim_coboundaries << "\n"
                  << "dim H^" << degree << " = " << r.dim_h << "\n";
        for (const auto& rep : r.representative_basis)
            std::cout << "representative: " << canonical_dump(cochain_to_json(rep));
    }
    return kExitOk;
}

int cmd_classify(const std::string& af, const std::string& mf, const Output& out) {
    const LieAlgebra a = load_algebra(af);
    const ModuleStructure m = module_from_json(load_json_file(mf), a);
    if (!module_check(m).valid) {
        std::cerr << "classify: module does not validate\n";
        return kExitInput;
    }
    const ClassifyResult r = classify_abelian(a, m);
    if (out.as_json) {
        ordered_json j;
        j["H2"] = cohomology_to_json(r.h2);
        j["semidirect"] = algebra_to_json(r.semidirect);
        ordered_json exts = ordered_json::array();
        for (const auto& e : r.representative_extensions)
            exts.push_back(algebra_to_json(e));
        j["extensions"] = std::move(exts);
        out.emit(j);
    } else {
        std::cout << "dim H^2 = " << r.h2.dim_h << "\n";
        std::cout << "trivial class (semidirect): " << canonical_dump(algebra_to_json(r.semidirect));
        for (std::size_t i = 0; i < r.representative_extensions.size(); ++i)
            std::cout << "class " << (i + 1) << ": "
                      << canonical_dump(algebra_to_json(r.representative_extensions[i]));
    }
    return kExitOk;
}

int cmd_build(const std::string& gf, const std::string& hf, const std::string& cf,
              const Output& out) {
    const LieAlgebra g = load_algebra(gf), h = load_algebra(hf);
    const NonAbelianCocycle c = load_cocycle(cf, g, h);
    out.emit(algebra_to_json(build_extension(g, h, c).total));
    return kExitOk;
}

int cmd_extract(const std::string& ef, int gdim, const std::optional<std::string>& section_file,
                const Output& out) {
    const LieAlgebra e = load_algebra(ef);
    const int n = e.dim();
    if (gdim < 0 || gdim > n)
        throw ParseError("extract: --gdim out of range");
    const int q = n - gdim;
    Matrix h_embed(n, q), proj(gdim, n), s(n, gdim);
    for (int i = 0; i < q; ++i)
        h_embed.at(gdim + i, i) = 1;
    for (int i = 0; i < gdim; ++i)
        proj.at(i, i) = 1;
    for (int i = 0; i < gdim; ++i)
        s.at(i, i) = 1;
    if (section_file)
        s = matrix_from_json(load_json_file(*section_file));
    const ExtractedCocycle ex = extension_to_cocycle(e, h_embed, proj, s);
    out.emit(cocycle_to_json(ex.cocycle));
    return kExitOk;
}

int cmd_tangent_check(const std::string& af, const std::string& mf, const Output& out) {
    const LieAlgebra a = load_algebra(af);
    const ModuleStructure m = module_from_json(load_json_file(mf), a);
    if (!module_check(m).valid) {
        std::cerr << "tangent-check: module does not validate\n";
        return kExitInput;
    }
    const TangentReport r = verify_tangent(a, m);
    if (out.as_json) {
        ordered_json j;
        j["differentials_match"] = r.differentials_match;
        j["bracket_abelian"] = r.bracket_abelian;
        j["detail"] = r.detail;
        out.emit(j);
    } else {
        std::cout << "twisted differential matches chevalley-eilenberg differential: "
                  << (r.differentials_match ? "yes" : "NO") << "\n"
                  << "module cochains abelian under the bracket: "
                  << (r.bracket_abelian ? "yes" : "NO") << "\n";
        if (!r.detail.empty())
            std::cout << r.detail << "\n";
    }
    return r.ok() ? kExitOk : kExitNegative;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computation with Lie algebra extensions, non-abelian cocycles,\n"
                 "Maurer-Cartan elements and gauge equivalence"};
    app.require_subcommand(1);

    Output out;
    app.add_flag("--json", out.as_json, "machine-readable output");
    app.add_option("--output", out.path, "write the primary artifact to a file");

    std::string file_a, file_b, file_c, file_d;
    int degree = 2;
    int gdim = 0;
    std::optional<std::string> section_file;

    auto* validate = app.add_subcommand("validate", "check a structure-constant table");
    validate->add_option("algebra_file", file_a)->required();

    auto* mc = app.add_subcommand("mc-check", "cocycle equations vs Maurer-Cartan defect");
    mc->add_option("g_file", file_a)->required();
    mc->add_option("h_file", file_b)->required();
    mc->add_option("cocycle_file", file_c)->required();

    auto* jac = app.add_subcommand("jacobiator", "component analysis of an extension bracket");
    jac->add_option("algebra_file", file_a)->required();
    jac->add_option("--gdim", gdim, "size of the leading g-block")->required();

    auto* gauge = app.add_subcommand("gauge", "apply a gauge parameter to a cocycle");
    gauge->add_option("g_file", file_a)->required();
    gauge->add_option("h_file", file_b)->required();
    gauge->add_option("cocycle_file", file_c)->required();
    gauge->add_option("beta_file", file_d)->required();

    auto* equiv = app.add_subcommand("equiv", "search a witness of cocycle equivalence");
    equiv->add_option("g_file", file_a)->required();
    equiv->add_option("h_file", file_b)->required();
    equiv->add_option("cocycle1_file", file_c)->required();
    equiv->add_option("cocycle2_file", file_d)->required();

    auto* coh = app.add_subcommand("cohomology", "Chevalley-Eilenberg cohomology of a module");
    coh->add_option("algebra_file", file_a)->required();
    coh->add_option("module_file", file_b)->required();
    coh->add_option("--degree", degree)->required();

    auto* cls = app.add_subcommand("classify", "abelian extensions up to equivalence");
    cls->add_option("algebra_file", file_a)->required();
    cls->add_option("module_file", file_b)->required();

    auto* build = app.add_subcommand("build", "assemble the extension of a cocycle");
    build->add_option("g_file", file_a)->required();
    build->add_option("h_file", file_b)->required();
    build->add_option("cocycle_file", file_c)->required();

    auto* extract = app.add_subcommand("extract", "read the cocycle of an extension");
    extract->add_option("extension_file", file_a)->required();
    extract->add_option("--gdim", gdim, "size of the leading g-block")->required();
    extract->add_option("--section", section_file, "matrix file overriding the canonical section");

    auto* tangent = app.add_subcommand("tangent-check",
                                       "twisted differential vs module differential");
    tangent->add_option("algebra_file", file_a)->required();
    tangent->add_option("module_file", file_b)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (validate->parsed())
            return cmd_validate(file_a, out);
        if (mc->parsed())
            return cmd_mc_check(file_a, file_b, file_c, out);
        if (jac->parsed())
            return cmd_jacobiator(file_a, gdim, out);
        if (gauge->parsed())
            return cmd_gauge(file_a, file_b, file_c, file_d, out);
        if (equiv->parsed())
            return cmd_equiv(file_a, file_b, file_c, file_d, out);
        if (coh->parsed())
            return cmd_cohomology(file_a, file_b, degree, out);
        if (cls->parsed())
            return cmd_classify(file_a, file_b, out);
        if (build->parsed())
            return cmd_build(file_a, file_b, file_c, out);
        if (extract->parsed())
            return cmd_extract(file_a, gdim, section_file, out);
        if (tangent->parsed())
            return cmd_tangent_check(file_a, file_b, out);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::logic_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitInput;
}
