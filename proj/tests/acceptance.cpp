// Acceptance suite: every criterion below is exact (rational arithmetic, no
// tolerances) and prints one pass/fail line. The process exits nonzero when
// any criterion fails.

#include "nabext/abelian.hpp"
#include "nabext/builtin.hpp"
#include "nabext/dgla.hpp"
#include "nabext/extensions.hpp"
#include "nabext/json_io.hpp"
#include "testutil.hpp"

#include <array>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <string>
#include <sys/wait.h>

using namespace nabext;
using testutil::Rng;

namespace {

int failures = 0;

void criterion(int number, const std::string& name, const std::function<bool()>& body) {
    bool ok = false;
    std::string note;
    try {
        ok = body();
    } catch (const std::exception& e) {
        note = std::string(" (") + e.what() + ")";
    }
    std::printf("criterion %d: %-58s %s%s\n", number, name.c_str(), ok ? "PASS" : "FAIL",
                note.c_str());
    if (!ok)
        ++failures;
}

LElement random_element(Rng& rng, const DgLaContext& ctx, int degree) {
    const int arity = degree + 1;
    Cochain full(ctx.dim_sum(), arity, ctx.dim_sum());
    for (const MultiIndex& mi : all_multi_indices(ctx.dim_sum(), arity)) {
        if (bigrade_of(mi, ctx.dim_g()).m < 1)
            continue;
        if (testutil::rnd_int(rng, 0, 1)) {
            Vec v = vec_zero(ctx.dim_sum());
            for (int k = 0; k < ctx.dim_h(); ++k)
                v[ctx.dim_g() + k] = testutil::rnd_rational(rng);
            full.set_coeff(mi, v);
        }
    }
    return element_from_cochain(ctx, full);
}

// 1. Bracket laws, and the bracket square detecting the Jacobi identity.
bool nr_bracket_laws() {
    Rng rng(101);
    for (int t = 0; t < 100; ++t) {
        const int n = testutil::rnd_int(rng, 2, 3);
        const int pa = testutil::rnd_int(rng, 0, 3), pb = testutil::rnd_int(rng, 0, 3),
                  pc = testutil::rnd_int(rng, 0, 3);
        const Cochain a = testutil::rnd_cochain(rng, n, pa, n);
        const Cochain b = testutil::rnd_cochain(rng, n, pb, n);
        const Cochain c = testutil::rnd_cochain(rng, n, pc, n);
        const long da = pa - 1, db = pb - 1;
        const Rational sign = ((da * db) % 2 != 0) ? Rational(1) : Rational(-1);
        if (!(nr_bracket(a, b) == sign * nr_bracket(b, a)))
            return false;
        Cochain rhs = nr_bracket(nr_bracket(a, b), c);
        const Cochain inner = nr_bracket(b, nr_bracket(a, c));
        rhs += ((da * db) % 2 != 0) ? -inner : inner;
        if (!(nr_bracket(a, nr_bracket(b, c)) == rhs))
            return false;
    }
    for (int t = 0; t < 100; ++t) {
        const LieAlgebra a = (t % 5 < 3) ? testutil::rnd_antisymmetric_table(rng, 3)
                                         : testutil::conjugate_algebra(
                                               rng, t % 2 ? make_so3() : make_heis3());
        const Cochain rho = bracket_cochain(a);
        if (validate_lie(a).valid != nr_bracket(rho, rho).is_zero())
            return false;
    }
    return true;
}

// 2. The Chevalley-Eilenberg differential is a differential and coincides
//    with the adjoint-bracket route.
bool ce_nr_coherence() {
    Rng rng(102);
    for (int t = 0; t < 100; ++t) {
        const LieAlgebra l = testutil::rnd_valid_algebra(rng, 3);
        const ModuleStructure m = testutil::rnd_module(rng, l);
        const Cochain c =
            testutil::rnd_cochain(rng, l.dim(), testutil::rnd_int(rng, 0, 2), m.space_dim);
        if (!ce_differential(ce_differential(c, m), m).is_zero())
            return false;
    }
    for (int t = 0; t < 100; ++t) {
        const LieAlgebra l = testutil::rnd_valid_algebra(rng, 3);
        const Cochain c =
            testutil::rnd_cochain(rng, l.dim(), testutil::rnd_int(rng, 0, 3), l.dim());
        if (!(ce_differential(c, adjoint_module(l)) == nr_bracket(bracket_cochain(l), c)))
            return false;
    }
    return true;
}

// 3. Cocycle equations agree with the Maurer-Cartan defect on 200 random
//    data, at least 50 of them valid by construction.
bool cocycle_mc_oracle() {
    Rng rng(103);
    int valid_count = 0;
    for (int t = 0; t < 200; ++t) {
        const LieAlgebra g = testutil::rnd_valid_algebra(rng, 3);
        const LieAlgebra h = testutil::rnd_valid_algebra(rng, 3);
        const DgLaContext ctx = build_context(g, h);
        const NonAbelianCocycle c = (t % 3 == 0) ? testutil::rnd_valid_cocycle(rng, g, h)
                                                 : testutil::rnd_raw_cocycle(rng, g, h);
        const bool eqs = is_nonabelian_cocycle(g, h, c).valid;
        if (eqs != mc_defect(ctx, cocycle_to_mc(ctx, c)).is_zero())
            return false;
        if (eqs)
            ++valid_count;
    }
    return valid_count >= 50;
}

// 4. Jacobiator component table: structural zeros always, and the built
//    extension is Lie exactly when the h-components vanish.
bool jacobiator_table() {
    Rng rng(104);
    for (int t = 0; t < 100; ++t) {
        const LieAlgebra g = testutil::rnd_valid_algebra(rng, 3);
        const LieAlgebra h = testutil::rnd_valid_algebra(rng, 3);
        const NonAbelianCocycle c = (t % 3 == 0) ? testutil::rnd_valid_cocycle(rng, g, h)
                                                 : testutil::rnd_raw_cocycle(rng, g, h);
        const ExtensionBracket e = build_extension(g, h, c);
        const JacobiatorReport rep = jacobiator_components(e);
        if (!rep.structural_zeros_hold())
            return false;
        if (validate_lie(e.total).valid != rep.h_components_zero())
            return false;
    }
    // shape-conforming but fully scrambled blocks, nothing assumed valid
    for (int t = 0; t < 30; ++t) {
        const LieAlgebra g = testutil::rnd_antisymmetric_table(rng, 2);
        const LieAlgebra h = testutil::rnd_antisymmetric_table(rng, 2);
        NonAbelianCocycle c = zero_cocycle(2, 2);
        c.chi = testutil::rnd_cochain(rng, 2, 2, 2);
        for (auto& m : c.psi)
            m = testutil::rnd_matrix(rng, 2, 2);
        const ExtensionBracket e = build_extension(g, h, c);
        if (!jacobiator_components(e).structural_zeros_hold())
            return false;
    }
    return true;
}

// 5. The cocycle transformation formulas equal the gauge action through the
//    packing maps, and the gauge series truncates.
bool gauge_cocycle_oracle() {
    Rng rng(105);
    for (int t = 0; t < 100; ++t) {
        const LieAlgebra g = testutil::rnd_valid_algebra(rng, 3);
        const LieAlgebra h = testutil::rnd_valid_algebra(rng, 3);
        const DgLaContext ctx = build_context(g, h);
        const NonAbelianCocycle c = (t % 2 == 0) ? testutil::rnd_valid_cocycle(rng, g, h)
                                                 : testutil::rnd_raw_cocycle(rng, g, h);
        const Matrix beta = testutil::rnd_beta(rng, g, h);
        const NonAbelianCocycle direct = cocycle_equiv_apply(g, h, c, beta);
        const NonAbelianCocycle via_gauge =
            mc_to_cocycle(ctx, gauge_act(ctx, {beta}, cocycle_to_mc(ctx, c)));
        if (!(direct == via_gauge))
            return false;
        const Cochain bf = gauge_to_cochain(ctx, {beta});
        const Cochain db = nr_bracket(ctx.rho, bf);
        if (!nr_bracket(bf, nr_bracket(bf, db)).is_zero())
            return false;
    }
    return true;
}

// 6. Gauge stability of Maurer-Cartan elements, and composition by addition.
bool gauge_mc_stability() {
    Rng rng(106);
    for (int t = 0; t < 100; ++t) {
        const LieAlgebra g = testutil::rnd_valid_algebra(rng, 3);
        const LieAlgebra h = testutil::rnd_valid_algebra(rng, 3);
        const DgLaContext ctx = build_context(g, h);
        const LElement alpha = cocycle_to_mc(ctx, testutil::rnd_valid_cocycle(rng, g, h));
        if (!mc_defect(ctx, alpha).is_zero())
            return false;
        const GaugeElement b1{testutil::rnd_beta(rng, g, h)};
        if (!mc_defect(ctx, gauge_act(ctx, b1, alpha)).is_zero())
            return false;
    }
    for (int t = 0; t < 100; ++t) {
        const LieAlgebra g = testutil::rnd_valid_algebra(rng, 3);
        const LieAlgebra h = testutil::rnd_valid_algebra(rng, 3);
        const DgLaContext ctx = build_context(g, h);
        const LElement alpha = random_element(rng, ctx, 1);
        const GaugeElement b1{testutil::rnd_beta(rng, g, h)};
        const GaugeElement b2{testutil::rnd_beta(rng, g, h)};
        if (!(gauge_act(ctx, b1, gauge_act(ctx, b2, alpha)) ==
              gauge_act(ctx, {b1.beta + b2.beta}, alpha)))
            return false;
    }
    return true;
}

// 7. The twisted differential restricted to module cochains is the
//    Chevalley-Eilenberg differential.
bool tangent_identification() {
    Rng rng(107);
    for (int t = 0; t < 20; ++t) {
        const LieAlgebra g = testutil::rnd_valid_algebra(rng, 3);
        const ModuleStructure m = testutil::rnd_module(rng, g);
        if (!verify_tangent(g, m).ok())
            return false;
    }
    return true;
}

// 8. Desk-scale quantitative facts.
bool quantitative_facts() {
    for (int n = 2; n <= 4; ++n) {
        const LieAlgebra g = make_abelian(n);
        if (ce_cohomology(g, trivial_module(g, 1), 2).dim_h != n * (n - 1) / 2)
            return false;
    }
    const LieAlgebra sl2 = make_sl2();
    if (ce_cohomology(sl2, adjoint_module(sl2), 2).dim_h != 0)
        return false;

    const WitnessResult w = find_witness(make_abelian(2), make_abelian(1), heisenberg_cocycle(),
                                         zero_cocycle(2, 1));
    if (w.kind != WitnessResult::Kind::NotEquivalent)
        return false;

    const LieAlgebra ab2 = make_abelian(2);
    const CohomologyResult h2 = ce_cohomology(ab2, trivial_module(ab2, 1), 2);
    if (h2.representative_basis.size() != 1)
        return false;
    const Vec rep = h2.representative_basis[0].coeff(MultiIndex({0, 1}));
    const Vec heis = heisenberg_cocycle().chi.coeff(MultiIndex({0, 1}));
    if (rep[0].is_zero())
        return false;
    return vec_scale(heis[0] / rep[0], rep) == heis;  // unique class up to scale
}

int run_command(const std::string& cmd) {
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

// 9. Round trips: library level on random valid cocycles, and byte-identical
//    canonical files through the command-line interface.
bool round_trips() {
    Rng rng(109);
    for (int t = 0; t < 100; ++t) {
        const LieAlgebra g = testutil::rnd_valid_algebra(rng, 3);
        const LieAlgebra h = testutil::rnd_valid_algebra(rng, 3);
        const NonAbelianCocycle c = testutil::rnd_valid_cocycle(rng, g, h);
        const int p = g.dim(), q = h.dim();
        Matrix h_embed(p + q, q), proj(p, p + q), s(p + q, p);
        for (int i = 0; i < q; ++i)
            h_embed.at(p + i, i) = 1;
        for (int i = 0; i < p; ++i) {
            proj.at(i, i) = 1;
            s.at(i, i) = 1;
        }
        const ExtensionBracket e = build_extension(g, h, c);
        if (!(extension_to_cocycle(e.total, h_embed, proj, s).cocycle == c))
            return false;
    }

    const std::string cli = NABEXT_CLI_PATH;
    const std::string dir = NABEXT_CATALOG_DIR;
    const auto tmp = [](const char* name) {
        return (std::filesystem::temp_directory_path() / name).string();
    };
    const std::array<std::array<const char*, 3>, 4> cases = {{
        {"ab2.json", "ab1.json", "cocycle_heis.json"},
        {"ab2.json", "ab1.json", "cocycle_zero_ab2_ab1.json"},
        {"ab1.json", "ab1.json", "cocycle_aff.json"},
        {"ab2.json", "aff2.json", "cocycle_bad_aff2.json"},
    }};
    for (const auto& [gf, hf, cf] : cases) {
        const LieAlgebra g = algebra_from_json(load_json_file(dir + "/" + gf));
        const std::string built = tmp("nabext_acc_built.json");
        const std::string extracted = tmp("nabext_acc_extracted.json");
        if (run_command(cli + " --output " + built + " build " + dir + "/" + gf + " " + dir +
                        "/" + hf + " " + dir + "/" + cf) != 0)
            return false;
        if (run_command(cli + " --output " + extracted + " extract " + built + " --gdim " +
                        std::to_string(g.dim())) != 0)
            return false;
        if (read_text_file(extracted) != read_text_file(dir + "/" + cf))
            return false;
    }
    return true;
}

}  // namespace

int main() {
    criterion(1, "bracket laws and the Jacobi detection square", nr_bracket_laws);
    criterion(2, "differential squares to zero and equals the adjoint bracket", ce_nr_coherence);
    criterion(3, "cocycle equations match the Maurer-Cartan defect (200 data)", cocycle_mc_oracle);
    criterion(4, "Jacobiator component table and extension validity", jacobiator_table);
    criterion(5, "cocycle transformation equals the gauge action", gauge_cocycle_oracle);
    criterion(6, "gauge action preserves MC and composes additively", gauge_mc_stability);
    criterion(7, "twisted differential restricts to the module differential", tangent_identification);
    criterion(8, "quantitative desk-scale facts", quantitative_facts);
    criterion(9, "build/extract round trips, library and CLI", round_trips);

    if (failures) {
        std::cout << failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all criteria passed\n";
    return 0;
}
