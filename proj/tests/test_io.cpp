#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nabext/builtin.hpp"
#include "nabext/json_io.hpp"
#include "testutil.hpp"

using namespace nabext;

TEST_CASE("algebra serialization round trips and completes antisymmetry") {
    const LieAlgebra so3 = make_so3();
    const json j = json::parse(canonical_dump(algebra_to_json(so3)));
    const LieAlgebra back = algebra_from_json(j);
    CHECK(back == so3);
    CHECK(back.basis_names() == so3.basis_names());
    CHECK(back.bracket(1, 0) == vec_neg(so3.bracket(0, 1)));

    testutil::Rng rng(3);
    for (int t = 0; t < 25; ++t) {
        const LieAlgebra a = testutil::rnd_valid_algebra(rng, 3);
        CHECK(algebra_from_json(json::parse(canonical_dump(algebra_to_json(a)))) == a);
    }
}

TEST_CASE("algebra parsing rejects malformed input") {
    CHECK_THROWS_AS(algebra_from_json(json::parse(R"({"basis": []})")), ParseError);
    CHECK_THROWS_AS(algebra_from_json(json::parse(R"({"dim": 2, "basis": ["x"]})")), ParseError);
    CHECK_THROWS_AS(
        algebra_from_json(json::parse(R"({"dim": 2, "brackets": {"1,0": ["0", "0"]}})")),
        ParseError);
    CHECK_THROWS_AS(
        algebra_from_json(json::parse(R"({"dim": 2, "brackets": {"0,1": ["0"]}})")), ParseError);
    CHECK_THROWS_AS(
        algebra_from_json(json::parse(R"({"dim": 2, "brackets": {"0,1": ["x", "0"]}})")),
        ParseError);
    CHECK_THROWS_AS(algebra_from_json(json::parse(R"({"dim": 2, "brackets": {"0,5": ["0","0"]}})")),
                    ParseError);
}

TEST_CASE("cochain serialization, including the empty multi-index") {
    testutil::Rng rng(5);
    for (int arity = 0; arity <= 3; ++arity) {
        const Cochain c = testutil::rnd_cochain(rng, 4, arity, 2);
        const Cochain back =
            cochain_from_json(json::parse(canonical_dump(cochain_to_json(c))), 4, 2);
        CHECK(back == c);
    }
    CHECK_THROWS_AS(cochain_from_json(json::parse(R"({"coeffs": {}})"), 2, 1), ParseError);
    CHECK_THROWS_AS(
        cochain_from_json(json::parse(R"({"arity": 2, "coeffs": {"1,0": ["1"]}})"), 2, 1),
        ParseError);
}

TEST_CASE("canonical form omits zero coefficients and sorts keys numerically") {
    Cochain c(12, 1, 1);
    c.set_coeff(MultiIndex({2}), Vec{Rational(1)});
    c.set_coeff(MultiIndex({10}), Vec{Rational(1)});
    const std::string text = canonical_dump(cochain_to_json(c));
    CHECK(text.find("\"2\"") < text.find("\"10\""));  // numeric, not lexicographic

    Cochain z(2, 1, 1);
    z.set_coeff(MultiIndex({0}), Vec{Rational(0)});
    CHECK(cochain_to_json(z)["coeffs"].empty());
    CHECK(text.back() == '\n');
}

TEST_CASE("cocycle and matrix serialization") {
    testutil::Rng rng(7);
    const LieAlgebra g = make_aff2(), h = make_so3();
    for (int t = 0; t < 10; ++t) {
        const NonAbelianCocycle c = testutil::rnd_raw_cocycle(rng, g, h);
        CHECK(cocycle_from_json(json::parse(canonical_dump(cocycle_to_json(c))), 2, 3) == c);

        const Matrix m = testutil::rnd_matrix(rng, 3, 2);
        CHECK(matrix_from_json(json::parse(canonical_dump(matrix_to_json(m)))) == m);
    }
    CHECK_THROWS_AS(cocycle_from_json(json::parse(R"({"chi": {"arity": 2}})"), 2, 3), ParseError);
    CHECK_THROWS_AS(
        cocycle_from_json(json::parse(R"({"chi": {"arity": 1, "coeffs": {}}, "psi": []})"), 2, 3),
        ParseError);
}

TEST_CASE("module and element serialization") {
    testutil::Rng rng(11);
    const LieAlgebra g = make_heis3();
    const ModuleStructure m = adjoint_module(g);
    const ModuleStructure back = module_from_json(json::parse(canonical_dump(module_to_json(m))), g);
    CHECK(back.space_dim == m.space_dim);
    CHECK(back.action == m.action);

    const LieAlgebra h = make_aff2();
    const DgLaContext ctx = build_context(g, h);
    const NonAbelianCocycle c = testutil::rnd_raw_cocycle(rng, g, h);
    const LElement x = cocycle_to_mc(ctx, c);
    const LElement back_x =
        lelement_from_json(json::parse(canonical_dump(lelement_to_json(x))), ctx);
    CHECK(back_x == x);
}

TEST_CASE("witness serialization names the stage and the residual monomials") {
    WitnessResult w;
    w.kind = WitnessResult::Kind::NotEquivalent;
    w.failing_stage = 2;
    CHECK(witness_to_json(w)["stage"] == 2);

    WitnessResult u;
    u.kind = WitnessResult::Kind::Unknown;
    u.residual.parameter_names = {"t_0_0", "t_1_0"};
    Polynomial poly = Polynomial::constant(Rational(1));
    poly += Rational(2) * (Polynomial::variable(0) * Polynomial::variable(1));
    u.residual.constraints.push_back(poly);
    const ordered_json j = witness_to_json(u);
    CHECK(j["constraints"][0][""] == "1");
    CHECK(j["constraints"][0]["t_0_0*t_1_0"] == "2");
}

TEST_CASE("rationals serialize in lowest terms everywhere") {
    LieAlgebra a(2);
    a.set_bracket(0, 1, Vec{Rational(2, 4), Rational(0)});
    const std::string text = canonical_dump(algebra_to_json(a));
    CHECK(text.find("1/2") != std::string::npos);
    CHECK(text.find("2/4") == std::string::npos);
}
