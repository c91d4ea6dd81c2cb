#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nabext/builtin.hpp"
#include "nabext/cochain.hpp"
#include "testutil.hpp"

using namespace nabext;

namespace {
Vec unit(int n, int i) {
    Vec v = vec_zero(n);
    v[i] = 1;
    return v;
}

Cochain identity_cochain(int n) {
    Cochain c(n, 1, n);
    for (int i = 0; i < n; ++i)
        c.set_coeff(MultiIndex({i}), unit(n, i));
    return c;
}
}  // namespace

TEST_CASE("multi-index sorting tracks the permutation sign") {
    auto s = sort_indices({2, 0, 1});
    REQUIRE(s.has_value());
    CHECK(s->first.indices == std::vector<int>{0, 1, 2});
    CHECK(s->second == 1);
    CHECK(sort_indices({1, 0})->second == -1);
    CHECK(!sort_indices({1, 1}).has_value());
}

TEST_CASE("eval is antisymmetric and multilinear") {
    Cochain c(3, 2, 2);
    c.set_coeff(MultiIndex({0, 1}), Vec{Rational(1), Rational(2)});

    // repeated argument
    CHECK(vec_is_zero(eval(c, {unit(3, 0), unit(3, 0)})));
    // transposition flips the sign
    CHECK(eval(c, {unit(3, 1), unit(3, 0)}) == Vec{Rational(-1), Rational(-2)});
    // identity arity-1 cochain is the identity
    CHECK(eval(identity_cochain(3), {unit(3, 2)}) == unit(3, 2));

    testutil::Rng rng(5);
    for (int t = 0; t < 50; ++t) {
        const int n = testutil::rnd_int(rng, 2, 4);
        const int p = testutil::rnd_int(rng, 2, 3);
        const Cochain r = testutil::rnd_cochain(rng, n, p, 2);
        std::vector<Vec> args;
        for (int i = 0; i < p; ++i)
            args.push_back(testutil::rnd_vec(rng, n));
        Vec lhs = eval(r, args);
        std::swap(args[0], args[1]);
        CHECK(eval(r, args) == vec_neg(lhs));
    }
    CHECK_THROWS_AS(eval(c, {unit(3, 0)}), std::invalid_argument);
}

TEST_CASE("ce_differential on the documented examples") {
    const LieAlgebra aff2 = make_aff2();
    const ModuleStructure triv = trivial_module(aff2, 1);

    Cochain c(2, 1, 1);
    c.set_coeff(MultiIndex({0}), Vec{Rational(1)});
    CHECK(ce_differential(c, triv).is_zero());  // picks c([e1,e2]) = c(e2) = 0

    Cochain c2(2, 1, 1);
    c2.set_coeff(MultiIndex({1}), Vec{Rational(1)});
    const Cochain d2 = ce_differential(c2, triv);
    CHECK(d2.coeff(MultiIndex({0, 1})) == Vec{Rational(1)});

    // adjoint module: the identity cochain goes to minus the bracket
    testutil::Rng rng(37);
    for (int t = 0; t < 10; ++t) {
        const LieAlgebra l = testutil::rnd_valid_algebra(rng, 3);
        const Cochain d_id = ce_differential(identity_cochain(l.dim()), adjoint_module(l));
        for (int i = 0; i < l.dim(); ++i)
            for (int j = i + 1; j < l.dim(); ++j)
                CHECK(d_id.coeff(MultiIndex({i, j})) == vec_neg(l.bracket(i, j)));
    }

    CHECK_THROWS_AS(ce_differential(c, trivial_module(make_so3(), 1)), std::invalid_argument);
}

TEST_CASE("delta squared vanishes over random valid modules") {
    testutil::Rng rng(41);
    for (int t = 0; t < 100; ++t) {
        const LieAlgebra l = testutil::rnd_valid_algebra(rng, 3);
        const ModuleStructure m = testutil::rnd_module(rng, l);
        const int arity = testutil::rnd_int(rng, 0, 2);
        const Cochain c = testutil::rnd_cochain(rng, l.dim(), arity, m.space_dim);
        CHECK(ce_differential(ce_differential(c, m), m).is_zero());
    }
}

TEST_CASE("insertion on the documented shapes") {
    const int n = 3;
    testutil::Rng rng(43);

    // arity 1 into arity 1 composes
    const Cochain p = testutil::rnd_cochain(rng, n, 1, n);
    const Cochain q = testutil::rnd_cochain(rng, n, 1, n);
    const Cochain comp = nr_insertion(p, q);
    for (int i = 0; i < n; ++i)
        CHECK(comp.coeff(MultiIndex({i})) == q.value_with_first(p.coeff(MultiIndex({i})), {}));

    // identity into an arity-2 cochain doubles it
    const Cochain r = testutil::rnd_cochain(rng, n, 2, n);
    CHECK(nr_insertion(identity_cochain(n), r) == Rational(2) * r);

    // a constant leaves no slot to insert into
    Cochain constant(n, 0, n);
    constant.set_coeff(MultiIndex{}, unit(n, 0));
    CHECK(nr_insertion(p, constant).is_zero());

    Cochain wrong(n + 1, 1, n + 1);
    CHECK_THROWS_AS(nr_insertion(p, wrong), std::invalid_argument);
}

TEST_CASE("bracket squares measure the Jacobi defect") {
    // [rho, rho] = 0 for a Lie algebra
    const Cochain rho_so3 = bracket_cochain(make_so3());
    CHECK(nr_bracket(rho_so3, rho_so3).is_zero());

    // arity-1 pair: [P,Q] = Q o P - P o Q
    testutil::Rng rng(47);
    const Cochain p = testutil::rnd_cochain(rng, 3, 1, 3);
    const Cochain q = testutil::rnd_cochain(rng, 3, 1, 3);
    CHECK(nr_bracket(p, q) == nr_insertion(p, q) - nr_insertion(q, p));

    // the invalid table: [rho,rho](e1,e2,e3) = -2 J(e1,e2,e3) with J = -e3
    LieAlgebra bad(3);
    bad.set_bracket(0, 1, unit(3, 0));
    bad.set_bracket(0, 2, unit(3, 2));
    const Cochain rho = bracket_cochain(bad);
    const Vec sq = nr_bracket(rho, rho).coeff(MultiIndex({0, 1, 2}));
    CHECK(sq == vec_scale(Rational(-2), jacobiator(bad, 0, 1, 2)));
    CHECK(sq == Vec{Rational(0), Rational(0), Rational(2)});
}

TEST_CASE("graded antisymmetry and graded Jacobi") {
    testutil::Rng rng(53);
    for (int t = 0; t < 100; ++t) {
        const int n = testutil::rnd_int(rng, 2, 3);
        const int pa = testutil::rnd_int(rng, 0, 3);
        const int pb = testutil::rnd_int(rng, 0, 3);
        const int pc = testutil::rnd_int(rng, 0, 3);
        const Cochain a = testutil::rnd_cochain(rng, n, pa, n);
        const Cochain b = testutil::rnd_cochain(rng, n, pb, n);
        const Cochain c = testutil::rnd_cochain(rng, n, pc, n);

        const long da = pa - 1, db = pb - 1;
        const Rational sign = ((da * db) % 2 != 0) ? Rational(1) : Rational(-1);
        CHECK(nr_bracket(a, b) == sign * nr_bracket(b, a));

        const Cochain lhs = nr_bracket(a, nr_bracket(b, c));
        Cochain rhs = nr_bracket(nr_bracket(a, b), c);
        const Cochain inner = nr_bracket(b, nr_bracket(a, c));
        rhs += ((da * db) % 2 != 0) ? -inner : inner;
        CHECK(lhs == rhs);
    }
}

TEST_CASE("ce differential equals the adjoint bracket on cochains valued in the algebra") {
    testutil::Rng rng(59);
    for (int t = 0; t < 100; ++t) {
        const LieAlgebra l = testutil::rnd_valid_algebra(rng, 3);
        const int arity = testutil::rnd_int(rng, 0, 3);
        const Cochain c = testutil::rnd_cochain(rng, l.dim(), arity, l.dim());
        CHECK(ce_differential(c, adjoint_module(l)) ==
              nr_bracket(bracket_cochain(l), c));
    }
}

TEST_CASE("bigrade decomposition and reassembly") {
    const SplitAlgebra split = direct_sum(make_abelian(2), make_abelian(2));
    const int n = split.dim_sum();

    Cochain c(n, 2, n);
    c.set_coeff(MultiIndex({0, 1}), unit(n, 2));  // two g-arguments
    c.set_coeff(MultiIndex({0, 2}), unit(n, 3));  // mixed
    c.set_coeff(MultiIndex({2, 3}), unit(n, 2));  // two h-arguments

    const BigradeDecomposition dec = bigrade_decompose(c, 2);
    CHECK(dec.positive.components.size() == 2);
    CHECK(dec.positive.components.count(Bigrade{2, 0}) == 1);
    CHECK(dec.positive.components.count(Bigrade{1, 1}) == 1);
    REQUIRE(dec.zero_column.size() == 1);
    CHECK(dec.zero_column.count(2) == 1);

    CHECK(bigrade_assemble(dec.positive, dec.zero_column) == c);

    Cochain escaping(n, 1, n);
    escaping.set_coeff(MultiIndex({0}), unit(n, 0));  // value in the g-block
    CHECK_THROWS_AS(bigrade_decompose(escaping, 2), std::invalid_argument);
}

TEST_CASE("brackets of pure bigrades land in one bigrade") {
    testutil::Rng rng(61);
    for (int t = 0; t < 50; ++t) {
        const LieAlgebra g = testutil::rnd_valid_algebra(rng, 2);
        const LieAlgebra h = testutil::rnd_valid_algebra(rng, 2);
        const SplitAlgebra split = direct_sum(g, h);
        const int n = split.dim_sum();

        const auto rnd_component = [&](int m, int nn) {
            Cochain c(n, m + nn, n);
            for (const MultiIndex& mi : all_multi_indices(n, m + nn)) {
                if (!(bigrade_of(mi, g.dim()) == Bigrade{m, nn}))
                    continue;
                if (testutil::rnd_int(rng, 0, 1)) {
                    Vec v = vec_zero(n);
                    for (int k = 0; k < h.dim(); ++k)
                        v[g.dim() + k] = testutil::rnd_rational(rng);
                    c.set_coeff(mi, v);
                }
            }
            return c;
        };
        const int m1 = testutil::rnd_int(rng, 1, 2), n1 = testutil::rnd_int(rng, 0, 1);
        const int m2 = testutil::rnd_int(rng, 1, 2), n2 = testutil::rnd_int(rng, 0, 1);
        const Cochain c1 = rnd_component(m1, n1);
        const Cochain c2 = rnd_component(m2, n2);
        const Cochain br = nr_bracket(c1, c2);
        if (br.is_zero())
            continue;
        const BigradeDecomposition dec = bigrade_decompose(br, g.dim());
        CHECK(dec.zero_column.empty());
        CHECK(dec.positive.components.size() == 1);
        CHECK(dec.positive.components.count(Bigrade{m1 + m2, n1 + n2 - 1}) == 1);
    }
}
