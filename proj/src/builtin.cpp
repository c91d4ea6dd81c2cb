#include "nabext/builtin.hpp"

namespace nabext {

namespace {
Vec unit(int dim, int i) {
    Vec v = vec_zero(dim);
    v[i] = 1;
    return v;
}
}  // namespace

LieAlgebra make_abelian(int n) {
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i)
        names.push_back("a" + std::to_string(i + 1));
    return LieAlgebra(n, std::move(names));
}

LieAlgebra make_aff2() {
    LieAlgebra a(2, {"e1", "e2"});
    a.set_bracket(0, 1, unit(2, 1));
    return a;
}

LieAlgebra make_heis3() {
    LieAlgebra a(3, {"x", "y", "z"});
    a.set_bracket(0, 1, unit(3, 2));
    return a;
}

LieAlgebra make_so3() {
    LieAlgebra a(3, {"e1", "e2", "e3"});
    a.set_bracket(0, 1, unit(3, 2));
    a.set_bracket(1, 2, unit(3, 0));
    a.set_bracket(2, 0, unit(3, 1));
    return a;
}

LieAlgebra make_sl2() {
    LieAlgebra a(3, {"e", "f", "h"});
    a.set_bracket(0, 1, unit(3, 2));           // [e, f] = h
    Vec he = vec_zero(3);
    he[0] = 2;
    a.set_bracket(2, 0, he);                   // [h, e] = 2e
    Vec hf = vec_zero(3);
    hf[1] = -2;
    a.set_bracket(2, 1, hf);                   // [h, f] = -2f
    return a;
}

NonAbelianCocycle heisenberg_cocycle() {
    NonAbelianCocycle c = zero_cocycle(2, 1);
    c.chi.set_coeff(MultiIndex({0, 1}), Vec{Rational(1)});
    return c;
}

}  // namespace nabext
