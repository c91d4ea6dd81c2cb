#pragma once

#include "nabext/extensions.hpp"
#include "nabext/lie_algebra.hpp"

namespace nabext {

/// The small algebras every test and the bundled catalog use.
LieAlgebra make_abelian(int n);
LieAlgebra make_aff2();   // [e1, e2] = e2
LieAlgebra make_heis3();  // [x, y] = z
LieAlgebra make_so3();    // [e1,e2] = e3, [e2,e3] = e1, [e3,e1] = e2
LieAlgebra make_sl2();    // basis (e, f, h): [e,f] = h, [h,e] = 2e, [h,f] = -2f

/// Central datum over g = ab2, h = ab1: chi(x, y) = z, psi = 0. Building the
/// extension gives the Heisenberg algebra.
NonAbelianCocycle heisenberg_cocycle();

}  // namespace nabext
