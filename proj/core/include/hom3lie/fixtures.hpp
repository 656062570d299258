#pragma once

#include <string>
#include <vector>

#include "hom3lie/algebra.hpp"

namespace hom3lie::fixtures {

/// 3-dim abelian, identity twist.
Hom3LieAlgebra ab3();
/// 3-dim abelian, twist diag(2,3,5).
Hom3LieAlgebra ab3s();
/// [e1,e2,e3] = e1, identity twist.
Hom3LieAlgebra l3();
/// l3() with twist diag(a,1,1).
Hom3LieAlgebra l3h(const Rat& a);
/// [e1,e2,e3] = e4, all other basic brackets zero, identity twist.
Hom3LieAlgebra n4();
/// The simple 4-dim 3-Lie algebra: [e_i,e_j,e_k] = sum_l eps_ijkl e_l.
Hom3LieAlgebra a4();

struct Named {
  std::string name;
  Hom3LieAlgebra algebra;
};

/// AB3, AB3s, L3, L3h2 (= l3h(2)), N4, A4.
std::vector<Named> catalog();

}  // namespace hom3lie::fixtures
