#include "hom3lie/fixtures.hpp"

namespace hom3lie::fixtures {

Hom3LieAlgebra ab3() { return Hom3LieAlgebra(3); }

Hom3LieAlgebra ab3s() { return Hom3LieAlgebra(3, Mat::diagonal({2, 3, 5})); }

Hom3LieAlgebra l3() {
  Hom3LieAlgebra L(3);
  L.set_bracket(0, 1, 2, Vec{1, 0, 0});
  return L;
}

Hom3LieAlgebra l3h(const Rat& a) {
  Hom3LieAlgebra L = l3();
  L.set_alpha(Mat::diagonal({a, 1, 1}));
  return L;
}

Hom3LieAlgebra n4() {
  Hom3LieAlgebra L(4);
  L.set_bracket(0, 1, 2, Vec{0, 0, 0, 1});
  return L;
}

Hom3LieAlgebra a4() {
  Hom3LieAlgebra L(4);
  L.set_bracket(0, 1, 2, Vec{0, 0, 0, 1});
  L.set_bracket(0, 1, 3, Vec{0, 0, -1, 0});
  L.set_bracket(0, 2, 3, Vec{0, 1, 0, 0});
  L.set_bracket(1, 2, 3, Vec{-1, 0, 0, 0});
  return L;
}

std::vector<Named> catalog() {
  return {
      {"AB3", ab3()}, {"AB3s", ab3s()}, {"L3", l3()},
      {"L3h2", l3h(2)}, {"N4", n4()},   {"A4", a4()},
  };
}

}  // namespace hom3lie::fixtures
