#pragma once

#include <vector>

#include "hgl/perm.hpp"

// Groups outside the catalog, built directly as permutation groups.
namespace small_groups {

using hgl::PermGroup;
using hgl::Permutation;
using hgl::Point;

inline PermGroup quaternion8() {
  return PermGroup::from_generators({Permutation::from_cycles("(0 2 1 3)(4 6 5 7)", 8),
                                     Permutation::from_cycles("(0 4 1 5)(2 7 3 6)", 8)});
}

// Dicyclic group of order 12: x of order 6 on Z6 x {0,1}, y with y^2 = x^3.
inline PermGroup dicyclic12() {
  // Regular action on pairs (a, b) <-> a + 6b, products x^a y^b.
  std::vector<Point> xs(12), ys(12);
  for (Point a = 0; a < 6; ++a) {
    xs[a] = (a + 1) % 6;
    xs[a + 6] = (a + 5) % 6 + 6;  // x * x^a y = x^{a+1} y; left mult
    ys[a] = ((6 - a) % 6) + 6;    // y x^a = x^-a y
    ys[a + 6] = (9 - a) % 6;      // y x^a y = x^-a y^2 = x^{3-a}
  }
  return PermGroup::from_generators({Permutation(xs), Permutation(ys)});
}

// Heisenberg group of exponent 3: affine maps of F3^2 generated by the two
// translations and the shear (x, y) -> (x + y, y). Point (x, y) is x + 3y.
inline PermGroup heisenberg27() {
  std::vector<Point> t1(9), t2(9), s(9);
  for (Point x = 0; x < 3; ++x)
    for (Point y = 0; y < 3; ++y) {
      t1[x + 3 * y] = (x + 1) % 3 + 3 * y;
      t2[x + 3 * y] = x + 3 * ((y + 1) % 3);
      s[x + 3 * y] = (x + y) % 3 + 3 * y;
    }
  return PermGroup::from_generators({Permutation(t1), Permutation(t2), Permutation(s)});
}

// C9 x| C3 on Z9: x -> x + 1 and x -> 4x.
inline PermGroup metacyclic27() {
  std::vector<Point> a(9), b(9);
  for (Point x = 0; x < 9; ++x) {
    a[x] = (x + 1) % 9;
    b[x] = (4 * x) % 9;
  }
  return PermGroup::from_generators({Permutation(a), Permutation(b)});
}

}  // namespace small_groups
