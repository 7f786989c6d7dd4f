#pragma once

// Small cohomology algebras used across the unit tests.

#include <string>

#include "sht/graded_core.hpp"

namespace testalg {

inline sht::AlgebraPresentation sphere(int n) {
  sht::AlgebraPresentation p;
  p.name = "S" + std::to_string(n);
  p.basis = {{"1", 0, {}}, {"s", n, {}}};
  p.unit_id = "1";
  return p;
}

/// Q[x]/(x^{n+1}), |x| = 2.
inline sht::AlgebraPresentation cpn(int n) {
  sht::AlgebraPresentation p;
  p.name = "CP" + std::to_string(n);
  p.unit_id = "1";
  p.basis.push_back({"1", 0, {}});
  for (int k = 1; k <= n; ++k) p.basis.push_back({"h" + std::to_string(2 * k), 2 * k, {}});
  for (int a = 1; a <= n; ++a)
    for (int b = a; a + b <= n; ++b)
      p.products.push_back({"h" + std::to_string(2 * a), "h" + std::to_string(2 * b),
                            {{"h" + std::to_string(2 * (a + b)), 1}}});
  return p;
}

inline sht::AlgebraPresentation wedge_s2_s2() {
  sht::AlgebraPresentation p;
  p.name = "S2vS2";
  p.basis = {{"1", 0, {}}, {"a", 2, {}}, {"b", 2, {}}};
  p.unit_id = "1";
  return p;
}

inline sht::AlgebraPresentation s2_x_s2() {
  sht::AlgebraPresentation p;
  p.name = "S2xS2";
  p.basis = {{"1", 0, {}}, {"a", 2, {}}, {"b", 2, {}}, {"ab", 4, {}}};
  p.unit_id = "1";
  p.products = {{"a", "b", {{"ab", 1}}}};
  return p;
}

/// H^*(T^2) with characters in Z: u has character (1), v has (-1).
inline sht::AlgebraPresentation torus2() {
  sht::AlgebraPresentation p;
  p.name = "T2";
  p.lattice = sht::CharacterLattice(1, {});
  p.basis = {{"1", 0, {0}}, {"u", 1, {1}}, {"v", 1, {-1}}, {"uv", 2, {0}}};
  p.unit_id = "1";
  p.products = {{"u", "v", {{"uv", 1}}}};
  return p;
}

/// Two degree-1 classes of characters (1) and (-1) over Z, zero products.
inline sht::AlgebraPresentation character_pair() {
  sht::AlgebraPresentation p;
  p.name = "chars";
  p.lattice = sht::CharacterLattice(1, {});
  p.basis = {{"1", 0, {0}}, {"x", 1, {1}}, {"y", 1, {-1}}};
  p.unit_id = "1";
  return p;
}

}  // namespace testalg
