#pragma once

#include <cstddef>

#include "ualg/algebra.hpp"

namespace ualg {

  // m/2 i/1 e/0
  Signature group_signature();

  // (Z_n, +, -, 0)
  FiniteAlgebra cyclic_group(std::size_t n);
  // Z_2 x Z_2 over the group signature; a + b is bitwise xor.
  FiniteAlgebra klein_four();
  // ({0, 1}, m = min), signature m/2.
  FiniteAlgebra semilattice2();
  // Z_n with an absorbing point infinity, encoded as n:
  // inf + x = x + inf = inf, -inf = inf.
  FiniteAlgebra adjoined_infinity_monoid(std::size_t n);
  // ({0..k-1}, mu), signature mu/3.
  FiniteAlgebra malcev_algebra_from(TernaryTable const& table);

}  // namespace ualg
