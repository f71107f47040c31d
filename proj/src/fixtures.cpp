#include "ualg/fixtures.hpp"

#include "ualg/error.hpp"

namespace ualg {

  Signature group_signature() {
    return Signature({{"m", 2}, {"i", 1}, {"e", 0}});
  }

  namespace {
    // Group-signature algebra from a binary rule, a unary rule and a constant.
    template <typename Mul, typename Inv>
    FiniteAlgebra group_like(std::size_t k, Mul mul, Inv inv, Element unit) {
      std::vector<Element> m(k * k), i(k);
      for (Element a = 0; a < k; ++a) {
        i[a] = inv(a);
        for (Element b = 0; b < k; ++b) {
          m[a * k + b] = mul(a, b);
        }
      }
      return FiniteAlgebra(group_signature(), k, {m, i, {unit}});
    }
  }  // namespace

  FiniteAlgebra cyclic_group(std::size_t n) {
    if (n == 0) {
      raise(ErrorCode::invalid_input, "cyclic group of order 0");
    }
    auto k = static_cast<Element>(n);
    return group_like(
        n, [k](Element a, Element b) { return (a + b) % k; },
        [k](Element a) { return (k - a) % k; }, 0);
  }

  FiniteAlgebra klein_four() {
    return group_like(
        4, [](Element a, Element b) { return a ^ b; },
        [](Element a) { return a; }, 0);
  }

  FiniteAlgebra semilattice2() {
    return FiniteAlgebra(Signature({{"m", 2}}), 2, {{0, 0, 0, 1}});
  }

  FiniteAlgebra adjoined_infinity_monoid(std::size_t n) {
    if (n == 0) {
      raise(ErrorCode::invalid_input, "Z_0 has no elements");
    }
    auto inf = static_cast<Element>(n);
    return group_like(
        n + 1,
        [inf](Element a, Element b) {
          return (a == inf || b == inf) ? inf : (a + b) % inf;
        },
        [inf](Element a) { return a == inf ? inf : (inf - a) % inf; }, 0);
  }

  FiniteAlgebra malcev_algebra_from(TernaryTable const& table) {
    return FiniteAlgebra(Signature({{"mu", 3}}), table.size, {table.values});
  }

}  // namespace ualg
