#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ualg/algebra.hpp"
#include "ualg/limits.hpp"
#include "ualg/translations.hpp"

namespace ualg {

  // f = h o g with g: X -> Y a surjective homomorphism and h: Y -> Z a plain
  // map. Z is just a finite set of size h.target_size().
  struct Factorization {
    CarrierMap    g;
    FiniteAlgebra y;
    CarrierMap    h;
  };

  struct FactorizationCheck {
    bool        ok;
    std::string reason;  // first violated clause, empty if ok

    explicit operator bool() const noexcept {
      return ok;
    }
  };

  FactorizationCheck is_factorization(FiniteAlgebra const& x,
                                      CarrierMap const&    f,
                                      Factorization const& candidate);

  struct Precedence {
    bool                      ok;
    std::optional<CarrierMap> witness;  // q: Y2 -> Y1

    explicit operator bool() const noexcept {
      return ok;
    }
  };

  // a precedes b iff some homomorphism q: b.y -> a.y has a.g = q after b.g,
  // i.e. a.g(x) = q(b.g(x)). q is forced on b.g(X) = b.y, so it is built from
  // the two maps and then checked. Raises mismatched_base if a and b do not
  // factor the same map.
  Precedence precedes(Factorization const& a, Factorization const& b);

  // g = product over sigma in S(X) of f o sigma, Y = g(X), h = the
  // identity-translation coordinate.
  Factorization least_factorization(FiniteAlgebra const& x, CarrierMap const& f,
                                    Limits const& limits = {});

  // Row x is (f(sigma(x)))_sigma over the given maps, in order.
  std::vector<std::vector<Element>> translation_signatures(
      std::span<Translation const> semigroup,
      CarrierMap const&            f);

  // One factorization per congruence refining ker f, in canonical order.
  std::vector<Factorization> enumerate_factorizations(FiniteAlgebra const& x,
                                                      CarrierMap const&    f,
                                                      Limits const& limits
                                                      = {});

  // (id_X, X, f).
  Factorization greatest_factorization(FiniteAlgebra const& x,
                                       CarrierMap const&    f);

}  // namespace ualg
