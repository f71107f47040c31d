#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "ualg/algebra.hpp"
#include "ualg/element.hpp"
#include "ualg/limits.hpp"
#include "ualg/partition.hpp"
#include "ualg/translations.hpp"

namespace ualg {

  // f(xs) and f(ys) lie in different blocks although xs and ys agree
  // blockwise.
  struct CompatibilityViolation {
    std::size_t          symbol;
    std::vector<Element> xs;
    std::vector<Element> ys;
  };

  struct CongruenceCheck {
    bool                                  ok;
    std::optional<CompatibilityViolation> counterexample;

    explicit operator bool() const noexcept {
      return ok;
    }
  };

  // x ~ y but sigma(x) !~ sigma(y).
  struct TranslationViolation {
    PrincipalDescriptor translation;
    Element             x;
    Element             y;
  };

  struct TranslationCheck {
    bool                                ok;
    std::optional<TranslationViolation> counterexample;

    explicit operator bool() const noexcept {
      return ok;
    }
  };

  // Straight from the definition: every symbol, every pair of blockwise
  // equivalent argument tuples. Raises size_mismatch.
  CongruenceCheck is_congruence_direct(FiniteAlgebra const& x,
                                       Partition const&     pi);

  // Closure under principal translations only.
  TranslationCheck is_congruence_via_translations(FiniteAlgebra const& x,
                                                  Partition const&     pi);
  TranslationCheck is_congruence_via_translations(
      FiniteAlgebra const&          x,
      std::span<Translation const>  principal,
      Partition const&              pi);

  // Least congruence containing the pairs.
  Partition congruence_generated(
      FiniteAlgebra const&                          x,
      std::span<std::pair<Element, Element> const> pairs);

  // Every congruence, in canonical partition order. Raises
  // size_cap_exceeded if Bell(|X|) > limits.max_partitions.
  std::vector<Partition> all_congruences(FiniteAlgebra const& x,
                                         Limits const&        limits = {});

  // The largest congruence refining pi: x ~ y iff pi identifies sigma(x) and
  // sigma(y) for every sigma in S(X).
  Partition largest_congruence_below(FiniteAlgebra const& x,
                                     Partition const&     pi,
                                     Limits const&        limits = {});

  // Same object computed without S(X): refine pi by the principal
  // translations until stable.
  Partition largest_congruence_below_by_refinement(FiniteAlgebra const& x,
                                                   Partition const&     pi);

  // Both arguments must be congruences of x (not_a_congruence otherwise).
  Partition join_congruences(FiniteAlgebra const& x, Partition const& a,
                             Partition const& b);

}  // namespace ualg
