#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "ualg/algebra.hpp"
#include "ualg/element.hpp"
#include "ualg/limits.hpp"

namespace ualg {

  // T_{f,i,x}: fix every argument of f except the i-th (slot is 1-based).
  // fixed holds the other n - 1 arguments in order.
  struct PrincipalDescriptor {
    std::size_t          symbol;
    std::size_t          slot;
    std::vector<Element> fixed;

    bool operator==(PrincipalDescriptor const&) const = default;
  };

  using Word = std::vector<PrincipalDescriptor>;

  // A self-map of the carrier and one word producing it. Words are applied
  // left to right; the identity has the empty word.
  struct Translation {
    std::vector<Element> table;
    Word                 word;
  };

  std::vector<Element> principal_table(FiniteAlgebra const&       x,
                                       PrincipalDescriptor const& d);
  std::vector<Element> evaluate_word(FiniteAlgebra const& x, Word const& word);

  // S_1(X): every T_{f,i,x} for symbols of arity >= 1, in (symbol, slot, x)
  // order, deduplicated by table keeping the first descriptor.
  std::vector<Translation> principal_translations(FiniteAlgebra const& x);

  // S(X): closure of S_1(X) u {e} under composition, breadth first by word
  // length, deduplicated by table. Raises size_cap_exceeded when more than
  // limits.max_semigroup maps are found.
  std::vector<Translation> translation_semigroup(FiniteAlgebra const& x,
                                                 Limits const& limits = {});

  // "m@1(2)" for binary and higher symbols, "i" for unary ones.
  std::string to_string(PrincipalDescriptor const& d, Signature const& sig);
  // Composition notation, last applied first: word [i, m@1(2)] prints as
  // "m@1(2)∘i"; the empty word prints as "e".
  std::string to_string(Word const& word, Signature const& sig);
  // "word ⇒ [t0,t1,...]"
  std::string dump_line(Translation const& t, Signature const& sig);

}  // namespace ualg
