#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ualg/element.hpp"
#include "ualg/limits.hpp"
#include "ualg/partition.hpp"
#include "ualg/signature.hpp"
#include "ualg/term.hpp"

namespace ualg {

  // A finite algebra with carrier {0, ..., k - 1} and one dense table per
  // symbol. The table of an n-ary symbol has k^n entries in row-major
  // lexicographic argument order (first argument most significant); a
  // constant is a table with one entry.
  class FiniteAlgebra {
   public:
    FiniteAlgebra(Signature sig, std::size_t size,
                  std::vector<std::vector<Element>> tables);

    Signature const& signature() const noexcept {
      return _sig;
    }
    std::size_t size() const noexcept {
      return _size;
    }
    std::size_t arity(std::size_t symbol) const {
      return _sig[symbol].arity;
    }
    std::span<Element const> table(std::size_t symbol) const {
      return _tables[symbol];
    }
    std::vector<std::vector<Element>> const& tables() const noexcept {
      return _tables;
    }

    // Unchecked lookup by symbol index.
    Element op(std::size_t symbol, std::span<Element const> args) const {
      std::size_t index = 0;
      for (Element a : args) {
        index = index * _size + a;
      }
      return _tables[symbol][index];
    }

    // Checked lookup by name: arity_mismatch, out_of_carrier, unknown_symbol.
    Element apply(std::string_view symbol, std::span<Element const> args) const;
    Element apply(std::string_view                 symbol,
                  std::initializer_list<Element> args) const {
      return apply(symbol, std::span<Element const>(args.begin(), args.size()));
    }

    bool operator==(FiniteAlgebra const& that) const {
      return _size == that._size && _sig == that._sig
             && _tables == that._tables;
    }

   private:
    Signature                         _sig;
    std::size_t                       _size;
    std::vector<std::vector<Element>> _tables;
  };

  // k^n, or nullopt if it exceeds limit.
  std::optional<std::size_t> checked_power(std::size_t k, std::size_t n,
                                           std::size_t limit);

  // Decodes a row-major table index into its argument tuple.
  void decode_tuple(std::size_t index, std::size_t k, std::span<Element> out);

  // A total map between carriers.
  class CarrierMap {
   public:
    CarrierMap() = default;
    CarrierMap(std::size_t target_size, std::vector<Element> values);

    static CarrierMap identity(std::size_t n);

    std::size_t source_size() const noexcept {
      return _values.size();
    }
    std::size_t target_size() const noexcept {
      return _target;
    }
    std::vector<Element> const& values() const noexcept {
      return _values;
    }
    Element operator()(std::size_t x) const {
      return _values[x];
    }

    bool is_surjective() const;
    bool is_injective() const;

    // x -> next(this(x)).
    CarrierMap then(CarrierMap const& next) const;

    bool operator==(CarrierMap const&) const = default;

   private:
    std::size_t          _target = 0;
    std::vector<Element> _values;
  };

  // A symbol together with an argument tuple.
  struct OpTuple {
    std::size_t          symbol;
    std::vector<Element> args;

    bool operator==(OpTuple const&) const = default;
  };

  struct HomCheck {
    bool                   ok;
    std::optional<OpTuple> counterexample;

    explicit operator bool() const noexcept {
      return ok;
    }
  };

  // Counterexample is the least violating (arity, symbol, tuple).
  HomCheck is_homomorphism(CarrierMap const& phi, FiniteAlgebra const& x,
                           FiniteAlgebra const& y);

  struct Subalgebra {
    std::vector<Element> elements;  // sorted
    // Empty only when the seed is empty and there are no constants.
    std::optional<FiniteAlgebra> algebra;
    // Renumbered carrier -> original carrier.
    CarrierMap embedding;
  };

  Subalgebra subalgebra_generated(FiniteAlgebra const&     x,
                                  std::span<Element const> seed);

  // Induced algebra on a subset that is already closed.
  FiniteAlgebra restrict_to(FiniteAlgebra const&     x,
                            std::span<Element const> closed_subset);

  struct Product {
    FiniteAlgebra           algebra;
    std::vector<CarrierMap> projections;
  };

  // Tuples (a_1, ..., a_r) are encoded lexicographically, a_1 most
  // significant. The empty product is the one-element algebra over sig.
  Product product(Signature const& sig, std::span<FiniteAlgebra const> factors,
                  Limits const& limits = {});

  struct Quotient {
    FiniteAlgebra algebra;
    CarrierMap    map;
  };

  // Raises not_a_congruence unless pi is a congruence of x.
  Quotient  quotient(FiniteAlgebra const& x, Partition const& pi);
  Partition kernel(CarrierMap const& phi);

  // For a homomorphism phi: X -> Y, the bijection X/ker(phi) -> phi(X) together
  // with the two algebras it connects.
  struct FirstIsomorphism {
    Quotient      quotient;
    FiniteAlgebra image;
    CarrierMap    image_embedding;  // image -> Y
    CarrierMap    bijection;        // X/ker(phi) -> image
  };

  FirstIsomorphism first_isomorphism(CarrierMap const&    phi,
                                     FiniteAlgebra const& x,
                                     FiniteAlgebra const& y);

  struct Identity {
    Term lhs;
    Term rhs;
  };

  struct HoldsResult {
    bool                         ok;
    std::optional<VarAssignment> counterexample;

    explicit operator bool() const noexcept {
      return ok;
    }
  };

  // Exhaustive over X^R, R = vars(p) u vars(q), in lexicographic order with
  // the smallest variable most significant.
  HoldsResult holds(FiniteAlgebra const& x, Term const& p, Term const& q);

  struct VarietyResult {
    bool                         ok;
    std::optional<std::size_t>   failing;  // index into the identity list
    std::optional<VarAssignment> counterexample;

    explicit operator bool() const noexcept {
      return ok;
    }
  };

  VarietyResult in_equational_class(FiniteAlgebra const&      x,
                                    std::span<Identity const> identities);

  // x e = x, e x = x, x x^-1 = e, x^-1 x = e, x (y z) = (x y) z over m/2 i/1 e/0.
  std::vector<Identity> group_axioms();

  // Ternary operations as k^3 row-major tables.
  struct TernaryTable {
    std::size_t          size;
    std::vector<Element> values;

    Element operator()(Element a, Element b, Element c) const {
      return values[(a * size + b) * size + c];
    }
    bool operator==(TernaryTable const&) const = default;
  };

  struct MalcevCheck {
    bool                                       ok;
    std::optional<std::pair<Element, Element>> counterexample;  // (x, y)

    explicit operator bool() const noexcept {
      return ok;
    }
  };

  MalcevCheck is_malcev_op(TernaryTable const& mu);
  MalcevCheck is_malcev_op(FiniteAlgebra const& x, std::string_view symbol);

  struct MalcevSearch {
    std::vector<TernaryTable> operations;
    bool                      complete;
  };

  // Every ternary table on {0..k-1} with mu(y,y,x) = mu(x,y,y) = x, in
  // lexicographic table order, stopping after cap tables.
  MalcevSearch find_malcev_operations(std::size_t k, std::size_t cap);

  // (x, y, z) -> x y^-1 z. Raises not_a_group.
  TernaryTable group_malcev(FiniteAlgebra const& g);

  // The ternary term operations of x: closure of the three projections and
  // the constants under the operations of x, applied pointwise. Sorted
  // lexicographically by table.
  std::vector<TernaryTable> clone_ternary_terms(FiniteAlgebra const& x,
                                                Limits const& limits = {});
  // First clone member satisfying the Mal'cev identities, if any.
  std::optional<TernaryTable> malcev_term_witness(FiniteAlgebra const& x,
                                                  Limits const& limits = {});
  bool has_malcev_term(FiniteAlgebra const& x, Limits const& limits = {});

  struct Diagonal {
    Product    product;
    CarrierMap map;
    bool       injective;
  };

  // x -> (phi_1(x), ..., phi_r(x)) into the product of the targets.
  Diagonal diagonal_hom(FiniteAlgebra const&           x,
                        std::span<FiniteAlgebra const> targets,
                        std::span<CarrierMap const>    maps,
                        Limits const&                  limits = {});

}  // namespace ualg
