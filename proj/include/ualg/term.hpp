#pragma once

#include <cstddef>
#include <memory>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ualg/element.hpp"
#include "ualg/signature.hpp"

namespace ualg {

  class FiniteAlgebra;

  // Immutable term over a signature and the variables v1, v2, ...
  // Copies share structure. Occurrence counts are computed once, when a node
  // is built, and cached on that node.
  class Term {
   public:
    enum class Kind { variable, constant, apply };

    static Term variable(std::size_t index);
    static Term constant(std::string symbol);
    // An application with no children is the constant of that name.
    static Term apply(std::string symbol, std::vector<Term> children);

    Kind kind() const noexcept {
      return _node->kind;
    }
    // Only meaningful for variables.
    std::size_t var_index() const noexcept {
      return _node->var;
    }
    // Only meaningful for constants and applications.
    std::string const& symbol() const noexcept {
      return _node->symbol;
    }
    std::span<Term const> children() const noexcept {
      return _node->children;
    }

    // Omega(t)(v): number of leaves equal to v.
    std::size_t occurrences(std::size_t var) const noexcept;
    // (variable, count) pairs with count > 0, sorted by variable.
    std::vector<std::pair<std::size_t, std::size_t>> const&
    occurrence_counts() const noexcept {
      return _node->counts;
    }
    std::set<std::size_t> vars() const;
    std::size_t           size() const noexcept;

    bool operator==(Term const& that) const;

   private:
    struct Node {
      Kind                                             kind;
      std::size_t                                      var = 0;
      std::string                                      symbol;
      std::vector<Term>                                children;
      std::vector<std::pair<std::size_t, std::size_t>> counts;
    };

    explicit Term(std::shared_ptr<Node const> node) : _node(std::move(node)) {}

    std::shared_ptr<Node const> _node;
  };

  // term := var | name | name "(" term ("," term)* ")";  var := "v"[1-9][0-9]*
  Term parse_term(std::string_view text, Signature const& sig);

  // Fully parenthesised prefix form, no spaces: m(v1,i(v1)).
  std::string to_string(Term const& t);

  std::set<std::size_t> vars_of(Term const& t);
  std::size_t           occurrences(Term const& t, std::size_t var);

  // Checks that every symbol in t exists in sig with the arity used.
  void check_term(Term const& t, Signature const& sig);

  Element evaluate(Term const& t, FiniteAlgebra const& algebra,
                   VarAssignment const& assignment);

  // A term resolved against one algebra and flattened to postfix form, for
  // evaluating the same term under many assignments. Variables are bound to
  // slots in the order given at construction.
  class CompiledTerm {
   public:
    CompiledTerm(Term const& t, FiniteAlgebra const& algebra,
                 std::span<std::size_t const> slot_vars);

    Element operator()(std::span<Element const> slots) const;

   private:
    struct Instr {
      enum class Op { load, constant, apply } op;
      std::size_t    arg;    // slot, constant value, or symbol index
      std::size_t    arity;  // apply only
    };
    FiniteAlgebra const* _algebra;
    std::vector<Instr>   _code;
    std::size_t          _max_depth = 0;
  };

  enum class PreservationClass { linear, linear_quadratic, unclassified };

  char const* to_string(PreservationClass c) noexcept;

  // Linear: every variable occurs at most once on each side.
  // LinearQuadratic: for every variable the counts are bounded by (1, 2) or
  // by (2, 1), and the identity is not Linear.
  PreservationClass classify_identity(Term const& p, Term const& q);

}  // namespace ualg
