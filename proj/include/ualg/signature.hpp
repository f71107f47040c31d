#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace ualg {

  struct Symbol {
    std::string name;
    std::size_t arity;

    bool operator==(Symbol const&) const = default;
  };

  // A finite graded set of operation symbols. Symbols keep their insertion
  // order, which is the order tables, translations and counterexamples are
  // enumerated in.
  class Signature {
   public:
    Signature() = default;
    explicit Signature(std::vector<Symbol> symbols);

    std::size_t size() const noexcept {
      return _symbols.size();
    }
    bool empty() const noexcept {
      return _symbols.empty();
    }

    std::vector<Symbol> const& symbols() const noexcept {
      return _symbols;
    }
    Symbol const& operator[](std::size_t i) const {
      return _symbols[i];
    }

    std::optional<std::size_t> find(std::string_view name) const;
    // Throws unknown_symbol.
    std::size_t index_of(std::string_view name) const;

    // Sp E: the arities that occur.
    std::set<std::size_t> spectrum() const;
    std::size_t max_arity() const noexcept;

    // Symbol indices sorted by arity, ties in declaration order.
    std::vector<std::size_t> by_arity() const;

    bool operator==(Signature const& that) const {
      return _symbols == that._symbols;
    }

   private:
    std::vector<Symbol>                          _symbols;
    std::unordered_map<std::string, std::size_t> _index;
  };

  // sig := (name "/" arity)*, whitespace separated.
  Signature   parse_signature(std::string_view text);
  std::string to_string(Signature const& sig);

  bool is_identifier(std::string_view name) noexcept;

}  // namespace ualg
