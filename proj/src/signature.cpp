#include "ualg/signature.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "ualg/error.hpp"

namespace ualg {

  Signature::Signature(std::vector<Symbol> symbols)
      : _symbols(std::move(symbols)) {
    for (std::size_t i = 0; i < _symbols.size(); ++i) {
      if (!is_identifier(_symbols[i].name)) {
        raise(ErrorCode::syntax,
              "invalid symbol name '" + _symbols[i].name + "'");
      }
      if (!_index.emplace(_symbols[i].name, i).second) {
        raise(ErrorCode::duplicate_symbol, _symbols[i].name);
      }
    }
  }

  std::optional<std::size_t> Signature::find(std::string_view name) const {
    auto it = _index.find(std::string(name));
    if (it == _index.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  std::size_t Signature::index_of(std::string_view name) const {
    auto i = find(name);
    if (!i) {
      raise(ErrorCode::unknown_symbol, std::string(name));
    }
    return *i;
  }

  std::set<std::size_t> Signature::spectrum() const {
    std::set<std::size_t> result;
    for (auto const& s : _symbols) {
      result.insert(s.arity);
    }
    return result;
  }

  std::size_t Signature::max_arity() const noexcept {
    std::size_t result = 0;
    for (auto const& s : _symbols) {
      result = std::max(result, s.arity);
    }
    return result;
  }

  std::vector<std::size_t> Signature::by_arity() const {
    std::vector<std::size_t> order(_symbols.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [this](auto a, auto b) {
      return _symbols[a].arity < _symbols[b].arity;
    });
    return order;
  }

  bool is_identifier(std::string_view name) noexcept {
    if (name.empty()
        || !(std::isalpha(static_cast<unsigned char>(name[0]))
             || name[0] == '_')) {
      return false;
    }
    return std::all_of(name.begin(), name.end(), [](char c) {
      return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    });
  }

  namespace {
    bool is_space(char c) {
      return std::isspace(static_cast<unsigned char>(c)) != 0;
    }
    bool is_name_char(char c) {
      return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    }
    bool is_digit(char c) {
      return std::isdigit(static_cast<unsigned char>(c)) != 0;
    }

    [[noreturn]] void syntax_error(std::size_t pos, std::string const& what) {
      raise(ErrorCode::syntax, "at position " + std::to_string(pos) + ": " + what);
    }
  }  // namespace

  Signature parse_signature(std::string_view text) {
    std::vector<Symbol> symbols;
    std::size_t         pos = 0;
    auto skip = [&] {
      while (pos < text.size() && is_space(text[pos])) {
        ++pos;
      }
    };
    skip();
    while (pos < text.size()) {
      std::size_t start = pos;
      if (!(std::isalpha(static_cast<unsigned char>(text[pos]))
            || text[pos] == '_')) {
        syntax_error(pos, "expected a symbol name");
      }
      while (pos < text.size() && is_name_char(text[pos])) {
        ++pos;
      }
      std::string name(text.substr(start, pos - start));
      if (pos >= text.size() || text[pos] != '/') {
        syntax_error(pos, "expected '/' after '" + name + "'");
      }
      ++pos;
      if (pos < text.size() && text[pos] == '-') {
        raise(ErrorCode::negative_arity,
              name + " at position " + std::to_string(pos));
      }
      std::size_t digits = pos;
      std::size_t arity  = 0;
      while (pos < text.size() && is_digit(text[pos])) {
        arity = arity * 10 + static_cast<std::size_t>(text[pos] - '0');
        if (arity > 64) {
          syntax_error(digits, "arity too large");
        }
        ++pos;
      }
      if (pos == digits) {
        syntax_error(pos, "expected an arity");
      }
      if (pos < text.size() && !is_space(text[pos])) {
        syntax_error(pos, "unexpected character");
      }
      for (auto const& s : symbols) {
        if (s.name == name) {
          raise(ErrorCode::duplicate_symbol, name);
        }
      }
      symbols.push_back({std::move(name), arity});
      skip();
    }
    return Signature(std::move(symbols));
  }

  std::string to_string(Signature const& sig) {
    std::string result;
    for (auto const& s : sig.symbols()) {
      if (!result.empty()) {
        result += ' ';
      }
      result += s.name + "/" + std::to_string(s.arity);
    }
    return result;
  }

}  // namespace ualg
