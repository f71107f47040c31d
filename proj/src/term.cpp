#include "ualg/term.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "ualg/algebra.hpp"
#include "ualg/error.hpp"

namespace ualg {

  namespace {
    using Counts = std::vector<std::pair<std::size_t, std::size_t>>;

    Counts merge_counts(std::vector<Term> const& children) {
      std::map<std::size_t, std::size_t> sum;
      for (auto const& c : children) {
        for (auto [v, n] : c.occurrence_counts()) {
          sum[v] += n;
        }
      }
      return Counts(sum.begin(), sum.end());
    }
  }  // namespace

  Term Term::variable(std::size_t index) {
    if (index == 0) {
      raise(ErrorCode::invalid_input, "variable indices start at 1");
    }
    Node node{Kind::variable, index, {}, {}, {{index, 1}}};
    return Term(std::make_shared<Node const>(std::move(node)));
  }

  Term Term::constant(std::string symbol) {
    Node node{Kind::constant, 0, std::move(symbol), {}, {}};
    return Term(std::make_shared<Node const>(std::move(node)));
  }

  Term Term::apply(std::string symbol, std::vector<Term> children) {
    if (children.empty()) {
      return constant(std::move(symbol));
    }
    Counts counts = merge_counts(children);
    Node   node{Kind::apply, 0, std::move(symbol), std::move(children),
              std::move(counts)};
    return Term(std::make_shared<Node const>(std::move(node)));
  }

  std::size_t Term::occurrences(std::size_t var) const noexcept {
    auto const& c  = _node->counts;
    auto        it = std::lower_bound(
        c.begin(), c.end(), var, [](auto const& p, std::size_t v) {
          return p.first < v;
        });
    return (it != c.end() && it->first == var) ? it->second : 0;
  }

  std::set<std::size_t> Term::vars() const {
    std::set<std::size_t> result;
    for (auto [v, n] : _node->counts) {
      result.insert(v);
    }
    return result;
  }

  std::size_t Term::size() const noexcept {
    std::size_t n = 1;
    for (auto const& c : _node->children) {
      n += c.size();
    }
    return n;
  }

  bool Term::operator==(Term const& that) const {
    if (_node == that._node) {
      return true;
    }
    if (kind() != that.kind()) {
      return false;
    }
    switch (kind()) {
      case Kind::variable:
        return var_index() == that.var_index();
      case Kind::constant:
        return symbol() == that.symbol();
      case Kind::apply:
        return symbol() == that.symbol()
               && std::equal(children().begin(), children().end(),
                             that.children().begin(), that.children().end());
    }
    return false;
  }

  std::set<std::size_t> vars_of(Term const& t) {
    return t.vars();
  }

  std::size_t occurrences(Term const& t, std::size_t var) {
    return t.occurrences(var);
  }

  ////////////////////////////////////////////////////////////////////////
  // Parsing
  ////////////////////////////////////////////////////////////////////////

  namespace {
    class TermParser {
     public:
      TermParser(std::string_view text, Signature const& sig)
          : _text(text), _sig(sig) {}

      Term parse() {
        Term t = term();
        skip();
        if (_pos != _text.size()) {
          error("trailing input");
        }
        return t;
      }

     private:
      [[noreturn]] void error(std::string const& what) const {
        raise(ErrorCode::syntax,
              "at position " + std::to_string(_pos) + ": " + what);
      }

      void skip() {
        while (_pos < _text.size()
               && std::isspace(static_cast<unsigned char>(_text[_pos]))) {
          ++_pos;
        }
      }

      static bool name_start(char c) {
        return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
      }
      static bool name_char(char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
      }

      // v[1-9][0-9]*
      static std::optional<std::size_t> as_variable(std::string_view name) {
        if (name.size() < 2 || name[0] != 'v' || name[1] == '0') {
          return std::nullopt;
        }
        std::size_t index = 0;
        for (char c : name.substr(1)) {
          if (!std::isdigit(static_cast<unsigned char>(c))) {
            return std::nullopt;
          }
          index = index * 10 + static_cast<std::size_t>(c - '0');
          if (index > 1'000'000'000) {
            return std::nullopt;
          }
        }
        return index;
      }

      Term term() {
        skip();
        if (_pos >= _text.size() || !name_start(_text[_pos])) {
          error("expected a variable or symbol");
        }
        std::size_t start = _pos;
        while (_pos < _text.size() && name_char(_text[_pos])) {
          ++_pos;
        }
        std::string_view name = _text.substr(start, _pos - start);
        skip();
        bool has_args = _pos < _text.size() && _text[_pos] == '(';

        if (auto v = as_variable(name)) {
          if (has_args) {
            error("variable " + std::string(name) + " applied to arguments");
          }
          return Term::variable(*v);
        }

        auto index = _sig.find(name);
        if (!index) {
          raise(ErrorCode::unknown_symbol, std::string(name));
        }
        std::size_t expected = _sig[*index].arity;

        std::vector<Term> args;
        if (has_args) {
          ++_pos;
          args.push_back(term());
          skip();
          while (_pos < _text.size() && _text[_pos] == ',') {
            ++_pos;
            args.push_back(term());
            skip();
          }
          if (_pos >= _text.size() || _text[_pos] != ')') {
            error("expected ',' or ')'");
          }
          ++_pos;
        }
        if (args.size() != expected) {
          raise(ErrorCode::arity_mismatch,
                std::string(name) + " expects " + std::to_string(expected)
                    + " argument(s), found " + std::to_string(args.size()));
        }
        return Term::apply(std::string(name), std::move(args));
      }

      std::string_view _text;
      Signature const& _sig;
      std::size_t      _pos = 0;
    };
  }  // namespace

  Term parse_term(std::string_view text, Signature const& sig) {
    return TermParser(text, sig).parse();
  }

  std::string to_string(Term const& t) {
    switch (t.kind()) {
      case Term::Kind::variable:
        return "v" + std::to_string(t.var_index());
      case Term::Kind::constant:
        return t.symbol();
      case Term::Kind::apply: {
        std::string result = t.symbol() + "(";
        bool        first  = true;
        for (auto const& c : t.children()) {
          if (!first) {
            result += ',';
          }
          first = false;
          result += to_string(c);
        }
        return result + ")";
      }
    }
    return {};
  }

  void check_term(Term const& t, Signature const& sig) {
    if (t.kind() == Term::Kind::variable) {
      return;
    }
    auto index = sig.find(t.symbol());
    if (!index) {
      raise(ErrorCode::signature_mismatch,
            "symbol " + t.symbol() + " is not in the signature");
    }
    if (sig[*index].arity != t.children().size()) {
      raise(ErrorCode::signature_mismatch,
            "symbol " + t.symbol() + " has arity "
                + std::to_string(sig[*index].arity) + ", used with "
                + std::to_string(t.children().size()));
    }
    for (auto const& c : t.children()) {
      check_term(c, sig);
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // Evaluation
  ////////////////////////////////////////////////////////////////////////

  Element evaluate(Term const&          t,
                   FiniteAlgebra const& algebra,
                   VarAssignment const& assignment) {
    if (t.kind() == Term::Kind::variable) {
      auto it = assignment.find(t.var_index());
      if (it == assignment.end()) {
        raise(ErrorCode::unbound_variable, to_string(t));
      }
      if (it->second >= algebra.size()) {
        raise(ErrorCode::out_of_carrier,
              to_string(t) + " = " + std::to_string(it->second));
      }
      return it->second;
    }
    auto index = algebra.signature().find(t.symbol());
    if (!index || algebra.arity(*index) != t.children().size()) {
      raise(ErrorCode::signature_mismatch,
            "symbol " + t.symbol() + " does not match the algebra");
    }
    std::vector<Element> args;
    args.reserve(t.children().size());
    for (auto const& c : t.children()) {
      args.push_back(evaluate(c, algebra, assignment));
    }
    return algebra.op(*index, args);
  }

  CompiledTerm::CompiledTerm(Term const&                  t,
                             FiniteAlgebra const&         algebra,
                             std::span<std::size_t const> slot_vars)
      : _algebra(&algebra) {
    check_term(t, algebra.signature());
    std::size_t depth = 0;
    auto        emit  = [&](auto& self, Term const& s) -> void {
      switch (s.kind()) {
        case Term::Kind::variable: {
          auto it = std::find(slot_vars.begin(), slot_vars.end(),
                              s.var_index());
          if (it == slot_vars.end()) {
            raise(ErrorCode::unbound_variable, to_string(s));
          }
          _code.push_back({Instr::Op::load,
                           static_cast<std::size_t>(it - slot_vars.begin()),
                           0});
          ++depth;
          break;
        }
        case Term::Kind::constant: {
          auto sym = algebra.signature().index_of(s.symbol());
          _code.push_back({Instr::Op::constant, algebra.table(sym)[0], 0});
          ++depth;
          break;
        }
        case Term::Kind::apply: {
          for (auto const& c : s.children()) {
            self(self, c);
          }
          auto sym = algebra.signature().index_of(s.symbol());
          _code.push_back({Instr::Op::apply, sym, s.children().size()});
          depth -= s.children().size() - 1;
          break;
        }
      }
      _max_depth = std::max(_max_depth, depth);
    };
    emit(emit, t);
  }

  Element CompiledTerm::operator()(std::span<Element const> slots) const {
    // Terms in this workbench are small; a fixed buffer avoids allocation in
    // the exhaustive loops.
    constexpr std::size_t small = 64;
    Element               buffer[small] = {};
    std::vector<Element>  heap;
    Element*              stack = buffer;
    if (_max_depth > small) {
      heap.resize(_max_depth);
      stack = heap.data();
    }
    std::size_t top = 0;
    for (auto const& ins : _code) {
      switch (ins.op) {
        case Instr::Op::load:
          stack[top++] = slots[ins.arg];
          break;
        case Instr::Op::constant:
          stack[top++] = static_cast<Element>(ins.arg);
          break;
        case Instr::Op::apply: {
          top -= ins.arity;
          stack[top] = _algebra->op(
              ins.arg, std::span<Element const>(stack + top, ins.arity));
          ++top;
          break;
        }
      }
    }
    return stack[0];
  }

  ////////////////////////////////////////////////////////////////////////
  // Identity classification
  ////////////////////////////////////////////////////////////////////////

  char const* to_string(PreservationClass c) noexcept {
    switch (c) {
      case PreservationClass::linear:
        return "Linear";
      case PreservationClass::linear_quadratic:
        return "LinearQuadratic";
      case PreservationClass::unclassified:
        return "Unclassified";
    }
    return "";
  }

  PreservationClass classify_identity(Term const& p, Term const& q) {
    std::set<std::size_t> vars = p.vars();
    vars.merge(q.vars());
    bool linear = true, quadratic = true;
    for (auto v : vars) {
      auto a = p.occurrences(v), b = q.occurrences(v);
      linear    = linear && a <= 1 && b <= 1;
      quadratic = quadratic && ((a <= 1 && b <= 2) || (a <= 2 && b <= 1));
    }
    if (linear) {
      return PreservationClass::linear;
    }
    return quadratic ? PreservationClass::linear_quadratic
                     : PreservationClass::unclassified;
  }

}  // namespace ualg
