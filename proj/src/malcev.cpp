#include <array>
#include <algorithm>
#include <limits>
#include <unordered_set>

#include "ualg/algebra.hpp"
#include "ualg/error.hpp"

namespace ualg {

  MalcevCheck is_malcev_op(TernaryTable const& mu) {
    auto k = static_cast<Element>(mu.size);
    for (Element x = 0; x < k; ++x) {
      for (Element y = 0; y < k; ++y) {
        if (mu(y, y, x) != x || mu(x, y, y) != x) {
          return {false, std::make_pair(x, y)};
        }
      }
    }
    return {true, std::nullopt};
  }

  MalcevCheck is_malcev_op(FiniteAlgebra const& x, std::string_view symbol) {
    std::size_t s = x.signature().index_of(symbol);
    if (x.arity(s) != 3) {
      raise(ErrorCode::arity_mismatch,
            std::string(symbol) + " has arity " + std::to_string(x.arity(s))
                + ", a Mal'cev operation is ternary");
    }
    auto table = x.table(s);
    return is_malcev_op(
        TernaryTable{x.size(), std::vector<Element>(table.begin(), table.end())});
  }

  MalcevSearch find_malcev_operations(std::size_t k, std::size_t cap) {
    if (k == 0) {
      raise(ErrorCode::invalid_input, "carrier size must be positive");
    }
    if (k > 64) {
      raise(ErrorCode::size_cap_exceeded, "carrier size " + std::to_string(k));
    }
    constexpr auto       free_entry = std::numeric_limits<Element>::max();
    std::vector<Element> base(k * k * k, free_entry);
    auto at = [k](std::size_t a, std::size_t b, std::size_t c) {
      return (a * k + b) * k + c;
    };
    for (std::size_t x = 0; x < k; ++x) {
      for (std::size_t y = 0; y < k; ++y) {
        base[at(y, y, x)] = static_cast<Element>(x);
        base[at(x, y, y)] = static_cast<Element>(x);
      }
    }
    std::vector<std::size_t> free;
    for (std::size_t i = 0; i < base.size(); ++i) {
      if (base[i] == free_entry) {
        free.push_back(i);
        base[i] = 0;
      }
    }

    MalcevSearch result{{}, true};
    // Free entries in increasing position, the last one varying fastest, so
    // tables come out in lexicographic order.
    std::vector<Element> table = base;
    while (true) {
      if (result.operations.size() == cap) {
        result.complete = false;
        return result;
      }
      result.operations.push_back(TernaryTable{k, table});
      std::size_t j = free.size();
      while (j > 0 && table[free[j - 1]] + 1 == k) {
        table[free[--j]] = 0;
      }
      if (j == 0) {
        return result;
      }
      ++table[free[j - 1]];
    }
  }

  TernaryTable group_malcev(FiniteAlgebra const& g) {
    auto const& sig = g.signature();
    auto        m = sig.find("m"), i = sig.find("i"), e = sig.find("e");
    if (!m || !i || !e || g.arity(*m) != 2 || g.arity(*i) != 1
        || g.arity(*e) != 0) {
      raise(ErrorCode::not_a_group, "signature lacks m/2 i/1 e/0");
    }
    // Only the group reduct matters; extra symbols are ignored.
    auto axioms = group_axioms();
    auto check  = in_equational_class(g, axioms);
    if (!check) {
      raise(ErrorCode::not_a_group,
            "axiom " + to_string(axioms[*check.failing].lhs) + " = "
                + to_string(axioms[*check.failing].rhs) + " fails");
    }
    std::size_t  k = g.size();
    TernaryTable mu{k, std::vector<Element>(k * k * k)};
    for (Element a = 0; a < k; ++a) {
      for (Element b = 0; b < k; ++b) {
        Element inv_b = g.op(*i, std::array<Element, 1>{b});
        for (Element c = 0; c < k; ++c) {
          Element rhs = g.op(*m, std::array<Element, 2>{inv_b, c});
          mu.values[(a * k + b) * k + c]
              = g.op(*m, std::array<Element, 2>{a, rhs});
        }
      }
    }
    return mu;
  }

  ////////////////////////////////////////////////////////////////////////
  // Ternary clone
  ////////////////////////////////////////////////////////////////////////

  namespace {
    struct TableHash {
      std::size_t operator()(std::vector<Element> const& v) const noexcept {
        std::size_t h = 0xcbf29ce484222325ULL;
        for (Element e : v) {
          h ^= e;
          h *= 0x100000001b3ULL;
        }
        return h;
      }
    };
  }  // namespace

  std::vector<TernaryTable> clone_ternary_terms(FiniteAlgebra const& x,
                                                Limits const&        limits) {
    std::size_t k = x.size();
    auto        n = checked_power(k, 3, limits.max_table_entries);
    if (!n) {
      raise(ErrorCode::size_cap_exceeded, "k^3 too large");
    }
    std::vector<std::vector<Element>>                         funcs;
    std::unordered_set<std::vector<Element>, TableHash>       seen;
    auto add = [&](std::vector<Element> f) {
      if (seen.insert(f).second) {
        funcs.push_back(std::move(f));
        if (funcs.size() > limits.max_clone) {
          raise(ErrorCode::size_cap_exceeded,
                "more than " + std::to_string(limits.max_clone)
                    + " ternary term operations");
        }
      }
    };
    for (std::size_t proj = 0; proj < 3; ++proj) {
      std::vector<Element> f(*n);
      Element              args[3];
      for (std::size_t t = 0; t < *n; ++t) {
        decode_tuple(t, k, args);
        f[t] = args[proj];
      }
      add(std::move(f));
    }
    for (std::size_t s = 0; s < x.signature().size(); ++s) {
      if (x.arity(s) == 0) {
        add(std::vector<Element>(*n, x.table(s)[0]));
      }
    }

    // Semi-naive closure: each round applies every operation to tuples of
    // known functions that use at least one function found last round.
    std::size_t          old_end = 0;
    std::vector<Element> args;
    std::vector<std::size_t> pick;
    while (old_end < funcs.size()) {
      std::size_t fresh_begin = old_end, end = funcs.size();
      for (std::size_t s = 0; s < x.signature().size(); ++s) {
        std::size_t arity = x.arity(s);
        if (arity == 0) {
          continue;
        }
        auto tuples = checked_power(end, arity, std::numeric_limits<std::size_t>::max() / 2);
        if (!tuples || *tuples > limits.max_clone * limits.max_clone) {
          raise(ErrorCode::size_cap_exceeded,
                "ternary clone closure too large");
        }
        args.resize(arity);
        pick.assign(arity, 0);
        for (std::size_t t = 0; t < *tuples; ++t) {
          std::size_t rest = t;
          bool        uses_fresh = false;
          for (std::size_t j = arity; j-- > 0;) {
            pick[j] = rest % end;
            rest /= end;
            uses_fresh = uses_fresh || pick[j] >= fresh_begin;
          }
          if (!uses_fresh) {
            continue;
          }
          std::vector<Element> f(*n);
          for (std::size_t point = 0; point < *n; ++point) {
            for (std::size_t j = 0; j < arity; ++j) {
              args[j] = funcs[pick[j]][point];
            }
            f[point] = x.op(s, args);
          }
          add(std::move(f));
        }
      }
      old_end = end;
    }

    std::sort(funcs.begin(), funcs.end());
    std::vector<TernaryTable> result;
    result.reserve(funcs.size());
    for (auto& f : funcs) {
      result.push_back(TernaryTable{k, std::move(f)});
    }
    return result;
  }

  std::optional<TernaryTable> malcev_term_witness(FiniteAlgebra const& x,
                                                  Limits const& limits) {
    for (auto& f : clone_ternary_terms(x, limits)) {
      if (is_malcev_op(f)) {
        return std::move(f);
      }
    }
    return std::nullopt;
  }

  bool has_malcev_term(FiniteAlgebra const& x, Limits const& limits) {
    return malcev_term_witness(x, limits).has_value();
  }

  ////////////////////////////////////////////////////////////////////////
  // Diagonal
  ////////////////////////////////////////////////////////////////////////

  Diagonal diagonal_hom(FiniteAlgebra const&           x,
                        std::span<FiniteAlgebra const> targets,
                        std::span<CarrierMap const>    maps,
                        Limits const&                  limits) {
    if (maps.empty() || maps.size() != targets.size()) {
      raise(ErrorCode::invalid_input,
            "need one target per map and at least one map");
    }
    for (std::size_t j = 0; j < maps.size(); ++j) {
      auto check = is_homomorphism(maps[j], x, targets[j]);
      if (!check) {
        raise(ErrorCode::invalid_input,
              "map " + std::to_string(j) + " is not a homomorphism");
      }
    }
    Product              prod = product(x.signature(), targets, limits);
    std::vector<Element> values(x.size());
    for (std::size_t e = 0; e < x.size(); ++e) {
      std::size_t code = 0;
      for (std::size_t j = 0; j < maps.size(); ++j) {
        code = code * targets[j].size() + maps[j](e);
      }
      values[e] = static_cast<Element>(code);
    }
    CarrierMap map(prod.algebra.size(), std::move(values));
    bool       injective = map.is_injective();
    return {std::move(prod), std::move(map), injective};
  }

}  // namespace ualg
