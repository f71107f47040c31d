#include "ualg/translations.hpp"

#include <limits>
#include <unordered_map>

#include "ualg/error.hpp"
#include "ualg/kernels.hpp"

namespace ualg {

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

  std::vector<Element> principal_table(FiniteAlgebra const&       x,
                                       PrincipalDescriptor const& d) {
    std::size_t n = x.arity(d.symbol);
    if (d.slot == 0 || d.slot > n || d.fixed.size() + 1 != n) {
      raise(ErrorCode::invalid_input, "malformed principal translation");
    }
    std::vector<Element> args(n), table(x.size());
    for (std::size_t j = 0, f = 0; j < n; ++j) {
      if (j + 1 != d.slot) {
        args[j] = d.fixed[f++];
      }
    }
    for (std::size_t v = 0; v < x.size(); ++v) {
      args[d.slot - 1] = static_cast<Element>(v);
      table[v]         = x.op(d.symbol, args);
    }
    return table;
  }

  std::vector<Element> evaluate_word(FiniteAlgebra const& x, Word const& word) {
    std::vector<Element> result(x.size());
    for (std::size_t v = 0; v < x.size(); ++v) {
      result[v] = static_cast<Element>(v);
    }
    for (auto const& d : word) {
      auto step = principal_table(x, d);
      for (auto& v : result) {
        v = step[v];
      }
    }
    return result;
  }

  std::vector<Translation> principal_translations(FiniteAlgebra const& x) {
    std::vector<Translation> result;
    std::unordered_map<std::vector<Element>, std::size_t, TableHash> seen;
    for (std::size_t s = 0; s < x.signature().size(); ++s) {
      std::size_t n = x.arity(s);
      if (n == 0) {
        continue;
      }
      auto count
          = checked_power(x.size(), n - 1, std::numeric_limits<std::size_t>::max());
      PrincipalDescriptor d{s, 0, std::vector<Element>(n - 1)};
      for (std::size_t slot = 1; slot <= n; ++slot) {
        d.slot = slot;
        for (std::size_t t = 0; t < *count; ++t) {
          decode_tuple(t, x.size(), d.fixed);
          auto table = principal_table(x, d);
          if (seen.try_emplace(table, result.size()).second) {
            result.push_back({std::move(table), Word{d}});
          }
        }
      }
    }
    return result;
  }

  std::vector<Translation> translation_semigroup(FiniteAlgebra const& x,
                                                 Limits const&        limits) {
    auto generators = principal_translations(x);
    std::vector<kernels::Table> gen_tables;
    gen_tables.reserve(generators.size());
    for (auto const& g : generators) {
      gen_tables.push_back(g.table);
    }

    std::vector<Translation> result;
    std::unordered_map<std::vector<Element>, std::size_t, TableHash> seen;
    auto add = [&](std::vector<Element> table, Word word) {
      if (seen.try_emplace(table, result.size()).second) {
        if (result.size() == limits.max_semigroup) {
          raise(ErrorCode::size_cap_exceeded,
                "translation semigroup has more than "
                    + std::to_string(limits.max_semigroup) + " elements");
        }
        result.push_back({std::move(table), std::move(word)});
        return true;
      }
      return false;
    };

    add(evaluate_word(x, {}), {});
    std::size_t level_begin = 0, level_end = 1;
    // Each level extends the words of the previous one by one generator; the
    // compositions are computed in parallel and merged in (word, generator)
    // order, so the first word found for a table is the shortest and least.
    while (level_begin < level_end) {
      std::vector<kernels::Table> frontier;
      frontier.reserve(level_end - level_begin);
      for (std::size_t i = level_begin; i < level_end; ++i) {
        frontier.push_back(result[i].table);
      }
      auto composed = kernels::omp::compose_all(frontier, gen_tables);
      for (std::size_t i = 0; i < frontier.size(); ++i) {
        for (std::size_t j = 0; j < generators.size(); ++j) {
          auto& table = composed[i * generators.size() + j];
          if (seen.contains(table)) {
            continue;
          }
          Word word = result[level_begin + i].word;
          word.push_back(generators[j].word.front());
          add(std::move(table), std::move(word));
        }
      }
      level_begin = level_end;
      level_end   = result.size();
    }
    return result;
  }

  std::string to_string(PrincipalDescriptor const& d, Signature const& sig) {
    if (sig[d.symbol].arity == 1) {
      return sig[d.symbol].name;
    }
    std::string result
        = sig[d.symbol].name + "@" + std::to_string(d.slot) + "(";
    for (std::size_t j = 0; j < d.fixed.size(); ++j) {
      if (j != 0) {
        result += ',';
      }
      result += std::to_string(d.fixed[j]);
    }
    return result + ")";
  }

  std::string to_string(Word const& word, Signature const& sig) {
    if (word.empty()) {
      return "e";
    }
    std::string result;
    for (std::size_t j = word.size(); j-- > 0;) {
      result += to_string(word[j], sig);
      if (j != 0) {
        result += "∘";
      }
    }
    return result;
  }

  std::string dump_line(Translation const& t, Signature const& sig) {
    std::string result = to_string(t.word, sig) + " ⇒ [";
    for (std::size_t j = 0; j < t.table.size(); ++j) {
      if (j != 0) {
        result += ',';
      }
      result += std::to_string(t.table[j]);
    }
    return result + "]";
  }

}  // namespace ualg
