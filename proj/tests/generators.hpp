#pragma once

// Seeded random inputs for the property tests.

#include <random>
#include <string>
#include <vector>

#include "ualg/algebra.hpp"
#include "ualg/term.hpp"

namespace gen {

  using Rng = std::mt19937_64;

  inline std::size_t below(Rng& rng, std::size_t n) {
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
  }

  // A random term over sig with variables v1..v{max_var}.
  inline ualg::Term term(Rng& rng, ualg::Signature const& sig,
                         std::size_t max_var, std::size_t depth) {
    if (depth == 0 || sig.empty() || below(rng, 3) == 0) {
      std::vector<std::size_t> constants;
      for (std::size_t s = 0; s < sig.size(); ++s) {
        if (sig[s].arity == 0) {
          constants.push_back(s);
        }
      }
      if (!constants.empty() && below(rng, 4) == 0) {
        return ualg::Term::constant(sig[constants[below(rng, constants.size())]].name);
      }
      return ualg::Term::variable(1 + below(rng, max_var));
    }
    auto const&             sym = sig[below(rng, sig.size())];
    std::vector<ualg::Term> children;
    for (std::size_t j = 0; j < sym.arity; ++j) {
      children.push_back(term(rng, sig, max_var, depth - 1));
    }
    return ualg::Term::apply(sym.name, std::move(children));
  }

  inline ualg::FiniteAlgebra algebra(Rng& rng, ualg::Signature const& sig,
                                     std::size_t k) {
    std::vector<std::vector<ualg::Element>> tables;
    for (auto const& s : sig.symbols()) {
      std::size_t entries = 1;
      for (std::size_t j = 0; j < s.arity; ++j) {
        entries *= k;
      }
      std::vector<ualg::Element> t(entries);
      for (auto& v : t) {
        v = static_cast<ualg::Element>(below(rng, k));
      }
      tables.push_back(std::move(t));
    }
    return ualg::FiniteAlgebra(sig, k, std::move(tables));
  }

  inline std::vector<ualg::Element> map(Rng& rng, std::size_t n, std::size_t k) {
    std::vector<ualg::Element> out(n);
    for (auto& v : out) {
      v = static_cast<ualg::Element>(below(rng, k));
    }
    return out;
  }

}  // namespace gen
