#include "ualg/factorization.hpp"

#include <limits>

#include "ualg/congruences.hpp"
#include "ualg/error.hpp"
#include "ualg/kernels.hpp"

namespace ualg {

  namespace {
    void check_map(FiniteAlgebra const& x, CarrierMap const& f) {
      if (f.source_size() != x.size()) {
        raise(ErrorCode::size_mismatch,
              "map has " + std::to_string(f.source_size())
                  + " values, algebra has " + std::to_string(x.size())
                  + " elements");
      }
    }

    Factorization from_congruence(FiniteAlgebra const& x, CarrierMap const& f,
                                  Partition const& theta) {
      Quotient             q = quotient(x, theta);
      std::vector<Element> h;
      h.reserve(theta.num_blocks());
      for (Element rep : theta.representatives()) {
        h.push_back(f(rep));
      }
      return {std::move(q.map), std::move(q.algebra),
              CarrierMap(f.target_size(), std::move(h))};
    }

    // h o g, or nullopt if the maps do not compose.
    std::optional<CarrierMap> composite(Factorization const& a) {
      if (a.g.target_size() != a.h.source_size()) {
        return std::nullopt;
      }
      return a.g.then(a.h);
    }
  }  // namespace

  FactorizationCheck is_factorization(FiniteAlgebra const& x,
                                      CarrierMap const&    f,
                                      Factorization const& c) {
    check_map(x, f);
    if (c.y.signature() != x.signature()) {
      raise(ErrorCode::signature_mismatch,
            "Y and X have different signatures");
    }
    if (c.g.source_size() != x.size() || c.g.target_size() != c.y.size()) {
      return {false, "g does not map X into Y"};
    }
    if (!c.g.is_surjective()) {
      return {false, "g is not surjective"};
    }
    auto hom = is_homomorphism(c.g, x, c.y);
    if (!hom) {
      return {false, "g is not a homomorphism at "
                         + x.signature()[hom.counterexample->symbol].name};
    }
    if (c.h.source_size() != c.y.size() || c.h.target_size() != f.target_size()) {
      return {false, "h does not map Y into Z"};
    }
    for (std::size_t v = 0; v < x.size(); ++v) {
      if (c.h(c.g(v)) != f(v)) {
        return {false, "h∘g differs from f at x = " + std::to_string(v)};
      }
    }
    if (c.y.size() > x.size()) {
      return {false, "|Y| exceeds |X|"};
    }
    return {true, {}};
  }

  Precedence precedes(Factorization const& a, Factorization const& b) {
    auto fa = composite(a), fb = composite(b);
    if (!fa || !fb || *fa != *fb || a.y.signature() != b.y.signature()) {
      raise(ErrorCode::mismatched_base,
            "factorizations of different maps cannot be compared");
    }
    constexpr auto       unset = std::numeric_limits<Element>::max();
    std::vector<Element> q(b.y.size(), unset);
    for (std::size_t v = 0; v < a.g.source_size(); ++v) {
      auto& slot = q[b.g(v)];
      if (slot == unset) {
        slot = a.g(v);
      } else if (slot != a.g(v)) {
        return {false, std::nullopt};
      }
    }
    for (auto& v : q) {
      if (v == unset) {
        // b.g not surjective; a malformed factorization has no witness.
        return {false, std::nullopt};
      }
    }
    CarrierMap witness(a.y.size(), std::move(q));
    if (!is_homomorphism(witness, b.y, a.y)) {
      return {false, std::nullopt};
    }
    return {true, std::move(witness)};
  }

  std::vector<std::vector<Element>> translation_signatures(
      std::span<Translation const> semigroup,
      CarrierMap const&            f) {
    std::vector<std::vector<Element>> rows(f.source_size());
    for (std::size_t v = 0; v < rows.size(); ++v) {
      rows[v].reserve(semigroup.size());
      for (auto const& sigma : semigroup) {
        rows[v].push_back(f(sigma.table[v]));
      }
    }
    return rows;
  }

  Factorization least_factorization(FiniteAlgebra const& x,
                                    CarrierMap const&    f,
                                    Limits const&        limits) {
    check_map(x, f);
    auto                        semigroup = translation_semigroup(x, limits);
    std::vector<kernels::Table> maps;
    maps.reserve(semigroup.size());
    for (auto& t : semigroup) {
      maps.push_back(std::move(t.table));
    }
    Partition theta = kernels::omp::signature_kernel(maps, f.values());
    // h reads the identity coordinate, which is f itself: block -> f(rep).
    return from_congruence(x, f, theta);
  }

  std::vector<Factorization> enumerate_factorizations(FiniteAlgebra const& x,
                                                      CarrierMap const&    f,
                                                      Limits const& limits) {
    check_map(x, f);
    Partition                  ker = kernel(f);
    std::vector<Factorization> result;
    for (auto const& theta : all_congruences(x, limits)) {
      if (theta.refines(ker)) {
        result.push_back(from_congruence(x, f, theta));
      }
    }
    return result;
  }

  Factorization greatest_factorization(FiniteAlgebra const& x,
                                       CarrierMap const&    f) {
    check_map(x, f);
    return {CarrierMap::identity(x.size()), x, f};
  }

}  // namespace ualg
