#include "ualg/congruences.hpp"

#include <map>

#include "ualg/error.hpp"
#include "ualg/kernels.hpp"
#include "ualg/union_find.hpp"

namespace ualg {

  namespace {
    void check_size(FiniteAlgebra const& x, Partition const& pi) {
      if (pi.size() != x.size()) {
        raise(ErrorCode::size_mismatch,
              "partition of a " + std::to_string(pi.size())
                  + "-set on an algebra of size " + std::to_string(x.size()));
      }
    }
  }  // namespace

  CongruenceCheck is_congruence_direct(FiniteAlgebra const& x,
                                       Partition const&     pi) {
    check_size(x, pi);
    auto                 blocks = pi.blocks();
    std::vector<Element> xs, ys;
    std::vector<std::size_t> pos;
    for (std::size_t s : x.signature().by_arity()) {
      std::size_t n     = x.arity(s);
      auto        table = x.table(s);
      xs.resize(n);
      ys.resize(n);
      for (std::size_t t = 0; t < table.size(); ++t) {
        decode_tuple(t, x.size(), xs);
        auto lhs = pi.block_of(table[t]);
        // ys ranges over the product of the blocks of xs, lexicographically.
        pos.assign(n, 0);
        while (true) {
          for (std::size_t j = 0; j < n; ++j) {
            ys[j] = blocks[pi.block_of(xs[j])][pos[j]];
          }
          if (pi.block_of(x.op(s, ys)) != lhs) {
            return {false, CompatibilityViolation{s, xs, ys}};
          }
          std::size_t j = n;
          while (j > 0
                 && pos[j - 1] + 1 == blocks[pi.block_of(xs[j - 1])].size()) {
            pos[--j] = 0;
          }
          if (j == 0) {
            break;
          }
          ++pos[j - 1];
        }
      }
    }
    return {true, std::nullopt};
  }

  TranslationCheck is_congruence_via_translations(
      FiniteAlgebra const&         x,
      std::span<Translation const> principal,
      Partition const&             pi) {
    check_size(x, pi);
    for (auto const& t : principal) {
      for (std::size_t a = 0; a < x.size(); ++a) {
        for (std::size_t b = a + 1; b < x.size(); ++b) {
          if (pi.same_block(a, b)
              && !pi.same_block(t.table[a], t.table[b])) {
            return {false,
                    TranslationViolation{t.word.front(),
                                         static_cast<Element>(a),
                                         static_cast<Element>(b)}};
          }
        }
      }
    }
    return {true, std::nullopt};
  }

  TranslationCheck is_congruence_via_translations(FiniteAlgebra const& x,
                                                  Partition const&     pi) {
    check_size(x, pi);
    return is_congruence_via_translations(x, principal_translations(x), pi);
  }

  Partition congruence_generated(
      FiniteAlgebra const&                         x,
      std::span<std::pair<Element, Element> const> pairs) {
    UnionFind uf(x.size());
    for (auto [a, b] : pairs) {
      if (a >= x.size() || b >= x.size()) {
        raise(ErrorCode::out_of_carrier,
              "pair (" + std::to_string(a) + "," + std::to_string(b) + ")");
      }
      uf.unite(a, b);
    }
    auto principal = principal_translations(x);
    bool changed   = true;
    while (changed) {
      changed = false;
      for (auto const& t : principal) {
        for (std::size_t v = 0; v < x.size(); ++v) {
          std::size_t root = uf.find(v);
          if (root != v) {
            changed = uf.unite(t.table[v], t.table[root]) || changed;
          }
        }
      }
    }
    return Partition(uf.roots());
  }

  std::vector<Partition> all_congruences(FiniteAlgebra const& x,
                                         Limits const&        limits) {
    if (bell_number(x.size()) > limits.max_partitions) {
      raise(ErrorCode::size_cap_exceeded,
            "Bell(" + std::to_string(x.size()) + ") partitions exceed the cap of "
                + std::to_string(limits.max_partitions));
    }
    auto candidates = all_partitions(x.size());
    auto flags      = kernels::omp::congruence_flags(x, candidates);
    std::vector<Partition> result;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      if (flags[i]) {
        result.push_back(std::move(candidates[i]));
      }
    }
    return result;
  }

  Partition largest_congruence_below(FiniteAlgebra const& x,
                                     Partition const&     pi,
                                     Limits const&        limits) {
    check_size(x, pi);
    auto                        semigroup = translation_semigroup(x, limits);
    std::vector<kernels::Table> maps;
    maps.reserve(semigroup.size());
    for (auto& t : semigroup) {
      maps.push_back(std::move(t.table));
    }
    std::vector<Element> f(pi.labels().begin(), pi.labels().end());
    return kernels::omp::signature_kernel(maps, f);
  }

  Partition largest_congruence_below_by_refinement(FiniteAlgebra const& x,
                                                   Partition const&     pi) {
    check_size(x, pi);
    auto      principal = principal_translations(x);
    Partition theta     = pi;
    while (true) {
      std::map<std::vector<std::uint32_t>, std::size_t> ids;
      std::vector<std::size_t>                          labels(x.size());
      std::vector<std::uint32_t>                        key;
      for (std::size_t v = 0; v < x.size(); ++v) {
        key.clear();
        key.push_back(theta.block_of(v));
        for (auto const& t : principal) {
          key.push_back(theta.block_of(t.table[v]));
        }
        labels[v] = ids.try_emplace(key, ids.size()).first->second;
      }
      Partition next(labels);
      if (next.num_blocks() == theta.num_blocks()) {
        return theta;
      }
      theta = std::move(next);
    }
  }

  Partition join_congruences(FiniteAlgebra const& x, Partition const& a,
                             Partition const& b) {
    check_size(x, a);
    check_size(x, b);
    for (auto const* p : {&a, &b}) {
      if (!is_congruence_direct(x, *p)) {
        raise(ErrorCode::not_a_congruence, to_string(*p));
      }
    }
    std::vector<std::pair<Element, Element>> pairs;
    for (auto const* p : {&a, &b}) {
      auto reps = p->representatives();
      for (std::size_t v = 0; v < x.size(); ++v) {
        pairs.emplace_back(reps[p->block_of(v)], static_cast<Element>(v));
      }
    }
    return congruence_generated(x, pairs);
  }

}  // namespace ualg
