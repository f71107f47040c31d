#include "ualg/algebra.hpp"

#include <algorithm>
#include <limits>

#include "ualg/congruences.hpp"
#include "ualg/error.hpp"
#include "ualg/fixtures.hpp"

namespace ualg {

  std::optional<std::size_t> checked_power(std::size_t k, std::size_t n,
                                           std::size_t limit) {
    std::size_t result = 1;
    for (std::size_t i = 0; i < n; ++i) {
      if (k != 0 && result > limit / k) {
        return std::nullopt;
      }
      result *= k;
    }
    if (result > limit) {
      return std::nullopt;
    }
    return result;
  }

  void decode_tuple(std::size_t index, std::size_t k, std::span<Element> out) {
    for (std::size_t j = out.size(); j-- > 0;) {
      out[j] = static_cast<Element>(index % k);
      index /= k;
    }
  }

  FiniteAlgebra::FiniteAlgebra(Signature                         sig,
                               std::size_t                       size,
                               std::vector<std::vector<Element>> tables)
      : _sig(std::move(sig)), _size(size), _tables(std::move(tables)) {
    if (_size == 0) {
      raise(ErrorCode::invalid_input, "an algebra needs a nonempty carrier");
    }
    if (_size > std::numeric_limits<Element>::max()) {
      raise(ErrorCode::size_cap_exceeded, "carrier too large");
    }
    if (_tables.size() != _sig.size()) {
      raise(ErrorCode::signature_mismatch,
            "expected " + std::to_string(_sig.size()) + " tables, got "
                + std::to_string(_tables.size()));
    }
    for (std::size_t s = 0; s < _sig.size(); ++s) {
      auto entries = checked_power(_size, _sig[s].arity,
                                   std::numeric_limits<std::size_t>::max());
      if (!entries || _tables[s].size() != *entries) {
        raise(ErrorCode::invalid_input,
              "table for " + _sig[s].name + " has "
                  + std::to_string(_tables[s].size()) + " entries");
      }
      for (Element v : _tables[s]) {
        if (v >= _size) {
          raise(ErrorCode::out_of_carrier,
                "table for " + _sig[s].name + " contains " + std::to_string(v));
        }
      }
    }
  }

  Element FiniteAlgebra::apply(std::string_view         symbol,
                               std::span<Element const> args) const {
    std::size_t s = _sig.index_of(symbol);
    if (args.size() != _sig[s].arity) {
      raise(ErrorCode::arity_mismatch,
            std::string(symbol) + " expects " + std::to_string(_sig[s].arity)
                + " argument(s), found " + std::to_string(args.size()));
    }
    for (Element a : args) {
      if (a >= _size) {
        raise(ErrorCode::out_of_carrier, std::to_string(a));
      }
    }
    return op(s, args);
  }

  ////////////////////////////////////////////////////////////////////////
  // CarrierMap
  ////////////////////////////////////////////////////////////////////////

  CarrierMap::CarrierMap(std::size_t target_size, std::vector<Element> values)
      : _target(target_size), _values(std::move(values)) {
    for (Element v : _values) {
      if (v >= _target) {
        raise(ErrorCode::out_of_carrier,
              "map value " + std::to_string(v) + " outside target of size "
                  + std::to_string(_target));
      }
    }
  }

  CarrierMap CarrierMap::identity(std::size_t n) {
    std::vector<Element> values(n);
    for (std::size_t i = 0; i < n; ++i) {
      values[i] = static_cast<Element>(i);
    }
    return CarrierMap(n, std::move(values));
  }

  bool CarrierMap::is_surjective() const {
    std::vector<char> hit(_target, 0);
    for (Element v : _values) {
      hit[v] = 1;
    }
    return std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
  }

  bool CarrierMap::is_injective() const {
    std::vector<char> hit(_target, 0);
    for (Element v : _values) {
      if (hit[v]) {
        return false;
      }
      hit[v] = 1;
    }
    return true;
  }

  CarrierMap CarrierMap::then(CarrierMap const& next) const {
    if (next.source_size() != _target) {
      raise(ErrorCode::size_mismatch, "maps do not compose");
    }
    std::vector<Element> values(_values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
      values[i] = next(_values[i]);
    }
    return CarrierMap(next.target_size(), std::move(values));
  }

  ////////////////////////////////////////////////////////////////////////
  // Homomorphisms
  ////////////////////////////////////////////////////////////////////////

  HomCheck is_homomorphism(CarrierMap const&    phi,
                           FiniteAlgebra const& x,
                           FiniteAlgebra const& y) {
    if (x.signature() != y.signature()) {
      raise(ErrorCode::signature_mismatch,
            "homomorphism between algebras of different signatures");
    }
    if (phi.source_size() != x.size() || phi.target_size() != y.size()) {
      raise(ErrorCode::size_mismatch, "map does not fit the algebras");
    }
    std::vector<Element> args, image;
    for (std::size_t s : x.signature().by_arity()) {
      std::size_t n = x.arity(s);
      args.resize(n);
      image.resize(n);
      auto table = x.table(s);
      for (std::size_t index = 0; index < table.size(); ++index) {
        decode_tuple(index, x.size(), args);
        for (std::size_t j = 0; j < n; ++j) {
          image[j] = phi(args[j]);
        }
        if (phi(table[index]) != y.op(s, image)) {
          return {false, OpTuple{s, args}};
        }
      }
    }
    return {true, std::nullopt};
  }

  ////////////////////////////////////////////////////////////////////////
  // Subalgebras
  ////////////////////////////////////////////////////////////////////////

  FiniteAlgebra restrict_to(FiniteAlgebra const&     x,
                            std::span<Element const> closed_subset) {
    std::vector<Element> elements(closed_subset.begin(), closed_subset.end());
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()),
                   elements.end());
    constexpr auto       none = std::numeric_limits<Element>::max();
    std::vector<Element> index(x.size(), none);
    for (std::size_t i = 0; i < elements.size(); ++i) {
      if (elements[i] >= x.size()) {
        raise(ErrorCode::out_of_carrier, std::to_string(elements[i]));
      }
      index[elements[i]] = static_cast<Element>(i);
    }
    std::size_t                       k = elements.size();
    std::vector<std::vector<Element>> tables;
    std::vector<Element>              local, args;
    for (std::size_t s = 0; s < x.signature().size(); ++s) {
      std::size_t n = x.arity(s);
      local.resize(n);
      args.resize(n);
      auto entries
          = checked_power(k, n, std::numeric_limits<std::size_t>::max());
      std::vector<Element> table(*entries);
      for (std::size_t t = 0; t < table.size(); ++t) {
        decode_tuple(t, k, local);
        for (std::size_t j = 0; j < n; ++j) {
          args[j] = elements[local[j]];
        }
        Element v = index[x.op(s, args)];
        if (v == none) {
          raise(ErrorCode::invalid_input, "subset is not closed under "
                                              + x.signature()[s].name);
        }
        table[t] = v;
      }
      tables.push_back(std::move(table));
    }
    return FiniteAlgebra(x.signature(), k, std::move(tables));
  }

  Subalgebra subalgebra_generated(FiniteAlgebra const&     x,
                                  std::span<Element const> seed) {
    std::vector<char>    member(x.size(), 0);
    std::vector<Element> elements;
    auto                 add = [&](Element v) {
      if (!member[v]) {
        member[v] = 1;
        elements.push_back(v);
        return true;
      }
      return false;
    };
    for (Element v : seed) {
      if (v >= x.size()) {
        raise(ErrorCode::out_of_carrier, std::to_string(v));
      }
      add(v);
    }
    for (std::size_t s = 0; s < x.signature().size(); ++s) {
      if (x.arity(s) == 0) {
        add(x.table(s)[0]);
      }
    }
    std::vector<Element> args, local;
    bool                 changed = true;
    while (changed) {
      changed       = false;
      std::size_t k = elements.size();
      for (std::size_t s = 0; s < x.signature().size(); ++s) {
        std::size_t n = x.arity(s);
        if (n == 0 || k == 0) {
          continue;
        }
        args.resize(n);
        local.resize(n);
        auto count = checked_power(k, n, std::numeric_limits<std::size_t>::max());
        for (std::size_t t = 0; t < *count; ++t) {
          decode_tuple(t, k, local);
          for (std::size_t j = 0; j < n; ++j) {
            args[j] = elements[local[j]];
          }
          changed = add(x.op(s, args)) || changed;
        }
      }
    }
    std::sort(elements.begin(), elements.end());
    Subalgebra result{elements, std::nullopt, CarrierMap()};
    if (!elements.empty()) {
      result.algebra   = restrict_to(x, elements);
      result.embedding = CarrierMap(x.size(), elements);
    }
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // Products
  ////////////////////////////////////////////////////////////////////////

  Product product(Signature const&               sig,
                  std::span<FiniteAlgebra const> factors,
                  Limits const&                  limits) {
    std::size_t size = 1;
    for (auto const& f : factors) {
      if (f.signature() != sig) {
        raise(ErrorCode::signature_mismatch, "product factors must share a "
                                             "signature");
      }
      if (size > limits.max_product_size / f.size()) {
        raise(ErrorCode::size_cap_exceeded,
              "product carrier exceeds " + std::to_string(limits.max_product_size));
      }
      size *= f.size();
    }
    std::size_t r = factors.size();
    // stride[j]: weight of coordinate j, first coordinate most significant.
    std::vector<std::size_t> stride(r, 1);
    for (std::size_t j = r; j-- > 1;) {
      stride[j - 1] = stride[j] * factors[j].size();
    }
    auto coordinate = [&](std::size_t e, std::size_t j) {
      return static_cast<Element>((e / stride[j]) % factors[j].size());
    };

    std::vector<std::vector<Element>> tables;
    std::vector<Element>              args, coords;
    for (std::size_t s = 0; s < sig.size(); ++s) {
      std::size_t n       = sig[s].arity;
      auto        entries = checked_power(size, n, limits.max_table_entries);
      if (!entries) {
        raise(ErrorCode::size_cap_exceeded,
              "table for " + sig[s].name + " in the product is too large");
      }
      std::vector<Element> table(*entries);
      args.resize(n);
      coords.resize(n);
      for (std::size_t t = 0; t < table.size(); ++t) {
        decode_tuple(t, size, args);
        std::size_t value = 0;
        for (std::size_t j = 0; j < r; ++j) {
          for (std::size_t a = 0; a < n; ++a) {
            coords[a] = coordinate(args[a], j);
          }
          value += factors[j].op(s, coords) * stride[j];
        }
        table[t] = static_cast<Element>(value);
      }
      tables.push_back(std::move(table));
    }

    Product result{FiniteAlgebra(sig, size, std::move(tables)), {}};
    for (std::size_t j = 0; j < r; ++j) {
      std::vector<Element> values(size);
      for (std::size_t e = 0; e < size; ++e) {
        values[e] = coordinate(e, j);
      }
      result.projections.emplace_back(factors[j].size(), std::move(values));
    }
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // Quotients and kernels
  ////////////////////////////////////////////////////////////////////////

  Quotient quotient(FiniteAlgebra const& x, Partition const& pi) {
    if (pi.size() != x.size()) {
      raise(ErrorCode::size_mismatch, "partition does not fit the algebra");
    }
    auto check = is_congruence_via_translations(x, pi);
    if (!check) {
      auto const& v = *check.counterexample;
      raise(ErrorCode::not_a_congruence,
            to_string(pi) + ": " + std::to_string(v.x) + " ~ "
                + std::to_string(v.y) + " but translation "
                + to_string(v.translation, x.signature())
                + " separates them");
    }
    auto                              reps = pi.representatives();
    std::size_t                       k    = pi.num_blocks();
    std::vector<std::vector<Element>> tables;
    std::vector<Element>              blocks, args;
    for (std::size_t s = 0; s < x.signature().size(); ++s) {
      std::size_t n = x.arity(s);
      blocks.resize(n);
      args.resize(n);
      auto entries
          = checked_power(k, n, std::numeric_limits<std::size_t>::max());
      std::vector<Element> table(*entries);
      for (std::size_t t = 0; t < table.size(); ++t) {
        decode_tuple(t, k, blocks);
        for (std::size_t j = 0; j < n; ++j) {
          args[j] = reps[blocks[j]];
        }
        table[t] = pi.block_of(x.op(s, args));
      }
      tables.push_back(std::move(table));
    }
    std::vector<Element> labels(pi.labels().begin(), pi.labels().end());
    return {FiniteAlgebra(x.signature(), k, std::move(tables)),
            CarrierMap(k, std::move(labels))};
  }

  Partition kernel(CarrierMap const& phi) {
    std::vector<std::size_t> labels(phi.values().begin(), phi.values().end());
    return Partition(labels);
  }

  FirstIsomorphism first_isomorphism(CarrierMap const&    phi,
                                     FiniteAlgebra const& x,
                                     FiniteAlgebra const& y) {
    if (!is_homomorphism(phi, x, y)) {
      raise(ErrorCode::invalid_input, "map is not a homomorphism");
    }
    Partition            ker = kernel(phi);
    Quotient             q   = quotient(x, ker);
    std::vector<Element> image(phi.values());
    std::sort(image.begin(), image.end());
    image.erase(std::unique(image.begin(), image.end()), image.end());
    FiniteAlgebra        image_algebra = restrict_to(y, image);
    std::vector<Element> bijection;
    for (Element rep : ker.representatives()) {
      auto it = std::lower_bound(image.begin(), image.end(), phi(rep));
      bijection.push_back(static_cast<Element>(it - image.begin()));
    }
    CarrierMap embedding(y.size(), image);
    return {std::move(q), std::move(image_algebra), std::move(embedding),
            CarrierMap(image.size(), std::move(bijection))};
  }

  ////////////////////////////////////////////////////////////////////////
  // Identities
  ////////////////////////////////////////////////////////////////////////

  HoldsResult holds(FiniteAlgebra const& x, Term const& p, Term const& q) {
    check_term(p, x.signature());
    check_term(q, x.signature());
    std::set<std::size_t> var_set = p.vars();
    var_set.merge(q.vars());
    std::vector<std::size_t> vars(var_set.begin(), var_set.end());
    CompiledTerm             lhs(p, x, vars), rhs(q, x, vars);

    std::vector<Element> values(vars.size(), 0);
    while (true) {
      if (lhs(values) != rhs(values)) {
        VarAssignment a;
        for (std::size_t j = 0; j < vars.size(); ++j) {
          a[vars[j]] = values[j];
        }
        return {false, std::move(a)};
      }
      // Odometer, last variable fastest.
      std::size_t j = vars.size();
      while (j > 0 && values[j - 1] + 1 == x.size()) {
        values[--j] = 0;
      }
      if (j == 0) {
        break;
      }
      ++values[j - 1];
    }
    return {true, std::nullopt};
  }

  VarietyResult in_equational_class(FiniteAlgebra const&      x,
                                    std::span<Identity const> identities) {
    for (std::size_t i = 0; i < identities.size(); ++i) {
      auto r = holds(x, identities[i].lhs, identities[i].rhs);
      if (!r) {
        return {false, i, std::move(r.counterexample)};
      }
    }
    return {true, std::nullopt, std::nullopt};
  }

  std::vector<Identity> group_axioms() {
    Signature sig = group_signature();
    auto      id  = [&sig](char const* p, char const* q) {
      return Identity{parse_term(p, sig), parse_term(q, sig)};
    };
    return {id("m(v1,e)", "v1"),
            id("m(e,v1)", "v1"),
            id("m(v1,i(v1))", "e"),
            id("m(i(v1),v1)", "e"),
            id("m(v1,m(v2,v3))", "m(m(v1,v2),v3)")};
  }

}  // namespace ualg
