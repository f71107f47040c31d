#include "doctest.h"
#include "generators.hpp"
#include "oracles.hpp"
#include "ualg/congruences.hpp"
#include "ualg/error.hpp"
#include "ualg/fixtures.hpp"

using namespace ualg;

namespace {
  std::vector<std::size_t> labels_of(Partition const& p) {
    return {p.labels().begin(), p.labels().end()};
  }

  std::vector<FiniteAlgebra> small_fixtures() {
    return {cyclic_group(2), cyclic_group(3),   cyclic_group(4),
            cyclic_group(5), klein_four(),      semilattice2(),
            adjoined_infinity_monoid(2), adjoined_infinity_monoid(3),
            adjoined_infinity_monoid(4)};
  }

  // Fixtures plus seeded random algebras over a few signatures.
  std::vector<FiniteAlgebra> sample_algebras(std::size_t max_size) {
    std::vector<FiniteAlgebra> out;
    for (auto& x : small_fixtures()) {
      if (x.size() <= max_size) {
        out.push_back(std::move(x));
      }
    }
    gen::Rng rng(424242);
    for (auto const* text : {"f/1", "m/2", "f/1 g/1", "m/2 c/0", "t/3"}) {
      auto sig = parse_signature(text);
      for (std::size_t k = 1; k <= max_size; ++k) {
        if (k > 3 && sig.max_arity() == 3) {
          continue;
        }
        for (int trial = 0; trial < 3; ++trial) {
          out.push_back(gen::algebra(rng, sig, k));
        }
      }
    }
    return out;
  }
}  // namespace

TEST_CASE("is_congruence_direct") {
  auto z4 = cyclic_group(4);
  CHECK(is_congruence_direct(z4, parse_partition("0,2|1,3")));
  auto bad = is_congruence_direct(z4, parse_partition("0,1|2,3"));
  CHECK(!bad);
  REQUIRE(bad.counterexample);
  // The least violating tuple comes from the unary symbol: 0 ~ 1 but
  // -0 = 0 and -1 = 3 are apart.
  CHECK(z4.signature()[bad.counterexample->symbol].name == "i");
  CHECK(bad.counterexample->xs == std::vector<Element>{0});
  CHECK(bad.counterexample->ys == std::vector<Element>{1});
  for (auto const& x : small_fixtures()) {
    CHECK(is_congruence_direct(x, Partition::discrete(x.size())));
    CHECK(is_congruence_direct(x, Partition::indiscrete(x.size())));
  }
  try {
    is_congruence_direct(z4, Partition::discrete(3));
    FAIL("expected SizeMismatch");
  } catch (Error const& e) {
    CHECK(e.code() == ErrorCode::size_mismatch);
  }

  // Over m alone the least violating pair is (0,0) ~ (1,1): 0 vs 2.
  auto add = FiniteAlgebra(parse_signature("m/2"), 4,
                           {std::vector<Element>(z4.table(0).begin(),
                                                 z4.table(0).end())});
  auto m = is_congruence_direct(add, parse_partition("0,1|2,3"));
  REQUIRE(m.counterexample);
  CHECK(m.counterexample->xs == std::vector<Element>{0, 0});
  CHECK(m.counterexample->ys == std::vector<Element>{1, 1});
}

TEST_CASE("is_congruence_via_translations") {
  auto z4 = cyclic_group(4);
  CHECK(is_congruence_via_translations(z4, parse_partition("0,2|1,3")));
  auto bad = is_congruence_via_translations(z4, parse_partition("0,1|2,3"));
  CHECK(!bad);
  REQUIRE(bad.counterexample);
  auto const& v = *bad.counterexample;
  auto t = principal_table(z4, v.translation);
  CHECK(parse_partition("0,1|2,3").same_block(v.x, v.y));
  CHECK(!parse_partition("0,1|2,3").same_block(t[v.x], t[v.y]));

  auto constants = FiniteAlgebra(parse_signature("a/0 b/0"), 3, {{0}, {2}});
  for (auto const& p : all_partitions(3)) {
    CHECK(is_congruence_via_translations(constants, p));
  }
}

TEST_CASE("direct and translation criteria agree") {
  for (auto const& x : sample_algebras(5)) {
    auto principal = principal_translations(x);
    for (auto const& p : all_partitions(x.size())) {
      bool direct = bool(is_congruence_direct(x, p));
      CHECK(direct == bool(is_congruence_via_translations(x, principal, p)));
      CHECK(direct == oracle::is_congruence(x, labels_of(p)));
    }
  }
}

TEST_CASE("congruence_generated") {
  auto z4 = cyclic_group(4);
  std::vector<std::pair<Element, Element>> p02{{0, 2}}, p01{{0, 1}}, none;
  CHECK(congruence_generated(z4, p02) == parse_partition("0,2|1,3"));
  CHECK(congruence_generated(z4, p01) == Partition::indiscrete(4));
  CHECK(congruence_generated(z4, none) == Partition::discrete(4));

  gen::Rng rng(99);
  for (auto const& x : sample_algebras(6)) {
    auto all = oracle::congruences(x);
    for (int trial = 0; trial < 4; ++trial) {
      std::vector<std::pair<Element, Element>> pairs;
      auto count = gen::below(rng, 3);
      for (std::size_t i = 0; i < count; ++i) {
        pairs.emplace_back(static_cast<Element>(gen::below(rng, x.size())),
                           static_cast<Element>(gen::below(rng, x.size())));
      }
      auto theta = congruence_generated(x, pairs);
      for (auto [a, b] : pairs) {
        CHECK(theta.same_block(a, b));
      }
      CHECK(oracle::is_congruence(x, labels_of(theta)));
      // Least: every congruence containing the pairs contains theta.
      for (auto const& c : all) {
        bool contains = true;
        for (auto [a, b] : pairs) {
          contains = contains && c[a] == c[b];
        }
        if (contains) {
          CHECK(oracle::refines(labels_of(theta), c));
        }
      }
    }
  }
}

TEST_CASE("all_congruences") {
  CHECK(all_congruences(cyclic_group(4)).size() == 3);
  CHECK(all_congruences(cyclic_group(6)).size() == 4);
  CHECK(all_congruences(klein_four()).size() == 5);
  CHECK(all_congruences(semilattice2()).size() == 2);

  for (auto const& x : sample_algebras(6)) {
    auto fast = all_congruences(x);
    auto slow = oracle::congruences(x);
    REQUIRE(fast.size() == slow.size());
    for (std::size_t i = 0; i < fast.size(); ++i) {
      CHECK(labels_of(fast[i]) == slow[i]);
    }
    // Bounds present and closed under meet.
    CHECK(fast.front() == Partition::indiscrete(x.size()));
    CHECK(fast.back() == Partition::discrete(x.size()));
    for (auto const& a : fast) {
      for (auto const& b : fast) {
        CHECK(std::binary_search(fast.begin(), fast.end(), meet(a, b)));
      }
    }
  }

  Limits tight;
  tight.max_partitions = 52;
  CHECK(all_congruences(cyclic_group(5), tight).size() == 2);
  try {
    all_congruences(cyclic_group(6), tight);
    FAIL("expected SizeCapExceeded");
  } catch (Error const& e) {
    CHECK(e.code() == ErrorCode::size_cap_exceeded);
  }
}

TEST_CASE("largest_congruence_below") {
  auto z4 = cyclic_group(4);
  CHECK(largest_congruence_below(z4, parse_partition("0|1,2,3"))
        == Partition::discrete(4));
  CHECK(largest_congruence_below(z4, parse_partition("0,2|1,3"))
        == parse_partition("0,2|1,3"));
  for (auto const& x : small_fixtures()) {
    CHECK(largest_congruence_below(x, Partition::indiscrete(x.size()))
          == Partition::indiscrete(x.size()));
  }

  for (auto const& x : sample_algebras(6)) {
    auto all = all_partitions(x.size());
    gen::Rng rng(x.size() * 31 + x.signature().size());
    for (int trial = 0; trial < 6; ++trial) {
      auto const& pi     = all[gen::below(rng, all.size())];
      auto        theta  = largest_congruence_below(x, pi);
      auto        expect = oracle::max_congruence_below(x, labels_of(pi));
      CHECK(labels_of(theta) == expect);
      CHECK(largest_congruence_below_by_refinement(x, pi) == theta);
      CHECK(theta.refines(pi));
      CHECK(is_congruence_direct(x, theta));
    }
  }
}

TEST_CASE("meet and join of congruences") {
  auto z4 = cyclic_group(4);
  auto a  = parse_partition("0,2|1,3");
  CHECK(meet(a, parse_partition("0,1|2,3")) == Partition::discrete(4));
  CHECK(meet(a, a) == a);
  CHECK(join_congruences(z4, Partition::discrete(4), a) == a);
  try {
    join_congruences(z4, a, parse_partition("0,1|2,3"));
    FAIL("expected NotACongruence");
  } catch (Error const& e) {
    CHECK(e.code() == ErrorCode::not_a_congruence);
  }

  auto v4  = klein_four();
  auto all = all_congruences(v4);
  for (auto const& x : all) {
    for (auto const& y : all) {
      auto j = join_congruences(v4, x, y);
      CHECK(x.refines(j));
      CHECK(y.refines(j));
      for (auto const& z : all) {
        if (x.refines(z) && y.refines(z)) {
          CHECK(j.refines(z));
        }
      }
    }
  }
}
