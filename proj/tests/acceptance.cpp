// Acceptance gate: one PASS/FAIL line per criterion. Every comparison is
// exact; there are no numeric tolerances. Usage: ualg_acceptance PATH_TO_CLI

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "oracles.hpp"
#include "ualg/congruences.hpp"
#include "ualg/error.hpp"
#include "ualg/factorization.hpp"
#include "ualg/fixtures.hpp"
#include "ualg/translations.hpp"

using namespace ualg;

namespace {

  // Seed for the random maps of criterion 1.
  constexpr std::uint64_t map_seed = 20240601;
  // Random maps per (algebra, target size) when the carrier exceeds 4.
  constexpr int random_maps = 200;

  struct Named {
    std::string   name;
    FiniteAlgebra algebra;
  };

  std::vector<Named> fixtures() {
    std::vector<Named> out;
    for (std::size_t n = 2; n <= 6; ++n) {
      out.push_back({"Z" + std::to_string(n), cyclic_group(n)});
    }
    out.push_back({"V4", klein_four()});
    out.push_back({"SL2", semilattice2()});
    out.push_back({"Sinf3", adjoined_infinity_monoid(3)});
    return out;
  }

  std::vector<Named> groups() {
    std::vector<Named> out;
    for (std::size_t n = 2; n <= 6; ++n) {
      out.push_back({"Z" + std::to_string(n), cyclic_group(n)});
    }
    out.push_back({"V4", klein_four()});
    return out;
  }

  oracle::Labels labels_of(Partition const& p) {
    return {p.labels().begin(), p.labels().end()};
  }

  std::string show(std::vector<Element> const& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
      s += (i ? "," : "") + std::to_string(v[i]);
    }
    return s + "]";
  }

  // Every map f: X -> {0..zs-1} to test for this carrier.
  std::vector<std::vector<Element>> maps_for(std::size_t n, std::size_t zs,
                                             std::mt19937_64& rng) {
    if (n <= 4) {
      return oracle::tuples(zs, n);
    }
    std::vector<std::vector<Element>> out;
    std::uniform_int_distribution<Element> pick(0, static_cast<Element>(zs - 1));
    for (int i = 0; i < random_maps; ++i) {
      std::vector<Element> f(n);
      for (auto& v : f) {
        v = pick(rng);
      }
      out.push_back(std::move(f));
    }
    return out;
  }

  // Returns an empty string on success, otherwise the first discrepancy.
  using Check = std::function<std::string()>;

  std::string construction_correct() {
    std::mt19937_64 rng(map_seed);
    for (auto const& [name, x] : fixtures()) {
      for (std::size_t zs = 1; zs <= 3; ++zs) {
        for (auto const& values : maps_for(x.size(), zs, rng)) {
          CarrierMap f(zs, values);
          auto       least  = least_factorization(x, f);
          auto       got    = labels_of(kernel(least.g));
          auto       expect = oracle::max_congruence_below(x, labels_of(kernel(f)));
          if (got != expect) {
            return name + " f=" + show(values) + ": kernel differs from oracle";
          }
        }
      }
    }
    return {};
  }

  std::string leastness() {
    for (auto const& [name, x] : fixtures()) {
      if (x.size() > 4) {
        continue;
      }
      for (std::size_t zs = 1; zs <= 3; ++zs) {
        for (auto const& values : oracle::tuples(zs, x.size())) {
          CarrierMap f(zs, values);
          auto       least    = least_factorization(x, f);
          auto       greatest = greatest_factorization(x, f);
          auto       all      = enumerate_factorizations(x, f);
          auto       where    = name + " f=" + show(values);
          if (!is_factorization(x, f, least) || !is_factorization(x, f, greatest)) {
            return where + ": bound is not a factorization";
          }
          for (auto const& a : all) {
            if (!precedes(least, a)) {
              return where + ": least does not precede an enumerated factorization";
            }
            if (!precedes(a, greatest)) {
              return where + ": greatest does not dominate";
            }
            if (!precedes(a, a)) {
              return where + ": not reflexive";
            }
            for (auto const& b : all) {
              if (!precedes(a, b)) {
                continue;
              }
              for (auto const& c : all) {
                if (precedes(b, c) && !precedes(a, c)) {
                  return where + ": not transitive";
                }
              }
            }
          }
        }
      }
    }
    return {};
  }

  std::vector<Named> small_algebras() {
    auto out = fixtures();
    std::erase_if(out, [](Named const& n) { return n.algebra.size() > 5; });
    out.push_back({"Sinf4", adjoined_infinity_monoid(4)});
    return out;
  }

  std::string criterion_equivalence() {
    for (auto const& [name, x] : small_algebras()) {
      for (auto const& labels : oracle::partitions(x.size())) {
        Partition p(labels);
        bool      direct = is_congruence_direct(x, p).ok;
        if (direct != is_congruence_via_translations(x, p).ok) {
          return name + " " + to_string(p) + ": criteria disagree";
        }
        if (direct != oracle::is_congruence(x, labels)) {
          return name + " " + to_string(p) + ": disagrees with oracle";
        }
      }
    }
    return {};
  }

  std::string malcev_counts() {
    auto one = find_malcev_operations(1, 1000);
    if (!one.complete || one.operations.size() != 1) {
      return "k=1 count " + std::to_string(one.operations.size());
    }
    auto two   = find_malcev_operations(2, 1000);
    auto brute = oracle::malcev_tables(2);
    if (!two.complete || two.operations.size() != 4 || brute.size() != 4) {
      return "k=2 count " + std::to_string(two.operations.size()) + ", oracle "
             + std::to_string(brute.size());
    }
    for (std::size_t i = 0; i < 4; ++i) {
      if (two.operations[i].values != brute[i]) {
        return "k=2 operation " + std::to_string(i) + " differs from oracle";
      }
    }
    for (auto const& [name, g] : groups()) {
      auto mu = group_malcev(g);
      if (!is_malcev_op(mu) || !oracle::is_malcev(g.size(), mu.values)) {
        return "group_malcev(" + name + ") fails the Mal'cev identities";
      }
    }
    return {};
  }

  std::string clone_checks() {
    for (auto const& [name, x, expect] :
         std::vector<std::tuple<std::string, FiniteAlgebra, std::size_t>>{
             {"Z2", cyclic_group(2), 8}, {"SL2", semilattice2(), 7}}) {
      auto fast = clone_ternary_terms(x);
      auto slow = oracle::ternary_clone(x);
      if (fast.size() != expect || slow.size() != expect) {
        return name + ": " + std::to_string(fast.size()) + " term operations, oracle "
               + std::to_string(slow.size());
      }
      std::size_t i = 0;
      for (auto const& f : slow) {
        if (fast[i++].values != f) {
          return name + ": term operations differ from oracle";
        }
      }
    }
    auto all_groups = groups();
    all_groups.push_back({"Z7", cyclic_group(7)});
    all_groups.push_back({"Z8", cyclic_group(8)});
    for (auto const& [name, g] : all_groups) {
      if (!has_malcev_term(g)) {
        return name + " has no Mal'cev term";
      }
    }
    if (has_malcev_term(semilattice2())) {
      return "SL2 has a Mal'cev term";
    }
    return {};
  }

  std::string lattice_counts() {
    for (auto const& [name, x, expect] :
         std::vector<std::tuple<std::string, FiniteAlgebra, std::size_t>>{
             {"Z4", cyclic_group(4), 3},
             {"Z6", cyclic_group(6), 4},
             {"V4", klein_four(), 5},
             {"SL2", semilattice2(), 2}}) {
      auto got  = all_congruences(x);
      auto slow = oracle::congruences(x);
      if (got.size() != expect || slow.size() != expect) {
        return name + ": " + std::to_string(got.size()) + " congruences, oracle "
               + std::to_string(slow.size());
      }
    }
    return {};
  }

  std::string correspondences() {
    for (auto const& [name, x] : small_algebras()) {
      for (auto const& labels : oracle::partitions(x.size())) {
        Partition p(labels);
        bool      congruence = oracle::is_congruence(x, labels);
        try {
          auto q = quotient(x, p);
          if (!congruence) {
            return name + " " + to_string(p) + ": quotient accepted a non-congruence";
          }
          if (!oracle::is_homomorphism(q.map.values(), x, q.algebra)) {
            return name + " " + to_string(p) + ": quotient map is not a homomorphism";
          }
        } catch (Error const& e) {
          if (e.code() != ErrorCode::not_a_congruence || congruence) {
            return name + " " + to_string(p) + ": " + e.what();
          }
        }
      }
      // Every endomorphism: its kernel is a congruence and the induced
      // bijection X/ker -> image is a homomorphism.
      if (x.size() > 4) {
        continue;
      }
      for (auto const& values : oracle::tuples(x.size(), x.size())) {
        if (!oracle::is_homomorphism(values, x, x)) {
          continue;
        }
        CarrierMap phi(x.size(), values);
        auto       ker = kernel(phi);
        if (!oracle::is_congruence(x, labels_of(ker))) {
          return name + " " + show(values) + ": kernel is not a congruence";
        }
        auto iso = first_isomorphism(phi, x, x);
        if (!iso.bijection.is_injective() || !iso.bijection.is_surjective()
            || !oracle::is_homomorphism(iso.bijection.values(), iso.quotient.algebra,
                                        iso.image)) {
          return name + " " + show(values) + ": induced map is not an isomorphism";
        }
      }
    }
    return {};
  }

  std::string counterexample() {
    auto axioms = group_axioms();
    for (auto const& [name, g] : groups()) {
      if (name == "V4") {
        continue;
      }
      if (!in_equational_class(g, axioms)) {
        return name + " fails the group axioms";
      }
    }
    auto sig  = group_signature();
    auto sinf = adjoined_infinity_monoid(3);
    auto r    = holds(sinf, parse_term("m(v1,i(v1))", sig), parse_term("e", sig));
    if (r || r.counterexample != VarAssignment{{1, 3}}) {
      return "x·x⁻¹ ≈ e on Sinf3 should fail at v1 = ∞";
    }
    auto v = in_equational_class(sinf, axioms);
    if (v || to_string(axioms[*v.failing].lhs) != "m(v1,i(v1))") {
      return "Sinf3 should fail the group axioms at x·x⁻¹ ≈ e";
    }
    auto mal = parse_signature("mu/3");
    auto m   = parse_signature("m/2");
    if (classify_identity(parse_term("mu(v2,v2,v1)", mal), parse_term("v1", mal))
            != PreservationClass::linear_quadratic
        || classify_identity(parse_term("mu(v1,v2,v2)", mal), parse_term("v1", mal))
               != PreservationClass::linear_quadratic) {
      return "Mal'cev identities not LinearQuadratic";
    }
    if (classify_identity(parse_term("m(v1,m(v2,v3))", m),
                          parse_term("m(m(v1,v2),v3)", m))
            != PreservationClass::linear
        || classify_identity(parse_term("m(v1,v2)", m), parse_term("m(v2,v1)", m))
               != PreservationClass::linear) {
      return "associativity or commutativity not Linear";
    }
    return {};
  }

  std::string semigroups() {
    auto s2  = translation_semigroup(cyclic_group(2));
    auto s3  = translation_semigroup(cyclic_group(3));
    auto s13 = principal_translations(cyclic_group(3));
    if (s2.size() != 2 || s3.size() != 6 || s13.size() != 4) {
      return "sizes " + std::to_string(s2.size()) + ", " + std::to_string(s3.size())
             + ", " + std::to_string(s13.size());
    }
    for (auto const& [name, x] : fixtures()) {
      auto s = translation_semigroup(x);
      std::set<std::vector<Element>> tables;
      for (auto const& t : s) {
        if (evaluate_word(x, t.word) != t.table) {
          return name + ": word does not reproduce its table";
        }
        tables.insert(t.table);
      }
      if (tables != oracle::translation_semigroup(x)) {
        return name + ": semigroup differs from oracle";
      }
      std::set<std::vector<Element>> principal;
      for (auto const& t : principal_translations(x)) {
        principal.insert(t.table);
      }
      if (principal != oracle::principal_translations(x)) {
        return name + ": principal translations differ from oracle";
      }
    }
    return {};
  }

  struct Run {
    std::string out;
    int         status;
  };

  Run run(std::string const& command) {
    Run   result{{}, -1};
    FILE* pipe = popen((command + " 2>/dev/null").c_str(), "r");
    if (!pipe) {
      return result;
    }
    std::array<char, 4096> buffer;
    std::size_t            n;
    while ((n = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
      result.out.append(buffer.data(), n);
    }
    int raw       = pclose(pipe);
    result.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return result;
  }

  std::string determinism(std::string const& cli) {
    if (cli.empty()) {
      return "no CLI path given";
    }
    std::vector<std::string> commands{
        "check-identity Z3 'm(v1,v2)' 'm(v2,v1)'",
        "check-identity Sinf3 'm(v1,i(v1))' e",
        "check-identity Z3 'm(v1)' e",
        "variety-check Sinf3 --group-axioms",
        "eval Z4 'i(m(v1,v2))' v1=1 v2=2",
        "hom-check Z4 Z2 '[0,1,0,1]'",
        "hom-check Z4 Z4 '[1,2,3,0]'",
        "subalgebra Z6 2",
        "product Z2 Z3",
        "quotient Z4 '0,2|1,3'",
        "quotient Z4 '0,1|2,3'",
        "congruences Z6",
        "congruences V4",
        "gen-congruence Z4 0,2",
        "translations Z5",
        "translations Sinf3",
        "malcev 2",
        "malcev 3 --cap 50",
        "malcev Z3",
        "malcev SL2",
        "clone Z3 --list",
        "clone SL2",
        "factorize Z4 '[0,1,0,1]' --oracle",
        "factorize Z6 '[1,0,0,0,0,0]' --oracle",
        "factorize V4 '[0,0,0,0]'",
        "fixtures",
        "--max-semigroup 3 translations Z5",
    };
    for (auto const& c : commands) {
      auto base  = "'" + cli + "' --json ";
      auto first = run(base + c);
      auto again = run(base + c);
      auto one   = run(base + "--threads 1 " + c);
      auto four  = run(base + "--threads 4 " + c);
      if (first.out.empty() || first.out.find("\"schema\": 1") == std::string::npos) {
        return c + ": no versioned JSON output";
      }
      for (auto const* other : {&again, &one, &four}) {
        if (other->out != first.out || other->status != first.status) {
          return c + ": output differs between runs";
        }
      }
    }
    return {};
  }

}  // namespace

int main(int argc, char** argv) {
  std::string cli = argc > 1 ? argv[1] : "";

  std::vector<std::pair<std::string, Check>> criteria{
      {"least factorization kernel equals largest congruence below ker f",
       construction_correct},
      {"least and greatest bound the factorization preorder", leastness},
      {"direct and translation congruence criteria agree", criterion_equivalence},
      {"Mal'cev operation counts and group operations", malcev_counts},
      {"ternary clone counts and Mal'cev terms", clone_checks},
      {"congruence lattice sizes", lattice_counts},
      {"quotients, kernels and induced isomorphisms", correspondences},
      {"group axioms and the adjoined-infinity counterexample", counterexample},
      {"translation semigroup sizes and words", semigroups},
      {"CLI JSON output is deterministic", [&] { return determinism(cli); }},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    std::string detail;
    try {
      detail = criteria[i].second();
    } catch (std::exception const& e) {
      detail = std::string("exception: ") + e.what();
    }
    if (detail.empty()) {
      std::cout << "PASS " << i + 1 << "  " << criteria[i].first << "\n";
    } else {
      ++failures;
      std::cout << "FAIL " << i + 1 << "  " << criteria[i].first << ": " << detail
                << "\n";
    }
  }
  return failures == 0 ? 0 : 1;
}
