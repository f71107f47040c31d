#include <functional>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "ualg/algebra_json.hpp"
#include "ualg/congruences.hpp"
#include "ualg/error.hpp"
#include "ualg/factorization.hpp"
#include "ualg/kernels.hpp"
#include "ualg/translations.hpp"
#include "workspace.hpp"

using nlohmann::json;
using namespace ualg;
using namespace ualg::cli;

namespace {

  constexpr int exit_ok       = 0;
  constexpr int exit_fail     = 1;
  constexpr int exit_usage    = 2;
  constexpr int exit_capacity = 3;

  struct Report {
    json        data = json::object();
    std::string text;
    int         status = exit_ok;
  };

  int status_of(ErrorCode code) {
    switch (code) {
      case ErrorCode::size_cap_exceeded:
        return exit_capacity;
      case ErrorCode::not_a_congruence:
      case ErrorCode::not_a_group:
        return exit_fail;
      default:
        return exit_usage;
    }
  }

  std::string join(std::vector<std::string> const& parts, std::string const& sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      out += (i == 0 ? "" : sep) + parts[i];
    }
    return out;
  }

  std::string list_of(std::vector<Element> const& values) {
    std::vector<std::string> parts;
    for (auto v : values) {
      parts.push_back(std::to_string(v));
    }
    return "[" + join(parts, ",") + "]";
  }

  std::string labelled(NamedAlgebra const& x, std::vector<Element> const& values) {
    std::vector<std::string> parts;
    for (auto v : values) {
      parts.push_back(x.label(v));
    }
    return "(" + join(parts, ",") + ")";
  }

  json assignment_json(VarAssignment const& a) {
    json out = json::object();
    for (auto [var, value] : a) {
      out["v" + std::to_string(var)] = value;
    }
    return out;
  }

  std::string assignment_text(NamedAlgebra const& x, VarAssignment const& a) {
    std::vector<std::string> parts;
    for (auto [var, value] : a) {
      parts.push_back("v" + std::to_string(var) + "=" + x.label(value));
    }
    return join(parts, " ");
  }

  // "p = q" or "p ≈ q".
  Identity parse_identity(std::string const& text, Signature const& sig) {
    for (std::string sep : {"≈", "="}) {
      if (auto at = text.find(sep); at != std::string::npos) {
        return {parse_term(text.substr(0, at), sig),
                parse_term(text.substr(at + sep.size()), sig)};
      }
    }
    raise(ErrorCode::syntax, "identity '" + text + "' needs '=' or '≈'");
  }

  std::string algebra_line(FiniteAlgebra const& x) {
    return to_json(x).dump();
  }

  struct Args {
    std::vector<std::string> names;
    std::string              algebra, lhs, rhs, term, map, partition, target;
    std::vector<std::string> items;
    bool                     group_axioms = false;
    bool                     list         = false;
    bool                     oracle       = false;
    std::size_t              cap          = 0;
  };

  Report check_identity(Workspace& ws, Args const& a) {
    auto const& x = ws.get(a.algebra);
    auto const& sig = x.algebra.signature();
    Term p = parse_term(a.lhs, sig), q = parse_term(a.rhs, sig);
    auto r   = holds(x.algebra, p, q);
    auto cls = classify_identity(p, q);

    Report out;
    out.data["algebra"]  = x.name;
    out.data["identity"] = to_string(p) + " ≈ " + to_string(q);
    out.data["holds"]    = r.ok;
    out.data["class"]    = to_string(cls);
    out.text = std::string(r ? "PASS" : "FAIL") + "  " + to_string(p) + " ≈ "
               + to_string(q) + " in " + x.name + "\n";
    if (!r) {
      out.data["counterexample"] = assignment_json(*r.counterexample);
      out.text += "counterexample: " + assignment_text(x, *r.counterexample) + "\n";
      out.status = exit_fail;
    }
    out.text += std::string("class: ") + to_string(cls) + "\n";
    return out;
  }

  Report variety_check(Workspace& ws, Args const& a) {
    auto const&           x = ws.get(a.algebra);
    std::vector<Identity> identities;
    if (a.group_axioms) {
      identities = group_axioms();
    }
    for (auto const& text : a.items) {
      identities.push_back(parse_identity(text, x.algebra.signature()));
    }
    auto r = in_equational_class(x.algebra, identities);

    Report out;
    out.data["algebra"]    = x.name;
    out.data["identities"] = identities.size();
    out.data["holds"]      = r.ok;
    if (r) {
      out.text = "PASS  " + x.name + " satisfies all "
                 + std::to_string(identities.size()) + " identities\n";
      return out;
    }
    auto const& bad = identities[*r.failing];
    auto        shown = to_string(bad.lhs) + " ≈ " + to_string(bad.rhs);
    out.data["failing"]        = *r.failing;
    out.data["identity"]       = shown;
    out.data["counterexample"] = assignment_json(*r.counterexample);
    out.text = "FAIL  " + shown + " in " + x.name + "\ncounterexample: "
               + assignment_text(x, *r.counterexample) + "\n";
    out.status = exit_fail;
    return out;
  }

  Report eval(Workspace& ws, Args const& a) {
    auto const&   x = ws.get(a.algebra);
    Term          t = parse_term(a.term, x.algebra.signature());
    VarAssignment assignment;
    for (auto const& item : a.items) {
      auto eq = item.find('=');
      if (eq == std::string::npos || item.size() < 2 || item[0] != 'v') {
        raise(ErrorCode::syntax, "assignment '" + item + "' should look like v1=2");
      }
      Term var = parse_term(item.substr(0, eq), x.algebra.signature());
      if (var.kind() != Term::Kind::variable) {
        raise(ErrorCode::syntax, "assignment '" + item + "' should look like v1=2");
      }
      assignment[var.var_index()] = parse_element(x, item.substr(eq + 1));
    }
    Element v = evaluate(t, x.algebra, assignment);

    Report out;
    out.data["algebra"] = x.name;
    out.data["term"]    = to_string(t);
    out.data["value"]   = v;
    out.text            = x.label(v) + "\n";
    return out;
  }

  Report hom_check(Workspace& ws, Args const& a) {
    auto const& x = ws.get(a.algebra);
    auto const& y = ws.get(a.target);
    CarrierMap  phi(y.algebra.size(), parse_values(a.map));
    auto        r = is_homomorphism(phi, x.algebra, y.algebra);

    Report out;
    out.data["source"]       = x.name;
    out.data["target"]       = y.name;
    out.data["homomorphism"] = r.ok;
    if (r) {
      out.text = "PASS  " + list_of(phi.values()) + " is a homomorphism " + x.name
                 + " → " + y.name + "\n";
      return out;
    }
    auto const& c    = *r.counterexample;
    auto const& name = x.algebra.signature()[c.symbol].name;
    out.data["counterexample"] = {{"symbol", name}, {"args", c.args}};
    out.text = "FAIL  " + list_of(phi.values()) + " does not commute with " + name
               + " at " + labelled(x, c.args) + "\n";
    out.status = exit_fail;
    return out;
  }

  Report subalgebra(Workspace& ws, Args const& a) {
    auto const&          x = ws.get(a.algebra);
    std::vector<Element> seed;
    for (auto const& item : a.items) {
      seed.push_back(parse_element(x, item));
    }
    auto sub = subalgebra_generated(x.algebra, seed);

    Report out;
    out.data["algebra"]  = x.name;
    out.data["elements"] = sub.elements;
    out.data["size"]     = sub.elements.size();
    out.text = "generated: " + labelled(x, sub.elements) + "\n";
    if (sub.algebra) {
      out.data["subalgebra"] = to_json(*sub.algebra);
      out.text += algebra_line(*sub.algebra) + "\n";
    }
    return out;
  }

  Report product_cmd(Workspace& ws, Args const& a) {
    std::vector<FiniteAlgebra> factors;
    for (auto const& name : a.names) {
      factors.push_back(ws.get(name).algebra);
    }
    auto p = product(factors.front().signature(), factors, ws.limits);

    Report out;
    out.data["factors"] = a.names;
    out.data["size"]    = p.algebra.size();
    out.data["product"] = to_json(p.algebra);
    out.text = join(a.names, " × ") + ": " + std::to_string(p.algebra.size())
               + " elements\n" + algebra_line(p.algebra) + "\n";
    return out;
  }

  Report quotient_cmd(Workspace& ws, Args const& a) {
    auto const& x  = ws.get(a.algebra);
    auto        pi = parse_partition(a.partition, x.algebra.size());
    auto        q  = quotient(x.algebra, pi);

    Report out;
    out.data["algebra"]   = x.name;
    out.data["partition"] = to_string(pi);
    out.data["map"]       = q.map.values();
    out.data["quotient"]  = to_json(q.algebra);
    out.text = x.name + "/" + to_string(pi) + ": "
               + std::to_string(q.algebra.size()) + " elements, map "
               + list_of(q.map.values()) + "\n" + algebra_line(q.algebra) + "\n";
    return out;
  }

  Report congruences_cmd(Workspace& ws, Args const& a) {
    auto const& x   = ws.get(a.algebra);
    auto        all = all_congruences(x.algebra, ws.limits);

    Report out;
    std::vector<std::string> shown;
    for (auto const& p : all) {
      shown.push_back(to_string(p));
    }
    out.data["algebra"]     = x.name;
    out.data["count"]       = all.size();
    out.data["congruences"] = shown;
    out.text = std::to_string(all.size()) + " congruences of " + x.name + "\n"
               + join(shown, "\n") + "\n";
    return out;
  }

  Report gen_congruence(Workspace& ws, Args const& a) {
    auto const&                              x = ws.get(a.algebra);
    std::vector<std::pair<Element, Element>> pairs;
    for (auto const& item : a.items) {
      auto comma = item.find(',');
      if (comma == std::string::npos) {
        raise(ErrorCode::syntax, "pair '" + item + "' should look like 0,2");
      }
      pairs.emplace_back(parse_element(x, item.substr(0, comma)),
                         parse_element(x, item.substr(comma + 1)));
    }
    auto theta = congruence_generated(x.algebra, pairs);

    Report out;
    out.data["algebra"]    = x.name;
    out.data["congruence"] = to_string(theta);
    out.data["blocks"]     = theta.num_blocks();
    out.text               = to_string(theta) + "\n";
    return out;
  }

  Report translations_cmd(Workspace& ws, Args const& a) {
    auto const& x   = ws.get(a.algebra);
    auto const& sig = x.algebra.signature();
    auto        s1  = principal_translations(x.algebra);
    auto        s   = translation_semigroup(x.algebra, ws.limits);

    Report out;
    json   members = json::array();
    out.text = "|S1| = " + std::to_string(s1.size()) + "\n|S| = "
               + std::to_string(s.size()) + "\n";
    for (auto const& t : s) {
      members.push_back({{"word", to_string(t.word, sig)}, {"table", t.table}});
      out.text += dump_line(t, sig) + "\n";
    }
    out.data["algebra"]     = x.name;
    out.data["principal"]   = s1.size();
    out.data["semigroup"]   = s.size();
    out.data["translations"] = members;
    return out;
  }

  bool all_digits(std::string const& s) {
    return !s.empty() && s.find_first_not_of("0123456789") == std::string::npos;
  }

  Report malcev_cmd(Workspace& ws, Args const& a) {
    Report out;
    if (all_digits(a.target)) {
      auto k   = std::stoul(a.target);
      auto cap = a.cap != 0 ? a.cap : ws.limits.max_malcev;
      auto r   = find_malcev_operations(k, cap);
      json ops = json::array();
      out.text = std::to_string(r.operations.size()) + " Mal'cev operations on a "
                 + std::to_string(k) + "-element set"
                 + (r.complete ? "" : " (incomplete, cap reached)") + "\n";
      for (auto const& op : r.operations) {
        ops.push_back(op.values);
        out.text += list_of(op.values) + "\n";
      }
      out.data["size"]       = k;
      out.data["count"]      = r.operations.size();
      out.data["complete"]   = r.complete;
      out.data["operations"] = ops;
      return out;
    }

    auto const& x       = ws.get(a.target);
    auto        witness = malcev_term_witness(x.algebra, ws.limits);
    out.data["algebra"]         = x.name;
    out.data["has_malcev_term"] = witness.has_value();
    out.text = x.name + (witness ? " has" : " has no") + " Mal'cev term\n";
    if (witness) {
      out.data["witness"] = witness->values;
      out.text += "witness: " + list_of(witness->values) + "\n";
    } else {
      out.status = exit_fail;
    }
    try {
      auto mu = group_malcev(x.algebra);
      out.data["group_malcev"] = mu.values;
      out.text += "x y⁻¹ z: " + list_of(mu.values) + "\n";
    } catch (Error const& e) {
      if (e.code() != ErrorCode::not_a_group) {
        throw;
      }
      out.data["group_malcev"] = nullptr;
    }
    return out;
  }

  Report clone_cmd(Workspace& ws, Args const& a) {
    auto const& x     = ws.get(a.algebra);
    auto        clone = clone_ternary_terms(x.algebra, ws.limits);
    bool        found = false;
    for (auto const& f : clone) {
      found = found || is_malcev_op(f).ok;
    }

    Report out;
    out.data["algebra"]         = x.name;
    out.data["count"]           = clone.size();
    out.data["has_malcev_term"] = found;
    out.text = std::to_string(clone.size()) + " ternary term operations of "
               + x.name + "; Mal'cev term: " + (found ? "yes" : "no") + "\n";
    if (a.list) {
      json ops = json::array();
      for (auto const& f : clone) {
        ops.push_back(f.values);
        out.text += list_of(f.values) + "\n";
      }
      out.data["operations"] = ops;
    }
    return out;
  }

  Report factorize(Workspace& ws, Args const& a) {
    auto const& x      = ws.get(a.algebra);
    auto        values = parse_values(a.map);
    Element     top    = 0;
    for (auto v : values) {
      top = std::max(top, v);
    }
    CarrierMap f(std::size_t(top) + 1, values);
    if (f.source_size() != x.algebra.size()) {
      raise(ErrorCode::size_mismatch,
            "map has " + std::to_string(values.size()) + " values, " + x.name
                + " has " + std::to_string(x.algebra.size()) + " elements");
    }
    auto least = least_factorization(x.algebra, f, ws.limits);
    auto ker   = kernel(least.g);

    Report out;
    out.data["algebra"] = x.name;
    out.data["f"]       = f.values();
    out.data["kernel"]  = to_string(ker);
    out.data["size"]    = least.y.size();
    out.data["g"]       = least.g.values();
    out.data["h"]       = least.h.values();
    out.data["Y"]       = to_json(least.y);
    out.text = "kernel: " + to_string(ker) + "\n|Y| = "
               + std::to_string(least.y.size()) + "\ng: " + list_of(least.g.values())
               + "\nh: " + list_of(least.h.values()) + "\nY: " + algebra_line(least.y)
               + "\n";
    if (!a.oracle) {
      return out;
    }

    auto all      = enumerate_factorizations(x.algebra, f, ws.limits);
    auto greatest = greatest_factorization(x.algebra, f);
    bool least_ok = true, greatest_ok = true;
    json poset    = json::array();
    out.text += "oracle: " + std::to_string(all.size()) + " factorizations\n";
    for (auto const& c : all) {
      bool below = precedes(least, c).ok;
      bool above = precedes(c, greatest).ok;
      least_ok    = least_ok && below;
      greatest_ok = greatest_ok && above;
      auto k      = to_string(kernel(c.g));
      poset.push_back({{"kernel", k},
                       {"size", c.y.size()},
                       {"least_precedes", below},
                       {"precedes_greatest", above}});
      out.text += "  " + k + "  |Y| = " + std::to_string(c.y.size())
                  + (below ? "" : "  (least does not precede)") + "\n";
    }
    // The least kernel must be the coarsest congruence below ker f.
    bool agrees = !all.empty();
    for (auto const& c : all) {
      agrees = agrees && kernel(c.g).refines(ker);
    }
    out.data["oracle"] = {{"factorizations", poset},
                          {"least_precedes_all", least_ok},
                          {"greatest_dominates_all", greatest_ok},
                          {"kernel_matches", agrees}};
    bool ok = least_ok && greatest_ok && agrees;
    out.text += std::string(ok ? "PASS" : "FAIL")
                + "  least factorization precedes every enumerated one\n";
    if (!ok) {
      out.status = exit_fail;
    }
    return out;
  }

  Report fixtures_cmd(Workspace& ws, Args const&) {
    Report out;
    json   list = json::array();
    for (auto const& name : Workspace::fixture_names()) {
      auto const& x = ws.get(name);
      list.push_back({{"name", name},
                      {"size", x.algebra.size()},
                      {"signature", to_string(x.algebra.signature())}});
      out.text += name + "  " + std::to_string(x.algebra.size()) + "  "
                  + to_string(x.algebra.signature()) + "\n";
    }
    out.text += "(Z2..Z8, V4, SL2 and Sinf1..Sinf16 are available)\n";
    out.data["fixtures"] = list;
    return out;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite universal algebra workbench"};
  app.require_subcommand(1);
  app.fallthrough();

  Workspace                ws;
  bool                     as_json = false;
  int                      threads = 0;
  std::vector<std::string> loads;
  app.add_flag("--json", as_json, "Machine-readable output");
  app.add_option("--threads", threads, "Worker threads for the parallel kernels")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-semigroup", ws.limits.max_semigroup,
                 "Cap on |S(X)|")->capture_default_str();
  app.add_option("--max-partitions", ws.limits.max_partitions,
                 "Cap on partitions visited by congruence enumeration")
      ->capture_default_str();
  app.add_option("--max-clone", ws.limits.max_clone,
                 "Cap on ternary term operations")->capture_default_str();
  app.add_option("--load", loads, "Register an algebra JSON file as NAME=FILE")
      ->type_name("NAME=FILE");

  Args args;
  std::map<std::string, std::function<Report(Workspace&, Args const&)>> run;
  auto command = [&](std::string const& name, std::string const& help,
                     Report (*fn)(Workspace&, Args const&)) {
    run[name] = fn;
    return app.add_subcommand(name, help);
  };

  auto* c = command("check-identity", "Test p ≈ q on every assignment", check_identity);
  c->add_option("algebra", args.algebra)->required();
  c->add_option("p", args.lhs)->required();
  c->add_option("q", args.rhs)->required();

  c = command("variety-check", "Test a list of identities", variety_check);
  c->add_option("algebra", args.algebra)->required();
  c->add_option("identities", args.items, "Identities written p = q");
  c->add_flag("--group-axioms", args.group_axioms, "Include the group axioms");

  c = command("eval", "Evaluate a term", eval);
  c->add_option("algebra", args.algebra)->required();
  c->add_option("term", args.term)->required();
  c->add_option("assignment", args.items, "Assignments written v1=2");

  c = command("hom-check", "Test whether a map is a homomorphism", hom_check);
  c->add_option("source", args.algebra)->required();
  c->add_option("target", args.target)->required();
  c->add_option("map", args.map)->required();

  c = command("subalgebra", "Subalgebra generated by elements", subalgebra);
  c->add_option("algebra", args.algebra)->required();
  c->add_option("elements", args.items);

  c = command("product", "Direct product of algebras", product_cmd);
  c->add_option("algebras", args.names)->required();

  c = command("quotient", "Quotient by a congruence", quotient_cmd);
  c->add_option("algebra", args.algebra)->required();
  c->add_option("partition", args.partition, "Blocks like 0,2|1,3")->required();

  c = command("congruences", "List every congruence", congruences_cmd);
  c->add_option("algebra", args.algebra)->required();

  c = command("gen-congruence", "Least congruence containing pairs", gen_congruence);
  c->add_option("algebra", args.algebra)->required();
  c->add_option("pairs", args.items, "Pairs written 0,2");

  c = command("translations", "Principal translations and S(X)", translations_cmd);
  c->add_option("algebra", args.algebra)->required();

  c = command("malcev", "Mal'cev operations on a k-set, or Mal'cev terms of an algebra",
              malcev_cmd);
  c->add_option("target", args.target, "Carrier size or algebra name")->required();
  c->add_option("--cap", args.cap, "Stop after this many operations");

  c = command("clone", "Ternary term operations", clone_cmd);
  c->add_option("algebra", args.algebra)->required();
  c->add_flag("--list", args.list, "Print every operation");

  c = command("factorize", "Least factorization of a map through a quotient",
              factorize);
  c->add_option("algebra", args.algebra)->required();
  c->add_option("map", args.map, "Values like [0,1,0,1]")->required();
  c->add_flag("--oracle", args.oracle, "Cross-check against the congruence lattice");

  command("fixtures", "List built-in algebras", fixtures_cmd);

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    return app.exit(e) == 0 ? exit_ok : exit_usage;
  }

  std::string name = app.get_subcommands().front()->get_name();
  Report      report;
  try {
    if (threads > 0) {
      kernels::set_num_threads(threads);
    }
    for (auto const& item : loads) {
      auto eq = item.find('=');
      if (eq == std::string::npos) {
        raise(ErrorCode::syntax, "--load expects NAME=FILE");
      }
      ws.load(item.substr(0, eq), item.substr(eq + 1));
    }
    report = run.at(name)(ws, args);
  } catch (Error const& e) {
    if (as_json) {
      json doc = {{"schema", 1},
                  {"command", name},
                  {"error", {{"code", to_string(e.code())}, {"message", e.what()}}}};
      std::cout << doc.dump(2) << "\n";
    }
    std::cerr << "error: " << e.what() << "\n";
    return status_of(e.code());
  }

  if (as_json) {
    report.data["schema"]  = 1;
    report.data["command"] = name;
    report.data["status"]  = report.status;
    std::cout << report.data.dump(2) << "\n";
  } else {
    std::cout << report.text;
  }
  return report.status;
}
