#include "ualg/algebra_json.hpp"

#include "ualg/error.hpp"

namespace ualg {

  using nlohmann::json;

  namespace {
    json nest(std::span<Element const> table, std::size_t k, std::size_t arity) {
      if (arity == 0) {
        return table[0];
      }
      if (arity == 1) {
        return json(std::vector<Element>(table.begin(), table.end()));
      }
      json        rows  = json::array();
      std::size_t chunk = table.size() / k;
      for (std::size_t r = 0; r < k; ++r) {
        rows.push_back(nest(table.subspan(r * chunk, chunk), k, arity - 1));
      }
      return rows;
    }

    void flatten(json const& node, std::size_t k, std::size_t arity,
                 std::string const& name, std::vector<Element>& out) {
      if (arity == 0) {
        if (!node.is_number_unsigned()) {
          raise(ErrorCode::invalid_input,
                "table entry for " + name + " must be a nonnegative integer");
        }
        auto v = node.get<std::uint64_t>();
        if (v >= k) {
          raise(ErrorCode::out_of_carrier,
                "table for " + name + " contains " + std::to_string(v));
        }
        out.push_back(static_cast<Element>(v));
        return;
      }
      if (!node.is_array() || node.size() != k) {
        raise(ErrorCode::invalid_input,
              "table for " + name + " must nest arrays of length "
                  + std::to_string(k));
      }
      for (auto const& child : node) {
        flatten(child, k, arity - 1, name, out);
      }
    }

    void only_fields(json const& obj, std::initializer_list<char const*> keys,
                     char const* where) {
      for (auto const& [key, value] : obj.items()) {
        bool known = false;
        for (auto k : keys) {
          known = known || key == k;
        }
        if (!known) {
          raise(ErrorCode::invalid_input,
                std::string("unknown field '") + key + "' in " + where);
        }
      }
    }
  }  // namespace

  json to_json(FiniteAlgebra const& x) {
    json sig = json::array();
    json ops = json::object();
    for (std::size_t s = 0; s < x.signature().size(); ++s) {
      auto const& sym = x.signature()[s];
      sig.push_back({{"symbol", sym.name}, {"arity", sym.arity}});
      ops[sym.name] = nest(x.table(s), x.size(), sym.arity);
    }
    return {{"signature", sig}, {"size", x.size()}, {"ops", ops}};
  }

  FiniteAlgebra algebra_from_json(json const& doc) {
    if (!doc.is_object()) {
      raise(ErrorCode::invalid_input, "algebra document must be an object");
    }
    only_fields(doc, {"signature", "size", "ops"}, "algebra");
    if (!doc.contains("signature") || !doc.contains("size")
        || !doc.contains("ops")) {
      raise(ErrorCode::invalid_input,
            "algebra needs 'signature', 'size' and 'ops'");
    }
    auto const& jsig = doc["signature"];
    if (!jsig.is_array()) {
      raise(ErrorCode::invalid_input, "'signature' must be an array");
    }
    std::vector<Symbol> symbols;
    for (auto const& entry : jsig) {
      if (!entry.is_object() || !entry.contains("symbol")
          || !entry.contains("arity")) {
        raise(ErrorCode::invalid_input,
              "signature entries need 'symbol' and 'arity'");
      }
      only_fields(entry, {"symbol", "arity"}, "signature entry");
      if (!entry["symbol"].is_string()) {
        raise(ErrorCode::invalid_input, "'symbol' must be a string");
      }
      if (entry["arity"].is_number_integer() && entry["arity"].get<long long>() < 0) {
        raise(ErrorCode::negative_arity, entry["symbol"].get<std::string>());
      }
      if (!entry["arity"].is_number_unsigned()) {
        raise(ErrorCode::invalid_input, "'arity' must be a nonnegative integer");
      }
      symbols.push_back({entry["symbol"].get<std::string>(),
                         entry["arity"].get<std::size_t>()});
    }
    Signature sig(std::move(symbols));

    if (!doc["size"].is_number_unsigned() || doc["size"].get<std::uint64_t>() == 0) {
      raise(ErrorCode::invalid_input, "'size' must be a positive integer");
    }
    auto k = doc["size"].get<std::size_t>();
    if (k > (std::size_t(1) << 20)) {
      raise(ErrorCode::size_cap_exceeded, "carrier too large");
    }
    auto const& ops = doc["ops"];
    if (!ops.is_object()) {
      raise(ErrorCode::invalid_input, "'ops' must be an object");
    }
    for (auto const& [key, value] : ops.items()) {
      if (!sig.find(key)) {
        raise(ErrorCode::invalid_input, "table for unknown symbol '" + key + "'");
      }
    }
    std::vector<std::vector<Element>> tables;
    for (auto const& sym : sig.symbols()) {
      if (!ops.contains(sym.name)) {
        raise(ErrorCode::invalid_input, "missing table for " + sym.name);
      }
      std::vector<Element> table;
      flatten(ops[sym.name], k, sym.arity, sym.name, table);
      tables.push_back(std::move(table));
    }
    return FiniteAlgebra(std::move(sig), k, std::move(tables));
  }

  FiniteAlgebra parse_algebra_json(std::string_view text) {
    json doc;
    try {
      doc = json::parse(text);
    } catch (json::parse_error const& e) {
      raise(ErrorCode::syntax, e.what());
    }
    return algebra_from_json(doc);
  }

}  // namespace ualg
