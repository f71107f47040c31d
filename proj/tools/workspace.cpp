#include "workspace.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>

#include "json.hpp"
#include "ualg/algebra_json.hpp"
#include "ualg/error.hpp"
#include "ualg/fixtures.hpp"

namespace ualg::cli {

  namespace {
    constexpr std::size_t max_cyclic   = 8;
    constexpr std::size_t max_infinity = 16;

    std::optional<std::size_t> suffix_number(std::string_view name,
                                             std::string_view prefix) {
      if (!name.starts_with(prefix) || name.size() == prefix.size()) {
        return std::nullopt;
      }
      auto        digits = name.substr(prefix.size());
      std::size_t value  = 0;
      auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
      if (ec != std::errc() || end != digits.data() + digits.size()
          || digits.front() == '0') {
        return std::nullopt;
      }
      return value;
    }

    std::vector<std::string> numeric_labels(std::size_t n) {
      std::vector<std::string> labels;
      for (std::size_t x = 0; x < n; ++x) {
        labels.push_back(std::to_string(x));
      }
      return labels;
    }

    std::optional<NamedAlgebra> build_fixture(std::string const& name) {
      if (name == "V4") {
        return NamedAlgebra{name, klein_four(), numeric_labels(4)};
      }
      if (name == "SL2") {
        return NamedAlgebra{name, semilattice2(), numeric_labels(2)};
      }
      if (auto n = suffix_number(name, "Z"); n && *n >= 2 && *n <= max_cyclic) {
        return NamedAlgebra{name, cyclic_group(*n), numeric_labels(*n)};
      }
      if (auto n = suffix_number(name, "Sinf"); n && *n >= 1 && *n <= max_infinity) {
        auto labels = numeric_labels(*n);
        labels.push_back("∞");
        return NamedAlgebra{name, adjoined_infinity_monoid(*n), std::move(labels)};
      }
      return std::nullopt;
    }
  }  // namespace

  void Workspace::load(std::string const& name, std::string const& path) {
    if (name.empty() || is_fixture_name(name) || _algebras.contains(name)) {
      raise(ErrorCode::invalid_input, "algebra name '" + name + "' is taken");
    }
    std::ifstream in(path);
    if (!in) {
      raise(ErrorCode::invalid_input, "cannot read " + path);
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    auto x = parse_algebra_json(buffer.str());
    auto n = x.size();
    _algebras.emplace(name, NamedAlgebra{name, std::move(x), numeric_labels(n)});
  }

  NamedAlgebra const& Workspace::get(std::string const& name) {
    if (auto it = _algebras.find(name); it != _algebras.end()) {
      return it->second;
    }
    if (auto fixture = build_fixture(name)) {
      return _algebras.emplace(name, std::move(*fixture)).first->second;
    }
    raise(ErrorCode::invalid_input, "unknown algebra '" + name + "'");
  }

  bool Workspace::is_fixture_name(std::string_view name) {
    return build_fixture(std::string(name)).has_value();
  }

  std::vector<std::string> Workspace::fixture_names() {
    std::vector<std::string> names;
    for (std::size_t n = 2; n <= max_cyclic; ++n) {
      names.push_back("Z" + std::to_string(n));
    }
    names.push_back("V4");
    names.push_back("SL2");
    for (std::size_t n = 1; n <= 4; ++n) {
      names.push_back("Sinf" + std::to_string(n));
    }
    return names;
  }

  Element parse_element(NamedAlgebra const& x, std::string_view text) {
    for (std::size_t v = 0; v < x.labels.size(); ++v) {
      if (x.labels[v] == text) {
        return static_cast<Element>(v);
      }
    }
    if (text == "inf" && x.labels.back() == "∞") {
      return static_cast<Element>(x.labels.size() - 1);
    }
    std::size_t value = 0;
    auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || end != text.data() + text.size() || text.empty()) {
      raise(ErrorCode::syntax, "'" + std::string(text) + "' is not an element");
    }
    if (value >= x.algebra.size()) {
      raise(ErrorCode::out_of_carrier,
            std::string(text) + " is not in the carrier of " + x.name);
    }
    return static_cast<Element>(value);
  }

  std::vector<Element> parse_values(std::string_view text) {
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(text);
    } catch (nlohmann::json::parse_error const&) {
      raise(ErrorCode::syntax, "expected a list like [0,1,0,1]");
    }
    if (!doc.is_array()) {
      raise(ErrorCode::syntax, "expected a list like [0,1,0,1]");
    }
    std::vector<Element> values;
    for (auto const& v : doc) {
      if (!v.is_number_unsigned() || v.get<std::uint64_t>() > 0xffffffffu) {
        raise(ErrorCode::syntax, "list entries must be nonnegative integers");
      }
      values.push_back(v.get<Element>());
    }
    return values;
  }

}  // namespace ualg::cli
