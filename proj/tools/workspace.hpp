#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "ualg/algebra.hpp"
#include "ualg/limits.hpp"

namespace ualg::cli {

  // An algebra with display names for its elements.
  struct NamedAlgebra {
    std::string              name;
    FiniteAlgebra            algebra;
    std::vector<std::string> labels;

    std::string const& label(Element x) const {
      return labels[x];
    }
  };

  // Built-in fixtures plus algebras loaded from JSON files. Fixtures are
  // built on first use; loaded names may not shadow them.
  class Workspace {
   public:
    Limits limits;

    void load(std::string const& name, std::string const& path);

    // Raises invalid_input for unknown names.
    NamedAlgebra const& get(std::string const& name);

    static bool                     is_fixture_name(std::string_view name);
    static std::vector<std::string> fixture_names();

   private:
    std::map<std::string, NamedAlgebra> _algebras;
  };

  // A decimal index or one of the algebra's labels.
  Element parse_element(NamedAlgebra const& x, std::string_view text);

  // "[z0,z1,...]" as a JSON array of nonnegative integers.
  std::vector<Element> parse_values(std::string_view text);

}  // namespace ualg::cli
