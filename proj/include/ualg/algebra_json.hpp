#pragma once

#include <string>
#include <string_view>

#include "json.hpp"
#include "ualg/algebra.hpp"

namespace ualg {

  // {"signature": [{"symbol": "m", "arity": 2}, ...], "size": k,
  //  "ops": {"m": [[...], ...], "i": [...], "e": 0}}
  // Tables nest one array level per argument, first argument outermost.
  // Unknown fields are rejected with invalid_input.
  nlohmann::json to_json(FiniteAlgebra const& x);
  FiniteAlgebra  algebra_from_json(nlohmann::json const& doc);
  FiniteAlgebra  parse_algebra_json(std::string_view text);

}  // namespace ualg
