#pragma once

#include <cstdint>
#include <map>

namespace ualg {

  // Carriers are always {0, ..., k - 1}.
  using Element = std::uint32_t;

  // Variable index (v1, v2, ...) to carrier element.
  using VarAssignment = std::map<std::size_t, Element>;

}  // namespace ualg
