#pragma once

#include <cstddef>

namespace ualg {

  // Caps for the exhaustive routines. Exceeding one raises
  // ErrorCode::size_cap_exceeded; nothing is silently truncated except the
  // Mal'cev operation search, which returns a flagged partial list.
  struct Limits {
    std::size_t max_product_size = 4096;
    std::size_t max_table_entries = std::size_t(1) << 24;
    std::size_t max_clone = 100000;
    std::size_t max_semigroup = 1000000;
    // Number of set partitions the exhaustive congruence enumeration may
    // visit; the default is Bell(8).
    std::size_t max_partitions = 4140;
    std::size_t max_malcev = 100000;
  };

}  // namespace ualg
