#include <map>

#include "ualg/congruences.hpp"
#include "ualg/kernels.hpp"

namespace ualg::kernels::serial {

  std::vector<char> congruence_flags(FiniteAlgebra const&       x,
                                     std::span<Partition const> candidates) {
    std::vector<char> flags(candidates.size(), 0);
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      flags[i] = is_congruence_direct(x, candidates[i]).ok ? 1 : 0;
    }
    return flags;
  }

  Partition signature_kernel(std::span<Table const>   maps,
                             std::span<Element const> f) {
    std::size_t                         n = f.size();
    std::map<std::vector<Element>, std::size_t> ids;
    std::vector<std::size_t>            labels(n);
    std::vector<Element>                row(maps.size());
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t m = 0; m < maps.size(); ++m) {
        row[m] = f[maps[m][x]];
      }
      labels[x] = ids.try_emplace(row, ids.size()).first->second;
    }
    return Partition(labels);
  }

  std::vector<Table> compose_all(std::span<Table const> frontier,
                                 std::span<Table const> generators) {
    std::vector<Table> out(frontier.size() * generators.size());
    for (std::size_t i = 0; i < frontier.size(); ++i) {
      for (std::size_t j = 0; j < generators.size(); ++j) {
        auto& t = out[i * generators.size() + j];
        t.resize(frontier[i].size());
        for (std::size_t x = 0; x < t.size(); ++x) {
          t[x] = generators[j][frontier[i][x]];
        }
      }
    }
    return out;
  }

}  // namespace ualg::kernels::serial
