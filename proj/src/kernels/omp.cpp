#include <cstdint>
#include <map>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "ualg/congruences.hpp"
#include "ualg/kernels.hpp"

namespace ualg::kernels {

  void set_num_threads(int n) {
#ifdef _OPENMP
    if (n > 0) {
      omp_set_num_threads(n);
    }
#else
    (void) n;
#endif
  }

  int max_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
  }

  namespace omp {

    std::vector<char> congruence_flags(FiniteAlgebra const&       x,
                                       std::span<Partition const> candidates) {
      std::vector<char> flags(candidates.size(), 0);
      auto const        count = static_cast<std::int64_t>(candidates.size());
#pragma omp parallel for schedule(dynamic, 16)
      for (std::int64_t i = 0; i < count; ++i) {
        flags[i] = is_congruence_direct(x, candidates[i]).ok ? 1 : 0;
      }
      return flags;
    }

    Partition signature_kernel(std::span<Table const>   maps,
                               std::span<Element const> f) {
      std::size_t const  n     = f.size();
      std::size_t const  width = maps.size();
      std::vector<Element> rows(n * width);
      auto const           count = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(static)
      for (std::int64_t x = 0; x < count; ++x) {
        Element* row = rows.data() + x * width;
        for (std::size_t m = 0; m < width; ++m) {
          row[m] = f[maps[m][x]];
        }
      }
      // Grouping stays sequential so block ids follow element order.
      std::map<std::vector<Element>, std::size_t> ids;
      std::vector<std::size_t>                    labels(n);
      for (std::size_t x = 0; x < n; ++x) {
        std::vector<Element> row(rows.begin() + x * width,
                                 rows.begin() + (x + 1) * width);
        labels[x] = ids.try_emplace(std::move(row), ids.size()).first->second;
      }
      return Partition(labels);
    }

    std::vector<Table> compose_all(std::span<Table const> frontier,
                                   std::span<Table const> generators) {
      std::size_t const  g = generators.size();
      std::vector<Table> out(frontier.size() * g);
      auto const         count = static_cast<std::int64_t>(out.size());
#pragma omp parallel for schedule(static)
      for (std::int64_t k = 0; k < count; ++k) {
        auto const& in  = frontier[k / g];
        auto const& gen = generators[k % g];
        Table       t(in.size());
        for (std::size_t x = 0; x < t.size(); ++x) {
          t[x] = gen[in[x]];
        }
        out[k] = std::move(t);
      }
      return out;
    }

  }  // namespace omp
}  // namespace ualg::kernels
