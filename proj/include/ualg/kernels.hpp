#pragma once

#include <span>
#include <vector>

#include "ualg/algebra.hpp"
#include "ualg/element.hpp"
#include "ualg/partition.hpp"

// Data-parallel inner loops. Each kernel exists twice with identical
// results: serial:: is the reference, omp:: is what the library calls.
namespace ualg::kernels {

  using Table = std::vector<Element>;

  namespace serial {
    // flags[i] != 0 iff candidates[i] is a congruence of x.
    std::vector<char> congruence_flags(FiniteAlgebra const&        x,
                                       std::span<Partition const> candidates);

    // Groups x by the row (f(m(x)))_{m in maps}; blocks in order of first
    // appearance.
    Partition signature_kernel(std::span<Table const>   maps,
                               std::span<Element const> f);

    // out[i * |generators| + j] = generators[j] o frontier[i].
    std::vector<Table> compose_all(std::span<Table const> frontier,
                                   std::span<Table const> generators);
  }  // namespace serial

  namespace omp {
    std::vector<char> congruence_flags(FiniteAlgebra const&        x,
                                       std::span<Partition const> candidates);
    Partition         signature_kernel(std::span<Table const>   maps,
                                       std::span<Element const> f);
    std::vector<Table> compose_all(std::span<Table const> frontier,
                                   std::span<Table const> generators);
  }  // namespace omp

  // No-ops when built without OpenMP.
  void set_num_threads(int n);
  int  max_threads();

}  // namespace ualg::kernels
