// Times the serial reference kernels against the OpenMP ones on synthetic
// workloads and checks that both produce the same result.

#include <chrono>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ualg/kernels.hpp"

using namespace ualg;
using Clock = std::chrono::steady_clock;

namespace {

  std::vector<Element> random_values(std::mt19937_64& rng, std::size_t n,
                                     std::size_t k) {
    std::uniform_int_distribution<Element> pick(0, static_cast<Element>(k - 1));
    std::vector<Element>                   out(n);
    for (auto& v : out) {
      v = pick(rng);
    }
    return out;
  }

  template <typename Fn>
  double best_ms(int repeat, Fn&& fn) {
    double best = 1e300;
    for (int r = 0; r < repeat; ++r) {
      auto start = Clock::now();
      fn();
      std::chrono::duration<double, std::milli> took = Clock::now() - start;
      best = std::min(best, took.count());
    }
    return best;
  }

  void row(char const* name, double serial, double parallel, bool same) {
    std::printf("%-18s %10.2f %10.2f %8.2fx  %s\n", name, serial, parallel,
                serial / parallel, same ? "match" : "MISMATCH");
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App      app{"Serial vs OpenMP kernel timings"};
  int           repeat  = 3;
  int           threads = 0;
  std::uint64_t seed    = 1;
  app.add_option("--repeat", repeat, "Runs per measurement (best is kept)")
      ->check(CLI::PositiveNumber);
  app.add_option("--threads", threads, "OpenMP threads (default: runtime choice)")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", seed, "Workload seed");
  CLI11_PARSE(app, argc, argv);

  if (threads > 0) {
    kernels::set_num_threads(threads);
  }
  std::mt19937_64 rng(seed);

  // All 4140 partitions of an 8-element algebra with a binary and a unary op.
  FiniteAlgebra x(parse_signature("m/2 f/1"), 8,
                  {random_values(rng, 64, 8), random_values(rng, 8, 8)});
  auto candidates = all_partitions(8);

  // Signature rows for 4096 points over 2000 self-maps.
  std::vector<kernels::Table> maps;
  for (int i = 0; i < 2000; ++i) {
    maps.push_back(random_values(rng, 4096, 4096));
  }
  auto f = random_values(rng, 4096, 3);

  // One BFS level: 1000 frontier maps times 24 generators on 512 points.
  std::vector<kernels::Table> frontier, generators;
  for (int i = 0; i < 1000; ++i) {
    frontier.push_back(random_values(rng, 512, 512));
  }
  for (int i = 0; i < 24; ++i) {
    generators.push_back(random_values(rng, 512, 512));
  }

  std::printf("threads: %d\n", kernels::max_threads());
  std::printf("%-18s %10s %10s %9s\n", "kernel", "serial ms", "omp ms", "speedup");

  std::vector<char> flags_s, flags_p;
  double s = best_ms(repeat, [&] { flags_s = kernels::serial::congruence_flags(x, candidates); });
  double p = best_ms(repeat, [&] { flags_p = kernels::omp::congruence_flags(x, candidates); });
  row("congruence_flags", s, p, flags_s == flags_p);

  Partition ker_s, ker_p;
  s = best_ms(repeat, [&] { ker_s = kernels::serial::signature_kernel(maps, f); });
  p = best_ms(repeat, [&] { ker_p = kernels::omp::signature_kernel(maps, f); });
  row("signature_kernel", s, p, ker_s == ker_p);

  std::vector<kernels::Table> comp_s, comp_p;
  s = best_ms(repeat, [&] { comp_s = kernels::serial::compose_all(frontier, generators); });
  p = best_ms(repeat, [&] { comp_p = kernels::omp::compose_all(frontier, generators); });
  row("compose_all", s, p, comp_s == comp_p);

  return flags_s == flags_p && ker_s == ker_p && comp_s == comp_p ? 0 : 1;
}
