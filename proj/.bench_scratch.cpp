#include <chrono>
#include <cstdio>

#include "core/graph.hpp"
#include "core/rng.hpp"
#include "core/sampling.hpp"
#include "core/solver.hpp"

using namespace domlab;

int main() {
  using Clock = std::chrono::steady_clock;
  double total = 0, worst = 0;
  for (int i = 0; i < 20; ++i) {
    Graph g = sample_gnp({200, 0.5}, derive_seed(7, i));
    auto t0 = Clock::now();
    SolveResult r = domination_number_exact(g, {});
    double ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    total += ms;
    if (ms > worst) worst = ms;
    std::printf("trial %2d: D=%u status=%s nodes=%llu  %.1f ms\n", i, r.size,
                to_string(r.status), (unsigned long long)r.nodes_explored, ms);
  }
  std::printf("n=200 p=0.5: total %.1f ms, worst %.1f ms\n", total, worst);

  total = 0;
  for (int i = 0; i < 50; ++i) {
    Graph g = sample_gnp({60, 0.5}, derive_seed(9, i));
    auto t0 = Clock::now();
    SolveResult r = domination_number_exact(g, {});
    total += std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    (void)r;
  }
  std::printf("n=60 p=0.5: 50 solves total %.1f ms\n", total);
  return 0;
}
