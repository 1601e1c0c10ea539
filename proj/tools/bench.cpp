// Compares the serial reference paths with the OpenMP kernels on the three
// hot loops: group expansion inside a reduction, the whole-table numeric
// check, and the collected shuffle kernel.
#include <chrono>
#include <iostream>

#include "zsum/algebra.hpp"
#include "zsum/numerics.hpp"
#include "zsum/solver.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace zsum;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

double time_reduction(int weight, int threads) {
  RunConfig cfg;
  cfg.kind = Kind::euler;
  cfg.weight = weight;
  cfg.threads = threads;
  Session<Rat> session(cfg);
  for (int w = 1; w < weight; w++) session.table(w);
  auto t0 = Clock::now();
  ReductionTable<Rat> t = run_reduction(session, cfg.with_weight(weight));
  double dt = seconds_since(t0);
  std::cout << "  remaining " << t.remaining.size() << ", equations "
            << t.stats.equations_considered << "\n";
  return dt;
}

double time_numeric(int weight, int threads) {
#ifdef _OPENMP
  omp_set_num_threads(threads);
#else
  (void)threads;
#endif
  RunConfig cfg;
  cfg.kind = Kind::mzv;
  cfg.weight = weight;
  Session<Rat> session(cfg);
  const ReductionTable<Rat>& t = session.table(weight);
  auto t0 = Clock::now();
  auto rep = numeric_check(t, 1e-6, 200000);
  double dt = seconds_since(t0);
  std::cout << "  checked " << rep.checked << ", failed " << rep.failed << "\n";
  return dt;
}

double time_shuffle(long reps) {
  IntegralWord u = to_integral(make_sum_word({3, 5, 3}));
  IntegralWord v = to_integral(make_sum_word({6, 2, 5}));
  auto t0 = Clock::now();
  size_t total = 0;
  for (long i = 0; i < reps; i++) total += shuffle(u, v).size();
  double dt = seconds_since(t0);
  std::cout << "  collected terms per product: " << total / size_t(reps) << "\n";
  return dt;
}

}  // namespace

int main(int argc, char** argv) {
  int weight = argc > 1 ? std::atoi(argv[1]) : 7;
  int max_threads = 2;
#ifdef _OPENMP
  max_threads = omp_get_max_threads();
#endif
  std::cout << "euler reduction at weight " << weight << "\n";
  double s1 = time_reduction(weight, 1);
  std::cout << "  serial:   " << s1 << " s\n";
  double sp = time_reduction(weight, max_threads);
  std::cout << "  " << max_threads << " threads: " << sp << " s  (speedup "
            << s1 / sp << ")\n";

  std::cout << "numeric check of the weight-6 table\n";
  double n1 = time_numeric(6, 1);
  std::cout << "  serial:   " << n1 << " s\n";
  double np = time_numeric(6, max_threads);
  std::cout << "  " << max_threads << " threads: " << np << " s  (speedup "
            << n1 / np << ")\n";

  std::cout << "collected shuffle of two depth-3 words (weight 11 x 13)\n";
  double sh = time_shuffle(20);
  std::cout << "  " << sh / 20 << " s per product\n";
  return 0;
}
