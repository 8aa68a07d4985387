// Benchmark comparing the serial reference enumerators against the
// OpenMP kernels, verifying along the way that both produce identical
// structure sets. Wall-clock times are best-of-N.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ciq/reference.hpp"
#include "ciq/search.hpp"

namespace {

using ciq::CiStructure;

double time_best_of(int repeat, const std::function<void()>& fn) {
  double best = 1e300;
  for (int i = 0; i < repeat; ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    const std::chrono::duration<double, std::milli> dt =
        std::chrono::steady_clock::now() - t0;
    best = std::min(best, dt.count());
  }
  return best;
}

struct Row {
  std::string label;
  std::size_t count = 0;
  double ms = 0.0;
};

void print_rows(const std::vector<Row>& rows) {
  const double base = rows.front().ms;
  for (const Row& r : rows) {
    std::printf("  %-24s %8zu structures %10.2f ms   speedup %5.2fx\n",
                r.label.c_str(), r.count, r.ms, base / r.ms);
  }
}

void bench_oracle(int n, int workers, int repeat) {
  std::printf("oracle, order %d\n", n);
  std::vector<Row> rows;
  std::vector<CiStructure> ref, kern1, kernw;
  rows.push_back({"reference (serial)", 0, time_best_of(repeat, [&] {
                    ref = ciq::reference::enumerate_oracle(n);
                  })});
  rows.back().count = ref.size();

  ciq::SearchConfig cfg;
  cfg.order = n;
  cfg.mode = ciq::SearchMode::kOracle;
  cfg.worker_count = 1;
  rows.push_back({"kernel, 1 worker", 0, time_best_of(repeat, [&] {
                    kern1 = ciq::enumerate_oracle(cfg);
                  })});
  rows.back().count = kern1.size();

  cfg.worker_count = workers;
  rows.push_back({"kernel, " + std::to_string(workers) + " workers", 0,
                  time_best_of(repeat,
                               [&] { kernw = ciq::enumerate_oracle(cfg); })});
  rows.back().count = kernw.size();

  print_rows(rows);
  if (ref != kern1 || ref != kernw) {
    std::printf("  MISMATCH between reference and kernel output!\n");
    std::exit(1);
  }
}

void bench_propagate(int n, int workers, int repeat, bool with_reference) {
  std::printf("propagate, order %d\n", n);
  std::vector<Row> rows;
  std::vector<CiStructure> ref, kern1, kernw;
  if (with_reference) {
    rows.push_back({"reference (serial)", 0, time_best_of(repeat, [&] {
                      ref = ciq::reference::enumerate_propagate(n);
                    })});
    rows.back().count = ref.size();
  }

  ciq::SearchConfig cfg;
  cfg.order = n;
  cfg.mode = ciq::SearchMode::kPropagate;
  cfg.worker_count = 1;
  rows.push_back({"kernel, 1 worker", 0, time_best_of(repeat, [&] {
                    kern1 = ciq::enumerate_propagate(cfg);
                  })});
  rows.back().count = kern1.size();

  cfg.worker_count = workers;
  rows.push_back({"kernel, " + std::to_string(workers) + " workers", 0,
                  time_best_of(repeat, [&] {
                    kernw = ciq::enumerate_propagate(cfg);
                  })});
  rows.back().count = kernw.size();

  print_rows(rows);
  if ((with_reference && ref != kern1) || kern1 != kernw) {
    std::printf("  MISMATCH between reference and kernel output!\n");
    std::exit(1);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"serial-reference vs OpenMP-kernel enumeration benchmark"};
  int workers = 0;
  int repeat = 3;
  int max_propagate = 5;
  app.add_option("--workers", workers, "threads for the parallel runs");
  app.add_option("--repeat", repeat, "repetitions, best time kept");
  app.add_option("--max-propagate-order", max_propagate,
                 "largest propagate order to benchmark")
      ->check(CLI::Range(2, ciq::kDefaultPropagateCap));
  CLI11_PARSE(app, argc, argv);
  if (workers <= 0) workers = 2;

  bench_oracle(3, workers, repeat);
  for (int n = 4; n <= max_propagate; ++n) {
    // the from-scratch closure makes the reference slow past order 5
    bench_propagate(n, workers, repeat, /*with_reference=*/n <= 5);
  }
  return 0;
}
