#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "CLI11.hpp"

#include "sigma/verifier.hpp"

// Times the verification runner with one worker and with all available
// workers on the same configuration, and checks that both schedules render
// byte-identical reports.

namespace {

struct Sample {
  double ms = 0.0;
  std::string report;
};

Sample run_once(sigma::VerifyConfig config, unsigned threads) {
  config.threads = threads;
  auto t0 = std::chrono::steady_clock::now();
  sigma::VerifyResult result = sigma::run_verify(config);
  auto t1 = std::chrono::steady_clock::now();
  Sample s;
  s.ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
  s.report = sigma::report_json(result, config);
  return s;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"serial vs parallel timing for the verification runner"};
  sigma::VerifyConfig config;
  config.suites = {"thm_1_3_i", "thm_1_3_ii", "cor_1_4", "cor_1_6",
                   "lemma_2_1_2"};
  config.max_order = 100;
  unsigned repeats = 3;
  app.add_option("--suite", config.suites, "suite ids to time (repeatable)");
  app.add_option("--max-order", config.max_order, "largest group order");
  app.add_option("--repeats", repeats, "timed repetitions per schedule");
  CLI11_PARSE(app, argc, argv);

#ifdef _OPENMP
  unsigned hw = static_cast<unsigned>(omp_get_max_threads());
#else
  unsigned hw = 1;
#endif

  std::printf("%-10s %8s %12s\n", "schedule", "threads", "best ms");
  Sample serial, parallel;
  double best_serial = 0.0, best_parallel = 0.0;
  for (unsigned r = 0; r < repeats; ++r) {
    Sample s = run_once(config, 1);
    if (r == 0 || s.ms < best_serial)
      best_serial = s.ms;
    serial = std::move(s);
  }
  std::printf("%-10s %8u %12.1f\n", "serial", 1u, best_serial);
  for (unsigned r = 0; r < repeats; ++r) {
    Sample s = run_once(config, hw);
    if (r == 0 || s.ms < best_parallel)
      best_parallel = s.ms;
    parallel = std::move(s);
  }
  std::printf("%-10s %8u %12.1f\n", "parallel", hw, best_parallel);

  if (best_parallel > 0.0)
    std::printf("speedup: %.2fx\n", best_serial / best_parallel);
  bool same = serial.report == parallel.report;
  std::printf("reports byte-identical: %s\n", same ? "yes" : "NO");
  return same ? 0 : 1;
}
