#include <chrono>
#include <cstdint>
#include <functional>
#include <iomanip>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "powser/psi_map.hpp"
#include "powser/verify.hpp"

using namespace powser;

namespace {

double best_ms(const std::function<void()>& fn, int repeat) {
  double best = 0.0;
  for (int t = 0; t < repeat; ++t) {
    const auto start = std::chrono::steady_clock::now();
    fn();
    const auto stop = std::chrono::steady_clock::now();
    const double ms =
        std::chrono::duration<double, std::milli>(stop - start).count();
    if (t == 0 || ms < best) best = ms;
  }
  return best;
}

struct Workload {
  std::string name;
  std::function<void(ExecMode)> run;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"compare the serial reference schedule with the OpenMP one"};
  int repeat = 3;
  std::uint32_t samples = 400;
  app.add_option("--repeat", repeat, "repetitions per measurement (best-of)")
      ->capture_default_str();
  app.add_option("--samples", samples, "sampled cases for the law suite")
      ->capture_default_str();
  CLI11_PARSE(app, argc, argv);

  RunConfig law_cfg;
  law_cfg.samples = samples;
  law_cfg.psi_samples = 50;
  law_cfg.suites = {"laws"};

  const std::vector<Workload> workloads = {
      {"psi-matrix r=3 n=3 i=1",
       [](ExecMode mode) { psi_matrix(3, 3, 1, mode); }},
      {"statement scan r<=3 n<=3",
       [](ExecMode mode) { check_statements(3, 3, {1, 2, 3}, false, mode); }},
      {"law suite (" + std::to_string(samples) + " samples/check)",
       [&law_cfg](ExecMode mode) {
         RunConfig cfg = law_cfg;
         cfg.mode = mode;
         run_verify(cfg);
       }},
  };

#ifdef _OPENMP
  std::cout << "OpenMP enabled, max threads = " << omp_get_max_threads()
            << "\n\n";
#else
  std::cout << "built without OpenMP; both schedules run serially\n\n";
#endif

  std::cout << std::left << std::setw(38) << "workload" << std::right
            << std::setw(14) << "serial (ms)" << std::setw(14)
            << "parallel (ms)" << std::setw(10) << "speedup" << "\n";
  for (const Workload& w : workloads) {
    const double serial = best_ms([&] { w.run(ExecMode::Serial); }, repeat);
    const double parallel = best_ms([&] { w.run(ExecMode::Parallel); }, repeat);
    std::cout << std::left << std::setw(38) << w.name << std::right
              << std::fixed << std::setprecision(2) << std::setw(14) << serial
              << std::setw(14) << parallel << std::setw(9)
              << (parallel > 0 ? serial / parallel : 0.0) << "x\n";
  }
  return 0;
}
