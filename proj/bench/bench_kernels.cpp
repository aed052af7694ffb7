// Serial reference vs OpenMP kernels. Arg(0) of the parallel runs = OpenMP default threads.
#include <benchmark/benchmark.h>

#include <fstream>
#include <string>
#include <vector>

#include "vizlab/generators.hpp"
#include "vizlab/oracles.hpp"
#include "vizlab/scan.hpp"
#include "vizlab/sweep.hpp"

using namespace vizlab;

namespace {

std::vector<std::string> corpus(const std::string& name) {
  std::ifstream in(std::string(VIZLAB_BENCH_DATA_DIR) + "/" + name);
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  return lines;
}

const std::vector<PanelGraph>& panel() {
  static const std::vector<PanelGraph> p{{"path:2", path_graph(2)}, {"cycle:3", cycle_graph(3)}};
  return p;
}

constexpr std::uint64_t kScanBudget = 10'000'000;

void BM_gamma_serial(benchmark::State& state) {
  const Graph g = cycle_graph(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(oracle::brute_force_gamma(g));
}

void BM_gamma_parallel(benchmark::State& state) {
  const Graph g = cycle_graph(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(oracle::brute_force_gamma_parallel(g, static_cast<int>(state.range(1))));
}

void BM_scan_serial(benchmark::State& state) {
  const auto lines = corpus("atlas6.g6");
  for (auto _ : state) {
    auto out = sweep_serial(std::span<const std::string>(lines),
                            [](const std::string& l) { return scan_graph(l, panel(), kScanBudget); });
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(lines.size()));
}

void BM_scan_parallel(benchmark::State& state) {
  const auto lines = corpus("atlas6.g6");
  const int jobs = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto out = sweep_parallel(std::span<const std::string>(lines),
                              [](const std::string& l) { return scan_graph(l, panel(), kScanBudget); }, jobs);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(lines.size()));
}

}  // namespace

BENCHMARK(BM_gamma_serial)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_gamma_parallel)->Args({16, 0})->Args({20, 0})->Args({20, 2})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_scan_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_scan_parallel)->Arg(0)->Arg(2)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
