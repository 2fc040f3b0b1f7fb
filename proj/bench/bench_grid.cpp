#include <map>

#include <benchmark/benchmark.h>

#include "mm/mixed.hpp"
#include "mm/problem.hpp"

namespace {

using namespace mm;

const char* kTwoVar =
    "p = 32003\nvars = [x, y]\ngamma = []\nJ = [\"x\", \"y\"]\nI = [[\"x^2\", \"y^3\"]]\n";

// Non-monomial generators force the Groebner path.
const char* kThreeVar =
    "p = 32003\nvars = [x, y, z]\ngamma = []\nJ = [\"x\", \"y\", \"z\"]\n"
    "I = [[\"x^2 + y*z\", \"y^2\", \"z^2\"], [\"x + y\", \"z\"]]\n";

const ProblemInstance& instance(const char* text) {
  static std::map<const char*, LoadedProblem> cache;
  auto it = cache.find(text);
  if (it == cache.end()) it = cache.emplace(text, build_instance(parse_problem_text(text))).first;
  return it->second.instance;
}

void grid(benchmark::State& st, const char* text, Execution ex) {
  const auto& P = instance(text);
  const int base = static_cast<int>(st.range(0));
  const int window = static_cast<int>(st.range(1));
  for (auto _ : st) benchmark::DoNotOptimize(evaluate_grid(P, base, window, Path::kAuto, ex));
}

}  // namespace

BENCHMARK_CAPTURE(grid, two_var_serial, kTwoVar, Execution::kSerial)->Args({4, 3})->Args({8, 5})->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(grid, two_var_parallel, kTwoVar, Execution::kParallel)->Args({4, 3})->Args({8, 5})->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK_CAPTURE(grid, three_var_serial, kThreeVar, Execution::kSerial)->Args({2, 2})->Args({3, 3})->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(grid, three_var_parallel, kThreeVar, Execution::kParallel)->Args({2, 2})->Args({3, 3})->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
