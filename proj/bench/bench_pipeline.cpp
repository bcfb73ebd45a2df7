// Serial reference loop vs the OpenMP loop for per-sentence planning.

#include <benchmark/benchmark.h>

#include <cstdint>
#include <fstream>
#include <map>
#include <sstream>
#include <string>

#include "gestc/pipeline.hpp"

namespace {

const gestc::Resources& resources() {
  static const gestc::Resources res = [] {
    const std::string dir = GESTC_DATA_DIR;
    return gestc::load_resources({dir + "/vad_lexicon.tsv", dir + "/schema_lexicon.json",
                                  dir + "/pos_resources.json", std::nullopt});
  }();
  return res;
}

std::string corpus(int copies) {
  std::ifstream in(std::string(GESTC_DATA_DIR) + "/demo.txt");
  std::stringstream ss;
  ss << in.rdbuf();
  std::string text;
  for (int i = 0; i < copies; ++i) text += ss.str() + " ";
  return text;
}

const std::vector<gestc::SentencePlan>& analyzed(int copies) {
  static std::map<int, std::vector<gestc::SentencePlan>> cache;
  auto it = cache.find(copies);
  if (it == cache.end())
    it = cache.emplace(copies, gestc::analyze_text(corpus(copies), resources(), {})).first;
  return it->second;
}

void BM_PlanSerial(benchmark::State& state) {
  const auto& base = analyzed(static_cast<int>(state.range(0)));
  const gestc::PipelineOptions opts;
  for (auto _ : state) {
    auto plans = base;
    gestc::plan_sentences_serial(plans, resources(), opts);
    benchmark::DoNotOptimize(plans.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(base.size()));
}

void BM_PlanParallel(benchmark::State& state) {
  const auto& base = analyzed(static_cast<int>(state.range(0)));
  const gestc::PipelineOptions opts;
  const int threads = static_cast<int>(state.range(1));
  for (auto _ : state) {
    auto plans = base;
    gestc::plan_sentences_parallel(plans, resources(), opts, threads);
    benchmark::DoNotOptimize(plans.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(base.size()));
}

}  // namespace

BENCHMARK(BM_PlanSerial)->Arg(10)->Arg(200)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PlanParallel)
    ->ArgsProduct({{10, 200}, {2, 4, 8}})
    ->UseRealTime()
    ->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
