// Parallel SSIM kernel against its serial twin and the brute-force reference,
// plus the whole pipeline at several thread counts.

#include <benchmark/benchmark.h>

#include <random>

#include "facesym/analysis.hpp"
#include "facesym/ssim.hpp"
#include "facesym/synthetic.hpp"
#include "support/ssim_reference.hpp"
#include "support/temp_dir.hpp"

namespace {

using namespace facesym;

struct Pair {
  GrayImage a;
  GrayImage b;
};

Pair make_pair(int size) {
  std::mt19937_64 rng(static_cast<std::uint64_t>(size));
  return {testing::random_image(size, size, rng), testing::random_image(size, size, rng)};
}

void BM_SsimParallel(benchmark::State& state) {
  const Pair p = make_pair(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(ssim_map(p.a, p.b));
}

void BM_SsimSerial(benchmark::State& state) {
  const Pair p = make_pair(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(ssim_map_serial(p.a, p.b));
}

void BM_SsimReference(benchmark::State& state) {
  const Pair p = make_pair(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(testing::reference_ssim_map(p.a, p.b, {}));
}

BENCHMARK(BM_SsimParallel)->Arg(64)->Arg(128)->Arg(256)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_SsimSerial)->Arg(64)->Arg(128)->Arg(256)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_SsimReference)->Arg(64)->Arg(128)->Unit(benchmark::kMicrosecond);

void BM_Pipeline(benchmark::State& state) {
  static testing::TempDir dir("facesym-bench");
  static const auto fx = synthetic::write_fixture(synthetic::injected_dip_video(), dir.path());
  static const FrameManifest manifest = load_manifest(fx.manifest);
  const LandmarkSource source{fx.sidecar, std::nullopt};
  PipelineConfig cfg;
  cfg.jobs = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(run_pipeline(manifest, source, cfg));
}

BENCHMARK(BM_Pipeline)->Arg(1)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
