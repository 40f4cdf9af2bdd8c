// Serial reference vs OpenMP assembly on the beam, for both method families.
//   bench_assembly --benchmark_filter=Dmlpg

#include "dmlpg/benchmarks/study.hpp"

#include <benchmark/benchmark.h>

#include <map>

using namespace dmlpg;

namespace {

const ProblemSetup& beam(int level)
{
    static std::map<int, ProblemSetup> setups;
    auto it = setups.find(level);
    if (it == setups.end()) it = setups.emplace(level, make_problem(ProblemConfig{}, level)).first;
    return it->second;
}

void run(benchmark::State& state, Method method, bool parallel, bool cache)
{
    const int level = static_cast<int>(state.range(0));
    const ProblemSetup& s = beam(level);
    const BoundaryData data = s.exact.boundary_data();
    AssemblyOptions base;
    base.method = method;
    AssemblyOptions opts = options_for(ProblemConfig{}, base);
    opts.parallel = parallel;
    opts.use_cache = cache;
    std::size_t evals = 0;
    for (auto _ : state) {
        GlobalSystem sys = assemble(s.nodes, s.geometry, s.exact.material, data, opts);
        evals = sys.stats.shape_evaluations;
        benchmark::DoNotOptimize(sys.K.nonZeros());
    }
    state.counters["nodes"] = static_cast<double>(s.nodes.size());
    state.counters["shape_evals"] = static_cast<double>(evals);
}

void DmlpgSerial(benchmark::State& s) { run(s, Method::dmlpg1, false, true); }
void DmlpgParallel(benchmark::State& s) { run(s, Method::dmlpg1, true, true); }
void DmlpgSerialNoCache(benchmark::State& s) { run(s, Method::dmlpg1, false, false); }
void DmlpgParallelNoCache(benchmark::State& s) { run(s, Method::dmlpg1, true, false); }
void MlpgSerial(benchmark::State& s) { run(s, Method::mlpg1, false, true); }
void MlpgParallel(benchmark::State& s) { run(s, Method::mlpg1, true, true); }

}  // namespace

BENCHMARK(DmlpgSerial)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(DmlpgParallel)->DenseRange(0, 3)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(DmlpgSerialNoCache)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(DmlpgParallelNoCache)->DenseRange(0, 3)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(MlpgSerial)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(MlpgParallel)->DenseRange(0, 2)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
