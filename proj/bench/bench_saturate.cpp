// Serial reference vs OpenMP rounds of the semi-naive saturation.
#include "indukt/frontend.hpp"
#include "indukt/rsys.hpp"

#include <benchmark/benchmark.h>

#include <map>

using namespace indukt;

namespace {

const MathSystem& system_named(const char* file) {
    static std::map<std::string, MathSystem> cache;
    auto it = cache.find(file);
    if (it == cache.end()) it = cache.emplace(file, load_system(corpus_path(file))).first;
    return it->second;
}

void run(benchmark::State& st, const char* file, Exec e) {
    const MathSystem& m = system_named(file);
    auto bound = static_cast<std::size_t>(st.range(0));
    std::size_t facts = 0;
    for (auto _ : st) {
        FactSet fs = saturate(m.S, m.lang, bound, 2'000'000, e);
        facts = fs.facts.size();
        benchmark::DoNotOptimize(facts);
    }
    st.counters["facts"] = static_cast<double>(facts);
}

void BM_serial(benchmark::State& st, const char* file) { run(st, file, Exec::Serial); }
void BM_parallel(benchmark::State& st, const char* file) { run(st, file, Exec::Parallel); }

}  // namespace

BENCHMARK_CAPTURE(BM_serial, dual, "dual.msys")->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_parallel, dual, "dual.msys")->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_serial, spa, "spa.msys")->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_parallel, spa, "spa.msys")->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
