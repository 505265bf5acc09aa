#include "mckayq/catalog.hpp"

#include <benchmark/benchmark.h>

using namespace mckayq;

namespace {

void BM_Analyze(benchmark::State& state, std::string const& name)
{
    JobSpec const& job = catalog_entry(name).job;
    for (auto _ : state) benchmark::DoNotOptimize(analyze(job));
}

void BM_CharacterTable(benchmark::State& state, std::string const& name)
{
    JobSpec const& job = catalog_entry(name).job;
    auto f = make_field(job.field);
    FiniteGroup G = FiniteGroup::generate(f, job.d, parse_generators(*f, job), job.cap);
    std::vector<long> galois = job.galois.empty() ? std::vector<long>{f->aut_identity()} : job.galois;
    Kernel K = kernel_and_cosets(G, galois);
    for (auto _ : state) benchmark::DoNotOptimize(character_table(G, K));
}

void BM_CyclotomicMul(benchmark::State& state)
{
    auto f = Field::cyclotomic(state.range(0));
    FieldElement x = f->parse("z + 2*z^2 - 1/3");
    FieldElement y = f->parse("z^3 - z + 5");
    for (auto _ : state) {
        x = f->mul(x, y);
        benchmark::DoNotOptimize(x);
        x = f->div(x, y);
    }
}

void BM_DotEmit(benchmark::State& state)
{
    Report r = analyze(catalog_entry("ade-E8").job);
    for (auto _ : state) benchmark::DoNotOptimize(emit_dot(*r.quiver, true));
}

}  // namespace

BENCHMARK_CAPTURE(BM_Analyze, typeCL_n4, std::string("typeCL-n4"))->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Analyze, typeG22, std::string("typeG22"))->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Analyze, nongor, std::string("nongor"))->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Analyze, d3_gorenstein, std::string("d3-gorenstein-n2"))->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Analyze, ade_E8, std::string("ade-E8"))->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_CharacterTable, ade_E7, std::string("ade-E7"))->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_CharacterTable, ade_E8, std::string("ade-E8"))->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CyclotomicMul)->Arg(8)->Arg(24)->Arg(60);
BENCHMARK(BM_DotEmit);

BENCHMARK_MAIN();
