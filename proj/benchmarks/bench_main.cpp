#include <benchmark/benchmark.h>

#include <string>

#include "rra/io.hpp"
#include "rra/meta.hpp"
#include "rra/sim.hpp"
#include "rra/transforms.hpp"

namespace {

std::string corpus(const std::string& name) { return std::string(RRA_CORPUS_DIR) + "/" + name; }

const rra::DeltaAutomaton& prop5() {
  static const rra::DeltaAutomaton a =
      rra::compile_meta_to_delta(rra::parse_meta(rra::read_text_file(corpus("prop5.meta"))));
  return a;
}

void BM_EnumerateProp5(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(rra::enumerate_language(prop5(), n));
}
BENCHMARK(BM_EnumerateProp5)->DenseRange(6, 10, 2)->Unit(benchmark::kMillisecond);

void BM_InterpretProp5(benchmark::State& state) {
  const rra::MetaAutomaton m = rra::parse_meta(rra::read_text_file(corpus("prop5.meta")));
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(rra::meta_enumerate(m, n));
}
BENCHMARK(BM_InterpretProp5)->DenseRange(6, 10, 2)->Unit(benchmark::kMillisecond);

void BM_Member(benchmark::State& state) {
  const rra::Word w = rra::parse_word("ababababcdcdcdcd", prop5().symbols());
  for (auto _ : state) benchmark::DoNotOptimize(rra::member(prop5(), w));
}
BENCHMARK(BM_Member);

void BM_Compile(benchmark::State& state) {
  const rra::MetaAutomaton m = rra::parse_meta(rra::read_text_file(corpus("prop6-rr3.meta")));
  for (auto _ : state) benchmark::DoNotOptimize(rra::compile_meta_to_delta(m, rra::CompileMode::head));
}
BENCHMARK(BM_Compile)->Unit(benchmark::kMillisecond);

void BM_ReduceLookahead(benchmark::State& state) {
  const rra::DeltaAutomaton a = rra::parse_delta(rra::read_text_file(corpus("mirror-rr3.delta")));
  for (auto _ : state) benchmark::DoNotOptimize(rra::reduce_lookahead(a));
}
BENCHMARK(BM_ReduceLookahead)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
