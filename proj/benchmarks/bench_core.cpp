#include <benchmark/benchmark.h>

#include "logquant/indexcalc.hpp"

namespace {

using namespace logquant;

void BM_QuantizeS2(benchmark::State& state) {
  const auto d = s2_family(0, state.range(0)).first;
  for (auto _ : state) benchmark::DoNotOptimize(quantize_lattice(d));
}
BENCHMARK(BM_QuantizeS2)->Arg(4)->Arg(64)->Arg(1024);

void BM_AtiyahBottS2(benchmark::State& state) {
  const auto terms = fixed_terms_s2(0, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(atiyah_bott(terms));
}
BENCHMARK(BM_AtiyahBottS2)->Arg(4)->Arg(64)->Arg(1024);

Polyhedron square(std::int64_t n) { return box_polyhedron({{Rational(0), Rational(n)}, {Rational(0), Rational(n)}}); }

void BM_QuantizeSquare(benchmark::State& state) {
  const auto d = delzant(square(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(quantize_lattice(d));
}
BENCHMARK(BM_QuantizeSquare)->Arg(2)->Arg(8)->Arg(32);

void BM_QrCheckSquare(benchmark::State& state) {
  const auto p = square(state.range(0));
  const auto d = delzant(p);
  const auto terms = fixed_terms_delzant(p);
  for (auto _ : state) benchmark::DoNotOptimize(qr_check(d, terms));
}
BENCHMARK(BM_QrCheckSquare)->Arg(2)->Arg(8);

void BM_Su2Decompose(benchmark::State& state) {
  LaurentPoly p;
  for (std::int64_t j = 0; j < state.range(0); ++j) p = p + weyl_char(j);
  for (auto _ : state) benchmark::DoNotOptimize(su2_decompose(p));
}
BENCHMARK(BM_Su2Decompose)->Arg(8)->Arg(64);

}  // namespace

BENCHMARK_MAIN();
