#include <benchmark/benchmark.h>

#include <random>

#include "leibniz/algebra.hpp"
#include "leibniz/primes.hpp"
#include "leibniz/series.hpp"

namespace {

using namespace leibniz;

Matrix random_rows(const FieldDescriptor& f, std::size_t rows, std::size_t cols, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<long> d(-9, 9);
  Matrix m;
  for (std::size_t r = 0; r < rows; ++r) {
    Vector v;
    for (std::size_t c = 0; c < cols; ++c) v.push_back(Scalar::from_int(f, d(rng)));
    m.push_back(std::move(v));
  }
  return m;
}

void BM_rref_rational(benchmark::State& state) {
  const auto f = FieldDescriptor::rationals();
  const auto n = static_cast<std::size_t>(state.range(0));
  const Matrix m = random_rows(f, n, n, 7);
  for (auto _ : state) benchmark::DoNotOptimize(Subspace::span(f, n, m));
}
BENCHMARK(BM_rref_rational)->Arg(8)->Arg(16)->Arg(32);

void BM_rref_gf5(benchmark::State& state) {
  const auto f = FieldDescriptor::prime_field(5);
  const auto n = static_cast<std::size_t>(state.range(0));
  const Matrix m = random_rows(f, n, n, 7);
  for (auto _ : state) benchmark::DoNotOptimize(Subspace::span(f, n, m));
}
BENCHMARK(BM_rref_gf5)->Arg(8)->Arg(16)->Arg(32);

LeibnizAlgebra heis3(const FieldDescriptor& f) {
  Vector e3 = unit_vector(f, 3, 2);
  return LeibnizAlgebra::build("heis3", 3, f,
                               {{1, 2, e3}, {2, 1, scale(-Scalar::one(f), e3)}});
}

void BM_ideal_enumeration_gf3(benchmark::State& state) {
  const auto g = heis3(FieldDescriptor::prime_field(3));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_ideals(g));
}
BENCHMARK(BM_ideal_enumeration_gf3);

void BM_derived_series(benchmark::State& state) {
  const auto f = FieldDescriptor::rationals();
  // the depth-12 snapshot of the countable chain family
  std::vector<BracketEntry> entries = {{1, 2, unit_vector(f, 12, 0)}};
  for (int i = 4; i < 12; ++i)
    entries.push_back({i, 3, unit_vector(f, 12, static_cast<std::size_t>(i))});
  const auto g = LeibnizAlgebra::build("ex2_12", 12, f, entries);
  for (auto _ : state) benchmark::DoNotOptimize(derived_series(g));
}
BENCHMARK(BM_derived_series);

}  // namespace

BENCHMARK_MAIN();
