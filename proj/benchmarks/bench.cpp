/*
 * Copyright 2026 The rampqss developers.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE file in the root directory of this source tree.
 */

#include <benchmark/benchmark.h>

#include "rqss/access.hpp"
#include "rqss/recover.hpp"
#include "rqss/rng.hpp"
#include "rqss/scheme.hpp"

using namespace rqss;

namespace {

qss::Scheme make_scheme(const benchmark::State& state) {
  return qss::Scheme(qss::SchemeParams::make(
      static_cast<std::uint64_t>(state.range(0)), static_cast<std::uint64_t>(state.range(1)),
      static_cast<std::uint64_t>(state.range(2))));
}

void BM_SchemeBuild(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(make_scheme(state));
  }
}
BENCHMARK(BM_SchemeBuild)->Args({3, 2, 1})->Args({5, 3, 2})->Args({7, 3, 1});

void BM_Encode(benchmark::State& state) {
  const auto scheme = make_scheme(state);
  rng::SplitMix gen(7);
  const auto psi = qlin::random_pure_state(
      std::vector<qlin::Index>(scheme.params().L, static_cast<qlin::Index>(scheme.params().q)),
      gen);
  for (auto _ : state) {
    benchmark::DoNotOptimize(scheme.encode_sparse(psi));
  }
}
BENCHMARK(BM_Encode)->Args({3, 2, 1})->Args({5, 3, 2})->Args({7, 3, 1});

void BM_ClassifySubset(benchmark::State& state) {
  const auto scheme = make_scheme(state);
  std::vector<int> x(scheme.params().k - 1);
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = static_cast<int>(i);
  for (auto _ : state) {
    benchmark::DoNotOptimize(access::classify(scheme, x));
  }
}
BENCHMARK(BM_ClassifySubset)->Args({3, 2, 1})->Args({5, 3, 2})->Args({7, 3, 1});

void BM_AccessStructure(benchmark::State& state) {
  const auto scheme = make_scheme(state);
  for (auto _ : state) {
    benchmark::DoNotOptimize(access::access_structure(scheme));
  }
}
BENCHMARK(BM_AccessStructure)->Args({3, 2, 1})->Args({5, 3, 2});

void BM_Decode(benchmark::State& state) {
  const auto scheme = make_scheme(state);
  std::vector<int> x(scheme.params().k);
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = static_cast<int>(i);
  const auto dec = recover::build_decoder(scheme, x);
  rng::SplitMix gen(7);
  const auto psi = qlin::random_pure_state(
      std::vector<qlin::Index>(scheme.params().L, static_cast<qlin::Index>(scheme.params().q)),
      gen);
  const auto rho_x = scheme.reduced_state(psi, x);
  for (auto _ : state) {
    benchmark::DoNotOptimize(dec.decode(rho_x));
  }
}
BENCHMARK(BM_Decode)->Args({3, 2, 1})->Args({5, 3, 2})->Args({7, 3, 1});

}  // namespace

BENCHMARK_MAIN();
