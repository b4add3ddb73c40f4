// OpenMP kernels against their serial twins. The census twin is a brute-force
// enumeration used as an independent oracle, so its timing is not a like-for-like
// measure of the parallel speedup; the other three share one algorithm.

#include <benchmark/benchmark.h>

#include "klein/group.hpp"
#include "klein/torus.hpp"

using namespace klein;

namespace {

const Group& G() { return Group::instance(); }

ElementIndex make_index() {
  ElementIndex idx;
  const auto t = G().int6_table();
  for (std::size_t i = 0; i < t.size(); ++i) idx.emplace(t[i], static_cast<ElementId>(i));
  return idx;
}

std::vector<TorusPoint> points() {
  std::vector<TorusPoint> p;
  for (int k = 0; k < 64; ++k) p.push_back(xi(k));
  return p;
}

template <bool Parallel>
void BM_cayley(benchmark::State& st) {
  const auto idx = make_index();
  for (auto _ : st) {
    auto t = Parallel ? kernels::cayley_table(G().int6_table(), idx) : kernels::cayley_table_serial(G().int6_table(), idx);
    benchmark::DoNotOptimize(t.data());
  }
}

template <bool Parallel>
void BM_stabilizer(benchmark::State& st) {
  const auto all = G().ambient_set(Ambient::G);
  const auto u = eta(1);
  for (auto _ : st) {
    auto m = Parallel ? kernels::stabilizer_mask(G().int6_table(), all, u)
                      : kernels::stabilizer_mask_serial(G().int6_table(), all, u);
    benchmark::DoNotOptimize(m);
  }
}

template <bool Parallel>
void BM_orbits(benchmark::State& st) {
  const auto all = G().ambient_set(Ambient::G);
  const auto pts = points();
  for (auto _ : st) {
    auto p = Parallel ? kernels::orbit_partition(G().int6_table(), all, pts)
                      : kernels::orbit_partition_serial(G().int6_table(), all, pts);
    benchmark::DoNotOptimize(p.data());
  }
}

template <bool Parallel>
void BM_census(benchmark::State& st) {
  for (auto _ : st) {
    auto c = Parallel ? kernels::fixed_point_census(G()) : kernels::fixed_point_census_serial(G());
    benchmark::DoNotOptimize(c.data());
  }
}

}  // namespace

BENCHMARK(BM_cayley<true>)->Name("cayley_table/parallel")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_cayley<false>)->Name("cayley_table/serial")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_stabilizer<true>)->Name("stabilizer_mask/parallel");
BENCHMARK(BM_stabilizer<false>)->Name("stabilizer_mask/serial");
BENCHMARK(BM_orbits<true>)->Name("orbit_partition/parallel")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_orbits<false>)->Name("orbit_partition/serial")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_census<true>)->Name("fixed_point_census/parallel")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_census<false>)->Name("fixed_point_census/serial")->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
