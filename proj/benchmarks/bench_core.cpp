// Micro benchmarks for the hot paths: integer normal forms, Hilbert bases,
// and the Cech assembly. Sizes are chosen so a full run stays under a few
// seconds; pass --benchmark_filter to narrow.

#include <benchmark/benchmark.h>

#include <random>

#include "toric/cohomology.hpp"
#include "toric/picard.hpp"

using namespace toric;

namespace {

IntMatrix random_matrix(std::size_t n, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> entry(-9, 9);
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.at(i, j) = entry(rng);
  return m;
}

Fan projective_plane() {
  return Fan::from_maximal_cones(2, {vec_of({-1, -1}), vec_of({0, 1}), vec_of({1, 0})},
                                 {{0, 1}, {0, 2}, {1, 2}});
}

Fan quadric_surface() {
  return Fan::from_maximal_cones(
      2, {vec_of({-1, 0}), vec_of({0, -1}), vec_of({0, 1}), vec_of({1, 0})},
      {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
}

void BM_SmithNormalForm(benchmark::State& state) {
  IntMatrix m = random_matrix(std::size_t(state.range(0)), 7u * unsigned(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(m));
}
BENCHMARK(BM_SmithNormalForm)->Arg(4)->Arg(6)->Arg(8)->Arg(12);

void BM_HermiteNormalForm(benchmark::State& state) {
  IntMatrix m = random_matrix(std::size_t(state.range(0)), 11u * unsigned(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(hermite_normal_form(m));
}
BENCHMARK(BM_HermiteNormalForm)->Arg(4)->Arg(8)->Arg(12);

void BM_KernelBasis(benchmark::State& state) {
  std::size_t n = std::size_t(state.range(0));
  IntMatrix m = random_matrix(n, 13u * unsigned(n));
  // knock out two pivots so the kernel is nontrivial
  for (std::size_t j = 0; j < n; ++j) {
    m.at(0, j) = m.at(1, j);
    if (n > 2) m.at(2, j) = m.at(1, j) + m.at(3 % n, j);
  }
  for (auto _ : state) benchmark::DoNotOptimize(kernel_basis(m));
}
BENCHMARK(BM_KernelBasis)->Arg(4)->Arg(8)->Arg(12);

// dual monoid of a wide simplicial cone; generator count grows with the index
void BM_HilbertBasis(benchmark::State& state) {
  long k = state.range(0);
  Polycone dual = Polycone::from_inequalities({vec_of({1, 0}), vec_of({-k, k + 1})}, 2);
  for (auto _ : state) benchmark::DoNotOptimize(hilbert_basis(dual));
}
BENCHMARK(BM_HilbertBasis)->Arg(5)->Arg(25)->Arg(125);

void BM_CoxGrading(benchmark::State& state) {
  Fan f = quadric_surface();
  for (auto _ : state) benchmark::DoNotOptimize(cox_grading(f));
}
BENCHMARK(BM_CoxGrading);

void BM_PicardGroup(benchmark::State& state) {
  Fan f = quadric_surface();
  CoxGrading g = cox_grading(f);
  for (auto _ : state) benchmark::DoNotOptimize(picard_group(f, g));
}
BENCHMARK(BM_PicardGroup);

// full Cech pass on the projective plane at an interesting degree; the box
// radius drives the chamber enumeration cost
void BM_CechAssembly(benchmark::State& state) {
  CoxSetup s = make_setup(projective_plane());
  MonomialModule sheaf{{Summand{s.grading.class_group.zero(), MonomialIdeal{}}}};
  GroupElement deg = s.grading.class_group.scale(-3, s.grading.ray_degrees[0]);
  long box = state.range(0);
  for (auto _ : state)
    benchmark::DoNotOptimize(cech_cohomology(s, sheaf, deg, BaseRing::integers(), box));
}
BENCHMARK(BM_CechAssembly)->Arg(4)->Arg(8)->Arg(16);

void BM_SerreGrothendieck(benchmark::State& state) {
  CoxSetup s = make_setup(projective_plane());
  MonomialModule quotient{{Summand{
      s.grading.class_group.zero(),
      MonomialIdeal{{vec_of({2, 0, 0}), vec_of({1, 1, 0}), vec_of({1, 0, 1})}}}}};
  std::vector<GroupElement> degrees;
  for (long k = -3; k <= 3; ++k)
    degrees.push_back(s.grading.class_group.scale(k, s.grading.ray_degrees[0]));
  for (auto _ : state)
    benchmark::DoNotOptimize(
        serre_grothendieck_check(s, quotient, degrees, BaseRing::integers()));
}
BENCHMARK(BM_SerreGrothendieck);

void BM_Saturate(benchmark::State& state) {
  MonomialIdeal irr{{vec_of({0, 0, 1}), vec_of({0, 1, 0}), vec_of({1, 0, 0})}};
  MonomialIdeal fat{{vec_of({3, 1, 0}), vec_of({2, 0, 2}), vec_of({1, 3, 1}),
                     vec_of({0, 2, 3}), vec_of({4, 0, 0})}};
  for (auto _ : state) benchmark::DoNotOptimize(saturate(fat, irr));
}
BENCHMARK(BM_Saturate);

}  // namespace

BENCHMARK_MAIN();
