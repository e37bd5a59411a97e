#include <benchmark/benchmark.h>

#include "covhom/cell_complex.hpp"
#include "covhom/character_table.hpp"
#include "covhom/chevalley_weil.hpp"
#include "covhom/cyclo.hpp"
#include "covhom/group.hpp"

namespace {

using namespace covhom;

GroupPtr symmetric4() {
  return FiniteGroup::enumerate(
      {Perm::parse_cycles("(1 2)", 4), Perm::parse_cycles("(1 2 3 4)", 4)});
}

// Torus branched over three points, the Z/11 example with a genus 16 cover.
CoverSpec degree11_spec(const GroupPtr& g) {
  const Elem s = g->generators()[0];
  return CoverSpec{g,
                   BaseKind::Closed,
                   1,
                   {{g->identity(), g->identity()}},
                   {g->power(s, 2), g->power(s, 4), g->power(s, 5)}};
}

// Group enumeration plus the Dixon table; the table cache is keyed on the
// group instance, so a fresh group per iteration measures a cold build.
void BM_character_table_s4(benchmark::State& state) {
  for (auto _ : state) {
    const GroupPtr g = symmetric4();
    benchmark::DoNotOptimize(CharacterTable::of(g));
  }
}
BENCHMARK(BM_character_table_s4);

void BM_cyclo_norm_product(benchmark::State& state) {
  const long p = 101;
  for (auto _ : state) {
    Cyclo prod(1);
    for (long a = 1; a < p; ++a) prod *= Cyclo(1) - Cyclo::zeta(p, a);
    benchmark::DoNotOptimize(prod);
  }
}
BENCHMARK(BM_cyclo_norm_product);

void BM_oracle_h1_degree11(benchmark::State& state) {
  const GroupPtr g = cyclic_group(11);
  const CoverSpec spec = degree11_spec(g);
  for (auto _ : state) {
    benchmark::DoNotOptimize(h1_character(fill_cover(build_punctured_cover(spec))));
  }
}
BENCHMARK(BM_oracle_h1_degree11);

void BM_hodge_split_degree11(benchmark::State& state) {
  const GroupPtr g = cyclic_group(11);
  const CoverSpec spec = degree11_spec(g);
  for (auto _ : state) {
    benchmark::DoNotOptimize(hodge_split(spec));
  }
}
BENCHMARK(BM_hodge_split_degree11);

void BM_closed_extension_search_s4(benchmark::State& state) {
  const GroupPtr g = symmetric4();
  for (auto _ : state) {
    benchmark::DoNotOptimize(extend_to_closed_surface(g, {}, 2));
  }
}
BENCHMARK(BM_closed_extension_search_s4);

void BM_all_subgroups_s4(benchmark::State& state) {
  const GroupPtr g = symmetric4();
  for (auto _ : state) {
    benchmark::DoNotOptimize(all_subgroups(g));
  }
}
BENCHMARK(BM_all_subgroups_s4);

}  // namespace

BENCHMARK_MAIN();
