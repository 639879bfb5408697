// Microbenchmarks for the enumeration-heavy paths: category closure (with its
// pullback tables), sieve tables, ideal and class censuses, and subpresheaf
// sweeps.  Generated posets give a size dial that stays inside the library
// caps (64 morphisms, 4096 sieves per object).

#include <benchmark/benchmark.h>

#include <string>
#include <utility>
#include <vector>

#include "fintopos/admissible.hpp"
#include "fintopos/fincat.hpp"
#include "fintopos/fixtures.hpp"
#include "fintopos/ideal.hpp"
#include "fintopos/omega.hpp"
#include "fintopos/presheaf.hpp"

using namespace fintopos;

namespace {

// the linear order 0 < 1 < ... < n-1; reflexive-transitive closure adds
// n(n+1)/2 arrows total
RawCategory chain(int n) {
  std::vector<std::string> objects;
  std::vector<std::pair<std::string, std::string>> le;
  for (int i = 0; i < n; ++i) objects.push_back(std::to_string(i));
  for (int i = 0; i + 1 < n; ++i) le.push_back({objects[i], objects[i + 1]});
  return poset_category("chain" + std::to_string(n), objects, le);
}

// the boolean lattice on `bits` atoms, objects named by their bit patterns
RawCategory cube(int bits) {
  std::vector<std::string> objects;
  std::vector<std::pair<std::string, std::string>> le;
  for (int s = 0; s < (1 << bits); ++s) {
    std::string name;
    for (int b = 0; b < bits; ++b) name += ((s >> b) & 1) ? '1' : '0';
    objects.push_back(name);
  }
  for (int s = 0; s < (1 << bits); ++s)
    for (int b = 0; b < bits; ++b)
      if (!((s >> b) & 1)) le.push_back({objects[s], objects[s | (1 << b)]});
  return poset_category("cube" + std::to_string(bits), objects, le);
}

void BM_category_closure_chain(benchmark::State& state) {
  auto raw = chain(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto cat = FinCat::build(raw);
    benchmark::DoNotOptimize(cat.morphism_count());
  }
}

void BM_category_closure_cube(benchmark::State& state) {
  auto raw = cube(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto cat = FinCat::build(raw);
    benchmark::DoNotOptimize(cat.morphism_count());
  }
}

void BM_sieve_tables_chain(benchmark::State& state) {
  auto cat = FinCat::build(chain(static_cast<int>(state.range(0))));
  for (auto _ : state) {
    auto om = build_omega(cat);
    benchmark::DoNotOptimize(om.pre.total_elements());
  }
}

void BM_sieve_tables_cube(benchmark::State& state) {
  auto cat = FinCat::build(cube(static_cast<int>(state.range(0))));
  for (auto _ : state) {
    auto om = build_omega(cat);
    benchmark::DoNotOptimize(om.pre.total_elements());
  }
}

void BM_ideal_census_chain(benchmark::State& state) {
  auto cat = FinCat::build(chain(static_cast<int>(state.range(0))));
  auto om = build_omega(cat);
  for (auto _ : state) {
    auto ideals = enumerate_ideals(cat, om);
    benchmark::DoNotOptimize(ideals.size());
  }
}

void BM_class_census_chain(benchmark::State& state) {
  auto cat = FinCat::build(chain(static_cast<int>(state.range(0))));
  for (auto _ : state) {
    auto classes = enumerate_admissible_classes(cat);
    benchmark::DoNotOptimize(classes.size());
  }
}

void BM_subpresheaves_of_omega_chain(benchmark::State& state) {
  auto cat = FinCat::build(chain(static_cast<int>(state.range(0))));
  auto om = build_omega(cat);
  for (auto _ : state) {
    auto subs = enumerate_subpresheaves(om.pre);
    benchmark::DoNotOptimize(subs.size());
  }
}

void BM_ideal_topology_flags_diamond(benchmark::State& state) {
  auto cat = FinCat::build(diamond_category());
  auto om = build_omega(cat);
  auto ideals = enumerate_ideals(cat, om);
  for (auto _ : state)
    for (const auto& ideal : ideals)
      benchmark::DoNotOptimize(check_weak_topology(weak_ideal_topology(ideal, om)).topology());
}

void BM_member_topology_cube(benchmark::State& state) {
  auto cat = FinCat::build(cube(static_cast<int>(state.range(0))));
  auto om = build_omega(cat);
  auto monos = all_monos_class(cat);
  for (auto _ : state)
    benchmark::DoNotOptimize(check_weak_topology(topology_from_m(om, monos)).topology());
}

}  // namespace

BENCHMARK(BM_category_closure_chain)->DenseRange(3, 8);
BENCHMARK(BM_category_closure_cube)->DenseRange(2, 3);
BENCHMARK(BM_sieve_tables_chain)->DenseRange(3, 8);
BENCHMARK(BM_sieve_tables_cube)->DenseRange(2, 3);
BENCHMARK(BM_ideal_census_chain)->DenseRange(3, 6);
BENCHMARK(BM_class_census_chain)->DenseRange(3, 6);
BENCHMARK(BM_subpresheaves_of_omega_chain)->DenseRange(3, 5);
BENCHMARK(BM_ideal_topology_flags_diamond);
BENCHMARK(BM_member_topology_cube)->DenseRange(2, 3);

BENCHMARK_MAIN();
