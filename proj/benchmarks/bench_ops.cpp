#include <benchmark/benchmark.h>

#include "lva/harness.hpp"
#include "lva/vertexops.hpp"

using namespace lva;

namespace {

LatticePtr a1() {
    static LatticePtr lat = Lattice::make({{2}});
    return lat;
}

void BM_bernstein_mode(benchmark::State& state) {
    SymPoly f = schur_by_vertex(Partition{3, 2, 1});
    int m = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(bernstein_mode(m, f));
}
BENCHMARK(BM_bernstein_mode)->Arg(-2)->Arg(-4);

void BM_jacobi_trudi(benchmark::State& state) {
    Partition lam{4, 3, 2, 1};
    for (auto _ : state) benchmark::DoNotOptimize(jacobi_trudi(lam));
}
BENCHMARK(BM_jacobi_trudi);

void BM_y_lattice_mode(benchmark::State& state) {
    LatticeVector al{Rational(1)};
    FockElement u = random_element(a1(), zero_vector(1), static_cast<int>(state.range(0)), 5);
    for (auto _ : state) benchmark::DoNotOptimize(y_lattice_mode(al, -2, u));
}
BENCHMARK(BM_y_lattice_mode)->Arg(3)->Arg(6);

void BM_y_general_mode(benchmark::State& state) {
    LatticeVector al{Rational(1)};
    VertexWord v{{{al, 1}}, al};
    FockElement u = random_element(a1(), zero_vector(1), static_cast<int>(state.range(0)), 5);
    for (auto _ : state) benchmark::DoNotOptimize(y_general_mode(v, -2, u));
}
BENCHMARK(BM_y_general_mode)->Arg(2)->Arg(4);

void BM_divided_power(benchmark::State& state) {
    LatticeVector al{Rational(1)};
    VertexWord v{{}, al};
    FockElement u = random_element(a1(), zero_vector(1), 3, 5);
    int r = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(divided_power(v, -1, r, u));
}
BENCHMARK(BM_divided_power)->Arg(2)->Arg(3);

void BM_to_h_basis(benchmark::State& state) {
    FockElement u = random_element(a1(), zero_vector(1), static_cast<int>(state.range(0)), 5);
    LatticeVector al{Rational(1)};
    u = heis_mode(al, -3, heis_mode(al, -2, u));
    for (auto _ : state) benchmark::DoNotOptimize(to_h_basis(u));
}
BENCHMARK(BM_to_h_basis)->Arg(4)->Arg(8);

} // namespace

BENCHMARK_MAIN();
