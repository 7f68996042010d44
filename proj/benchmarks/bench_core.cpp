#include <benchmark/benchmark.h>

#include "univoque/automaton.hpp"
#include "univoque/base_solver.hpp"
#include "univoque/dimension.hpp"
#include "univoque/expansion.hpp"
#include "univoque/thue_morse.hpp"

using namespace univoque;

namespace {

const Alphabet M1(1);

void BM_quasi_greedy_rational(benchmark::State& state) {
    PrecisionReal x = PrecisionReal::from_decimal("0.73112948712341");
    PrecisionReal q = PrecisionReal::from_decimal("1.83321238412333");
    for (auto _ : state)
        benchmark::DoNotOptimize(quasi_greedy_expand(x, q, static_cast<int>(state.range(0)), M1));
}
BENCHMARK(BM_quasi_greedy_rational)->Arg(32)->Arg(64)->Arg(128);

void BM_quasi_greedy_quadratic(benchmark::State& state) {
    PrecisionReal q = golden_ratio_base(M1);
    PrecisionReal x = PrecisionReal::from_int(1);
    for (auto _ : state)
        benchmark::DoNotOptimize(quasi_greedy_expand(x, q, static_cast<int>(state.range(0)), M1));
}
BENCHMARK(BM_quasi_greedy_quadratic)->Arg(32)->Arg(64);

void BM_pi_periodic(benchmark::State& state) {
    EventuallyPeriodicWord w = c_family(5, 6); // preperiod ~112, period 32
    Rational q = parse_decimal("1.7712362");
    for (auto _ : state) benchmark::DoNotOptimize(pi_q_exact(w, q));
}
BENCHMARK(BM_pi_periodic);

void BM_invert_base(benchmark::State& state) {
    EventuallyPeriodicWord w = parse_sequence("(10)", M1);
    PrecisionReal one = PrecisionReal::from_int(1);
    Rational tol(1, pow_big(10, static_cast<unsigned>(state.range(0))));
    for (auto _ : state) benchmark::DoNotOptimize(invert_base(w, one, tol));
}
BENCHMARK(BM_invert_base)->Arg(12)->Arg(40);

void BM_automaton_build(benchmark::State& state) {
    AlphaInfo a = alpha_info(PrecisionReal::from_decimal("1.9"), static_cast<int>(state.range(0)), M1);
    for (auto _ : state)
        benchmark::DoNotOptimize(LexShiftAutomaton::build(a.prefix, WindowStrictness::inner));
}
BENCHMARK(BM_automaton_build)->Arg(12)->Arg(16)->Arg(20);

void BM_count_words(benchmark::State& state) {
    AlphaInfo a = alpha_info(PrecisionReal::from_decimal("1.9"), 16, M1);
    LexShiftAutomaton inner = LexShiftAutomaton::build(a.prefix, WindowStrictness::inner);
    for (auto _ : state) benchmark::DoNotOptimize(inner.count_words(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_count_words)->Arg(24)->Arg(48);

void BM_dim_bracket(benchmark::State& state) {
    PrecisionReal q = PrecisionReal::from_decimal("1.9");
    for (auto _ : state) benchmark::DoNotOptimize(dim_Uq(q, M1, 16, 48));
}
BENCHMARK(BM_dim_bracket);

} // namespace

BENCHMARK_MAIN();
