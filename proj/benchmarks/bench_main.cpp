#include <benchmark/benchmark.h>

#include "exc/groups.hpp"
#include "exc/lie.hpp"
#include "exc/linalg_exact.hpp"
#include "exc/linalg_float.hpp"
#include "exc/orbits.hpp"
#include "exc/rng.hpp"

using namespace exc;

namespace {

void BM_JordanMulExact(benchmark::State& state) {
    Rng rng(1);
    JordanQ x, y;
    for (std::size_t k = 0; k < 3; ++k) {
        x.xi[k] = rng.rational();
        x.x[k] = rng.oct_rat();
        y.xi[k] = rng.rational();
        y.x[k] = rng.oct_rat();
    }
    for (auto _ : state) benchmark::DoNotOptimize(jmul(x, y));
}
BENCHMARK(BM_JordanMulExact);

void BM_F4ConstraintAssembly(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(f4_constraint_rows());
}
BENCHMARK(BM_F4ConstraintAssembly);

void BM_F4DerivationSolve(benchmark::State& state) {
    auto rows = f4_constraint_rows();
    for (auto _ : state) benchmark::DoNotOptimize(sparse_nullspace(rows, 27 * 27));
}
BENCHMARK(BM_F4DerivationSolve)->Unit(benchmark::kMillisecond);

void BM_F4ModularRank(benchmark::State& state) {
    auto rows = f4_constraint_rows();
    for (auto _ : state) benchmark::DoNotOptimize(sparse_modular_rank(rows, 27 * 27));
}
BENCHMARK(BM_F4ModularRank)->Unit(benchmark::kMillisecond);

void BM_RealizeE7Element(benchmark::State& state) {
    E7Elem e{MatQ(), JordanQ::Ek(2) - JordanQ::Ek(3), complexify(JordanQ::Ek(1)), Rat(1)};
    for (auto _ : state) benchmark::DoNotOptimize(realize_e7(e));
}
BENCHMARK(BM_RealizeE7Element)->Unit(benchmark::kMillisecond);

void BM_MatrixExp112(benchmark::State& state) {
    Rng rng(2);
    MatD t(112, 112);
    for (auto& x : t.data()) x = rng.uniform(-0.05, 0.05);
    for (auto _ : state) benchmark::DoNotOptimize(matrix_exp(t));
}
BENCHMARK(BM_MatrixExp112)->Unit(benchmark::kMillisecond);

void BM_ExactBracket112(benchmark::State& state) {
    const auto& basis = family_subalgebra(FamilyId::L3_18).ops;
    for (auto _ : state) benchmark::DoNotOptimize(commutator(basis[0], basis[20]));
}
BENCHMARK(BM_ExactBracket112)->Unit(benchmark::kMillisecond);

void BM_CanonicalizeS7(benchmark::State& state) {
    Rng rng(3);
    for (auto _ : state) {
        VPoint p = sample_sphere(VTag::V8, rng);
        benchmark::DoNotOptimize(canonicalize_s7(p, 1e-12));
    }
}
BENCHMARK(BM_CanonicalizeS7)->Unit(benchmark::kMillisecond);

void BM_IsE7Lambda(benchmark::State& state) {
    MatD l = to_float(lambda_op());
    Rng rng(4);
    for (auto _ : state) benchmark::DoNotOptimize(e7_residual(l, 3, rng));
}
BENCHMARK(BM_IsE7Lambda)->Unit(benchmark::kMillisecond);

void BM_FixedSubalgebraE7(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(fixed_subalgebra(
            e7_algebra(), {sigma_op(Basis::PC112).mat, gamma_op(Basis::PC112).mat}));
    }
}
BENCHMARK(BM_FixedSubalgebraE7)->Unit(benchmark::kMillisecond)->Iterations(1);

}  // namespace

BENCHMARK_MAIN();
