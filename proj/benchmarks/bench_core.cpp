#include <benchmark/benchmark.h>

#include <random>

#include "massey/johnson.hpp"
#include "massey/massey.hpp"
#include "massey/nilgroup.hpp"
#include "massey/unitriangular.hpp"

namespace {

using namespace massey;

U4Element random_u4(const PrimeField& f, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::int64_t> d(0, f.modulus() - 1);
  return U4Element::make(f, d(rng), d(rng), d(rng), d(rng), d(rng), d(rng));
}

GroupElement random_element(const NilGroupContext& ctx, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::int64_t> d(0, ctx.field().modulus() - 1);
  const auto dims = ctx.dims();
  std::array<ModVector, 3> parts;
  for (int i = 0; i < 3; ++i)
    for (std::size_t k = 0; k < dims[i]; ++k)
      parts[i].push_back(ctx.field().reduce(d(rng)));
  return ctx.element(parts[0], parts[1], parts[2]);
}

CharacterTriple flagship(const NilGroupContext& ctx) {
  const GeneratorSymbol x1{GeneratorSymbol::Kind::X, 1}, x2{GeneratorSymbol::Kind::X, 2};
  return {Character::dual(ctx, x1), Character::dual(ctx, x2), Character::dual(ctx, x1)};
}

void BM_U4Commutator(benchmark::State& state) {
  const PrimeField f(state.range(0));
  std::mt19937_64 rng(1);
  const U4Element a = random_u4(f, rng), b = random_u4(f, rng);
  for (auto _ : state) benchmark::DoNotOptimize(u4_commutator(a, b));
}
BENCHMARK(BM_U4Commutator)->Arg(5)->Arg(13);

void BM_BchMultiply(benchmark::State& state) {
  const ContextPtr ctx = build_context(7, static_cast<int>(state.range(0)), Flavor::Surface);
  std::mt19937_64 rng(2);
  const GroupElement a = random_element(*ctx, rng), b = random_element(*ctx, rng);
  for (auto _ : state) benchmark::DoNotOptimize(ctx->multiply(a, b));
}
BENCHMARK(BM_BchMultiply)->Arg(2)->Arg(3);

void BM_NormalForm(benchmark::State& state) {
  const ContextPtr ctx = build_context(7, static_cast<int>(state.range(0)), Flavor::Surface);
  std::mt19937_64 rng(3);
  const GroupElement a = random_element(*ctx, rng);
  for (auto _ : state) benchmark::DoNotOptimize(ctx->normal_form(a));
}
BENCHMARK(BM_NormalForm)->Arg(2)->Arg(3);

void BM_BuildContext(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(
        build_context(7, static_cast<int>(state.range(0)), Flavor::Surface));
}
BENCHMARK(BM_BuildContext)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_ContainsZero(benchmark::State& state) {
  const ContextPtr ctx = build_context(state.range(0), 2, Flavor::Surface);
  const CharacterTriple chi = flagship(*ctx);
  for (auto _ : state) benchmark::DoNotOptimize(contains_zero(*ctx, chi));
}
BENCHMARK(BM_ContainsZero)->Arg(5)->Arg(13);

// Full stratum sweep over every extension of the characters to Phi.
void BM_SemidirectSweep(benchmark::State& state) {
  const ContextPtr ctx = build_context(state.range(0), 2, Flavor::Surface);
  const SemidirectContext sctx(ctx, build_phi_lambda(ctx));
  const ExtendedTriple ext = extend_characters(sctx, flagship(*ctx), std::nullopt);
  for (auto _ : state)
    benchmark::DoNotOptimize(contains_zero_semidirect(sctx, ext));
  state.SetItemsProcessed(state.iterations() * state.range(0) * state.range(0) *
                          state.range(0) * state.range(0) * state.range(0));
}
BENCHMARK(BM_SemidirectSweep)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
