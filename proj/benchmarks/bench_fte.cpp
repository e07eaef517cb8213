#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include "fte/duality.hpp"
#include "fte/frobenius.hpp"
#include "fte/groebner.hpp"
#include "fte/harness.hpp"
#include "fte/sequences.hpp"

namespace {

using namespace fte;

RingPtr make_ring(std::uint32_t p, std::vector<std::string> vars, MonomialOrder order = MonomialOrder::grevlex()) {
  return PolyRing::make(p, std::move(vars), order);
}

std::vector<Polynomial> parse_all(const RingPtr& r, std::vector<std::string> texts) {
  std::vector<Polynomial> out;
  for (const auto& t : texts) out.push_back(parse_polynomial(t, r));
  return out;
}

QuotientRing two_planes(std::uint32_t p) {
  auto r = make_ring(p, {"x1", "x2", "x3", "x4"});
  return QuotientRing(Ideal(r, parse_all(r, {"x1*x3", "x1*x4", "x2*x3", "x2*x4"})));
}

QuotientRing fermat_cubic() {
  auto r = make_ring(2, {"x", "y", "z"});
  return QuotientRing(Ideal(r, parse_all(r, {"x^3+y^3+z^3"})));
}

void BM_BuchbergerGrevlex(benchmark::State& state) {
  auto r = make_ring(7, {"x", "y", "z"});
  auto gens = parse_all(r, {"x^3-2*x*y+z", "x^2*y-2*y^2+x", "y*z^2-x*z+3"});
  for (auto _ : state) benchmark::DoNotOptimize(buchberger(r, gens));
}
BENCHMARK(BM_BuchbergerGrevlex)->Unit(benchmark::kMicrosecond);

void BM_BuchbergerLex(benchmark::State& state) {
  auto r = make_ring(7, {"x", "y", "z"}, MonomialOrder::lex());
  auto gens = parse_all(r, {"6*x^3+5*x*z+2*z", "3*x*y+4*x*z^2+5*y^3", "4*x*y*z+4*x*z^2+5*x"});
  for (auto _ : state) benchmark::DoNotOptimize(buchberger(r, gens));
}
BENCHMARK(BM_BuchbergerLex)->Unit(benchmark::kMillisecond);

void BM_FrobeniusClosureFermat(benchmark::State& state) {
  auto s = fermat_cubic();
  const auto e = static_cast<unsigned>(state.range(0));
  auto seq = parse_all(s.ambient(), {"x^" + std::to_string(1u << e), "y^" + std::to_string(1u << e)});
  for (auto _ : state) benchmark::DoNotOptimize(frobenius_closure(Ideal(s.ambient(), seq), s, std::nullopt));
}
BENCHMARK(BM_FrobeniusClosureFermat)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

void BM_CohomologyProfile(benchmark::State& state) {
  auto s = two_planes(static_cast<std::uint32_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(cohomology_profile(s));
}
BENCHMARK(BM_CohomologyProfile)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_LimitClosureChain(benchmark::State& state) {
  auto s = two_planes(2);
  auto seq = random_filter_regular_sequence(s, 2, static_cast<std::uint32_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(limit_closure_chain(seq, s));
}
BENCHMARK(BM_LimitClosureChain)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_VerifyBoundTwoPlanes(benchmark::State& state) {
  auto s = two_planes(2);
  auto profile = cohomology_profile(s);
  auto seq = random_filter_regular_sequence(s, 2, 2, 7);
  for (auto _ : state) benchmark::DoNotOptimize(verify_bound(s, seq, profile, std::nullopt));
}
BENCHMARK(BM_VerifyBoundTwoPlanes)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
