#include <benchmark/benchmark.h>

#include "bbs/border_basis.hpp"
#include "bbs/groebner.hpp"
#include "bbs/parser.hpp"
#include "bbs/scheme.hpp"

using namespace bbs;

namespace {

ContextPtr plane() { return VariableContext::make({"x", "y"}, {}); }

std::vector<Polynomial> parse_all(const ContextPtr& ctx, const std::vector<std::string>& texts) {
  std::vector<Polynomial> out;
  for (const auto& t : texts) out.push_back(parse_polynomial(t, ctx));
  return out;
}

OrderIdeal order_ideal(const ContextPtr& ctx, const std::vector<std::string>& texts) {
  std::vector<Term> terms;
  for (const auto& t : texts) terms.push_back(parse_term(t, ctx));
  return OrderIdeal::from_terms(terms);
}

GenericPrebasis simplex(int n) {
  std::vector<std::string> vars = default_main_vars(n);
  auto ctx = VariableContext::make(vars, {});
  std::vector<Term> terms{Term::one(n)};
  for (int k = 0; k < n; ++k) {
    std::vector<int> e(static_cast<std::size_t>(n), 0);
    e[static_cast<std::size_t>(k)] = 1;
    terms.emplace_back(e);
  }
  return GenericPrebasis::make(OrderIdeal::from_terms(terms), vars);
}

void BM_BuchbergerStaircase(benchmark::State& state) {
  auto ctx = plane();
  auto gens = parse_all(ctx, {"-2*x^2 + x*y - y^2 - 1", "8*y^3 + 10*x + 9*y"});
  for (auto _ : state) benchmark::DoNotOptimize(buchberger(gens, TermOrdering::degrevlex()));
}
BENCHMARK(BM_BuchbergerStaircase);

void BM_BuchbergerStaircaseLex(benchmark::State& state) {
  auto ctx = plane();
  auto gens = parse_all(ctx, {"-2*x^2 + x*y - y^2 - 1", "8*y^3 + 10*x + 9*y"});
  for (auto _ : state) benchmark::DoNotOptimize(buchberger(gens, TermOrdering::lex()));
}
BENCHMARK(BM_BuchbergerStaircaseLex);

void BM_BorderBasisOfIdeal(benchmark::State& state) {
  auto ctx = plane();
  auto gens = parse_all(ctx, {"-2*x^2 + x*y - y^2 - 1", "8*y^3 + 10*x + 9*y"});
  OrderIdeal o = order_ideal(ctx, {"1", "x", "x^2", "x^3", "y", "y^2"});
  for (auto _ : state) benchmark::DoNotOptimize(border_basis_of_ideal(gens, o, TermOrdering::degrevlex()));
}
BENCHMARK(BM_BorderBasisOfIdeal);

void BM_CommutatorGenerators(benchmark::State& state) {
  GenericPrebasis g = simplex(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(commutator_generators(g));
}
BENCHMARK(BM_CommutatorGenerators)->DenseRange(2, 4);

void BM_SyzygyGenerators(benchmark::State& state) {
  GenericPrebasis g = simplex(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(syzygy_generators(g));
}
BENCHMARK(BM_SyzygyGenerators)->DenseRange(2, 4);

void BM_EliminateLinearParameters(benchmark::State& state) {
  GenericPrebasis g = simplex(static_cast<int>(state.range(0)));
  auto gens = flatten(commutator_generators(g));
  for (auto _ : state) benchmark::DoNotOptimize(eliminate_linear_parameters(gens, g.parameters()));
}
BENCHMARK(BM_EliminateLinearParameters)->DenseRange(2, 3);

void BM_SchemeDimension(benchmark::State& state) {
  GenericPrebasis g = simplex(3);
  auto gens = flatten(commutator_generators(g));
  for (auto _ : state) benchmark::DoNotOptimize(scheme_dimension(gens, g.parameters()));
}
BENCHMARK(BM_SchemeDimension);

}  // namespace
BENCHMARK_MAIN();
