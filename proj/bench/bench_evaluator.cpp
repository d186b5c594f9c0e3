#include <benchmark/benchmark.h>

#include "bihom/catalog.hpp"
#include "bihom/construct.hpp"
#include "bihom/evaluator.hpp"
#include "bihom/registry.hpp"
#include "bihom/structures.hpp"

using namespace bihom;

namespace {

// Q(k1..k4), dim 4: the compatibility identity runs over 64 tuples.
const AlgebraBundle& tensor_square() {
  static const AlgebraBundle t = [] {
    const AlgebraBundle& e = catalog_entry(26);
    std::vector<std::string> ps{"k1", "k2", "k3", "k4"};
    AlgebraBundle second = rename_params(e, {{"k1", "k3"}, {"k2", "k4"}});
    return tensor_bundle(extend_ring(e, ps), extend_ring(second, ps), TensorKind::bp_tbp);
  }();
  return t;
}

// Rational, dim 6: the five-variable ternary Jacobi identity runs over 7776 tuples.
const AlgebraBundle& ternary_dim6() {
  static const AlgebraBundle t = [] {
    ConstructOptions relaxed;
    relaxed.strict = false;
    Truncated tr = truncated_polynomials({"u", "v"}, 3);
    AlgebraBundle in = tr.bundle;
    in.maps["D"] = tr.vector_field({"1", "0"});
    AlgebraBundle base = derivation_tbp(in, relaxed);
    base.maps["E"] = tr.vector_field({"0", "1"});
    return ternary_from_derivation(base, "E", relaxed);
  }();
  return t;
}

void run(benchmark::State& state, const AlgebraBundle& b, const char* id, int how) {
  const IdentityAst& ast = Registry::builtin().identity(id).ast;
  for (auto _ : state) {
    Verdict v = how == 2 ? check_identity_reference(ast, b, id) : check_identity(ast, b, id, {how == 0});
    benchmark::DoNotOptimize(v.status);
  }
}

void BM_TensorCompatParallel(benchmark::State& s) { run(s, tensor_square(), "tbp-compat", 0); }
void BM_TensorCompatSerial(benchmark::State& s) { run(s, tensor_square(), "tbp-compat", 1); }
void BM_TensorCompatReference(benchmark::State& s) { run(s, tensor_square(), "tbp-compat", 2); }
void BM_TernaryJacobiParallel(benchmark::State& s) { run(s, ternary_dim6(), "ternary-jacobi", 0); }
void BM_TernaryJacobiSerial(benchmark::State& s) { run(s, ternary_dim6(), "ternary-jacobi", 1); }

void BM_CatalogVerify(benchmark::State& state) {
  std::vector<int> all = parse_entry_range("");
  for (auto _ : state) benchmark::DoNotOptimize(verify_all(all).asserted_ok());
}

}  // namespace

BENCHMARK(BM_TensorCompatParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TensorCompatSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TensorCompatReference)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TernaryJacobiParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TernaryJacobiSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CatalogVerify)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
