// Microbenchmarks for the exact kernels and the two worked pipelines.
#include <benchmark/benchmark.h>

#include <vector>

#include "rcgeom/bipoly.hpp"
#include "rcgeom/contour.hpp"
#include "rcgeom/hompoly.hpp"
#include "rcgeom/random.hpp"
#include "rcgeom/roots.hpp"
#include "rcgeom/ruled_reconstruct.hpp"
#include "rcgeom/syzygy.hpp"

namespace {

using namespace rc;

UniPoly ints(std::initializer_list<long> c) {
  std::vector<Scalar> v;
  for (long x : c) v.emplace_back(Rational(x));
  return UniPoly(std::move(v));
}

UniPoly random_poly(Rng& rng, int degree) {
  std::vector<Scalar> c;
  for (int k = 0; k <= degree; ++k) c.emplace_back(rng.rational(20, 5));
  c.back() = Scalar(rng.nonzero(9));
  return UniPoly(std::move(c));
}

CurveMap random_curve(Rng& rng, int degree) {
  return CurveMap({random_poly(rng, degree), random_poly(rng, degree), random_poly(rng, degree),
                   random_poly(rng, degree)});
}

void BM_UniPolyGcd(benchmark::State& state) {
  Rng rng(kDefaultSeed);
  const int d = static_cast<int>(state.range(0));
  const UniPoly g = random_poly(rng, 3);
  const UniPoly f = g * random_poly(rng, d), h = g * random_poly(rng, d);
  for (auto _ : state) benchmark::DoNotOptimize(poly_gcd(f, h));
}
BENCHMARK(BM_UniPolyGcd)->Arg(4)->Arg(8)->Arg(16);

void BM_CertifiedRoots(benchmark::State& state) {
  Rng rng(kDefaultSeed);
  const UniPoly f = random_poly(rng, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(roots(f));
}
BENCHMARK(BM_CertifiedRoots)->Arg(4)->Arg(8)->Arg(16);

void BM_BiPolyGcd(benchmark::State& state) {
  Rng rng(kDefaultSeed);
  auto rnd = [&](int du, int dv) {
    BiPoly f;
    for (int i = 0; i <= du; ++i)
      for (int j = 0; j <= dv; ++j) f.add_term(i, j, Scalar(rng.uniform(-5, 5)));
    return f;
  };
  const BiPoly g = rnd(1, 1);
  const BiPoly f = g * rnd(3, 3), h = g * rnd(3, 3);
  for (auto _ : state) benchmark::DoNotOptimize(bipoly_gcd(f, h));
}
BENCHMARK(BM_BiPolyGcd);

void BM_ContourQuartic(benchmark::State& state) {
  Rng rng(kDefaultSeed);
  const RuledSurface R(random_curve(rng, 2), random_curve(rng, 2));
  const Vec4 a{1, 3, -2, 5};
  for (auto _ : state) benchmark::DoNotOptimize(contour(R, a));
}
BENCHMARK(BM_ContourQuartic);

void BM_SyzygyExample1(benchmark::State& state) {
  const std::vector<HomPoly> G{parse_hompoly("x0^2 - x1^2 - x2^2 + x3^2"),
                               parse_hompoly("x1^2 + x2^2 + x3^2 - 2*x0*x1")};
  for (auto _ : state) benchmark::DoNotOptimize(syzygy_surfaces(G, Vec4{1, -1, 0, -1}, 3));
}
BENCHMARK(BM_SyzygyExample1)->Unit(benchmark::kMillisecond);

void BM_WorkedTwoSilhouettes(benchmark::State& state) {
  const CurveMap sa({ints({-8, 16, -10, 2}), ints({}), ints({0, 0, 8, -6, 1}), ints({-4, 24, -18, 4})});
  const CurveMap sb({ints({-2}), ints({-4, -1, 2, -1}), ints({1, 1, -1, -1}), ints({})});
  for (auto _ : state) benchmark::DoNotOptimize(ruled_from_two_silhouettes(sa, Vec4{1, 2, 1, 2}, sb, Vec4{1, 2, 0, 1}));
}
BENCHMARK(BM_WorkedTwoSilhouettes)->Unit(benchmark::kMillisecond);

void BM_TwoContoursCubic(benchmark::State& state) {
  Rng rng(kDefaultSeed);
  const RuledSurface R(random_curve(rng, 1), random_curve(rng, 2));
  const Vec4 a{1, 3, -2, 5}, b{2, -1, 4, 1};
  const CurveMap ca = contour(R, a).map, cb = contour(R, b).map;
  for (auto _ : state) benchmark::DoNotOptimize(ruled_from_two_contours(ca, a, cb, b));
}
BENCHMARK(BM_TwoContoursCubic)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
