#include <benchmark/benchmark.h>

#include "curveaut/catalog.hpp"
#include "curveaut/ffprobe.hpp"
#include "curveaut/fixedpoints.hpp"
#include "curveaut/quadnet.hpp"

using namespace curveaut;

namespace {

const CycField* F = CycField::get(120);

CycNum cn(long v) { return CycNum::from_int(F, v); }

void bm_cyclotomic_mul(benchmark::State& state) {
  auto a = CycNum::root(F, 8, 1) + CycNum::root(F, 3, 1) * CycNum::from_rational(F, rat(2, 3));
  auto b = CycNum::root(F, 5, 2) - CycNum::from_int(F, 7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(a * b);
  }
}
BENCHMARK(bm_cyclotomic_mul);

void bm_cyclotomic_inverse(benchmark::State& state) {
  auto a = CycNum::root(F, 8, 1) + CycNum::from_int(F, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(a.inverse());
  }
}
BENCHMARK(bm_cyclotomic_inverse);

void bm_closure_order_36(benchmark::State& state) {
  auto cz = CycNum::zero(F);
  auto j = CycNum::root(F, 3, 1);
  auto I2 = Mat<CycNum>::identity(2, cz);
  auto g1 = Element<CycNum>::bimoebius(Mat<CycNum>::from_rows({{j, cz}, {cz, cn(1)}}), I2, false);
  auto g2 = Element<CycNum>::bimoebius(I2, Mat<CycNum>::from_rows({{j, cz}, {cz, cn(1)}}), false);
  auto tw = Mat<CycNum>::from_rows({{cz, cn(2)}, {cn(1), cz}});
  auto g3 = Element<CycNum>::bimoebius(tw, tw, false);
  auto g4 = Element<CycNum>::bimoebius(I2, I2, true);
  for (auto _ : state) {
    benchmark::DoNotOptimize(closure<CycNum>({g1, g2, g3, g4}).order());
  }
}
BENCHMARK(bm_closure_order_36);

void bm_delta5_expansion(benchmark::State& state) {
  auto cz = CycNum::zero(F);
  auto half = CycNum::from_rational(F, rat(1, 2));
  Mat<CycNum> a1(5, 5, cz), a2(5, 5, cz), a3(5, 5, cz);
  a1.at(0, 0) = cn(1);
  a1.at(3, 3) = cn(1);
  a1.at(4, 4) = cn(1);
  a2.at(1, 1) = cn(1);
  a2.at(3, 3) = cn(1);
  a2.at(4, 4) = cn(-1);
  a3.at(2, 2) = cn(1);
  a3.at(3, 4) = half;
  a3.at(4, 3) = half;
  QuadricNetModel<CycNum> net{a1, a2, a3};
  for (auto _ : state) {
    benchmark::DoNotOptimize(delta5(net));
  }
}
BENCHMARK(bm_delta5_expansion);

void bm_ff_base_sweep(benchmark::State& state) {
  const FFCtx* ctx = FFCtx::get(241, 1, 120);
  std::vector<CycNum> b(13, CycNum::zero(F));
  b[11] = cn(1);
  b[6] = cn(11);
  b[1] = cn(-1);
  Model<CycNum> hyp = HyperBranchModel<CycNum>{BinaryForm<CycNum>(b, CycNum::zero(F))};
  auto mf = reduce_model(hyp, ctx);
  for (auto _ : state) {
    benchmark::DoNotOptimize(count_points(mf, ctx));
  }
}
BENCHMARK(bm_ff_base_sweep);

}  // namespace

BENCHMARK_MAIN();
