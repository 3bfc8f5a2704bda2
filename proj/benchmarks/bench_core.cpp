#include <benchmark/benchmark.h>

#include "geoledger/geodesic.hpp"
#include "geoledger/local_factors.hpp"
#include "geoledger/zagier.hpp"

namespace gl = geoledger;

static void BM_RhoCrt(benchmark::State& st) {
  gl::RingElem delta = gl::RingElem::rat(9996);  // 100^2 - 4
  for (auto _ : st) {
    std::int64_t acc = 0;
    for (std::int64_t q = 1; q <= 200; ++q)
      acc += gl::rho_q(delta, gl::RingElem::rat(q));
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_RhoCrt);

static void BM_LambdaSeries(benchmark::State& st) {
  auto dd = gl::fundamental_discriminant(gl::RingElem::rat(2021));  // 45^2 - 4
  gl::ZagierParams zp{dd, 10000, gl::Ring::RAT};
  for (auto _ : st) {
    auto v = gl::zagier_L_series(2.0, zp);
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(BM_LambdaSeries);

static void BM_HeckePolyGrid(benchmark::State& st) {
  for (auto _ : st) {
    for (std::int64_t q : {2, 3, 4, 5, 7, 9})
      for (int eps : {-1, 0, 1})
        for (int l = 0; l <= 6; ++l)
          for (int n = 1; n <= 6; ++n) {
            auto p = gl::local_poly_hecke({{q, eps}, l, n});
            benchmark::DoNotOptimize(p);
          }
  }
}
BENCHMARK(BM_HeckePolyGrid);

static void BM_PsiModular(benchmark::State& st) {
  for (auto _ : st) {
    auto rep = gl::psi_modular(static_cast<double>(st.range(0)), gl::Orientation::ORIENTED);
    benchmark::DoNotOptimize(rep.total);
  }
}
BENCHMARK(BM_PsiModular)->Arg(1000)->Arg(10000);

BENCHMARK_MAIN();
