#include <doctest.h>

#include <cmath>
#include <complex>

#include "geoledger/local_factors.hpp"
#include "geoledger/orbital.hpp"

using namespace geoledger;
using cplx = std::complex<double>;

TEST_CASE("principal local polynomial small cases") {
  for (int eps : {-1, 0, 1}) {
    LaurentPoly p = local_poly_principal({5, eps}, 0);
    CHECK(p == LaurentPoly::one(5, VarTag::Z_HALF));
  }
  // l=1, eps=-1, q=2: sqrt2 (Z + 1/Z) + 1
  LaurentPoly p = local_poly_principal({2, -1}, 1);
  CHECK(p.coeff(1) == QuadExt(Rat(0), Rat(1), 2));
  CHECK(p.coeff(-1) == QuadExt(Rat(0), Rat(1), 2));
  CHECK(p.coeff(0) == QuadExt(Rat(1), Rat(0), 2));
  // l=1, eps=+1, q=3: sqrt3 (Z + 1/Z) - 1
  LaurentPoly s = local_poly_principal({3, 1}, 1);
  CHECK(s.coeff(1) == QuadExt(Rat(0), Rat(1), 3));
  CHECK(s.coeff(0) == QuadExt(Rat(-1), Rat(0), 3));
}

TEST_CASE("principal degree span and leading coefficient") {
  for (std::int64_t q : {2, 3, 4, 5, 7, 9}) {
    for (int eps : {-1, 0, 1}) {
      for (int l = 1; l <= 6; ++l) {
        LaurentPoly p = local_poly_principal({q, eps}, l);
        CHECK(p.min_exp() == -l);
        CHECK(p.max_exp() == l);
        CHECK(p.coeff(l) == QuadExt::half_power(q, l));
        CHECK(check_functional_equation(p));
      }
    }
  }
}

TEST_CASE("hecke (1,1) factors match the stated forms") {
  for (std::int64_t q : {2, 3, 4, 5, 7, 9}) {
    double qd = static_cast<double>(q);
    cplx s(0.8, 0.4);
    cplx z = std::pow(cplx(qd, 0.0), s - 0.5);
    cplx base = (z + 1.0 / z) / (std::sqrt(qd) + 1.0 / std::sqrt(qd));

    cplx unr = local_poly_hecke({{q, -1}, 1, 1}).evaluate(s);
    CHECK(std::abs(unr - (base + 1.0)) < 1e-12);

    cplx ram = local_poly_hecke({{q, 0}, 1, 1}).evaluate(s);
    CHECK(std::abs(ram - (base + 1.0 / (1.0 + 1.0 / qd))) < 1e-12);

    cplx spl = local_poly_hecke({{q, +1}, 1, 1}).evaluate(s);
    CHECK(std::abs(spl - (base + (1.0 - 1.0 / qd) / (1.0 + 1.0 / qd))) < 1e-12);
  }
}

TEST_CASE("hecke vanishing regimes") {
  CHECK(local_poly_hecke({{3, -1}, 1, 3}).is_zero());
  CHECK(local_poly_hecke({{3, -1}, 0, 1}).is_zero());
  CHECK(local_poly_hecke({{3, -1}, 2, 5}).is_zero());
  CHECK(local_poly_hecke({{3, 0}, 1, 4}).is_zero());   // n > 2l+1
  CHECK(!local_poly_hecke({{3, 0}, 1, 3}).is_zero());  // ramified boundary n = 2l+1
  CHECK(!local_poly_hecke({{3, 0}, 0, 1}).is_zero());  // n = 1, l = 0 keeps r = 0
  CHECK(!local_poly_hecke({{3, +1}, 0, 4}).is_zero()); // split never vanishes
  CHECK(local_poly_hecke({{5, -1}, 2, 0}) == local_poly_principal({5, -1}, 2));
}

TEST_CASE("rs weight r=0 table") {
  cplx s(0.9, -0.3);
  CHECK(std::abs(rs_weight({5, -1}, 0, s) - cplx(1.0 / (1.0 + 0.2))) < 1e-15);
  CHECK(std::abs(rs_weight({5, 0}, 0, s) - cplx(1.0)) < 1e-15);
  CHECK(std::abs(rs_weight({5, +1}, 0, s) - cplx(1.0 / (1.0 - 0.2))) < 1e-15);
}

TEST_CASE("unit index and volume ratio") {
  CHECK(unit_index({3, -1}, 0) == 1);
  CHECK(unit_index({3, -1}, 2) == 12);
  CHECK(unit_index({2, 0}, 3) == 8);
  CHECK_THROWS_AS(unit_index({3, +1}, 1), SplitNotApplicableError);

  CHECK(vol_ratio({5, +1}, 0) == Rat(1));
  CHECK(vol_ratio({5, +1}, 1) == Rat(4));
  CHECK(vol_ratio({2, -1}, 2) == Rat(6));
  CHECK(vol_ratio({3, 0}, 2) == Rat(9));
}

TEST_CASE("legendre closed form equals the shell sums") {
  for (std::int64_t q : {2, 3, 5, 9}) {
    for (int eps : {-1, 0, 1}) {
      for (int r = 0; r <= 6; ++r) {
        for (cplx s : {cplx(1.0, 0.0), cplx(0.7, 0.9), cplx(2.2, -0.4)}) {
          cplx c = legendre_p({q, eps}, r, s);
          cplx o = legendre_p_oracle({q, eps}, r, s);
          CHECK(std::abs(c - o) <= 1e-12 * std::max(1.0, std::abs(o)));
        }
      }
    }
  }
}

TEST_CASE("legendre shell example values") {
  // ramified, q=3, r=1, s=1: (1 - 1/3) * (1/3) + 1/9 = 1/3
  CHECK(legendre_p_oracle({3, 0}, 1, 1.0).real() == doctest::Approx(1.0 / 3).epsilon(1e-14));
  // split, q=5, r=1, s=1: (1-1/5)^{-1} (1-1/5)^2 + 1/5 = 1
  CHECK(legendre_p_oracle({5, +1}, 1, 1.0).real() == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("assemble weight equals rs weight") {
  for (std::int64_t q : {2, 3, 4, 5}) {
    for (int eps : {-1, 0, 1}) {
      for (int r = 0; r <= 4; ++r) {
        for (cplx s : {cplx(0.7, 0.0), cplx(1.3, 0.4), cplx(2.1, -1.1)}) {
          cplx a = assemble_weight({q, eps}, r, s);
          cplx w = rs_weight({q, eps}, r, s);
          CHECK(std::abs(a - w) <= 1e-10 * std::max(1.0, std::abs(w)));
        }
      }
    }
  }
}

TEST_CASE("count assembly reproduces the closed hecke factor") {
  for (std::int64_t q : {2, 3, 5}) {
    for (int eps : {-1, 0, 1}) {
      for (int l = 0; l <= 4; ++l) {
        for (int n = 1; n <= 4; ++n) {
          HeckeLocalParams params{{q, eps}, l, n};
          LaurentPoly poly = local_poly_hecke(params);
          for (cplx s : {cplx(0.8, 0.2), cplx(1.4, -0.9)}) {
            cplx a = poly.is_zero() ? cplx(0.0) : poly.evaluate(s);
            cplx b = hecke_factor_from_counts(params, s);
            CHECK(std::abs(a - b) <= 1e-10 * std::max(1.0, std::abs(a)));
          }
        }
      }
    }
  }
}

TEST_CASE("split l=0 level-2 factor stays nonzero on both routes") {
  HeckeLocalParams params{{5, +1}, 0, 2};
  LaurentPoly poly = local_poly_hecke(params);
  REQUIRE(!poly.is_zero());
  cplx s(1.1, 0.3);
  CHECK(std::abs(poly.evaluate(s) - hecke_factor_from_counts(params, s)) < 1e-12);
  // single surviving term: 2 / (q^2 + q) * weight_kernel(0) = 2/30
  CHECK(std::abs(poly.evaluate(s) - cplx(2.0 / 30.0)) < 1e-12);
}
