#include <doctest.h>

#include <cmath>

#include "geoledger/laurent.hpp"

using namespace geoledger;

TEST_CASE("quadext arithmetic folds square radicands") {
  QuadExt a(Rat(1, 2), Rat(3), 2);  // 1/2 + 3 sqrt(2)
  QuadExt b(Rat(0), Rat(1), 2);
  QuadExt prod = a * b;              // 6 + (1/2) sqrt 2... (1/2 + 3r2) r2 = 6 + r2/2
  CHECK(prod.a == Rat(6));
  CHECK(prod.b == Rat(1, 2));
  CHECK((a * a.inverse()).a == Rat(1));
  CHECK((a * a.inverse()).b == Rat(0));

  QuadExt sq(Rat(1), Rat(1), 9);  // 1 + sqrt(9) = 4
  CHECK(sq.a == Rat(4));
  CHECK(sq.b == Rat(0));

  CHECK(QuadExt::half_power(3, 3).b == Rat(3));   // 3^(3/2) = 3 sqrt 3
  CHECK(QuadExt::half_power(3, -2).a == Rat(1, 3));
  CHECK(QuadExt::half_power(3, -4).a == Rat(1, 9));
  CHECK(QuadExt::half_power(3, -1).b == Rat(1, 3));  // 3^(-1/2) = sqrt(3)/3
  CHECK(QuadExt::half_power(4, 3).a == Rat(8));   // perfect square folds
}

TEST_CASE("laurent division by Z - 1/Z is exact or throws") {
  std::int64_t q = 3;
  LaurentPoly num(q, VarTag::Z_HALF);
  num.set_coeff(2, QuadExt::of(Rat(1), q));
  num.set_coeff(-2, QuadExt::of(Rat(-1), q));
  LaurentPoly quot = num.divide_by_z_minus_zinv();
  CHECK(quot.coeff(1).a == Rat(1));
  CHECK(quot.coeff(-1).a == Rat(1));
  CHECK(quot.coeff(0).is_zero());

  LaurentPoly bad = LaurentPoly::one(q, VarTag::Z_HALF);
  CHECK_THROWS_AS(bad.divide_by_z_minus_zinv(), std::logic_error);
}

TEST_CASE("evaluation honors the variable tag and eta sign") {
  std::int64_t q = 2;
  LaurentPoly p(q, VarTag::Z_HALF);
  p.set_coeff(1, QuadExt::of(Rat(1), q));
  p.set_coeff(-1, QuadExt::of(Rat(1), q));
  // at s = 1/2, Z = 1: value 2
  CHECK(p.evaluate(0.5).real() == doctest::Approx(2.0));
  // eta twist flips Z
  CHECK(p.evaluate(0.5, -1).real() == doctest::Approx(-2.0));
  LaurentPoly pf(q, VarTag::Z_FULL);
  pf.set_coeff(1, QuadExt::of(Rat(1), q));
  CHECK(pf.evaluate(1.0).real() == doctest::Approx(2.0));
}

TEST_CASE("serialization round-trips") {
  LaurentPoly p(3, VarTag::Z_HALF);
  p.set_coeff(-1, QuadExt(Rat(1, 2), Rat(0), 3));
  p.set_coeff(0, QuadExt(Rat(1), Rat(-2, 3), 3));
  p.set_coeff(1, QuadExt(Rat(1, 2), Rat(0), 3));
  std::string text = p.serialize();
  CHECK(text == "q=3 var=Z_HALF; -1:1/2; 0:1-2/3r3; 1:1/2");
  LaurentPoly back = LaurentPoly::parse(text);
  CHECK(back == p);

  LaurentPoly z = LaurentPoly::zero(5, VarTag::Z_FULL);
  CHECK(LaurentPoly::parse(z.serialize()) == z);
}

TEST_CASE("functional equation check sees asymmetry") {
  LaurentPoly sym(3, VarTag::Z_HALF), asym(3, VarTag::Z_HALF);
  sym.set_coeff(1, QuadExt::of(Rat(2), 3));
  sym.set_coeff(-1, QuadExt::of(Rat(2), 3));
  asym.set_coeff(1, QuadExt::of(Rat(1), 3));
  asym.set_coeff(-1, QuadExt::of(Rat(2), 3));
  CHECK(check_functional_equation(sym));
  CHECK(!check_functional_equation(asym));
  LaurentPoly full(3, VarTag::Z_FULL);
  full.set_coeff(0, QuadExt::of(Rat(1), 3));
  CHECK_THROWS_AS(check_functional_equation(full), WrongVariableTagError);
}

TEST_CASE("root location") {
  // Z + 1/Z + 5/2: roots -2, -1/2 off the unit circle
  LaurentPoly p(2, VarTag::Z_HALF);
  p.set_coeff(1, QuadExt::of(Rat(1), 2));
  p.set_coeff(-1, QuadExt::of(Rat(1), 2));
  p.set_coeff(0, QuadExt::of(Rat(5, 2), 2));
  CHECK(!roots_on_unit_circle(p, 1e-9));
  auto roots = laurent_roots(p);
  REQUIRE(roots.size() == 2);
  double lo = std::min(std::abs(roots[0]), std::abs(roots[1]));
  double hi = std::max(std::abs(roots[0]), std::abs(roots[1]));
  CHECK(lo == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(hi == doctest::Approx(2.0).epsilon(1e-9));

  // Z + 1/Z + 1: roots are primitive sixth roots of unity
  LaurentPoly c(2, VarTag::Z_HALF);
  c.set_coeff(1, QuadExt::of(Rat(1), 2));
  c.set_coeff(-1, QuadExt::of(Rat(1), 2));
  c.set_coeff(0, QuadExt::of(Rat(1), 2));
  CHECK(roots_on_unit_circle(c, 1e-9));

  CHECK(roots_on_unit_circle(LaurentPoly::one(2, VarTag::Z_HALF), 1e-9));
  CHECK_THROWS_AS(roots_on_unit_circle(LaurentPoly::zero(2, VarTag::Z_HALF), 1e-9),
                  ZeroPolynomialError);
}
