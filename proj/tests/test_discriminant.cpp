#include <doctest.h>

#include "geoledger/discriminant.hpp"

using namespace geoledger;

TEST_CASE("fundamental discriminants over Z") {
  auto d5 = fundamental_discriminant(RingElem::rat(5));
  CHECK(d5.fundamental == RingElem::rat(5));
  CHECK(d5.conductor == RingElem::rat(1));

  auto d32 = fundamental_discriminant(RingElem::rat(32));
  CHECK(d32.fundamental == RingElem::rat(8));
  CHECK(d32.conductor == RingElem::rat(2));

  auto d12 = fundamental_discriminant(RingElem::rat(12));
  CHECK(d12.fundamental == RingElem::rat(12));
  CHECK(d12.conductor == RingElem::rat(1));

  CHECK_THROWS_AS(fundamental_discriminant(RingElem::rat(9)), SquareDeltaError);
  CHECK_THROWS_AS(fundamental_discriminant(RingElem::rat(0)), std::domain_error);
  CHECK_THROWS_AS(fundamental_discriminant(RingElem::rat(7)), std::domain_error);
}

TEST_CASE("trace discriminants decompose for all small traces") {
  for (std::int64_t t = 3; t <= 500; ++t) {
    RingElem delta = RingElem::rat(t * t - 4);
    auto dd = fundamental_discriminant(delta);
    CHECK(dd.fundamental * dd.conductor * dd.conductor == delta);
    CHECK(is_fundamental(dd.fundamental));
  }
}

TEST_CASE("kronecker symbol examples") {
  CHECK(kronecker(RingElem::rat(5), RingElem::rat(2)) == -1);
  CHECK(kronecker(RingElem::rat(5), RingElem::rat(4)) == 1);
  CHECK(kronecker(RingElem::rat(8), RingElem::rat(1)) == 1);
  CHECK(kronecker(RingElem::rat(8), RingElem::rat(2)) == 0);
  CHECK_THROWS_AS(kronecker(RingElem::rat(7), RingElem::rat(3)), NonFundamentalError);
}

TEST_CASE("kronecker is multiplicative with period |D|") {
  for (std::int64_t D = -100; D <= 100; ++D) {
    if (D == 0 || !is_fundamental(RingElem::rat(D))) continue;
    RingElem De = RingElem::rat(D);
    std::int64_t P = D < 0 ? -D : D;
    for (std::int64_t n = 1; n <= 500; ++n) {
      int a = kronecker(De, RingElem::rat(n));
      CHECK(a == kronecker(De, RingElem::rat(n + P)));
      for (std::int64_t m = 1; m * n <= 500; m += 7) {
        CHECK(kronecker(De, RingElem::rat(n * m)) ==
              a * kronecker(De, RingElem::rat(m)));
      }
    }
  }
}

TEST_CASE("local splitting classification over Z") {
  // delta = 5: split at 11 (5 = 4^2 mod 11), inert at 3, ramified at 5
  RingElem five = RingElem::rat(5);
  CHECK(epsilon_at(five, RingElem::rat(11)) == 1);
  CHECK(epsilon_at(five, RingElem::rat(3)) == -1);
  CHECK(epsilon_at(five, RingElem::rat(5)) == 0);
  // delta = 8 == 2^3: ramified at 2; 17: 8 = 5^2 mod 17 split
  CHECK(epsilon_at(RingElem::rat(8), RingElem::rat(2)) == 0);
  CHECK(epsilon_at(RingElem::rat(8), RingElem::rat(17)) == 1);
}

TEST_CASE("gaussian fundamental discriminants stay consistent") {
  // traces t = 2 + 2i m for the level (1+i)^2 lattice
  for (std::int64_t ma = -4; ma <= 4; ++ma) {
    for (std::int64_t mb = -4; mb <= 4; ++mb) {
      RingElem t = RingElem::gauss(2 + 0, 0) + RingElem::gauss(0, 2) * RingElem::gauss(ma, mb);
      RingElem delta = t * t - RingElem::gauss(4, 0);
      if (delta.is_zero() || is_square(delta)) continue;
      auto dd = fundamental_discriminant(delta);
      CHECK(dd.fundamental * dd.conductor * dd.conductor == delta);
      CHECK(is_fundamental(dd.fundamental));
    }
  }
}

TEST_CASE("gaussian residue symbol matches squares") {
  RingElem p = RingElem::gauss(2, 1);  // norm 5
  int squares = 0;
  for (std::int64_t a = 1; a <= 4; ++a) {
    int s = residue_symbol_odd(RingElem::gauss(a, 0), p);
    CHECK((s == 1 || s == -1));
    if (s == 1) ++squares;
  }
  CHECK(squares == 2);  // (Nr(p)-1)/2 squares among units
}

TEST_CASE("even prime splitting over the Gaussians") {
  // 5 is a square in Q_2(i)?  5 = (2+i)(2-i), and x^2 == 5 mod (1+i)^5 has
  // a solution iff 5 is a local square.  The classification must at least
  // be self-consistent: epsilon_at on squares of units times pi-powers.
  RingElem pi = RingElem::gauss(1, 1);
  RingElem delta = RingElem::gauss(3, 0);  // odd, nonsquare
  int eps = epsilon_at(delta, pi);
  CHECK((eps == -1 || eps == 0 || eps == 1));
  // x^2 - delta has a root mod pi^8 iff eps = +1 (Hensel from pi^5)
  bool has_root = false;
  RingElem mod = RingElem::gauss(1, 0);
  for (int i = 0; i < 8; ++i) mod = mod * pi;
  for (const RingElem& x : residues_mod(mod))
    if (divides(mod, x * x - delta)) has_root = true;
  CHECK(has_root == (eps == 1));
}
