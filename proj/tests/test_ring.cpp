#include <doctest.h>

#include <random>

#include "geoledger/ring.hpp"

using namespace geoledger;

TEST_CASE("norms of basic elements") {
  CHECK(norm(RingElem::gauss(1, 1)) == 2);
  CHECK(norm(RingElem::rat(-7)) == 7);
  CHECK(norm(RingElem::gauss(3, 4)) == 25);
  CHECK(norm(RingElem::rat(0)) == 0);
}

TEST_CASE("norm is multiplicative") {
  std::mt19937 rng(1);
  std::uniform_int_distribution<std::int64_t> d(-40, 40);
  for (int i = 0; i < 1000; ++i) {
    RingElem x = RingElem::rat(d(rng)), y = RingElem::rat(d(rng));
    CHECK(norm(x * y) == norm(x) * norm(y));
    RingElem u = RingElem::gauss(d(rng), d(rng)), v = RingElem::gauss(d(rng), d(rng));
    CHECK(norm(u * v) == norm(u) * norm(v));
  }
}

TEST_CASE("factorize splits rational integers") {
  Factorization f = factorize(RingElem::rat(12));
  CHECK(f.factors.size() == 2);
  CHECK(f.factors[0].first.a == 2);
  CHECK(f.factors[0].second == 2);
  CHECK(f.factors[1].first.a == 3);
  CHECK(f.value() == RingElem::rat(12));
}

TEST_CASE("factorize splits 5 over the Gaussian integers") {
  Factorization f = factorize(RingElem::gauss(5, 0));
  CHECK(f.factors.size() == 2);
  for (const auto& [p, e] : f.factors) {
    CHECK(norm(p) == 5);
    CHECK(e == 1);
    CHECK(is_prime_elem(p));
  }
  CHECK(f.value() == RingElem::gauss(5, 0));
}

TEST_CASE("ramified prime above 2") {
  RingElem z = RingElem::gauss(1, 1) * RingElem::gauss(1, 1);
  Factorization f = factorize(z);
  REQUIRE(f.factors.size() == 1);
  CHECK(f.factors[0].first == RingElem::gauss(1, 1));
  CHECK(f.factors[0].second == 2);
  CHECK(norm(z) == 4);
}

TEST_CASE("factorize round-trips random products") {
  std::mt19937 rng(7);
  std::vector<RingElem> rat_primes = {RingElem::rat(2), RingElem::rat(3), RingElem::rat(5),
                                      RingElem::rat(7), RingElem::rat(11)};
  std::vector<RingElem> g_primes = {RingElem::gauss(1, 1), RingElem::gauss(2, 1),
                                    RingElem::gauss(3, 0), RingElem::gauss(2, 3),
                                    RingElem::gauss(7, 0)};
  std::uniform_int_distribution<int> count(1, 6);
  for (int trial = 0; trial < 200; ++trial) {
    for (bool gauss : {false, true}) {
      const auto& pool = gauss ? g_primes : rat_primes;
      std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
      RingElem x(gauss ? Ring::GAUSS : Ring::RAT, 1, 0);
      int n = count(rng);
      for (int i = 0; i < n; ++i) x = x * pool[pick(rng)];
      Factorization f = factorize(x);
      CHECK(f.value() == x);
      for (const auto& [p, e] : f.factors) {
        CHECK(e >= 1);
        CHECK(is_prime_elem(p));
        CHECK(p == canonical_associate(p));
      }
    }
  }
}

TEST_CASE("gcd and inv_mod over both rings") {
  CHECK(gcd(RingElem::rat(12), RingElem::rat(18)) == RingElem::rat(6));
  RingElem g = gcd(RingElem::gauss(3, 1), RingElem::gauss(1, 3));
  CHECK(norm(g) == 2);  // both divisible by 1+i

  RingElem m = RingElem::rat(35);
  RingElem inv = inv_mod(RingElem::rat(4), m);
  CHECK(divides(m, RingElem::rat(4) * inv - RingElem::rat(1)));

  RingElem gm = RingElem::gauss(4, 1);  // norm 17
  RingElem gi = inv_mod(RingElem::gauss(2, 3), gm);
  CHECK(divides(gm, RingElem::gauss(2, 3) * gi - RingElem::gauss(1, 0)));
}

TEST_CASE("residues_mod gives a full residue system") {
  for (const RingElem& m : {RingElem::gauss(3, 1), RingElem::gauss(2, 0), RingElem::gauss(1, 2),
                            RingElem::gauss(5, 3)}) {
    auto rs = residues_mod(m);
    CHECK(static_cast<std::int64_t>(rs.size()) == norm(m));
    // pairwise distinct mod m
    for (std::size_t i = 0; i < rs.size(); ++i)
      for (std::size_t j = i + 1; j < rs.size(); ++j) CHECK(!divides(m, rs[i] - rs[j]));
  }
}

TEST_CASE("euler phi and moebius") {
  CHECK(euler_phi(RingElem::rat(12)) == 4);
  CHECK(euler_phi(RingElem::gauss(1, 1)) == 1);
  CHECK(euler_phi(RingElem::gauss(2, 1)) == 4);   // norm 5 prime
  CHECK(euler_phi(RingElem::gauss(3, 0)) == 8);   // inert, norm 9
  CHECK(moebius(RingElem::rat(6)) == 1);
  CHECK(moebius(RingElem::rat(30)) == -1);
  CHECK(moebius(RingElem::rat(12)) == 0);
}

TEST_CASE("divisor support split") {
  auto [q1, q2] = split_by_support(RingElem::rat(360), RingElem::rat(6));
  CHECK(q1 == RingElem::rat(72));
  CHECK(q2 == RingElem::rat(5));
  CHECK(squarefull_part(RingElem::rat(360)) == RingElem::rat(12));
}

TEST_CASE("element parsing and printing") {
  CHECK(to_string(RingElem::gauss(2, -3)) == "2-3i");
  CHECK(to_string(RingElem::gauss(0, 1)) == "i");
  CHECK(parse_elem("1+i", Ring::GAUSS) == RingElem::gauss(1, 1));
  CHECK(parse_elem("-3i", Ring::GAUSS) == RingElem::gauss(0, -3));
  CHECK(parse_elem("2-3i", Ring::GAUSS) == RingElem::gauss(2, -3));
  CHECK(parse_elem("-7", Ring::RAT) == RingElem::rat(-7));
}
