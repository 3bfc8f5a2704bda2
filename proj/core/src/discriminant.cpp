#include "geoledger/discriminant.hpp"

#include <cmath>
#include <cstdlib>

namespace geoledger {

namespace {

std::int64_t isqrt64(std::int64_t n) {
  if (n < 0) return -1;
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

std::int64_t mod_pos(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

const RingElem kPiEven = RingElem::gauss(1, 1);  // the even Gaussian prime

RingElem pi_pow(int k) {
  RingElem z = RingElem::gauss(1, 0);
  for (int i = 0; i < k; ++i) z = z * kPiEven;
  return z;
}

// Is a^2 == m mod pi^k solvable?  Brute force over o/(pi^k), k small.
bool square_mod_pi_pow(const RingElem& m, int k) {
  if (k == 0) return true;
  RingElem mod = pi_pow(k);
  for (const RingElem& a : residues_mod(mod)) {
    if (divides(mod, a * a - m)) return true;
  }
  return false;
}

}  // namespace

bool is_square(const RingElem& x) {
  if (x.is_zero()) return true;
  if (x.ring == Ring::RAT) {
    if (x.a < 0) return false;
    std::int64_t r = isqrt64(x.a);
    return r * r == x.a;
  }
  Factorization f = factorize(x);
  for (const auto& [p, e] : f.factors)
    if (e % 2 != 0) return false;
  // remaining unit must be a square: 1 = 1^2, -1 = i^2; i and -i are not.
  return f.unit == RingElem::gauss(1, 0) || f.unit == RingElem::gauss(-1, 0);
}

int even_disc_valuation_gauss(const RingElem& m_in) {
  if (m_in.is_zero()) throw std::invalid_argument("even_disc_valuation_gauss: zero");
  // reduce valuation mod 2 (discriminant depends on m only up to squares)
  RingElem m = m_in;
  std::int64_t v = ord_p(m, kPiEven);
  for (std::int64_t i = 0; i + 2 <= v; i += 2) m = div_exact(m, pi_pow(2));
  int vm = static_cast<int>(v % 2);
  if (vm == 1) return 5;  // K(sqrt(pi*unit))/K is wildly ramified, d = 2e+1
  // m is now a unit at pi.  The order o[(a+sqrt(m))/pi^j] is integral iff
  // a^2 == m mod pi^(2j); its discriminant is 4m/pi^(2j), valuation 4-2j.
  if (square_mod_pi_pow(m, 5)) return 0;  // m a local square (split): Hensel from pi^5
  if (square_mod_pi_pow(m, 4)) return 0;  // unramified nonsplit
  if (square_mod_pi_pow(m, 2)) return 2;
  return 4;
}

DiscriminantData fundamental_discriminant(const RingElem& delta) {
  if (delta.is_zero()) throw std::domain_error("fundamental_discriminant: delta = 0");
  if (is_square(delta)) throw SquareDeltaError("fundamental_discriminant: delta is a square");

  if (delta.ring == Ring::RAT) {
    if (mod_pos(delta.a, 4) == 2 || mod_pos(delta.a, 4) == 3)
      throw std::domain_error("fundamental_discriminant: delta == 2,3 mod 4");
    // squarefree part with sign
    std::int64_t m = delta.a > 0 ? 1 : -1;
    std::int64_t f = 1;
    for (const auto& [p, e] : factorize(delta).factors) {
      std::int64_t pv = p.a;
      for (int i = 0; i < e / 2; ++i) f *= pv;
      if (e % 2) m *= pv;
    }
    if (mod_pos(m, 4) == 1) return {delta, RingElem::rat(m), RingElem::rat(f)};
    if (f % 2 != 0) throw std::logic_error("conductor parity violated for delta == 0,1 mod 4");
    return {delta, RingElem::rat(4 * m), RingElem::rat(f / 2)};
  }

  // Gaussian case: v_p(D) = e_p mod 2 at odd p; at (1+i) the discriminant
  // valuation comes from the local square analysis.
  int v_even = static_cast<int>(ord_p(delta, kPiEven));
  int vD_even = even_disc_valuation_gauss(delta);
  if (v_even < vD_even || (v_even - vD_even) % 2 != 0)
    throw std::domain_error("fundamental_discriminant: not a discriminant at (1+i)");
  RingElem l = RingElem::gauss(1, 0);
  for (int i = 0; i < (v_even - vD_even) / 2; ++i) l = l * kPiEven;
  for (const auto& [p, e] : factorize(delta).factors) {
    if (norm(p) == 2) continue;
    for (int i = 0; i < e / 2; ++i) l = l * p;
  }
  l = canonical_associate(l);
  RingElem D = div_exact(delta, l * l);
  return {delta, D, l};
}

bool is_fundamental(const RingElem& D) {
  if (D.is_zero()) return false;
  if (D.ring == Ring::RAT) {
    if (D.a == 1) return true;  // trivial character
    if (is_square(D)) return false;
    std::int64_t m4 = mod_pos(D.a, 4);
    if (m4 == 1) return moebius(D) != 0;
    if (m4 == 0) {
      std::int64_t q = D.a / 4;
      std::int64_t q4 = mod_pos(q, 4);
      return (q4 == 2 || q4 == 3) && moebius(RingElem::rat(q)) != 0;
    }
    return false;
  }
  if (D.is_unit()) return D.a == 1 && D.b == 0;
  if (is_square(D)) return false;
  DiscriminantData dd = fundamental_discriminant(D);
  return dd.conductor.is_unit() && dd.fundamental == D;
}

int kronecker_symbol(std::int64_t a, std::int64_t n) {
  if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
  if (a % 2 == 0 && n % 2 == 0) return 0;
  int k = 1;
  int v = 0;
  while (n % 2 == 0) { n /= 2; ++v; }
  if (v % 2) {
    std::int64_t am8 = mod_pos(a, 8);
    if (am8 == 3 || am8 == 5) k = -k;
  }
  if (n < 0) {
    n = -n;
    if (a < 0) k = -k;
  }
  a = mod_pos(a, n);
  while (a != 0) {
    v = 0;
    while (a % 2 == 0) { a /= 2; ++v; }
    if (v % 2) {
      std::int64_t nm8 = n % 8;
      if (nm8 == 3 || nm8 == 5) k = -k;
    }
    if (a % 4 == 3 && n % 4 == 3) k = -k;
    std::int64_t t = n % a;
    n = a;
    a = t;
  }
  return n == 1 ? k : 0;
}

int residue_symbol_odd(const RingElem& u, const RingElem& p) {
  std::int64_t e = (norm(p) - 1) / 2;
  RingElem base = euclid_rem(u, p);
  RingElem acc(p.ring, 1, 0);
  while (e > 0) {
    if (e & 1) acc = euclid_rem(acc * base, p);
    base = euclid_rem(base * base, p);
    e >>= 1;
  }
  RingElem one(p.ring, 1, 0);
  if (divides(p, acc - one)) return 1;
  if (divides(p, acc + one)) return -1;
  throw std::logic_error("residue_symbol_odd: u not a unit mod p");
}

int epsilon_at(const RingElem& delta, const RingElem& p) {
  if (delta.is_zero() || is_square(delta))
    throw std::invalid_argument("epsilon_at: delta must be a nonzero nonsquare");
  std::int64_t v = ord_p(delta, p);
  if (v % 2 == 1) return 0;
  RingElem u = delta;
  for (std::int64_t i = 0; i < v; ++i) u = div_exact(u, p);

  if (delta.ring == Ring::RAT) {
    if (p.a == 2) {
      std::int64_t u8 = mod_pos(u.a, 8);
      if (u8 == 1) return 1;
      if (u8 == 5) return -1;
      return 0;
    }
    return residue_symbol_odd(u, p);
  }
  if (norm(p) == 2) {
    int d = even_disc_valuation_gauss(u);
    if (d != 0) return 0;
    return square_mod_pi_pow(u, 5) ? 1 : -1;
  }
  return residue_symbol_odd(u, p);
}

int kronecker(const RingElem& D, const RingElem& n) {
  if (!is_fundamental(D)) throw NonFundamentalError("kronecker: D is not fundamental");
  if (D.ring == Ring::RAT) return kronecker_symbol(D.a, n.a);
  // ideal character: product of local splitting symbols
  if (D.is_unit()) return n.is_zero() ? 0 : 1;
  if (n.is_zero()) return 0;
  if (n.is_unit()) return 1;
  int s = 1;
  for (const auto& [p, e] : factorize(n).factors) {
    int sp = epsilon_at(D, p);
    if (sp == 0) return 0;
    if (e % 2) s *= sp;
  }
  return s;
}

}  // namespace geoledger
