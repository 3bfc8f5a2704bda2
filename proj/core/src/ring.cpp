#include "geoledger/ring.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>

namespace geoledger {

namespace {

std::int64_t isqrt64(std::int64_t n) {
  if (n < 0) return -1;
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

bool is_prime_i64(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d : {2, 3, 5}) {
    if (n % d == 0) return n == d;
  }
  for (std::int64_t d = 7; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

// One Gaussian prime above a rational prime p == 1 mod 4, by brute search
// of a^2 + b^2 = p.  Desk scale keeps p small, no need for Cornacchia.
RingElem gaussian_prime_above(std::int64_t p) {
  for (std::int64_t a = 1; a * a <= p; ++a) {
    std::int64_t b2 = p - a * a;
    std::int64_t b = isqrt64(b2);
    if (b >= 0 && b * b == b2) return canonical_associate(RingElem::gauss(a, b));
  }
  throw std::logic_error("no Gaussian prime above p = " + std::to_string(p));
}

}  // namespace

bool RingElem::is_unit() const { return norm(*this) == 1; }

std::int64_t norm(const RingElem& x) {
  if (x.ring == Ring::RAT) return std::llabs(x.a);
  return x.a * x.a + x.b * x.b;
}

RingElem operator+(const RingElem& x, const RingElem& y) {
  if (x.ring != y.ring) throw std::invalid_argument("ring mismatch");
  return RingElem(x.ring, x.a + y.a, x.b + y.b);
}

RingElem operator-(const RingElem& x, const RingElem& y) {
  if (x.ring != y.ring) throw std::invalid_argument("ring mismatch");
  return RingElem(x.ring, x.a - y.a, x.b - y.b);
}

RingElem operator*(const RingElem& x, const RingElem& y) {
  if (x.ring != y.ring) throw std::invalid_argument("ring mismatch");
  if (x.ring == Ring::RAT) return RingElem::rat(x.a * y.a);
  return RingElem::gauss(x.a * y.a - x.b * y.b, x.a * y.b + x.b * y.a);
}

RingElem operator-(const RingElem& x) { return RingElem(x.ring, -x.a, -x.b); }

RingElem conj(const RingElem& x) { return RingElem(x.ring, x.a, -x.b); }

bool divides(const RingElem& d, const RingElem& x) {
  if (d.is_zero()) return x.is_zero();
  if (d.ring == Ring::RAT) return x.a % d.a == 0;
  // x / d = x * conj(d) / Nr(d)
  RingElem num = x * conj(d);
  std::int64_t n = norm(d);
  return num.a % n == 0 && num.b % n == 0;
}

RingElem div_exact(const RingElem& x, const RingElem& y) {
  if (y.is_zero()) throw std::invalid_argument("division by zero");
  if (x.ring == Ring::RAT) {
    if (x.a % y.a != 0) throw std::invalid_argument("inexact division");
    return RingElem::rat(x.a / y.a);
  }
  RingElem num = x * conj(y);
  std::int64_t n = norm(y);
  if (num.a % n != 0 || num.b % n != 0) throw std::invalid_argument("inexact division");
  return RingElem::gauss(num.a / n, num.b / n);
}

RingElem euclid_rem(const RingElem& x, const RingElem& m) {
  if (m.is_zero()) return x;
  if (x.ring == Ring::RAT) {
    std::int64_t r = x.a % m.a;
    return RingElem::rat(r);
  }
  RingElem num = x * conj(m);
  std::int64_t n = norm(m);
  auto nearest = [](std::int64_t p, std::int64_t q) {
    // round p/q to the nearest integer
    double v = static_cast<double>(p) / static_cast<double>(q);
    return static_cast<std::int64_t>(std::llround(v));
  };
  RingElem q = RingElem::gauss(nearest(num.a, n), nearest(num.b, n));
  return x - q * m;
}

RingElem gcd(RingElem x, RingElem y) {
  if (x.ring != y.ring) throw std::invalid_argument("ring mismatch");
  while (!y.is_zero()) {
    RingElem r = euclid_rem(x, y);
    x = y;
    y = r;
  }
  return canonical_associate(x);
}

RingElem canonical_associate(const RingElem& x) {
  if (x.ring == Ring::RAT) return RingElem::rat(std::llabs(x.a));
  RingElem z = x;
  for (int k = 0; k < 4; ++k) {
    if (z.a > 0 && z.b >= 0) return z;
    z = RingElem::gauss(-z.b, z.a);  // multiply by i
  }
  return x;  // zero
}

std::vector<RingElem> units(Ring ring) {
  if (ring == Ring::RAT) return {RingElem::rat(1), RingElem::rat(-1)};
  return {RingElem::gauss(1, 0), RingElem::gauss(0, 1), RingElem::gauss(-1, 0),
          RingElem::gauss(0, -1)};
}

bool is_prime_elem(const RingElem& x) {
  std::int64_t n = norm(x);
  if (x.ring == Ring::RAT) return is_prime_i64(n);
  if (is_prime_i64(n)) return true;  // norm prime => Gaussian prime
  // inert case: associate of a rational prime p == 3 mod 4, norm p^2
  std::int64_t r = isqrt64(n);
  if (r * r != n) return false;
  if (!is_prime_i64(r) || r % 4 != 3) return false;
  RingElem c = canonical_associate(x);
  return c.b == 0 && c.a == r;
}

RingElem Factorization::value() const {
  RingElem v = unit;
  for (const auto& [p, e] : factors)
    for (int i = 0; i < e; ++i) v = v * p;
  return v;
}

Factorization factorize(const RingElem& x) {
  if (x.is_zero()) throw std::invalid_argument("factorize: zero input");
  Factorization f;
  if (x.ring == Ring::RAT) {
    std::int64_t n = x.a;
    f.unit = RingElem::rat(n < 0 ? -1 : 1);
    n = std::llabs(n);
    for (std::int64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
      int e = 0;
      while (n % p == 0) { n /= p; ++e; }
      if (e) f.factors.push_back({RingElem::rat(p), e});
    }
    if (n > 1) f.factors.push_back({RingElem::rat(n), 1});
    return f;
  }

  // Gaussian: factor the norm, then resolve each rational prime.
  RingElem z = x;
  std::int64_t n = norm(z);
  Factorization nf = factorize(RingElem::rat(n));
  for (const auto& [pe, e_norm] : nf.factors) {
    std::int64_t p = pe.a;
    (void)e_norm;
    if (p == 2) {
      RingElem pi = RingElem::gauss(1, 1);
      int e = 0;
      while (divides(pi, z)) { z = div_exact(z, pi); ++e; }
      if (e) f.factors.push_back({pi, e});
    } else if (p % 4 == 3) {
      RingElem pi = RingElem::gauss(p, 0);
      int e = 0;
      while (divides(pi, z)) { z = div_exact(z, pi); ++e; }
      if (e) f.factors.push_back({pi, e});
    } else {
      RingElem pi = gaussian_prime_above(p);
      RingElem pibar = canonical_associate(conj(pi));
      int e1 = 0, e2 = 0;
      while (divides(pi, z)) { z = div_exact(z, pi); ++e1; }
      while (divides(pibar, z)) { z = div_exact(z, pibar); ++e2; }
      if (e1) f.factors.push_back({pi, e1});
      if (e2) f.factors.push_back({pibar, e2});
    }
  }
  if (norm(z) != 1) throw std::logic_error("gaussian factorization left a non-unit");
  f.unit = z;
  std::sort(f.factors.begin(), f.factors.end(), [](const auto& u, const auto& v) {
    if (norm(u.first) != norm(v.first)) return norm(u.first) < norm(v.first);
    return u.first.b < v.first.b;
  });
  return f;
}

std::int64_t euler_phi(const RingElem& q) {
  if (q.is_unit()) return 1;
  Factorization f = factorize(q);
  std::int64_t phi = 1;
  for (const auto& [p, e] : f.factors) {
    std::int64_t np = norm(p);
    std::int64_t pk = 1;
    for (int i = 0; i < e - 1; ++i) pk *= np;
    phi *= pk * (np - 1);
  }
  return phi;
}

int moebius(const RingElem& q) {
  if (q.is_unit()) return 1;
  Factorization f = factorize(q);
  for (const auto& [p, e] : f.factors)
    if (e > 1) return 0;
  return f.factors.size() % 2 == 0 ? 1 : -1;
}

std::int64_t divisor_count(const RingElem& q) {
  Factorization f = factorize(q);
  std::int64_t d = 1;
  for (const auto& [p, e] : f.factors) d *= (e + 1);
  return d;
}

std::vector<RingElem> divisors(const RingElem& q) {
  Factorization f = factorize(q);
  std::vector<RingElem> ds = {RingElem(q.ring, 1, 0)};
  for (const auto& [p, e] : f.factors) {
    std::size_t base = ds.size();
    RingElem pk = p;
    for (int i = 1; i <= e; ++i) {
      for (std::size_t j = 0; j < base; ++j) ds.push_back(canonical_associate(ds[j] * pk));
      pk = pk * p;
    }
  }
  return ds;
}

std::pair<RingElem, RingElem> split_by_support(const RingElem& q, const RingElem& N) {
  RingElem one(q.ring, 1, 0);
  RingElem q1 = one, q2 = one;
  for (const auto& [p, e] : factorize(q).factors) {
    RingElem pk = one;
    for (int i = 0; i < e; ++i) pk = pk * p;
    if (!N.is_zero() && divides(p, N))
      q1 = q1 * pk;
    else
      q2 = q2 * pk;
  }
  return {canonical_associate(q1), canonical_associate(q2)};
}

RingElem squarefull_part(const RingElem& q) {
  RingElem out(q.ring, 1, 0);
  for (const auto& [p, e] : factorize(q).factors)
    for (int i = 0; i < e - 1; ++i) out = out * p;
  return canonical_associate(out);
}

std::int64_t ord_p(const RingElem& x, const RingElem& p) {
  if (x.is_zero()) throw std::invalid_argument("ord_p of zero");
  RingElem z = x;
  std::int64_t e = 0;
  while (divides(p, z)) { z = div_exact(z, p); ++e; }
  return e;
}

std::vector<RingElem> residues_mod(const RingElem& m) {
  if (m.is_zero()) throw std::invalid_argument("residues mod zero");
  std::vector<RingElem> out;
  if (m.ring == Ring::RAT) {
    std::int64_t n = std::llabs(m.a);
    out.reserve(n);
    for (std::int64_t r = 0; r < n; ++r) out.push_back(RingElem::rat(r));
    return out;
  }
  // Lattice (m, i*m) in coordinates (a, b).  Column HNF: d = gcd of the
  // b-components over combinations, handled by the standard 2x2 reduction.
  // Basis vectors: v1 = (m.a, m.b), v2 = (-m.b, m.a).
  // A fundamental domain is {(s, t) : 0 <= s < n/g, 0 <= t < g} for a
  // suitable HNF; we compute it explicitly.
  std::int64_t a1 = m.a, b1 = m.b, a2 = -m.b, b2 = m.a;
  // Reduce to upper-triangular form (column operations over Z on rows (a,b)):
  // we want basis u1 = (d, 0), u2 = (c, h) with d*h = Nr(m).
  while (b1 != 0) {
    // swap so |b2| >= |b1| then reduce
    std::int64_t q = b2 / b1;
    a2 -= q * a1;
    b2 -= q * b1;
    std::swap(a1, a2);
    std::swap(b1, b2);
  }
  std::int64_t d = std::llabs(a1);
  std::int64_t h = std::llabs(b2);
  if (d * h != norm(m)) throw std::logic_error("HNF volume mismatch");
  out.reserve(norm(m));
  for (std::int64_t s = 0; s < d; ++s)
    for (std::int64_t t = 0; t < h; ++t) out.push_back(RingElem::gauss(s, t));
  return out;
}

RingElem inv_mod(const RingElem& x, const RingElem& m) {
  // Extended Euclid in the ring.
  RingElem r0 = m, r1 = euclid_rem(x, m);
  RingElem one(x.ring, 1, 0), zero(x.ring, 0, 0);
  RingElem s0 = zero, s1 = one;
  while (!r1.is_zero()) {
    // quotient via exact-ish division: q = round((r0 * conj(r1)) / Nr(r1))
    RingElem q;
    if (x.ring == Ring::RAT) {
      q = RingElem::rat(r0.a / r1.a);
    } else {
      RingElem num = r0 * conj(r1);
      std::int64_t n = norm(r1);
      auto nearest = [](std::int64_t p, std::int64_t qn) {
        return static_cast<std::int64_t>(
            std::llround(static_cast<double>(p) / static_cast<double>(qn)));
      };
      q = RingElem::gauss(nearest(num.a, n), nearest(num.b, n));
    }
    RingElem r2 = r0 - q * r1;
    RingElem s2 = s0 - q * s1;
    r0 = r1; r1 = r2;
    s0 = s1; s1 = s2;
  }
  if (!r0.is_unit()) throw std::invalid_argument("inv_mod: non-invertible element");
  // x * s0 == r0 (a unit); divide by the unit.
  RingElem inv = s0;
  RingElem u = r0;
  // multiply inv by u^{-1}; units satisfy u^{-1} = conj(u) for GAUSS, self for RAT
  RingElem uinv = (x.ring == Ring::RAT) ? u : conj(u);
  inv = inv * uinv;
  return euclid_rem(inv, m);
}

std::string to_string(const RingElem& x) {
  if (x.ring == Ring::RAT) return std::to_string(x.a);
  if (x.b == 0) return std::to_string(x.a);
  std::string im;
  if (x.b == 1) im = "i";
  else if (x.b == -1) im = "-i";
  else im = std::to_string(x.b) + "i";
  if (x.a == 0) return im;
  return std::to_string(x.a) + (x.b > 0 ? "+" : "") + im;
}

RingElem parse_elem(const std::string& s, Ring ring) {
  if (ring == Ring::RAT) return RingElem::rat(std::stoll(s));
  // forms: "a", "bi", "i", "-i", "a+bi", "a-bi", "a+i", "a-i"
  std::string t = s;
  auto parse_im = [](const std::string& u) -> std::int64_t {
    if (u.empty() || u == "+") return 1;
    if (u == "-") return -1;
    return std::stoll(u);
  };
  if (t.back() == 'i') {
    t.pop_back();
    // find split point: last '+' or '-' not at position 0
    std::size_t pos = std::string::npos;
    for (std::size_t k = t.size(); k-- > 1;) {
      if (t[k] == '+' || t[k] == '-') { pos = k; break; }
    }
    if (pos == std::string::npos) return RingElem::gauss(0, parse_im(t));
    std::int64_t re = std::stoll(t.substr(0, pos));
    std::string imtok = t.substr(pos);
    return RingElem::gauss(re, parse_im(imtok));
  }
  return RingElem::gauss(std::stoll(t), 0);
}

}  // namespace geoledger
