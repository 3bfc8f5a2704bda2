#include "geoledger/zagier.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <unordered_map>

#include "geoledger/dirichlet.hpp"
#include "geoledger/local_factors.hpp"

namespace geoledger {

using cplx = std::complex<double>;

namespace {

std::int64_t ipow(std::int64_t b, std::int64_t e) {
  std::int64_t r = 1;
  for (std::int64_t i = 0; i < e; ++i) r *= b;
  return r;
}

// #{x mod p^k : x^2 == delta mod p^k} for an odd prime element p.
std::int64_t sqrt_count_odd(const RingElem& delta, const RingElem& p, int k) {
  if (k == 0) return 1;
  std::int64_t np = norm(p);
  // valuation of delta at p, capped at k
  int v = 0;
  RingElem u = delta;
  while (v < k && !u.is_zero() && divides(p, u)) {
    u = div_exact(u, p);
    ++v;
  }
  if (u.is_zero() || v >= k) return ipow(np, k / 2);
  if (v % 2 == 1) return 0;
  int sym = residue_symbol_odd(u, p);
  return (sym == 1) ? 2 * ipow(np, v / 2) : 0;
}

// #{x mod m1 : x^2 == delta mod m2} by enumeration.
std::int64_t sqrt_count_enum(const RingElem& delta, const RingElem& m1, const RingElem& m2) {
  std::int64_t cnt = 0;
  for (const RingElem& x : residues_mod(m1)) {
    if (divides(m2, x * x - delta)) ++cnt;
  }
  return cnt;
}

struct SeriesTable {
  std::vector<RingElem> ideals;                       // sorted by norm
  std::vector<std::vector<std::pair<int, int>>> triples;  // (index of c, mu(b)) per q
};

const std::vector<RingElem>& ideal_list(Ring ring, std::int64_t bound);

// Divisor triples a^2 b c = q with indices of c into the ideal list.
std::shared_ptr<const SeriesTable> series_table(Ring ring, std::int64_t bound) {
  static std::mutex mu;
  static std::map<std::pair<int, std::int64_t>, std::shared_ptr<const SeriesTable>> cache;
  std::pair<int, std::int64_t> key{static_cast<int>(ring), bound};
  std::lock_guard<std::mutex> lk(mu);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  auto table = std::make_shared<SeriesTable>();
  table->ideals = ideal_list(ring, bound);
  std::map<std::pair<std::int64_t, std::int64_t>, int> index;
  for (std::size_t i = 0; i < table->ideals.size(); ++i)
    index[{table->ideals[i].a, table->ideals[i].b}] = static_cast<int>(i);
  table->triples.resize(table->ideals.size());
  for (std::size_t i = 0; i < table->ideals.size(); ++i) {
    const RingElem& q = table->ideals[i];
    for (const RingElem& a : divisors(q)) {
      if (!divides(a * a, q)) continue;
      RingElem rest = canonical_associate(div_exact(q, a * a));
      for (const RingElem& b : divisors(rest)) {
        int mb = moebius(b);
        if (mb == 0) continue;
        RingElem c = canonical_associate(div_exact(rest, b));
        table->triples[i].push_back({index.at({c.a, c.b}), mb});
      }
    }
  }
  cache[key] = table;
  return table;
}

const std::vector<RingElem>& ideal_list(Ring ring, std::int64_t bound) {
  static std::mutex mu;
  static std::map<std::pair<int, std::int64_t>, std::unique_ptr<std::vector<RingElem>>> cache;
  std::pair<int, std::int64_t> key{static_cast<int>(ring), bound};
  std::lock_guard<std::mutex> lk(mu);
  auto it = cache.find(key);
  if (it != cache.end()) return *it->second;
  auto v = std::make_unique<std::vector<RingElem>>();
  if (ring == Ring::RAT) {
    for (std::int64_t n = 1; n <= bound; ++n) v->push_back(RingElem::rat(n));
  } else {
    for (std::int64_t a = 1; a * a <= bound; ++a)
      for (std::int64_t b = 0; a * a + b * b <= bound; ++b) v->push_back(RingElem::gauss(a, b));
    std::sort(v->begin(), v->end(), [](const RingElem& x, const RingElem& y) {
      if (norm(x) != norm(y)) return norm(x) < norm(y);
      if (x.a != y.a) return x.a < y.a;
      return x.b < y.b;
    });
  }
  auto& ref = *v;
  cache[key] = std::move(v);
  return ref;
}

}  // namespace

const std::vector<RingElem>& ideals_up_to(Ring ring, std::int64_t bound) {
  return ideal_list(ring, bound);
}

std::int64_t rho_q_enumeration(const RingElem& delta, const RingElem& q) {
  if (q.is_zero()) throw ZeroModulusError("rho_q: q = 0");
  if (norm(q) > 1000000) throw std::overflow_error("rho_q_enumeration: norm(q) > 1e6");
  RingElem two(q.ring, 2, 0), four(q.ring, 4, 0);
  return sqrt_count_enum(delta, two * q, four * q);
}

std::int64_t rho_q_crt(const RingElem& delta, const RingElem& q) {
  if (q.is_zero()) throw ZeroModulusError("rho_q: q = 0");
  Factorization f = factorize(q);
  std::int64_t out = 1;

  if (q.ring == Ring::RAT) {
    int k2 = 0;
    for (const auto& [p, e] : f.factors) {
      if (p.a == 2) { k2 = e; continue; }
      out *= sqrt_count_odd(delta, p, e);
      if (out == 0) return 0;
    }
    // even part: x mod 2^(k2+1) with x^2 == delta mod 2^(k2+2)
    out *= sqrt_count_enum(delta, RingElem::rat(ipow(2, k2 + 1)), RingElem::rat(ipow(2, k2 + 2)));
    return out;
  }

  RingElem pi = RingElem::gauss(1, 1);
  int kpi = 0;
  for (const auto& [p, e] : f.factors) {
    if (norm(p) == 2) { kpi = e; continue; }
    out *= sqrt_count_odd(delta, p, e);
    if (out == 0) return 0;
  }
  RingElem m1(Ring::GAUSS, 1, 0), m2(Ring::GAUSS, 1, 0);
  for (int i = 0; i < kpi + 2; ++i) m1 = m1 * pi;
  for (int i = 0; i < kpi + 4; ++i) m2 = m2 * pi;
  out *= sqrt_count_enum(delta, m1, m2);
  return out;
}

std::int64_t rho_q(const RingElem& delta, const RingElem& q) { return rho_q_crt(delta, q); }

std::int64_t lambda_q(const RingElem& delta, const RingElem& q) {
  if (q.is_zero()) throw ZeroModulusError("lambda_q: q = 0");
  std::int64_t out = 0;
  for (const RingElem& a : divisors(q)) {
    if (!divides(a * a, q)) continue;
    RingElem rest = canonical_associate(div_exact(q, a * a));
    for (const RingElem& b : divisors(rest)) {
      int mb = moebius(b);
      if (mb == 0) continue;
      RingElem c = canonical_associate(div_exact(rest, b));
      out += mb * rho_q(delta, c);
    }
  }
  return out;
}

std::complex<double> zagier_L_series(cplx s, const ZagierParams& params, double smoothing_v) {
  if (s.real() <= 0.5) throw DivergentError("zagier_L_series: Re(s) <= 1/2");
  const RingElem& delta = params.delta.delta;
  std::int64_t qmax = params.truncation_norm;
  double V = smoothing_v;
  if (V == 0.0 && s.real() <= 1.0) V = static_cast<double>(qmax) / 10.0;

  auto table = series_table(params.ring, qmax);
  // rho per ideal index, memoized for this delta
  std::vector<std::int64_t> rho(table->ideals.size(), -1);
  auto rho_at = [&](int idx) {
    if (rho[idx] < 0) rho[idx] = rho_q(delta, table->ideals[idx]);
    return rho[idx];
  };

  cplx sum = 0.0;
  for (std::size_t i = 0; i < table->ideals.size(); ++i) {
    std::int64_t lam = 0;
    for (const auto& [cidx, mb] : table->triples[i]) lam += mb * rho_at(cidx);
    if (lam == 0) continue;
    double nq = static_cast<double>(norm(table->ideals[i]));
    cplx term = static_cast<double>(lam) * std::pow(cplx(nq, 0.0), -s);
    if (V > 0.0) term *= std::exp(-nq / V);
    sum += term;
  }
  return sum;
}

std::complex<double> zagier_L_factored(cplx s, const DiscriminantData& dd) {
  const RingElem& D = dd.fundamental;
  const RingElem& l = dd.conductor;
  bool trivial_D = (D.ring == Ring::RAT) ? (D.a == 1) : D.is_unit();
  if (trivial_D && std::abs(s - cplx(1.0, 0.0)) < 1e-12)
    throw PoleAtSError("zagier_L_factored: L(s, chi_1) has a pole at s = 1");

  cplx out = dirichlet_L(s, D, LMethod::CHAR_SUM);
  double nl = static_cast<double>(norm(l));
  out *= std::pow(cplx(nl, 0.0), -s);
  if (!l.is_unit()) {
    for (const auto& [p, e] : factorize(l).factors) {
      LocalType t{norm(p), kronecker(D, p)};
      out *= local_poly_principal(t, e).evaluate(s);
    }
  }
  return out;
}

std::int64_t p_conjugacy_count(std::int64_t t, std::int64_t n) {
  if (n <= 0) throw ZeroModulusError("p_conjugacy_count: n >= 1");
  std::int64_t cnt = 0;
  for (std::int64_t a = 0; a < n; ++a) {
    std::int64_t v = (a % n) * (((t - a) % n + n) % n) % n;
    if ((v - 1) % n == 0 || (v - 1 + n) % n == 0) ++cnt;
  }
  return cnt;
}

std::complex<double> p_conjugacy_series(cplx s, std::int64_t t, std::int64_t n_max) {
  if (std::llabs(t) <= 2) throw NonHyperbolicTraceError("p_conjugacy_series: |t| > 2 required");
  cplx sum = 0.0;
  for (std::int64_t n = 1; n <= n_max; ++n) {
    std::int64_t c = p_conjugacy_count(t, n);
    if (c) sum += static_cast<double>(c) * std::pow(cplx(static_cast<double>(n), 0.0), -s);
  }
  return 2.0 * sum;  // |o^x / (o^x)^2| = 2 over Z
}

}  // namespace geoledger
