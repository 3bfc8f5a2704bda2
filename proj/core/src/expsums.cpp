#include "geoledger/expsums.hpp"

#include <cmath>

#include "geoledger/dirichlet.hpp"
#include "geoledger/zagier.hpp"

namespace geoledger {

using cplx = std::complex<double>;

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

}  // namespace

std::complex<double> pairing_phase(const RingElem& x, const RingElem& q, const RingElem& k) {
  // <x/q, k> = (x k)/q over Q, Re((x k)/q) over Q(i); only the value
  // mod 1 matters.
  std::int64_t re, den;
  if (q.ring == Ring::RAT) {
    den = q.a;
    if (den < 0) den = -den;
    re = (x.a * k.a) % ((q.a < 0) ? -q.a : q.a) * ((q.a < 0) ? -1 : 1);
  } else {
    RingElem num = x * k * conj(q);
    den = norm(q);
    re = num.a % den;
  }
  double frac = static_cast<double>(re) / static_cast<double>(den);
  return std::polar(1.0, kTwoPi * frac);
}

std::complex<double> s_q_bruteforce(const ExpSumParams& params) {
  if (params.q.is_zero()) throw ZeroModulusError("s_q_bruteforce: q = 0");
  if (norm(params.q) > 100000) throw TooLargeError("s_q_bruteforce: norm(q) > 1e5");
  RingElem four(params.ring, 4, 0);
  RingElem n2 = params.N * params.N;
  cplx sum = 0.0;
  for (const RingElem& b : residues_mod(params.q)) {
    RingElem delta = b * (four + n2 * b);
    std::int64_t r = rho_q(delta, params.q);
    if (r == 0) continue;
    sum += static_cast<double>(r) * pairing_phase(b, params.q, params.k);
  }
  return sum;
}

std::complex<double> kloosterman(const RingElem& a, const RingElem& b, const RingElem& c) {
  if (c.is_zero()) throw ZeroModulusError("kloosterman: c = 0");
  if (norm(c) > 100000) throw TooLargeError("kloosterman: norm(c) > 1e5");
  RingElem one(c.ring, 1, 0);
  cplx sum = 0.0;
  for (const RingElem& y : residues_mod(c)) {
    if (!gcd(y, c).is_unit()) continue;
    RingElem yinv = inv_mod(y, c);
    sum += pairing_phase(a * y + b * yinv, c, one);
  }
  return sum;
}

WeilCheck s_q_weil_check(const ExpSumParams& params) {
  WeilCheck out;
  out.value = s_q_bruteforce(params);
  auto [q1, q2] = split_by_support(params.q, params.N);
  (void)q1;
  double d2 = static_cast<double>(divisor_count(q2));
  double g = static_cast<double>(norm(gcd(params.k, params.q)));
  out.bound = 2.0 * d2 * std::sqrt(g) * std::sqrt(static_cast<double>(norm(params.q)));
  out.ok = std::abs(out.value) <= out.bound + 1e-6;
  return out;
}

std::int64_t g_weight(const RingElem& c, const RingElem& N) {
  auto [c1, c2] = split_by_support(c, N);
  return norm(c1) * euler_phi(c2);
}

LatticeSum lambda_lattice_sum(double Z, const RingElem& q, const RingElem& N) {
  if (q.ring != Ring::GAUSS || N.ring != Ring::GAUSS)
    throw std::invalid_argument("lambda_lattice_sum: Gaussian ring only");
  if (Z > 10000.5) throw TooLargeError("lambda_lattice_sum: Z <= 1e4");
  RingElem n2 = N * N;
  RingElem two(Ring::GAUSS, 2, 0);

  LatticeSum out;
  double r_t = std::sqrt(Z) + 1e-9;
  double r_m = (r_t + 2.0) / std::sqrt(static_cast<double>(norm(n2)));
  auto mr = static_cast<std::int64_t>(std::ceil(r_m));
  for (std::int64_t ma = -mr; ma <= mr; ++ma) {
    for (std::int64_t mb = -mr; mb <= mr; ++mb) {
      RingElem t = two + n2 * RingElem::gauss(ma, mb);
      if (static_cast<double>(norm(t)) > Z + 1e-9) continue;
      RingElem delta = div_exact(t - two, n2) * (t + two);
      out.value += static_cast<double>(lambda_q(delta, q));
    }
  }

  double divisor_sum = 0.0;
  for (const RingElem& a : divisors(q)) {
    if (!divides(a * a, q)) continue;
    RingElem rest = canonical_associate(div_exact(q, a * a));
    for (const RingElem& b : divisors(rest)) {
      int mb = moebius(b);
      if (mb == 0) continue;
      RingElem c = canonical_associate(div_exact(rest, b));
      divisor_sum += static_cast<double>(mb) * static_cast<double>(g_weight(c, N)) /
                     static_cast<double>(norm(c));
    }
  }
  double pi = std::acos(-1.0);
  out.main = pi * Z / static_cast<double>(norm(n2)) * divisor_sum;
  out.error = out.value - out.main;
  return out;
}

IdentityCheck dirichlet_identity_check(cplx s, const RingElem& N, std::int64_t q_max) {
  if (s.real() <= 0.0) throw ConvergenceRegionError("dirichlet_identity_check: Re(s) > 0");
  if (N.ring != Ring::GAUSS) throw std::invalid_argument("dirichlet_identity_check: N in Z[i]");
  IdentityCheck out;

  cplx lhs = 0.0;
  for (const RingElem& q : ideals_up_to(Ring::GAUSS, q_max)) {
    double inner = 0.0;
    for (const RingElem& a : divisors(q)) {
      if (!divides(a * a, q)) continue;
      RingElem rest = canonical_associate(div_exact(q, a * a));
      for (const RingElem& b : divisors(rest)) {
        int mb = moebius(b);
        if (mb == 0) continue;
        RingElem c = canonical_associate(div_exact(rest, b));
        inner += static_cast<double>(mb) * static_cast<double>(g_weight(c, N)) /
                 static_cast<double>(norm(c));
      }
    }
    if (inner == 0.0) continue;
    lhs += inner * std::pow(cplx(static_cast<double>(norm(q)), 0.0), -(1.0 + s));
  }
  out.lhs = lhs;

  cplx rhs = dedekind_zeta_gauss(2.0 + 2.0 * s) / dedekind_zeta_gauss(2.0 + s);
  if (!N.is_unit()) {
    for (const auto& [p, e] : factorize(N).factors) {
      (void)e;
      cplx factor = 1.0 - std::pow(cplx(static_cast<double>(norm(p)), 0.0), -(2.0 + s));
      rhs /= factor;
    }
  }
  out.rhs = rhs;
  return out;
}

}  // namespace geoledger
