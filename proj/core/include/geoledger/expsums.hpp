#pragma once

// Exponential sums attached to the trace lattice:
//
//   S_q(k, N) = sum_{b mod q} rho_q(b(4 + N^2 b)) e(<b/q, k>),
//
// with <x,y> = xy over Q and Re(xy) over Q(i).  For k = 0 the value is
// Nr(q_1) phi(q_2) with q_1 | N^inf, (q_2, N) = 1; for (q, N) = 1 and
// k != 0 it reduces to a Kloosterman sum times a phase.  Also the
// lambda-sum lattice asymptotic over Q(i) and the Dirichlet-series
// identity behind its main-term constant.

#include <complex>
#include <cstdint>
#include <stdexcept>

#include "geoledger/ring.hpp"

namespace geoledger {

struct TooLargeError : std::domain_error {
  explicit TooLargeError(const std::string& w) : std::domain_error(w) {}
};
struct ConvergenceRegionError : std::domain_error {
  explicit ConvergenceRegionError(const std::string& w) : std::domain_error(w) {}
};

struct ExpSumParams {
  Ring ring = Ring::RAT;
  RingElem q = RingElem::rat(1);
  RingElem k = RingElem::rat(0);
  RingElem N = RingElem::rat(1);
};

// e(2 pi i <x/q, k>) for x, k, q in the ring.
std::complex<double> pairing_phase(const RingElem& x, const RingElem& q, const RingElem& k);

std::complex<double> s_q_bruteforce(const ExpSumParams& params);

// S(a, b; c) = sum_{(y,c)=1} e(<(a y + b y^{-1})/c, 1>).
std::complex<double> kloosterman(const RingElem& a, const RingElem& b, const RingElem& c);

struct WeilCheck {
  std::complex<double> value;
  double bound = 0.0;
  bool ok = false;
};

// |S_q(k,N)| against 2 d(q_2) Nr((k,q))^(1/2) Nr(q)^(1/2), d the divisor
// count.  The constant 2 is calibrated from the classical Kloosterman
// bound; excesses are reported via ok = false rather than thrown.
WeilCheck s_q_weil_check(const ExpSumParams& params);

struct LatticeSum {
  double value = 0.0;
  double main = 0.0;
  double error = 0.0;
};

// sum_{Nr(n) <= Z, n in 2+N^2 o} lambda_q((n^2-4)/N^2) against the
// divisor-sum main term pi Z / Nr(N^2) * sum_{q1^2 q2 q3 = q} mu(q2)
// g(q3)/Nr(q3), with g(c) = Nr(c') phi(c''), c' = gcd(c, N^inf).
// Gaussian ring only; Z <= 1e4.
LatticeSum lambda_lattice_sum(double Z, const RingElem& q, const RingElem& N);

// g(c) above.
std::int64_t g_weight(const RingElem& c, const RingElem& N);

struct IdentityCheck {
  std::complex<double> lhs;
  std::complex<double> rhs;
};

// sum_q Nr(q)^(-1-s) sum_{q1^2 q2 q3 = q} mu(q2) g(q3)/Nr(q3)  vs
// zeta_{Q(i)}(2+2s)/zeta_{Q(i)}(2+s) prod_{p|N} (1 - Nr(p)^(-2-s))^(-1).
// Requires Re(s) > 0.
IdentityCheck dirichlet_identity_check(std::complex<double> s, const RingElem& N,
                                       std::int64_t q_max);

}  // namespace geoledger
