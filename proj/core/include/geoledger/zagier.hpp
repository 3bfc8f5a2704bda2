#pragma once

// Zagier's L-series attached to a discriminant delta:
//
//   L(s, delta) = zeta_F(2s)/zeta_F(s) * sum_q rho_q(delta) Nr(q)^-s
//               = sum_q lambda_q(delta) Nr(q)^-s,
//   rho_q(delta) = #{ x mod 2q : x^2 == delta mod 4q },
//   lambda_q     = sum_{a^2 b c = q} mu(b) rho_c(delta).
//
// Sums over q run over nonzero ideals of the ring (canonical generators);
// over Z that is q = 1, 2, 3, ...  The factored form is
//
//   L(s, delta) = Nr(l)^-s * prod_{p | l} P_p(s, ord_p l, eps_p) * L(s, chi_D)
//
// with delta = D l^2 and P_p the principal local polynomial normalized as
// in local_factors.hpp.  (Equivalently l^(1/2-s) T_l(s) L(s, chi_D) for
// the symmetrized T_l = l^(-1/2) prod P_p; the series cross-check pins
// the scaling.)

#include <complex>
#include <cstdint>
#include <stdexcept>

#include "geoledger/discriminant.hpp"
#include "geoledger/ring.hpp"

namespace geoledger {

struct ZeroModulusError : std::domain_error {
  explicit ZeroModulusError(const std::string& w) : std::domain_error(w) {}
};
struct DivergentError : std::domain_error {
  explicit DivergentError(const std::string& w) : std::domain_error(w) {}
};
struct PoleAtSError : std::domain_error {
  explicit PoleAtSError(const std::string& w) : std::domain_error(w) {}
};
struct NonHyperbolicTraceError : std::domain_error {
  explicit NonHyperbolicTraceError(const std::string& w) : std::domain_error(w) {}
};

struct ZagierParams {
  DiscriminantData delta;
  std::int64_t truncation_norm = 10000;  // Q_max
  Ring ring = Ring::RAT;
};

// rho_q(delta); dispatches to the CRT path.  Throws ZeroModulusError.
std::int64_t rho_q(const RingElem& delta, const RingElem& q);

// Residue enumeration over o/(2q) (norm(q) <= 1e6).
std::int64_t rho_q_enumeration(const RingElem& delta, const RingElem& q);

// Prime-power local counts multiplied via CRT (any q).
std::int64_t rho_q_crt(const RingElem& delta, const RingElem& q);

std::int64_t lambda_q(const RingElem& delta, const RingElem& q);

// sum_{Nr q <= Q_max} lambda_q Nr(q)^-s, optionally damped by
// exp(-Nr(q)/V).  smoothing_v = 0 picks the default: no damping for
// Re s > 1, V = Q_max/10 otherwise.  Throws DivergentError for
// Re s <= 1/2.
std::complex<double> zagier_L_series(std::complex<double> s, const ZagierParams& params,
                                     double smoothing_v = 0.0);

std::complex<double> zagier_L_factored(std::complex<double> s, const DiscriminantData& delta);

// Number of a mod n with a(t-a) == 1 mod n (the P-conjugacy count).
std::int64_t p_conjugacy_count(std::int64_t t, std::int64_t n);

// |o^x/(o^x)^2| * sum_{n <= n_max} p_conjugacy_count(t, n) n^-s, over Z.
// The unit factor is 2.  Throws NonHyperbolicTraceError for |t| <= 2.
std::complex<double> p_conjugacy_series(std::complex<double> s, std::int64_t t,
                                        std::int64_t n_max);

// Canonical generators of the nonzero ideals with Nr <= bound, sorted by
// norm (cached; safe for concurrent use).
const std::vector<RingElem>& ideals_up_to(Ring ring, std::int64_t bound);

}  // namespace geoledger
