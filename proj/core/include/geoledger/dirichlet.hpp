#pragma once

// Numeric evaluation of quadratic Dirichlet L-functions.
//
// CHAR_SUM: partial sum of chi_D(n) / Nr(n)^s plus an analytic tail.  Over
// Z the tail sums complete periods via Hurwitz zeta (Euler-Maclaurin), so
// the result is accurate to ~1e-12 even at s = 1.  Over Z[i] it is a plain
// norm-shell partial sum of the ideal character.
//
// CLASS_NUMBER: Dirichlet's class number formula at s = 1, D > 0, over Q:
//   L(1, chi_D) = 2 h(D) log_eps(D) / sqrt(D)
// where h is the number of cycles of reduced indefinite forms of
// discriminant D and log_eps is *half* the log of the fundamental
// totally-positive automorph (t + u sqrt(D))/2, t^2 - D u^2 = 4.  The half
// is the frozen convention constant: with it the formula matches the
// character sum on D = 5, 8, 13 (and everything else we test).

#include <complex>
#include <cstdint>
#include <stdexcept>

#include "geoledger/ring.hpp"

namespace geoledger {

enum class LMethod { CHAR_SUM, CLASS_NUMBER };

struct UnsupportedPointError : std::domain_error {
  explicit UnsupportedPointError(const std::string& w) : std::domain_error(w) {}
};
struct NegativeDiscriminantError : std::domain_error {
  explicit NegativeDiscriminantError(const std::string& w) : std::domain_error(w) {}
};

struct ClassData {
  std::int64_t h = 0;    // narrow class number (form cycle count)
  double log_eps = 0.0;  // half the log of the fundamental automorph
};

// D > 0 fundamental, over Z.  Throws NegativeDiscriminantError otherwise.
ClassData class_number_and_unit(const RingElem& D);

std::complex<double> dirichlet_L(std::complex<double> s, const RingElem& D, LMethod method,
                                 std::int64_t truncation = 200000);

// Riemann zeta for complex s (Re s > 0, s != 1), Euler-Maclaurin.
std::complex<double> zeta_em(std::complex<double> s);

// Dedekind zeta of Q(i): zeta(s) * L(s, chi_{-4}).
std::complex<double> dedekind_zeta_gauss(std::complex<double> s);

// Hurwitz zeta tail sum_{m>=0} (m+a)^{-s} for a >= 8, Re s > 1e-6 away
// from... (s == 1 must be handled by the caller; the function requires
// s != 1).  Exposed for tests.
std::complex<double> hurwitz_zeta(std::complex<double> s, double a);

}  // namespace geoledger
