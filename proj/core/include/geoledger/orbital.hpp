#pragma once

// Residue point counts N_0(r; n, l) and N_inf(r; n, l) behind the Hecke
// local factors, plus a brute-force enumerator over o/p^n for odd p.
//
// N_0 counts alpha in p/p^n with  1 - alpha b w^r + alpha^2 a w^(2r) in
// p^(n+r-l); N_inf counts alpha in o/p^n with  a w^(2r) - alpha b w^r +
// alpha^2 in p^(n+r-l)  (w a uniformizer; the congruences are already in
// scaled integral form).  The counts depend only on (q, epsilon, n, l, r);
// the oracle checks that by varying the model (a, b) within a type.

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "geoledger/laurent.hpp"
#include "geoledger/local_factors.hpp"

namespace geoledger {

struct OutOfRangeError : std::domain_error {
  explicit OutOfRangeError(const std::string& w) : std::domain_error(w) {}
};
struct EvenPrimeUnsupportedError : std::domain_error {
  explicit EvenPrimeUnsupportedError(const std::string& w) : std::domain_error(w) {}
};

// theta^2 - b theta + a = 0 defines E_p of the tagged type:
//   -1  iff b^2 - 4a is a unit non-square mod p
//    0  iff ord_p(b^2 - 4a) = 1
//   +1  iff b^2 - 4a is a unit square mod p
struct LocalQuadraticModel {
  std::int64_t p = 3;  // odd rational prime
  std::int64_t a = 0;
  std::int64_t b = 0;
  int type = -1;
};

enum class WhichCount { N0, NINF };

// Lemma closed forms.  Throw OutOfRangeError unless n >= 1, 0 <= r <= l...
// r may range over [0, l]; l >= 0.
std::int64_t count_N0_closed(const HeckeLocalParams& params, int r);
std::int64_t count_Ninf_closed(const HeckeLocalParams& params, int r);

// Exact enumeration for the model (odd p only).  The split N_0 condition
// is evaluated through the valuation identity ord(alpha - w^(-r)) = -r,
// which makes it alpha-independent.
std::int64_t count_bruteforce(const LocalQuadraticModel& model, const HeckeLocalParams& params,
                              int r, WhichCount which);

// (N_0 + N_inf) / (q^n + q^(n-1)), exact.
Rat rso_value(const HeckeLocalParams& params, int r);

// Deterministic scan for k models of the requested type over the prime p.
std::vector<LocalQuadraticModel> models_for(std::int64_t p, int type, int k);

// Classify the type of (p, a, b); returns -2 when b^2-4a has ord >= 2
// (no clean type).
int classify_model(std::int64_t p, std::int64_t a, std::int64_t b);

}  // namespace geoledger
