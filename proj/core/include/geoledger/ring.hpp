#pragma once

// Arithmetic of the two base rings: Z ("RAT") and the Gaussian integers
// Z[i] ("GAUSS").  An element is stored as an integer pair (a, b) meaning
// a for RAT and a + b*i for GAUSS.  All routines are exact; norms and
// intermediate products are assumed to stay well inside int64 range
// (inputs at desk scale have norm <= 1e8).

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace geoledger {

enum class Ring { RAT, GAUSS };

struct RingElem {
  Ring ring = Ring::RAT;
  std::int64_t a = 0;  // the integer, or the real part
  std::int64_t b = 0;  // imaginary part (always 0 for RAT)

  RingElem() = default;
  RingElem(Ring r, std::int64_t a_, std::int64_t b_ = 0) : ring(r), a(a_), b(b_) {
    if (ring == Ring::RAT && b != 0)
      throw std::invalid_argument("rational RingElem with nonzero imaginary part");
  }
  static RingElem rat(std::int64_t n) { return RingElem(Ring::RAT, n, 0); }
  static RingElem gauss(std::int64_t re, std::int64_t im) { return RingElem(Ring::GAUSS, re, im); }

  bool is_zero() const { return a == 0 && b == 0; }
  bool is_unit() const;

  friend bool operator==(const RingElem&, const RingElem&) = default;
};

// |a| for RAT, a^2 + b^2 for GAUSS.  Always >= 0, and 0 iff x = 0.
std::int64_t norm(const RingElem& x);

RingElem operator+(const RingElem& x, const RingElem& y);
RingElem operator-(const RingElem& x, const RingElem& y);
RingElem operator*(const RingElem& x, const RingElem& y);
RingElem operator-(const RingElem& x);
RingElem conj(const RingElem& x);

// Exact division; throws if y does not divide x.
RingElem div_exact(const RingElem& x, const RingElem& y);
bool divides(const RingElem& d, const RingElem& x);

// Euclidean remainder: for RAT the usual remainder, for GAUSS the nearest
// multiple (norm of the remainder < norm of the modulus).
RingElem euclid_rem(const RingElem& x, const RingElem& m);
RingElem gcd(RingElem x, RingElem y);

// Canonical associate: for RAT the absolute value; for GAUSS the unit
// multiple with Re > 0, Im >= 0 (zero stays zero).
RingElem canonical_associate(const RingElem& x);

// Units of the ring: {1,-1} or {1,i,-1,-i}.
std::vector<RingElem> units(Ring ring);

bool is_prime_elem(const RingElem& x);

struct Factorization {
  RingElem unit;
  std::vector<std::pair<RingElem, int>> factors;  // canonical primes, exponents

  RingElem value() const;  // unit * prod p^e
};

// Complete factorization into pairwise non-associate canonical primes.
// Throws on zero input.
Factorization factorize(const RingElem& x);

// Euler totient of o/(q): Nr(q) * prod_{p|q} (1 - Nr(p)^{-1}).
std::int64_t euler_phi(const RingElem& q);

// Moebius over the ring; 0 on non-squarefree.
int moebius(const RingElem& q);

// Number of (canonical) divisors.
std::int64_t divisor_count(const RingElem& q);

// All canonical divisors of q (unordered).
std::vector<RingElem> divisors(const RingElem& q);

// q1 = part of q supported on primes dividing N ("gcd(q, N^inf)"), q2 = q/q1.
std::pair<RingElem, RingElem> split_by_support(const RingElem& q, const RingElem& N);

// Largest q_star with q/q_star squarefree, i.e. prod p^(e-1).
RingElem squarefull_part(const RingElem& q);

std::int64_t ord_p(const RingElem& x, const RingElem& p);

// Residue system for o/(m): all of Z/|m| for RAT; for GAUSS a fundamental
// domain of the sublattice generated by m and i*m (Nr(m) points).
std::vector<RingElem> residues_mod(const RingElem& m);

// Modular inverse in o/(m); throws when gcd(x, m) is not a unit.
RingElem inv_mod(const RingElem& x, const RingElem& m);

std::string to_string(const RingElem& x);
// Parses "7", "-3", "1+i", "2-3i", "i", "-i".
RingElem parse_elem(const std::string& s, Ring ring);

}  // namespace geoledger
