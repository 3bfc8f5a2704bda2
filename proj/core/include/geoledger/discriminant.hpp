#pragma once

// Fundamental discriminants and quadratic characters.
//
// Over Z: delta = D * l^2 with D == 1 mod 4 squarefree, or D = 4m with
// m == 2,3 mod 4 squarefree.  chi_D is the Kronecker symbol (D/n).
//
// Over Z[i]: D generates the relative discriminant ideal of
// Q(i)(sqrt(delta))/Q(i).  At odd Gaussian primes the valuation of the
// discriminant is v_p(delta) mod 2; at the even prime (1+i) it is found
// by square testing modulo powers of (1+i).

#include <stdexcept>

#include "geoledger/ring.hpp"

namespace geoledger {

struct DiscriminantData {
  RingElem delta;
  RingElem fundamental;  // D
  RingElem conductor;    // l, with delta = D * l^2
};

struct SquareDeltaError : std::domain_error {
  explicit SquareDeltaError(const std::string& w) : std::domain_error(w) {}
};
struct NonFundamentalError : std::domain_error {
  explicit NonFundamentalError(const std::string& w) : std::domain_error(w) {}
};

bool is_square(const RingElem& x);

// delta = D * l^2 with D fundamental.  Throws SquareDeltaError when delta
// is a nonzero square (split algebra), std::domain_error on delta = 0 or,
// over Z, on delta == 2,3 mod 4 (not a discriminant).
DiscriminantData fundamental_discriminant(const RingElem& delta);

bool is_fundamental(const RingElem& D);

// Quadratic character chi_D(n).  Over Z the Kronecker symbol; over Z[i]
// the quadratic residue symbol at odd primes extended multiplicatively,
// with the value at (1+i) determined by the local splitting of
// Q(i)(sqrt(D)) at the even prime.  Throws NonFundamentalError unless D
// passes is_fundamental (D = 1 is allowed and gives the trivial character).
int kronecker(const RingElem& D, const RingElem& n);

// Kronecker symbol (a/n) over Z for arbitrary a, n.
int kronecker_symbol(std::int64_t a, std::int64_t n);

// Splitting type of E = F(sqrt(delta)) at the prime p of F:
//   -1 unramified (inert), 0 ramified, +1 split.
// delta must be a nonsquare; p a prime element.
int epsilon_at(const RingElem& delta, const RingElem& p);

// Legendre-type square test in the residue field o/(p), p an odd prime
// element, u a unit mod p: +1 if u is a nonzero square, -1 otherwise.
int residue_symbol_odd(const RingElem& u, const RingElem& p);

// v_(1+i)(Dis(K(sqrt(m))/K)) for K = Q_2(i) and any nonzero, nonsquare m.
int even_disc_valuation_gauss(const RingElem& m);

}  // namespace geoledger
