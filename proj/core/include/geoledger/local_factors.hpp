#pragma once

// Local Laurent-polynomial factors of the geodesic-counting L-series.
//
// Conventions.  q = Nr(p) is the residue cardinality, epsilon the
// splitting type of E/F at p (-1 unramified, 0 ramified, +1 split).
// Polynomials are in Z = q^(s-1/2); weights are written in Z = q^s.
//
// Principal factor (level-shifted conductor exponent l >= 0):
//
//   P(s,l) = q^(l/2) [ (Z^(l+1) - Z^-(l+1)) - eps q^(-1/2) (Z^l - Z^-l) ]
//            / (Z - Z^(-1))
//
// Hecke factors P(s; l, n) for level exponent n >= 1 are assembled from
// the orbital counts N(r; n, l) against the weight kernels; the closed
// forms implemented here follow the count formulas exactly.  In the split
// case with n > l the leading geometric block is capped at r <= l, and in
// the ramified case with n > l+1 the boundary term r = n-l-1 (count q^l)
// is kept; both are required for the factor to agree with the
// count-by-count assembly, which is independently brute-force verified.

#include <complex>
#include <cstdint>

#include "geoledger/laurent.hpp"

namespace geoledger {

struct LocalType {
  std::int64_t q = 2;  // prime power >= 2
  int epsilon = -1;    // -1 unramified, 0 ramified, +1 split
};

struct HeckeLocalParams {
  LocalType local;
  int l = 0;  // ord_p of the level ideal J_t
  int n = 0;  // ord_p of the subgroup level N
};

struct SplitNotApplicableError : std::domain_error {
  explicit SplitNotApplicableError(const std::string& w) : std::domain_error(w) {}
};

// P(s, l) above; exact, variable tag Z_HALF.
LaurentPoly local_poly_principal(const LocalType& local, int l);

// Hecke local factor; delegates to the principal factor when n = 0.
// Returns the zero polynomial exactly in the vanishing regimes
// (unramified n > 2l, ramified n > 2l+1).
LaurentPoly local_poly_hecke(const HeckeLocalParams& params);

// Normalized Rankin-Selberg weight (Vol(o^x)/Vol(GL2(o)) * wt), written
// in Z = q^s.  r = 0 returns the L_p(1, eta) table value:
// (1+q^-1)^-1 unramified, 1 ramified, (1-q^-1)^-1 split.
std::complex<double> rs_weight(const LocalType& local, int r, std::complex<double> s);

// Translation-invariant weight kernel used in assemblies: equals
// rs_weight for r >= 1 and is exactly 1 at r = 0.
std::complex<double> weight_kernel(const LocalType& local, int r, std::complex<double> s);

// r-th Legendre function of E/F, closed form, Z = q^(s-1/2).
std::complex<double> legendre_p(const LocalType& local, int r, std::complex<double> s);

// Valuation-shell sum for the same quantity (independent of the closed
// form); uses unit_index for the non-split shells.
std::complex<double> legendre_p_oracle(const LocalType& local, int r, std::complex<double> s);

// [O^x : O_r^x]: q^r (1 + q^-1) unramified, q^r ramified.  Split throws.
std::int64_t unit_index(const LocalType& local, int r);

// d_r / d_0: q^r (1+q^-1), q^r, q^r (1-q^-1) by type; 1 at r = 0.
Rat vol_ratio(const LocalType& local, int r);

// (d_r/d_0) |det a_r|^(s+1/2) P_{s+1/2}(r, E/F), with the r = 0
// normalization of the weight table; equals rs_weight identically.
std::complex<double> assemble_weight(const LocalType& local, int r, std::complex<double> s);

// Numeric Hecke factor assembled from the orbital-count closed forms:
// sum_r N(r; n, l)/(q^n + q^(n-1)) * weight_kernel(r, s - 1/2).
// Requires n >= 1.  Must equal local_poly_hecke(params).evaluate(s).
std::complex<double> hecke_factor_from_counts(const HeckeLocalParams& params,
                                              std::complex<double> s);

}  // namespace geoledger
