#pragma once

// Exact Laurent polynomials in a formal variable Z, with coefficients in
// Q(sqrt(q)).  Z stands for q^(s-1/2) (tag Z_HALF) or q^s (tag Z_FULL);
// evaluation plugs in the tagged power.  All construction arithmetic is
// exact; the only inexact operations are evaluation and root finding.

#include <boost/multiprecision/cpp_int.hpp>
#include <complex>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace geoledger {

using Rat = boost::multiprecision::cpp_rational;

// a + b*sqrt(q), exact.  q is a fixed positive integer; when q is a
// perfect square the sqrt part is folded into the rational part so b = 0
// always holds after normalization.
struct QuadExt {
  Rat a{0};
  Rat b{0};
  std::int64_t q = 1;

  QuadExt() = default;
  QuadExt(Rat a_, Rat b_, std::int64_t q_);
  static QuadExt of(Rat r, std::int64_t q) { return QuadExt(std::move(r), Rat(0), q); }
  // q^(k/2) for integer k (possibly negative).
  static QuadExt half_power(std::int64_t q, std::int64_t k);

  bool is_zero() const { return a == 0 && b == 0; }
  double to_double() const;

  QuadExt operator-() const;
  QuadExt inverse() const;
  friend QuadExt operator+(const QuadExt& x, const QuadExt& y);
  friend QuadExt operator-(const QuadExt& x, const QuadExt& y);
  friend QuadExt operator*(const QuadExt& x, const QuadExt& y);
  friend QuadExt operator/(const QuadExt& x, const QuadExt& y);
  friend bool operator==(const QuadExt& x, const QuadExt& y);
};

enum class VarTag { Z_HALF, Z_FULL };  // Z = q^(s-1/2) or Z = q^s

struct WrongVariableTagError : std::domain_error {
  explicit WrongVariableTagError(const std::string& w) : std::domain_error(w) {}
};
struct ZeroPolynomialError : std::domain_error {
  explicit ZeroPolynomialError(const std::string& w) : std::domain_error(w) {}
};

class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(std::int64_t q, VarTag var) : q_(q), var_(var) {}

  static LaurentPoly monomial(std::int64_t q, VarTag var, int exp, QuadExt coeff);
  static LaurentPoly zero(std::int64_t q, VarTag var) { return LaurentPoly(q, var); }
  static LaurentPoly one(std::int64_t q, VarTag var);

  std::int64_t q() const { return q_; }
  VarTag var() const { return var_; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::map<int, QuadExt>& coeffs() const { return coeffs_; }
  QuadExt coeff(int exp) const;
  int min_exp() const;
  int max_exp() const;

  void set_coeff(int exp, QuadExt c);

  LaurentPoly operator-() const;
  friend LaurentPoly operator+(const LaurentPoly& x, const LaurentPoly& y);
  friend LaurentPoly operator-(const LaurentPoly& x, const LaurentPoly& y);
  friend LaurentPoly operator*(const LaurentPoly& x, const LaurentPoly& y);
  LaurentPoly scaled(const QuadExt& c) const;
  friend bool operator==(const LaurentPoly& x, const LaurentPoly& y);

  // Exact division by (Z - Z^{-1}); throws std::logic_error on a nonzero
  // remainder (which would mean a transcription error in a formula).
  LaurentPoly divide_by_z_minus_zinv() const;

  // Evaluate at complex s using the variable convention; sign = -1 applies
  // the eta twist Z -> -Z.
  std::complex<double> evaluate(std::complex<double> s, int sign = +1) const;
  // Evaluate at a given complex Z directly.
  std::complex<double> evaluate_at_z(std::complex<double> z) const;

  std::string serialize() const;
  static LaurentPoly parse(const std::string& text);

 private:
  std::int64_t q_ = 1;
  VarTag var_ = VarTag::Z_HALF;
  std::map<int, QuadExt> coeffs_;  // exponent -> nonzero coefficient
};

// True iff coeffs[k] == coeffs[-k] for all k (s <-> 1-s is Z <-> 1/Z).
// Requires the Z_HALF convention.
bool check_functional_equation(const LaurentPoly& p);

// Clears denominators, converts to an ordinary polynomial in Z, finds all
// complex roots by companion-matrix eigenvalues, and reports whether every
// root satisfies ||root| - 1| <= tol.  Throws ZeroPolynomialError on 0.
bool roots_on_unit_circle(const LaurentPoly& p, double tol);

// All complex roots in Z of the cleared polynomial (exposed for tests).
std::vector<std::complex<double>> laurent_roots(const LaurentPoly& p);

std::string to_string(const Rat& r);
std::string to_string(const QuadExt& c);

}  // namespace geoledger
