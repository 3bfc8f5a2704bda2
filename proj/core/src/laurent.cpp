#include "geoledger/laurent.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <sstream>

namespace geoledger {

namespace {

std::int64_t isqrt64(std::int64_t n) {
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

}  // namespace

QuadExt::QuadExt(Rat a_, Rat b_, std::int64_t q_) : a(std::move(a_)), b(std::move(b_)), q(q_) {
  if (q <= 0) throw std::invalid_argument("QuadExt: q must be positive");
  std::int64_t r = isqrt64(q);
  if (r * r == q && b != 0) {  // sqrt(q) is rational: fold it in
    a += b * r;
    b = 0;
  }
}

QuadExt QuadExt::half_power(std::int64_t q, std::int64_t k) {
  // q^(k/2) = q^(floor(k/2)) * (sqrt(q))^(k mod 2)
  std::int64_t fl = (k >= 0) ? k / 2 : -((-k + 1) / 2);
  std::int64_t rem = k - 2 * fl;  // 0 or 1
  Rat base(1);
  if (fl >= 0)
    for (std::int64_t i = 0; i < fl; ++i) base *= q;
  else
    for (std::int64_t i = 0; i < -fl; ++i) base /= q;
  if (rem == 0) return QuadExt(base, Rat(0), q);
  return QuadExt(Rat(0), base, q);
}

double QuadExt::to_double() const {
  return a.convert_to<double>() + b.convert_to<double>() * std::sqrt(static_cast<double>(q));
}

QuadExt QuadExt::operator-() const { return QuadExt(-a, -b, q); }

QuadExt QuadExt::inverse() const {
  Rat d = a * a - b * b * q;
  if (d == 0) throw std::domain_error("QuadExt: inverse of zero");
  return QuadExt(a / d, -b / d, q);
}

QuadExt operator+(const QuadExt& x, const QuadExt& y) {
  if (x.q != y.q && !x.is_zero() && !y.is_zero())
    throw std::invalid_argument("QuadExt: mixed radicands");
  std::int64_t q = x.is_zero() ? y.q : x.q;
  return QuadExt(x.a + y.a, x.b + y.b, q);
}

QuadExt operator-(const QuadExt& x, const QuadExt& y) { return x + (-y); }

QuadExt operator*(const QuadExt& x, const QuadExt& y) {
  if (x.q != y.q && !x.is_zero() && !y.is_zero())
    throw std::invalid_argument("QuadExt: mixed radicands");
  std::int64_t q = x.is_zero() ? y.q : x.q;
  return QuadExt(x.a * y.a + x.b * y.b * q, x.a * y.b + x.b * y.a, q);
}

QuadExt operator/(const QuadExt& x, const QuadExt& y) { return x * y.inverse(); }

bool operator==(const QuadExt& x, const QuadExt& y) { return x.a == y.a && x.b == y.b; }

LaurentPoly LaurentPoly::monomial(std::int64_t q, VarTag var, int exp, QuadExt coeff) {
  LaurentPoly p(q, var);
  p.set_coeff(exp, std::move(coeff));
  return p;
}

LaurentPoly LaurentPoly::one(std::int64_t q, VarTag var) {
  return monomial(q, var, 0, QuadExt::of(Rat(1), q));
}

QuadExt LaurentPoly::coeff(int exp) const {
  auto it = coeffs_.find(exp);
  return it == coeffs_.end() ? QuadExt::of(Rat(0), q_) : it->second;
}

int LaurentPoly::min_exp() const {
  if (coeffs_.empty()) throw ZeroPolynomialError("min_exp of zero polynomial");
  return coeffs_.begin()->first;
}

int LaurentPoly::max_exp() const {
  if (coeffs_.empty()) throw ZeroPolynomialError("max_exp of zero polynomial");
  return coeffs_.rbegin()->first;
}

void LaurentPoly::set_coeff(int exp, QuadExt c) {
  if (c.is_zero())
    coeffs_.erase(exp);
  else
    coeffs_[exp] = std::move(c);
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p(q_, var_);
  for (const auto& [e, c] : coeffs_) p.coeffs_[e] = -c;
  return p;
}

LaurentPoly operator+(const LaurentPoly& x, const LaurentPoly& y) {
  if (x.q_ != y.q_ || x.var_ != y.var_)
    throw std::invalid_argument("LaurentPoly: mixed q or variable tag");
  LaurentPoly p = x;
  for (const auto& [e, c] : y.coeffs_) p.set_coeff(e, p.coeff(e) + c);
  return p;
}

LaurentPoly operator-(const LaurentPoly& x, const LaurentPoly& y) { return x + (-y); }

LaurentPoly operator*(const LaurentPoly& x, const LaurentPoly& y) {
  if (x.q_ != y.q_ || x.var_ != y.var_)
    throw std::invalid_argument("LaurentPoly: mixed q or variable tag");
  LaurentPoly p(x.q_, x.var_);
  for (const auto& [e1, c1] : x.coeffs_)
    for (const auto& [e2, c2] : y.coeffs_) p.set_coeff(e1 + e2, p.coeff(e1 + e2) + c1 * c2);
  return p;
}

LaurentPoly LaurentPoly::scaled(const QuadExt& c) const {
  LaurentPoly p(q_, var_);
  if (c.is_zero()) return p;
  for (const auto& [e, k] : coeffs_) p.coeffs_[e] = k * c;
  return p;
}

bool operator==(const LaurentPoly& x, const LaurentPoly& y) {
  return x.q_ == y.q_ && x.var_ == y.var_ && x.coeffs_ == y.coeffs_;
}

LaurentPoly LaurentPoly::divide_by_z_minus_zinv() const {
  // Divide exactly by (Z - Z^{-1}) = Z^{-1}(Z^2 - 1): first shift by Z,
  // then synthetic division by (Z^2 - 1) from the top.
  if (is_zero()) return *this;
  LaurentPoly shifted(q_, var_);
  for (const auto& [e, c] : coeffs_) shifted.set_coeff(e + 1, c);
  int floor_min = shifted.min_exp();
  LaurentPoly quot(q_, var_);
  while (!shifted.is_zero()) {
    int top = shifted.max_exp();
    if (top < floor_min)
      throw std::logic_error("divide_by_z_minus_zinv: nonzero remainder (formula transcription?)");
    QuadExt lead = shifted.coeff(top);
    quot.set_coeff(top - 2, lead);
    shifted.set_coeff(top, QuadExt::of(Rat(0), q_));
    shifted.set_coeff(top - 2, shifted.coeff(top - 2) + lead);
  }
  return quot;
}

std::complex<double> LaurentPoly::evaluate(std::complex<double> s, int sign) const {
  std::complex<double> expnt = (var_ == VarTag::Z_HALF) ? s - 0.5 : s;
  std::complex<double> z =
      static_cast<double>(sign) * std::pow(std::complex<double>(static_cast<double>(q_), 0.0), expnt);
  return evaluate_at_z(z);
}

std::complex<double> LaurentPoly::evaluate_at_z(std::complex<double> z) const {
  std::complex<double> out = 0.0;
  for (const auto& [e, c] : coeffs_) out += c.to_double() * std::pow(z, e);
  return out;
}

std::string to_string(const Rat& r) {
  std::ostringstream os;
  os << boost::multiprecision::numerator(r);
  if (boost::multiprecision::denominator(r) != 1)
    os << "/" << boost::multiprecision::denominator(r);
  return os.str();
}

std::string to_string(const QuadExt& c) {
  if (c.b == 0) return to_string(c.a);
  std::string rad = "r" + std::to_string(c.q);
  if (c.a == 0) return to_string(c.b) + rad;
  std::string bs = to_string(c.b);
  if (!bs.empty() && bs[0] != '-') bs = "+" + bs;
  return to_string(c.a) + bs + rad;
}

std::string LaurentPoly::serialize() const {
  // "q=3 var=Z_HALF; -1:1/2; 0:1; 1:1/2"   (coefficients may carry rN = sqrt(N))
  std::ostringstream os;
  os << "q=" << q_ << " var=" << (var_ == VarTag::Z_HALF ? "Z_HALF" : "Z_FULL");
  if (is_zero()) os << "; zero";
  for (const auto& [e, c] : coeffs_) os << "; " << e << ":" << geoledger::to_string(c);
  return os.str();
}

namespace {

Rat parse_rat(const std::string& t) {
  auto slash = t.find('/');
  if (slash == std::string::npos) return Rat(boost::multiprecision::cpp_int(t));
  return Rat(boost::multiprecision::cpp_int(t.substr(0, slash)),
             boost::multiprecision::cpp_int(t.substr(slash + 1)));
}

QuadExt parse_quadext(const std::string& t, std::int64_t q) {
  auto rpos = t.find('r');
  if (rpos == std::string::npos) return QuadExt(parse_rat(t), Rat(0), q);
  // split "<a>+<b>rQ" / "<b>rQ": find the sign that separates a from b
  std::string head = t.substr(0, rpos);
  std::size_t split = std::string::npos;
  for (std::size_t k = head.size(); k-- > 1;) {
    if ((head[k] == '+' || head[k] == '-') && head[k - 1] != '/') {
      split = k;
      break;
    }
  }
  if (split == std::string::npos) return QuadExt(Rat(0), parse_rat(head), q);
  Rat a = parse_rat(head.substr(0, split));
  std::string btok = head.substr(split);
  if (btok == "+") btok = "1";
  if (btok == "-") btok = "-1";
  return QuadExt(a, parse_rat(btok), q);
}

}  // namespace

LaurentPoly LaurentPoly::parse(const std::string& text) {
  std::istringstream is(text);
  std::string tok;
  std::getline(is, tok, ';');
  std::istringstream head(tok);
  std::string qtok, vtok;
  head >> qtok >> vtok;
  std::int64_t q = std::stoll(qtok.substr(2));
  VarTag var = (vtok.substr(4) == "Z_HALF") ? VarTag::Z_HALF : VarTag::Z_FULL;
  LaurentPoly p(q, var);
  while (std::getline(is, tok, ';')) {
    std::size_t b = tok.find_first_not_of(' ');
    if (b == std::string::npos) continue;
    tok = tok.substr(b);
    if (tok == "zero") continue;
    auto colon = tok.find(':');
    int e = std::stoi(tok.substr(0, colon));
    p.set_coeff(e, parse_quadext(tok.substr(colon + 1), q));
  }
  return p;
}

bool check_functional_equation(const LaurentPoly& p) {
  if (p.var() != VarTag::Z_HALF)
    throw WrongVariableTagError("functional equation check needs the Z_HALF convention");
  if (p.is_zero()) return true;
  for (const auto& [e, c] : p.coeffs()) {
    if (!(p.coeff(-e) == c)) return false;
  }
  return true;
}

std::vector<std::complex<double>> laurent_roots(const LaurentPoly& p) {
  if (p.is_zero()) throw ZeroPolynomialError("laurent_roots: zero polynomial");
  int lo = p.min_exp(), hi = p.max_exp();
  int deg = hi - lo;
  std::vector<std::complex<double>> roots;
  if (deg == 0) return roots;  // constant (after clearing Z^lo): no roots
  // ordinary polynomial c_0 + c_1 Z + ... + c_deg Z^deg with c_k = coeff(lo+k)
  std::vector<double> c(deg + 1);
  for (int k = 0; k <= deg; ++k) c[k] = p.coeff(lo + k).to_double();
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(deg, deg);
  for (int k = 0; k < deg; ++k) companion(k, deg - 1) = -c[k] / c[deg];
  for (int k = 1; k < deg; ++k) companion(k, k - 1) = 1.0;
  Eigen::EigenSolver<Eigen::MatrixXd> es(companion);
  for (int k = 0; k < deg; ++k) roots.push_back(es.eigenvalues()(k));
  return roots;
}

bool roots_on_unit_circle(const LaurentPoly& p, double tol) {
  for (const auto& r : laurent_roots(p)) {
    if (std::fabs(std::abs(r) - 1.0) > tol) return false;
  }
  return true;
}

}  // namespace geoledger
