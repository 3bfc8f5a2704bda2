#include "geoledger/dirichlet.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <map>
#include <vector>

#include "geoledger/discriminant.hpp"

namespace geoledger {

namespace mp = boost::multiprecision;
using cplx = std::complex<double>;

namespace {

std::int64_t isqrt64(std::int64_t n) {
  if (n < 0) return -1;
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

cplx cpow(double base, cplx e) { return std::pow(cplx(base, 0.0), e); }

// ---------------------------------------------------------------------------
// Reduced indefinite binary quadratic forms (a, b, c), b^2 - 4ac = D > 0.
// Reduced:  |sqrt(D) - 2|a|| < b < sqrt(D).
// Reduction step rho(a,b,c) = (c, b', (b'^2-D)/(4c)) with b' == -b mod 2|c|
// in the reduced window.  Cycles of rho partition the reduced forms; the
// number of cycles is the narrow class number.
// ---------------------------------------------------------------------------

struct Form {
  std::int64_t a, b, c;
  friend auto operator<=>(const Form&, const Form&) = default;
};

bool is_reduced(const Form& f, std::int64_t D) {
  double sq = std::sqrt(static_cast<double>(D));
  double lo = std::fabs(sq - 2.0 * std::fabs(static_cast<double>(f.a)));
  return lo < f.b && f.b < sq;
}

std::vector<Form> reduced_forms(std::int64_t D) {
  std::vector<Form> forms;
  std::int64_t bmax = isqrt64(D);
  if (bmax * bmax == D) --bmax;  // D nonsquare anyway
  for (std::int64_t b = 1; b <= bmax; ++b) {
    if ((b - D) % 2 != 0) continue;  // b == D mod 2
    std::int64_t m = (D - b * b) / 4;  // = -a*c > 0
    for (std::int64_t a = 1; a * a <= m; ++a) {
      if (m % a != 0) continue;
      std::int64_t c = m / a;
      // candidate (a, b, -c), (-a, b, c), (c, b, -a), (-c, b, a)
      for (const Form& f : {Form{a, b, -c}, Form{-a, b, c}, Form{c, b, -a}, Form{-c, b, a}}) {
        if (is_reduced(f, D)) forms.push_back(f);
      }
    }
  }
  std::sort(forms.begin(), forms.end());
  forms.erase(std::unique(forms.begin(), forms.end()), forms.end());
  return forms;
}

Form rho_step(const Form& f, std::int64_t D, std::int64_t* s_out) {
  std::int64_t c2 = 2 * std::llabs(f.c);
  // b' == -b (mod 2|c|), sqrt(D) - 2|c| < b' < sqrt(D)
  double sq = std::sqrt(static_cast<double>(D));
  auto hi = static_cast<std::int64_t>(std::floor(sq));
  std::int64_t b1 = ((-f.b) % c2 + c2) % c2;
  std::int64_t k = (hi - b1) / c2;
  b1 += k * c2;
  while (b1 > hi) b1 -= c2;
  while (b1 + c2 <= hi) b1 += c2;
  // now b1 is the largest value == -b mod 2|c| that is < sqrt(D)
  std::int64_t cnew = (b1 * b1 - D) / (4 * f.c);
  if (s_out) *s_out = (f.b + b1) / (2 * f.c);
  return Form{f.c, b1, cnew};
}

}  // namespace

ClassData class_number_and_unit(const RingElem& D_) {
  if (D_.ring != Ring::RAT || D_.a <= 0)
    throw NegativeDiscriminantError("class_number_and_unit: need D > 0 over Z");
  if (!is_fundamental(D_) || D_.a == 1)
    throw std::domain_error("class_number_and_unit: D must be a fundamental discriminant > 1");
  std::int64_t D = D_.a;

  std::vector<Form> forms = reduced_forms(D);
  std::map<Form, bool> seen;
  for (const Form& f : forms) seen[f] = false;

  std::int64_t cycles = 0;
  for (const Form& f0 : forms) {
    if (seen[f0]) continue;
    ++cycles;
    Form f = f0;
    do {
      seen[f] = true;
      f = rho_step(f, D, nullptr);
    } while (!(f == f0));
  }

  // Fundamental automorph: walk the principal cycle once, composing the
  // step matrices [[0,-1],[1,s]].  The result M fixes the principal form;
  // M = [[(t-bu)/2, -cu],[au, (t+bu)/2]] gives t = tr M, u = M10 / a.
  std::int64_t b0 = isqrt64(D);
  while ((b0 - D) % 2 != 0) --b0;
  Form prin{1, b0, (b0 * b0 - D) / 4};
  if (!is_reduced(prin, D)) throw std::logic_error("principal form not reduced");

  mp::cpp_int m00 = 1, m01 = 0, m10 = 0, m11 = 1;
  Form f = prin;
  int guard = 0;
  do {
    std::int64_t s = 0;
    f = rho_step(f, D, &s);
    // right-multiply by [[0,-1],[1,s]]
    mp::cpp_int n00 = m01, n01 = -m00 + m01 * s;
    mp::cpp_int n10 = m11, n11 = -m10 + m11 * s;
    m00 = n00; m01 = n01; m10 = n10; m11 = n11;
    if (++guard > 1000000) throw std::logic_error("principal cycle did not close");
  } while (!(f == prin));

  mp::cpp_int t = m00 + m11;
  mp::cpp_int u = m10;  // a = 1 for the principal form
  if (t < 0) { t = -t; u = -u; }
  if (u < 0) u = -u;
  mp::cpp_int check = t * t - D * u * u;
  if (check != 4) throw std::logic_error("automorph does not satisfy t^2 - D u^2 = 4");

  double td = t.convert_to<double>(), ud = u.convert_to<double>();
  double eps_plus = (td + ud * std::sqrt(static_cast<double>(D))) / 2.0;
  // Frozen convention: report half the automorph log (see header).
  return ClassData{cycles, 0.5 * std::log(eps_plus)};
}

std::complex<double> hurwitz_zeta(cplx s, double a) {
  if (a < 8.0) throw std::invalid_argument("hurwitz_zeta: need a >= 8");
  if (std::abs(s - cplx(1.0, 0.0)) < 1e-12)
    throw std::invalid_argument("hurwitz_zeta: pole at s = 1");
  // Euler-Maclaurin with four Bernoulli terms; error O(a^{-Re s - 9}).
  cplx out = std::pow(cplx(a, 0.0), 1.0 - s) / (s - 1.0) + 0.5 * std::pow(cplx(a, 0.0), -s);
  static const double bern[] = {1.0 / 6, -1.0 / 30, 1.0 / 42, -1.0 / 30};
  cplx poch = s;  // (s)(s+1)...(s+2k-2)
  double fact = 2.0;  // (2k)!
  for (int k = 1; k <= 4; ++k) {
    out += bern[k - 1] / fact * poch * std::pow(cplx(a, 0.0), -(s + cplx(2.0 * k - 1.0, 0.0)));
    // advance to (s)...(s+2k): multiply two more factors, fact -> (2k+2)!
    poch *= (s + cplx(2.0 * k - 1.0, 0.0)) * (s + cplx(2.0 * k, 0.0));
    fact *= (2.0 * k + 1.0) * (2.0 * k + 2.0);
  }
  return out;
}

namespace {

// Tail of sum_{n > M} chi(n) n^{-s} where chi has period P, M a multiple
// of P.  Works at s = 1 because sum_j chi(j) = 0 cancels the pole.
cplx char_tail(const std::vector<int>& chi, std::int64_t M, cplx s) {
  auto P = static_cast<std::int64_t>(chi.size());
  std::int64_t m0 = M / P;
  bool at_one = std::abs(s - cplx(1.0, 0.0)) < 1e-12;
  cplx tail = 0.0;
  for (std::int64_t j = 1; j <= P; ++j) {
    if (chi[j % P] == 0) continue;
    double a = static_cast<double>(m0) + static_cast<double>(j) / static_cast<double>(P);
    cplx h;
    if (at_one) {
      // lim_{s->1} [hurwitz(s,a) - 1/(s-1)] = -psi(a); the 1/(s-1) parts
      // cancel across j since sum_j chi(j) = 0 over a full period.
      static const double bern[] = {1.0 / 6, -1.0 / 30, 1.0 / 42, -1.0 / 30};
      double v = -std::log(a) + 0.5 / a;
      for (int k = 1; k <= 4; ++k) v += bern[k - 1] / (2.0 * k) * std::pow(a, -2.0 * k);
      h = cplx(v, 0.0);
    } else {
      h = hurwitz_zeta(s, a);
    }
    tail += static_cast<double>(chi[j % P]) * h * cpow(static_cast<double>(P), -s);
  }
  return tail;
}

}  // namespace

std::complex<double> dirichlet_L(cplx s, const RingElem& D, LMethod method,
                                 std::int64_t truncation) {
  if (method == LMethod::CLASS_NUMBER) {
    if (D.ring != Ring::RAT || D.a <= 0)
      throw NegativeDiscriminantError("dirichlet_L: CLASS_NUMBER needs D > 0 over Z");
    if (std::abs(s - cplx(1.0, 0.0)) > 1e-12)
      throw UnsupportedPointError("dirichlet_L: CLASS_NUMBER only at s = 1");
    ClassData cd = class_number_and_unit(D);
    return cplx(2.0 * static_cast<double>(cd.h) * cd.log_eps /
                    std::sqrt(static_cast<double>(D.a)),
                0.0);
  }

  if (!is_fundamental(D)) throw NonFundamentalError("dirichlet_L: D not fundamental");

  if (D.ring == Ring::RAT) {
    std::int64_t P = std::llabs(D.a);
    if (P == 1) {
      if (std::abs(s - cplx(1.0, 0.0)) < 1e-12)
        throw UnsupportedPointError("dirichlet_L: zeta pole at s = 1");
      return zeta_em(s);
    }
    std::vector<int> chi(P);
    for (std::int64_t r = 0; r < P; ++r) chi[r] = kronecker_symbol(D.a, r);
    // complete periods only, at least 32 of them
    std::int64_t periods = std::max<std::int64_t>(32, truncation / P);
    std::int64_t M = periods * P;
    cplx sum = 0.0;
    for (std::int64_t n = 1; n <= M; ++n) {
      int c = chi[n % P];
      if (c) sum += static_cast<double>(c) * cpow(static_cast<double>(n), -s);
    }
    return sum + char_tail(chi, M, s);
  }

  // Gaussian: plain norm-shell partial sum of the ideal character.
  cplx sum = 0.0;
  std::int64_t T = std::max<std::int64_t>(1000, truncation);
  std::int64_t amax = isqrt64(T);
  for (std::int64_t a = 1; a <= amax; ++a) {
    for (std::int64_t b = 0; a * a + b * b <= T; ++b) {
      RingElem z = RingElem::gauss(a, b);
      int c = kronecker(D, z);
      if (c) sum += static_cast<double>(c) * cpow(static_cast<double>(norm(z)), -s);
    }
  }
  return sum;
}

std::complex<double> zeta_em(cplx s) {
  if (std::abs(s - cplx(1.0, 0.0)) < 1e-12) throw std::domain_error("zeta_em: pole at s = 1");
  cplx sum = 0.0;
  const std::int64_t M = 64;
  for (std::int64_t n = 1; n < M; ++n) sum += cpow(static_cast<double>(n), -s);
  return sum + hurwitz_zeta(s, static_cast<double>(M));
}

std::complex<double> dedekind_zeta_gauss(cplx s) {
  // zeta_{Q(i)} = zeta(s) L(s, chi_{-4}); the beta factor via char_tail.
  std::vector<int> chi = {0, 1, 0, -1};
  std::int64_t M = 64;
  cplx sum = 0.0;
  for (std::int64_t n = 1; n <= M; ++n) {
    int c = chi[n % 4];
    if (c) sum += static_cast<double>(c) * cpow(static_cast<double>(n), -s);
  }
  cplx beta = sum + char_tail(chi, M, s);
  return zeta_em(s) * beta;
}

}  // namespace geoledger
