#include "geoledger/local_factors.hpp"

#include <cmath>

#include "geoledger/orbital.hpp"

namespace geoledger {

using cplx = std::complex<double>;

namespace {

// q^k as an exact rational, k possibly negative.
Rat qpow(std::int64_t q, std::int64_t k) {
  Rat r(1);
  if (k >= 0)
    for (std::int64_t i = 0; i < k; ++i) r *= q;
  else
    for (std::int64_t i = 0; i < -k; ++i) r /= q;
  return r;
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t d = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --d;
  return d;
}

// Z^e as a Laurent monomial with unit coefficient.
LaurentPoly zpow(std::int64_t q, int e) {
  return LaurentPoly::monomial(q, VarTag::Z_HALF, e, QuadExt::of(Rat(1), q));
}

// Weight-kernel numerator for type eps and power m >= 1:
//   A_eps(Z) (q^(1/2) Z)^m  -  A_eps(Z^(-1)) (q^(1/2) Z^(-1))^m
// with A_{-1} = Z - q^(-1) Z^(-1), A_0 = Z - q^(-1/2),
//      A_{+1} = Z + q^(-1) Z^(-1) - 2 q^(-1/2).
LaurentPoly kernel_numerator(const LocalType& t, int m) {
  std::int64_t q = t.q;
  LaurentPoly A(q, VarTag::Z_HALF), Abar(q, VarTag::Z_HALF);
  switch (t.epsilon) {
    case -1:
      A = zpow(q, 1) - zpow(q, -1).scaled(QuadExt::of(qpow(q, -1), q));
      Abar = zpow(q, -1) - zpow(q, 1).scaled(QuadExt::of(qpow(q, -1), q));
      break;
    case 0:
      A = zpow(q, 1) - LaurentPoly::one(q, VarTag::Z_HALF).scaled(QuadExt::half_power(q, -1));
      Abar = zpow(q, -1) - LaurentPoly::one(q, VarTag::Z_HALF).scaled(QuadExt::half_power(q, -1));
      break;
    case +1: {
      LaurentPoly two_rt = LaurentPoly::one(q, VarTag::Z_HALF)
                               .scaled(QuadExt::half_power(q, -1))
                               .scaled(QuadExt::of(Rat(2), q));
      A = zpow(q, 1) + zpow(q, -1).scaled(QuadExt::of(qpow(q, -1), q)) - two_rt;
      Abar = zpow(q, -1) + zpow(q, 1).scaled(QuadExt::of(qpow(q, -1), q)) - two_rt;
      break;
    }
    default:
      throw std::invalid_argument("LocalType: epsilon must be -1, 0, +1");
  }
  QuadExt qm = QuadExt::half_power(q, m);
  LaurentPoly up = zpow(q, m).scaled(qm);
  LaurentPoly dn = zpow(q, -m).scaled(qm);
  return A * up - Abar * dn;
}

// K_eps(m) = kernel numerator / (Z - Z^(-1)); K(0) = 1.
LaurentPoly kernel_poly(const LocalType& t, int m) {
  if (m == 0) return LaurentPoly::one(t.q, VarTag::Z_HALF);
  return kernel_numerator(t, m).divide_by_z_minus_zinv();
}

cplx lp_eta(const LocalType& t) {
  double q = static_cast<double>(t.q);
  switch (t.epsilon) {
    case -1: return 1.0 / (1.0 + 1.0 / q);
    case 0: return 1.0;
    case +1: return 1.0 / (1.0 - 1.0 / q);
  }
  throw std::invalid_argument("LocalType: epsilon must be -1, 0, +1");
}

}  // namespace

LaurentPoly local_poly_principal(const LocalType& local, int l) {
  if (l < 0) return LaurentPoly::zero(local.q, VarTag::Z_HALF);
  std::int64_t q = local.q;
  LaurentPoly num = zpow(q, l + 1) - zpow(q, -(l + 1));
  if (local.epsilon != 0 && l >= 1) {
    LaurentPoly mid = (zpow(q, l) - zpow(q, -l)).scaled(QuadExt::half_power(q, -1));
    if (local.epsilon == -1)
      num = num + mid;
    else
      num = num - mid;
  }
  return num.divide_by_z_minus_zinv().scaled(QuadExt::half_power(q, l));
}

LaurentPoly local_poly_hecke(const HeckeLocalParams& params) {
  const LocalType& t = params.local;
  const int l = params.l, n = params.n;
  const std::int64_t q = t.q;
  if (l < 0 || n < 0) throw std::invalid_argument("local_poly_hecke: l, n >= 0");
  if (n == 0) return local_poly_principal(t, l);

  LaurentPoly out = LaurentPoly::zero(q, VarTag::Z_HALF);
  QuadExt inv1q = QuadExt::of(Rat(t.q, t.q + 1), q);  // 1/(1+q^-1)

  if (t.epsilon == -1 || t.epsilon == +1) {
    if (l >= n) {
      out = local_poly_principal(t, l - n);
      for (int r = 1; r <= n; ++r) {
        QuadExt c = QuadExt::of(qpow(q, floor_div(-r, 2)), q) * inv1q;
        out = out + kernel_poly(t, r + l - n).scaled(c);
      }
      return out;
    }
    if (t.epsilon == -1) {
      // nonvanishing needs n <= 2l
      if (2 * l < n) return out;
      QuadExt lead = QuadExt::of(qpow(q, l - n), q);
      for (int r = 0; r <= 2 * l - n; ++r) {
        QuadExt c = lead * QuadExt::of(qpow(q, floor_div(-r, 2)), q) * inv1q;
        out = out + kernel_poly(t, r + n - l).scaled(c);
      }
      return out;
    }
    // split, l < n: leading block capped at r <= l, then the floor-power run
    int m = std::min(n - l - 1, l);
    QuadExt c0 = QuadExt::of(Rat(2) * qpow(q, l - n), q) * inv1q;
    out = out + local_poly_principal(t, m).scaled(c0);
    for (int r = n - l; r <= l; ++r) {
      QuadExt c = QuadExt::of(qpow(q, floor_div(n + l - r, 2) - n), q) * inv1q;
      out = out + kernel_poly(t, r).scaled(c);
    }
    return out;
  }

  // ramified
  if (l >= n - 1) {
    out = local_poly_principal(t, l - n);  // zero when l = n-1
    for (int r = 1; r <= n; ++r) {
      QuadExt c = QuadExt::of(qpow(q, floor_div(-r, 2)), q) * inv1q;
      out = out + kernel_poly(t, r + l - n).scaled(c);
    }
    return out;
  }
  // l <= n-2: terms r in [n-l-1, l], empty unless n <= 2l+1
  for (int r = n - l - 1; r <= l; ++r) {
    QuadExt c = QuadExt::of(qpow(q, floor_div(n + l - r, 2) - n), q) * inv1q;
    out = out + kernel_poly(t, r).scaled(c);
  }
  return out;
}

std::complex<double> rs_weight(const LocalType& local, int r, cplx s) {
  if (r < 0) throw std::invalid_argument("rs_weight: r >= 0");
  if (r == 0) return lp_eta(local);
  return weight_kernel(local, r, s);
}

std::complex<double> weight_kernel(const LocalType& local, int r, cplx s) {
  if (r == 0) return 1.0;
  double q = static_cast<double>(local.q);
  cplx z = std::pow(cplx(q, 0.0), s);
  cplx zi = 1.0 / z;
  double rq = std::sqrt(q);
  cplx a, abar;
  switch (local.epsilon) {
    case -1:
      a = z - zi / q;
      abar = zi - z / q;
      break;
    case 0:
      a = z - 1.0 / rq;
      abar = zi - 1.0 / rq;
      break;
    case +1:
      a = z + zi / q - 2.0 / rq;
      abar = zi + z / q - 2.0 / rq;
      break;
    default:
      throw std::invalid_argument("LocalType: epsilon must be -1, 0, +1");
  }
  cplx up = std::pow(rq * z, r), dn = std::pow(rq * zi, r);
  return (a * up - abar * dn) / (z - zi);
}

std::complex<double> legendre_p(const LocalType& local, int r, cplx s) {
  if (r < 0) throw std::invalid_argument("legendre_p: r >= 0");
  if (r == 0) return 1.0;
  double q = static_cast<double>(local.q);
  cplx z = std::pow(cplx(q, 0.0), s - 0.5);
  cplx zi = 1.0 / z;
  double rq = std::sqrt(q);
  cplx up = std::pow(rq * z, r), dn = std::pow(rq * zi, r);
  switch (local.epsilon) {
    case -1: {
      cplx num = (z - zi / q) * up - (zi - z / q) * dn;
      cplx den = std::pow(cplx(q, 0.0), static_cast<double>(r) * (1.0 + s)) * (1.0 + 1.0 / q) *
                 (z - zi);
      return num / den;
    }
    case 0: {
      cplx num = (z - 1.0 / rq) * up - (zi - 1.0 / rq) * dn;
      cplx den = std::pow(cplx(q, 0.0), static_cast<double>(r) * (1.0 + s)) * (z - zi);
      return num / den;
    }
    case +1: {
      cplx num = (z + zi / q - 2.0 / rq) * up - (zi + z / q - 2.0 / rq) * dn;
      cplx den = std::pow(cplx(q, 0.0), static_cast<double>(r)) * (1.0 - 1.0 / q) * (z - zi);
      return num / den;
    }
  }
  throw std::invalid_argument("LocalType: epsilon must be -1, 0, +1");
}

std::complex<double> legendre_p_oracle(const LocalType& local, int r, cplx s) {
  if (r < 0) throw std::invalid_argument("legendre_p_oracle: r >= 0");
  if (r == 0) return 1.0;
  double q = static_cast<double>(local.q);
  auto qp = [&](cplx e) { return std::pow(cplx(q, 0.0), e); };
  if (local.epsilon == +1) {
    cplx shell = 0.0;
    for (int l = 0; l <= r - 1; ++l)
      shell += qp(-s * static_cast<double>(l)) * qp(-(1.0 - s) * static_cast<double>(r - l));
    return shell * (1.0 - qp(-s)) * (1.0 - qp(-s)) / (1.0 - 1.0 / q) + qp(-s * static_cast<double>(r));
  }
  cplx factor = (local.epsilon == -1) ? (1.0 - qp(-2.0 * s)) : (1.0 - qp(-s));
  cplx shell = 0.0;
  for (int l = 0; l <= r - 1; ++l)
    shell += qp(-2.0 * s * static_cast<double>(l)) /
             static_cast<double>(unit_index(local, r - l));
  return factor * shell + qp(-2.0 * s * static_cast<double>(r));
}

std::int64_t unit_index(const LocalType& local, int r) {
  if (r < 0) throw std::invalid_argument("unit_index: r >= 0");
  if (local.epsilon == +1)
    throw SplitNotApplicableError("unit_index: split algebras have no order filtration here");
  if (r == 0) return 1;
  std::int64_t qr1 = 1;
  for (int i = 0; i < r - 1; ++i) qr1 *= local.q;
  if (local.epsilon == -1) return qr1 * (local.q + 1);
  return qr1 * local.q;
}

Rat vol_ratio(const LocalType& local, int r) {
  if (r < 0) throw std::invalid_argument("vol_ratio: r >= 0");
  if (r == 0) return Rat(1);
  Rat qr1 = qpow(local.q, r - 1);
  switch (local.epsilon) {
    case -1: return qr1 * (local.q + 1);
    case 0: return qr1 * local.q;
    case +1: return qr1 * (local.q - 1);
  }
  throw std::invalid_argument("LocalType: epsilon must be -1, 0, +1");
}

std::complex<double> assemble_weight(const LocalType& local, int r, cplx s) {
  if (r == 0) return lp_eta(local);
  double vol = vol_ratio(local, r).convert_to<double>();
  double det_ar = 1.0;
  if (local.epsilon != +1) {
    det_ar = 1.0;
    for (int i = 0; i < r; ++i) det_ar *= static_cast<double>(local.q);
  }
  cplx detpow = std::pow(cplx(det_ar, 0.0), s + 0.5);
  return vol * detpow * legendre_p(local, r, s + 0.5);
}

std::complex<double> hecke_factor_from_counts(const HeckeLocalParams& params, cplx s) {
  if (params.n < 1) throw std::invalid_argument("hecke_factor_from_counts: n >= 1");
  const std::int64_t q = params.local.q;
  double denom = 0.0;
  {
    double qn = 1.0;
    for (int i = 0; i < params.n - 1; ++i) qn *= static_cast<double>(q);
    denom = qn * static_cast<double>(q) + qn;  // q^n + q^(n-1)
  }
  cplx out = 0.0;
  for (int r = 0; r <= params.l; ++r) {
    std::int64_t cnt = count_N0_closed(params, r) + count_Ninf_closed(params, r);
    if (cnt == 0) continue;
    out += static_cast<double>(cnt) / denom * weight_kernel(params.local, r, s - 0.5);
  }
  return out;
}

}  // namespace geoledger
