#include "geoledger/orbital.hpp"

namespace geoledger {

namespace {

std::int64_t ipow(std::int64_t base, int e) {
  std::int64_t r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

int floor_half(int x) { return (x >= 0) ? x / 2 : -((-x + 1) / 2); }

std::int64_t ord_int(std::int64_t x, std::int64_t p) {
  if (x == 0) return 1 << 20;  // effectively infinity
  std::int64_t e = 0;
  while (x % p == 0) { x /= p; ++e; }
  return e;
}

bool is_unit_square_mod(std::int64_t u, std::int64_t p) {
  u %= p;
  if (u < 0) u += p;
  if (u == 0) return false;
  for (std::int64_t x = 1; x <= p / 2; ++x)
    if ((x * x) % p == u) return true;
  return false;
}

void check_range(const HeckeLocalParams& params, int r) {
  if (params.n < 1) throw OutOfRangeError("counts need n >= 1");
  if (params.l < 0 || r < 0 || r > params.l)
    throw OutOfRangeError("counts need 0 <= r <= l");
}

}  // namespace

std::int64_t count_N0_closed(const HeckeLocalParams& params, int r) {
  check_range(params, r);
  if (r <= params.l - params.n) return ipow(params.local.q, params.n - 1);
  return 0;
}

std::int64_t count_Ninf_closed(const HeckeLocalParams& params, int r) {
  check_range(params, r);
  const std::int64_t q = params.local.q;
  const int l = params.l, n = params.n;
  auto mid = [&](int rr) { return ipow(q, (n + l - rr) / 2); };  // floor((n+l-r)/2) since all >=0

  switch (params.local.epsilon) {
    case -1:
      if (l >= n) return (r <= l - n) ? ipow(q, n) : mid(r);
      return (r < n - l) ? 0 : mid(r);
    case 0:
      if (l >= n - 1) return (r <= l - n) ? ipow(q, n) : mid(r);
      return (r < n - l - 1) ? 0 : mid(r);
    case +1:
      if (l >= n) return (r <= l - n) ? ipow(q, n) : mid(r);
      return (r < n - l) ? 2 * ipow(q, l) : mid(r);
  }
  throw std::invalid_argument("epsilon must be -1, 0, +1");
}

int classify_model(std::int64_t p, std::int64_t a, std::int64_t b) {
  std::int64_t d = b * b - 4 * a;
  if (d == 0) return -2;
  std::int64_t v = ord_int(d, p);
  if (v == 0) return is_unit_square_mod(d, p) ? +1 : -1;
  if (v == 1) return 0;
  return -2;
}

std::vector<LocalQuadraticModel> models_for(std::int64_t p, int type, int k) {
  if (p == 2) throw EvenPrimeUnsupportedError("oracle models need odd p");
  std::vector<LocalQuadraticModel> out;
  for (std::int64_t b = 0; b < 2 * p && static_cast<int>(out.size()) < k; ++b) {
    for (std::int64_t a = 1; a < 2 * p && static_cast<int>(out.size()) < k; ++a) {
      if (classify_model(p, a, b) == type) out.push_back({p, a, b, type});
    }
  }
  if (static_cast<int>(out.size()) < k)
    throw std::logic_error("not enough models of the requested type");
  return out;
}

std::int64_t count_bruteforce(const LocalQuadraticModel& model, const HeckeLocalParams& params,
                              int r, WhichCount which) {
  if (model.p == 2) throw EvenPrimeUnsupportedError("count_bruteforce: odd p only");
  check_range(params, r);
  if (model.p != params.local.q)
    throw std::invalid_argument("model prime must match the residue cardinality");
  if (classify_model(model.p, model.a, model.b) != params.local.epsilon)
    throw std::invalid_argument("model type does not match params");

  const std::int64_t p = model.p;
  const int n = params.n, l = params.l;
  const int Mexp = std::max(0, n + r - l);
  const std::int64_t mod = ipow(p, Mexp);
  const std::int64_t pn = ipow(p, n);
  if (pn > 100000000 || ipow(p, std::max(n, Mexp)) > 100000000)
    throw std::overflow_error("count_bruteforce: modulus too large");

  const std::int64_t wr = ipow(p, r) % mod, w2r = wr * wr % mod;
  auto mulm = [&](std::int64_t x, std::int64_t y) { return (x % mod) * (y % mod) % mod; };

  if (which == WhichCount::N0) {
    if (params.local.epsilon == +1) {
      // ord(alpha - w^(-r)) = -r for alpha in p, so the coset condition
      // l - r >= n does not depend on alpha.
      return (l - r >= n) ? ipow(p, n - 1) : 0;
    }
    std::int64_t cnt = 0;
    for (std::int64_t kk = 0; kk < ipow(p, n - 1); ++kk) {
      std::int64_t alpha = p * kk;
      std::int64_t t1 = mulm(mulm(alpha, model.b), wr);
      std::int64_t t2 = mulm(mulm(mulm(alpha, alpha), model.a), w2r);
      std::int64_t val = ((1 - t1 + t2) % mod + mod) % mod;
      if (val == 0) ++cnt;
    }
    return cnt;
  }

  std::int64_t cnt = 0;
  for (std::int64_t alpha = 0; alpha < pn; ++alpha) {
    std::int64_t t0 = mulm(model.a, w2r);
    std::int64_t t1 = mulm(mulm(alpha, model.b), wr);
    std::int64_t t2 = mulm(alpha, alpha);
    std::int64_t val = ((t0 - t1 + t2) % mod + mod) % mod;
    if (val == 0) ++cnt;
  }
  return cnt;
}

Rat rso_value(const HeckeLocalParams& params, int r) {
  std::int64_t q = params.local.q;
  std::int64_t denom = ipow(q, params.n) + ipow(q, params.n - 1);
  return Rat(count_N0_closed(params, r) + count_Ninf_closed(params, r), denom);
}

}  // namespace geoledger
