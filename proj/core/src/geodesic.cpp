#include "geoledger/geodesic.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "geoledger/dirichlet.hpp"
#include "geoledger/parallel.hpp"
#include "geoledger/zagier.hpp"

namespace geoledger {

namespace {

// Larger eigenvalue modulus of X^2 - tX + 1 = 0.
double max_eigenvalue_abs(const RingElem& t) {
  std::complex<double> tc(static_cast<double>(t.a), static_cast<double>(t.b));
  std::complex<double> disc = std::sqrt(tc * tc - 4.0);
  double m1 = std::abs((tc + disc) / 2.0);
  double m2 = std::abs((tc - disc) / 2.0);
  return std::max(m1, m2);
}

// Norm of the class: |lambda|^2 for the larger eigenvalue (both rings).
bool meets_bound(const RingElem& t, double x) {
  double lam = max_eigenvalue_abs(t);
  return lam * lam <= x + 1e-9;
}

bool is_hyperbolic(const RingElem& t) {
  if (t.ring == Ring::RAT) return std::llabs(t.a) > 2;
  if (t.b == 0 && std::llabs(t.a) <= 2) return false;  // elliptic or parabolic
  return !is_square(t * t - RingElem(t.ring, 4, 0));
}

void sort_traces(std::vector<RingElem>& ts) {
  std::sort(ts.begin(), ts.end(), [](const RingElem& u, const RingElem& v) {
    if (norm(u) != norm(v)) return norm(u) < norm(v);
    if (u.a != v.a) return u.a < v.a;
    return u.b < v.b;
  });
}

}  // namespace

std::vector<RingElem> trace_set(const SubgroupSpec& spec, double x) {
  std::vector<RingElem> out;
  if (x <= 1.0) return out;
  double bound = std::sqrt(x) + 1.0 / std::sqrt(x);  // trace bound, both rings

  if (spec.ring == Ring::RAT) {
    auto tmax = static_cast<std::int64_t>(std::floor(bound + 1e-9));
    if (spec.kind == SubgroupKind::FULL) {
      for (std::int64_t t = 3; t <= tmax; ++t) out.push_back(RingElem::rat(t));
      return out;
    }
    if (spec.kind == SubgroupKind::HECKE) {
      for (std::int64_t t = 3; t <= tmax; ++t)
        if (hecke_trace_admissible(RingElem::rat(t), spec.level)) out.push_back(RingElem::rat(t));
      return out;
    }
    // principal: t in 2 + N^2 Z, one representative per +-t pair
    std::int64_t n2 = spec.level.a * spec.level.a;
    for (std::int64_t t = 2 - n2 * ((tmax + 2) / n2 + 2); t <= tmax; t += n2) {
      if (std::llabs(t) <= 2 || std::llabs(t) > tmax) continue;
      if (!meets_bound(RingElem::rat(t), x)) continue;
      if (t < 0) {
        // drop the negative one when +|t| is also a trace of the subgroup
        std::int64_t pos = -t;
        if ((pos - 2) % n2 == 0) continue;
      }
      out.push_back(RingElem::rat(t));
    }
    sort_traces(out);
    return out;
  }

  // Gaussian: t = 2 + N^2 m over the lattice, every admissible point
  RingElem n2 = spec.level * spec.level;
  double r_t = bound + 1e-9;
  double r_m = (r_t + 2.0) / std::sqrt(static_cast<double>(norm(n2)));
  auto mr = static_cast<std::int64_t>(std::ceil(r_m));
  for (std::int64_t ma = -mr; ma <= mr; ++ma) {
    for (std::int64_t mb = -mr; mb <= mr; ++mb) {
      RingElem t = RingElem::gauss(2, 0) + n2 * RingElem::gauss(ma, mb);
      if (!is_hyperbolic(t)) continue;
      if (!meets_bound(t, x)) continue;
      out.push_back(t);
    }
  }
  sort_traces(out);
  return out;
}

Rat index_principal(const SubgroupSpec& spec) {
  if (spec.kind == SubgroupKind::HECKE)
    throw std::invalid_argument("index_principal: principal subgroups only");
  if (spec.level.is_unit()) return Rat(1);
  std::int64_t nn = norm(spec.level);
  Rat idx = Rat(nn) * nn * nn;
  for (const auto& [p, e] : factorize(spec.level).factors) {
    std::int64_t np = norm(p);
    idx *= Rat(np * np - 1, np * np);
  }
  return idx;
}

namespace {

PsiReport assemble_report(double x, Orientation orientation, double prefactor,
                          std::vector<PsiTraceRow> rows, double main_nonoriented) {
  PsiReport rep;
  rep.x = x;
  rep.orientation = orientation;
  double scale = (orientation == Orientation::ORIENTED) ? 2.0 : 1.0;
  double total = 0.0;
  for (auto& row : rows) {
    row.term *= prefactor * scale;
    total += row.term;
  }
  rep.traces = std::move(rows);
  rep.total = total;
  rep.main_term = main_nonoriented * scale;
  rep.ratio = (rep.main_term != 0.0) ? rep.total / rep.main_term : 0.0;
  return rep;
}

}  // namespace

PsiReport psi_modular(double x, Orientation orientation, int threads) {
  SubgroupSpec spec{Ring::RAT, SubgroupKind::FULL, RingElem::rat(1)};
  std::vector<RingElem> ts = trace_set(spec, x);
  auto rows = parallel_map<PsiTraceRow>(
      ts.size(),
      [&](std::size_t i) {
        PsiTraceRow row;
        row.t = ts[i];
        RingElem delta = row.t * row.t - RingElem::rat(4);
        row.delta = fundamental_discriminant(delta);
        row.L_value = zagier_L_factored(1.0, row.delta).real();
        row.term = std::sqrt(static_cast<double>(norm(delta))) * row.L_value;
        return row;
      },
      threads);
  // non-oriented main term x/2 (the classical X is the oriented count)
  return assemble_report(x, orientation, 1.0, std::move(rows), x / 2.0);
}

PsiReport psi_principal(const SubgroupSpec& spec, double x, Orientation orientation,
                        int threads) {
  if (spec.kind == SubgroupKind::HECKE)
    throw std::invalid_argument("psi_principal: Hecke totals are out of scope");
  std::vector<RingElem> ts = trace_set(spec, x);
  RingElem n2 = spec.level * spec.level;
  double idx = index_principal(spec).convert_to<double>();
  double pref = (spec.ring == Ring::RAT) ? idx : idx / (2.0 * std::acos(-1.0));
  double main_nonor = (spec.ring == Ring::RAT) ? x / 2.0 : x * x / 4.0;

  auto rows = parallel_map<PsiTraceRow>(
      ts.size(),
      [&](std::size_t i) {
        PsiTraceRow row;
        row.t = ts[i];
        RingElem delta = div_exact(row.t * row.t - RingElem(spec.ring, 4, 0), n2);
        row.delta = fundamental_discriminant(delta);
        if (spec.ring == Ring::RAT) {
          row.L_value = zagier_L_factored(1.0, row.delta).real();
        } else {
          ZagierParams zp{row.delta, 10000, Ring::GAUSS};
          row.L_value = zagier_L_series(1.0, zp).real();
        }
        row.term = std::sqrt(static_cast<double>(norm(delta))) * row.L_value;
        return row;
      },
      threads);
  return assemble_report(x, orientation, pref, std::move(rows), main_nonor);
}

double psi_increment_mainterm(double x, double u, Ring ring) {
  if (u < 0 || u > x) throw std::invalid_argument("psi_increment_mainterm: 0 <= u <= x");
  if (ring == Ring::RAT) return u / 2.0;
  return (x * u + u * u / 2.0) / 2.0;
}

bool hecke_trace_admissible(const RingElem& t, const RingElem& N) {
  if (N.is_zero()) throw std::invalid_argument("hecke_trace_admissible: N != 0");
  if (N.is_unit()) return true;
  for (const RingElem& a : residues_mod(N)) {
    if (divides(N, a * (t - a) - RingElem(t.ring, 1, 0))) return true;
  }
  return false;
}

namespace {

void put_g12(std::ostream& os, double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  os << buf;
}

}  // namespace

void write_psi_csv(const PsiReport& report, std::ostream& os) {
  os << "t_re,t_im,delta,D,l,L_value,term,cumulative\n";
  double cum = 0.0;
  for (const auto& row : report.traces) {
    cum += row.term;
    os << row.t.a << "," << row.t.b << "," << to_string(row.delta.delta) << ","
       << to_string(row.delta.fundamental) << "," << to_string(row.delta.conductor) << ",";
    put_g12(os, row.L_value);
    os << ",";
    put_g12(os, row.term);
    os << ",";
    put_g12(os, cum);
    os << "\n";
  }
}

}  // namespace geoledger
