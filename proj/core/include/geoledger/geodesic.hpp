#pragma once

// Geodesic counting functions Psi_Gamma(x).
//
// A trace t contributes once its larger eigenvalue (the root of
// X^2 - tX + 1 outside the unit circle) satisfies |lambda|^2 <= x over
// Q(i), lambda <= sqrt(x) over Q; equivalently the class norm N(gamma)
// is at most x.
//
// Representative conventions.  Over Q the trace set is listed with one
// representative per PSL2 sign pair (t >= 3 when the set is symmetric).
// Over Q(i) every admissible lattice point of 2 + N^2 o is listed; that
// convention makes NON_ORIENTED track x^2/4 for the principal subgroup,
// and ORIENTED doubles it.

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "geoledger/discriminant.hpp"
#include "geoledger/laurent.hpp"
#include "geoledger/ring.hpp"

namespace geoledger {

enum class SubgroupKind { FULL, PRINCIPAL, HECKE };
enum class Orientation { ORIENTED, NON_ORIENTED };

struct SubgroupSpec {
  Ring ring = Ring::RAT;
  SubgroupKind kind = SubgroupKind::FULL;
  RingElem level = RingElem::rat(1);  // N; a unit for FULL
};

struct PsiTraceRow {
  RingElem t;
  DiscriminantData delta;  // of (t^2-4)/N^2
  double L_value = 0.0;
  double term = 0.0;
};

struct PsiReport {
  double x = 0.0;
  std::vector<PsiTraceRow> traces;
  double total = 0.0;
  double main_term = 0.0;
  double ratio = 0.0;
  Orientation orientation = Orientation::NON_ORIENTED;
};

// Traces meeting the eigenvalue bound for the subgroup, ordered by norm
// then lexicographically.  x > 1; an empty list is fine.
std::vector<RingElem> trace_set(const SubgroupSpec& spec, double x);

// Full modular group over Q; per-trace L-values via the factored form.
PsiReport psi_modular(double x, Orientation orientation, int threads = 1);

// Principal congruence subgroup over Q or Q(i).  Over Q the L-values use
// the factored form; over Q(i) the smoothed series with the default
// truncation (Q_max = 1e4, V = Q_max/10).
PsiReport psi_principal(const SubgroupSpec& spec, double x, Orientation orientation,
                        int threads = 1);

// [PSL2(o) : Gamma(N)] = Nr(N)^3 prod_{p|N} (1 - Nr(p)^-2), exact.
Rat index_principal(const SubgroupSpec& spec);

// Main term of Psi(x+u) - Psi(x): u/2 over Q, (xu + u^2/2)/2 over Q(i).
double psi_increment_mainterm(double x, double u, Ring ring);

// Is t a Hecke-subgroup trace, i.e. is a(t-a) == 1 mod N solvable?
bool hecke_trace_admissible(const RingElem& t, const RingElem& N);

// CSV with header t_re,t_im,delta,D,l,L_value,term,cumulative; floats at
// 12 significant digits, ring elements as "a+bi" literals.
void write_psi_csv(const PsiReport& report, std::ostream& os);

}  // namespace geoledger
