#pragma once

// The acceptance grid: a fixed battery of end-to-end checks, one per
// headline property of the library.  Each criterion returns pass/fail
// plus a short detail string; run_acceptance prints one line per
// criterion and reports overall success.

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace geoledger {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

struct AcceptanceOptions {
  std::string only;      // empty = all; otherwise a criterion name
  int orbital_prime = 0;  // restrict criterion 3 to one prime (0 = all)
  int threads = 1;
};

CriterionResult accept_functional_equation();
CriterionResult accept_local_rh();
CriterionResult accept_orbital_oracle(int prime_filter);
CriterionResult accept_weight_assembly();
CriterionResult accept_hecke_cross();
CriterionResult accept_zagier_dual();
CriterionResult accept_pgt_rational(int threads);
CriterionResult accept_exp_sums();
CriterionResult accept_dirichlet_identity();
CriterionResult accept_lattice_asymptotic();
CriterionResult accept_gauss_principal(int threads);

// Runs the selected criteria, streaming one line each to os.
// Returns true iff every selected criterion passed.
bool run_acceptance(const AcceptanceOptions& opts, std::ostream& os,
                    std::vector<CriterionResult>* results = nullptr);

}  // namespace geoledger
