// Runs the full acceptance grid and exits nonzero on any failure.

#include <iostream>

#include "geoledger/acceptance.hpp"
#include "geoledger/parallel.hpp"

int main() {
  geoledger::AcceptanceOptions opts;
  opts.threads = std::max(2, geoledger::default_thread_count());
  bool ok = geoledger::run_acceptance(opts, std::cout);
  std::cout << (ok ? "acceptance: all criteria passed\n" : "acceptance: FAILURES above\n");
  return ok ? 0 : 1;
}
