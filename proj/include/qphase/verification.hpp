#ifndef QPHASE_VERIFICATION_HPP
#define QPHASE_VERIFICATION_HPP

#include <string>

#include "qphase/states.hpp"

namespace qphase {

struct CheckResult {
  std::string name;
  std::size_t checks = 0;
  std::size_t failures = 0;
  double max_err = 0.0;
  double tolerance = 0.0;
};

struct VerificationReport {
  std::vector<CheckResult> categories;

  std::size_t total_checks() const;
  std::size_t total_failures() const;
};

// Deterministic randomized spec suite (u, v, n <= 3, |alpha| <= 2,
// theta2 in {0, pi/4, pi/2, pi}).
std::vector<StateSpec> random_spec_suite(std::size_t count, unsigned seed);

// Cross-checks every closed-form quantity against the dense-matrix oracle
// path over the randomized suite.
VerificationReport run_oracle_suite(std::size_t num_specs = 60,
                                    unsigned seed = 20240817);

// Rebuilds each suite state at twice the cutoff and bounds the drift of every
// reported scalar.
VerificationReport run_cutoff_convergence(std::size_t num_specs = 20,
                                          unsigned seed = 20240817);

}  // namespace qphase

#endif
