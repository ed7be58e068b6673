#ifndef QPHASE_INTERFEROMETRY_HPP
#define QPHASE_INTERFEROMETRY_HPP

#include <span>

#include "qphase/states.hpp"

namespace qphase {

// Second-moment data of the two-mode input |psi> (x) |0>. With the vacuum
// port jx_mean and cov_xz vanish identically.
struct InputMoments {
  double jz_mean = 0.0;
  double jz_var = 0.0;
  double jx_mean = 0.0;
  double jx_var = 0.0;
  double cov_xz = 0.0;
};
InputMoments input_moments(const FockVector& state);

// cos^2(phi) jz_var + sin^2(phi) jx_var (the covariance term is zero).
double delta_jz_direct(const FockVector& state, double phi);

// Same quantity from the analytic normalization-series route; the series
// bracket is resolved to cos^2 (<N(N-1)> + <N> - <N>^2)/4 + sin^2 <N>/4.
double delta_jz_appendix(const StateSpec& spec, double phi);

// d<Jz>/dphi = -sin(phi) <N>/2.
double slope_djz_dphi(const FockVector& state, double phi);

// Series route for the slope magnitude, (1/2)<N> sin(phi).
double slope_appendix(const StateSpec& spec, double phi);

enum class SensitivityMethod { DirectMoments, AppendixSeries };

struct PhaseSensitivity {
  std::vector<double> phi;
  std::vector<double> var_jz;
  std::vector<double> slope;
  std::vector<double> delta_phi;
  SensitivityMethod method = SensitivityMethod::DirectMoments;
};

// Delta-phi = sqrt((Delta Jz)^2)/|slope| pointwise. phi values closer than
// 1e-3 to a slope zero (0 or pi) are rejected.
PhaseSensitivity phase_uncertainty(const FockVector& state,
                                   std::span<const double> phi_grid);

// 256 points on (0.05, pi - 0.05).
std::vector<double> default_phi_grid();

}  // namespace qphase

#endif
