#include "qphase/interferometry.hpp"

#include <cmath>
#include <numbers>

namespace qphase {

InputMoments input_moments(const FockVector& state) {
  const NumberMoments nm = number_moments(state);
  InputMoments im;
  im.jz_mean = 0.5 * nm.mean;
  im.jz_var = 0.25 * nm.variance;
  im.jx_mean = 0.0;
  im.jx_var = 0.25 * nm.mean;
  im.cov_xz = 0.0;
  return im;
}

double delta_jz_direct(const FockVector& state, double phi) {
  const InputMoments im = input_moments(state);
  const double c = std::cos(phi), s = std::sin(phi);
  return c * c * im.jz_var + s * s * im.jx_var;
}

double delta_jz_appendix(const StateSpec& spec, double phi) {
  const SeriesPhotonMoments sm = series_photon_moments(spec);
  const double c = std::cos(phi), s = std::sin(phi);
  const double cos_brace = 0.25 * (sm.mean_n_nm1 + sm.mean_n - sm.mean_n * sm.mean_n);
  const double sin_brace = 0.25 * sm.mean_n;
  return c * c * cos_brace + s * s * sin_brace;
}

double slope_djz_dphi(const FockVector& state, double phi) {
  return -std::sin(phi) * 0.5 * number_moments(state).mean;
}

double slope_appendix(const StateSpec& spec, double phi) {
  return 0.5 * series_photon_moments(spec).mean_n * std::sin(phi);
}

PhaseSensitivity phase_uncertainty(const FockVector& state,
                                   std::span<const double> phi_grid) {
  const NumberMoments nm = number_moments(state);
  PhaseSensitivity out;
  out.method = SensitivityMethod::DirectMoments;
  out.phi.reserve(phi_grid.size());
  for (double phi : phi_grid) {
    if (std::abs(std::sin(phi)) * 0.5 * nm.mean < 1e-300 ||
        std::min(std::abs(phi), std::abs(std::numbers::pi - phi)) < 1e-3)
      throw std::domain_error("phase_uncertainty: phi too close to a slope zero");
    const double var = delta_jz_direct(state, phi);
    const double slope = -std::sin(phi) * 0.5 * nm.mean;
    out.phi.push_back(phi);
    out.var_jz.push_back(var);
    out.slope.push_back(slope);
    out.delta_phi.push_back(std::sqrt(var) / std::abs(slope));
  }
  return out;
}

std::vector<double> default_phi_grid() {
  const std::size_t n = 256;
  const double lo = 0.05, hi = std::numbers::pi - 0.05;
  std::vector<double> grid(n);
  for (std::size_t i = 0; i < n; ++i)
    grid[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
  return grid;
}

}  // namespace qphase
