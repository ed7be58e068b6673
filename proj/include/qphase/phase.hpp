#ifndef QPHASE_PHASE_HPP
#define QPHASE_PHASE_HPP

#include <optional>

#include "qphase/states.hpp"

namespace qphase {

// Radial quadrature failed to certify its tail below the bound.
struct QuadratureError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Nonnegative density sampled on a uniform theta grid over [-pi, pi).
struct PhaseDistribution {
  std::vector<double> theta;
  std::vector<double> density;
  std::optional<StateSpec> spec;  // provenance, carried into serialized output
};

inline constexpr std::size_t kDefaultGrid = 1024;

// P(theta) = (1/2pi) |sum_k c_k exp(-ik theta)|^2 at a single point.
double phase_density_at(const FockVector& state, double theta);

// Sampled P(theta); the grid is upsized to max(grid_size, 64, 2*dim) so the
// trapezoid rule stays spectrally exact.
PhaseDistribution phase_distribution(const FockVector& state,
                                     std::size_t grid_size = kDefaultGrid,
                                     std::optional<StateSpec> provenance = {});

// Analytic P(theta) from the quadruple series over (p, p', m, m'); depends on
// theta only through theta - alpha_phase.
double closed_form_p_theta(const StateSpec& spec, double theta);

// Husimi Q(beta) = (1/pi)|<beta|psi>|^2. |beta| must satisfy
// |beta|^2 + 8|beta| <= dim, otherwise the truncation is not certified.
double husimi_q(const FockVector& state, Complex beta);

// Closed-form angular Q at a single angle:
// (1/2pi) sum_{k,l} c_k conj(c_l) e^{i(l-k)theta1} Gamma((k+l)/2+1)/sqrt(k!l!).
double angular_q_at(const FockVector& state, double theta1);

PhaseDistribution angular_q(const FockVector& state,
                            std::size_t grid_size = kDefaultGrid,
                            std::optional<StateSpec> provenance = {});

// Direct radial integration of Q(beta)|beta| d|beta| with Gauss-Legendre
// panels; agrees with angular_q_at within 1e-6 at a certified cutoff.
double angular_q_quadrature(const FockVector& state, double theta1,
                            std::size_t radial_points = 32);

// Barnett-Pegg sine/cosine statistics and the Carruthers-Nieto parameters.
// u and q are absent for states with no phase reference (<S>^2+<C>^2 = 0,
// resp. <C> = 0), e.g. Fock states.
struct FluctuationReport {
  double mean_n = 0.0;
  double var_n = 0.0;
  double sin_mean = 0.0;
  double cos_mean = 0.0;
  double sin_var = 0.0;
  double cos_var = 0.0;
  std::optional<double> u;
  double s = 0.0;
  std::optional<double> q;
};
FluctuationReport fluctuation_report(const FockVector& state);

// D = 1 - |sum_k conj(c_k) c_{k+1}|^2, in [0, 1].
double phase_dispersion(const FockVector& state);

// Same quantity integrated from a sampled distribution.
double phase_dispersion_quadrature(const PhaseDistribution& dist);

double trapezoid_integral(const PhaseDistribution& dist);

// Full width at half maximum via linear interpolation between grid points;
// 2*pi when the density never drops below half of its peak.
double fwhm(const PhaseDistribution& dist);

}  // namespace qphase

#endif
