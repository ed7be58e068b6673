#include "qphase/phase.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace qphase {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// |<beta|psi>|^2 without the certified-range guard; term recursion keeps the
// partial products bounded for any radius.
double coherent_overlap_sq(const FockVector& state, double r, double theta1) {
  Complex acc(0.0, 0.0);
  double t = std::exp(-0.5 * r * r);
  const Complex step = std::polar(1.0, -theta1);
  Complex ph(1.0, 0.0);
  for (std::size_t k = 0; k < state.dim(); ++k) {
    acc += state.amplitudes[k] * t * ph;
    t *= r / std::sqrt(static_cast<double>(k + 1));
    ph *= step;
  }
  return std::norm(acc);
}

// Gauss-Legendre nodes/weights on [-1, 1] by Newton iteration.
void gauss_legendre(std::size_t n, std::vector<double>& x, std::vector<double>& w) {
  x.assign(n, 0.0);
  w.assign(n, 0.0);
  for (std::size_t i = 0; i < (n + 1) / 2; ++i) {
    double z = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) /
                        (static_cast<double>(n) + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * z * p1 - static_cast<double>(j) * p2) /
             (static_cast<double>(j) + 1.0);
      }
      pp = static_cast<double>(n) * (z * p0 - p1) / (z * z - 1.0);
      const double dz = p0 / pp;
      z -= dz;
      if (std::abs(dz) < 1e-15) break;
    }
    x[i] = -z;
    x[n - 1 - i] = z;
    w[i] = 2.0 / ((1.0 - z * z) * pp * pp);
    w[n - 1 - i] = w[i];
  }
}

std::vector<double> uniform_theta_grid(std::size_t g) {
  std::vector<double> theta(g);
  for (std::size_t i = 0; i < g; ++i)
    theta[i] = -std::numbers::pi + kTwoPi * static_cast<double>(i) / static_cast<double>(g);
  return theta;
}

std::size_t effective_grid(std::size_t requested, std::size_t dim) {
  return std::max({requested, static_cast<std::size_t>(64), 2 * dim});
}

}  // namespace

double phase_density_at(const FockVector& state, double theta) {
  Complex acc(0.0, 0.0);
  const Complex step = std::polar(1.0, -theta);
  Complex ph(1.0, 0.0);
  for (std::size_t k = 0; k < state.dim(); ++k) {
    acc += state.amplitudes[k] * ph;
    ph *= step;
  }
  return std::norm(acc) / kTwoPi;
}

PhaseDistribution phase_distribution(const FockVector& state, std::size_t grid_size,
                                     std::optional<StateSpec> provenance) {
  const std::size_t g = effective_grid(grid_size, state.dim());
  PhaseDistribution dist;
  dist.theta = uniform_theta_grid(g);
  dist.density.resize(g);
  for (std::size_t i = 0; i < g; ++i)
    dist.density[i] = phase_density_at(state, dist.theta[i]);
  dist.spec = std::move(provenance);
  return dist;
}

double closed_form_p_theta(const StateSpec& spec, double theta) {
  validate(spec);
  const unsigned n = spec.fock_n;
  const unsigned cnt = spec.count;
  const bool add = spec.kind == OpKind::Add;
  if (spec.alpha_mag == 0.0) return 1.0 / kTwoPi;  // Fock limit: uniform phase

  const double inv_norm_sq = 1.0 / series_photon_moments(spec).norm_sq;  // |N|^2
  const double a2 = spec.alpha_mag * spec.alpha_mag;
  const double log_alpha = std::log(spec.alpha_mag);
  const double log_n_fact = log_factorial(n);
  const std::size_t m_max = default_dim(spec) + 32;
  const double rel = theta - spec.alpha_phase;

  double sum = 0.0;
  for (unsigned p = 0; p <= n; ++p) {
    const double lb_p = log_n_fact - log_factorial(p) - log_factorial(n - p);
    for (unsigned pp = 0; pp <= n; ++pp) {
      const double lb_pp = log_n_fact - log_factorial(pp) - log_factorial(n - pp);
      const double sign = ((p + pp) % 2 == 0) ? 1.0 : -1.0;
      for (std::size_t m = 0; m < m_max; ++m) {
        const long k = static_cast<long>(m) + p;
        if (!add && k < static_cast<long>(cnt)) continue;
        double log_left;
        if (add) {
          log_left = 0.5 * log_factorial(static_cast<unsigned>(k) + cnt) -
                     log_factorial(static_cast<unsigned>(m));
        } else {
          log_left = log_factorial(static_cast<unsigned>(k)) -
                     0.5 * log_factorial(static_cast<unsigned>(k - cnt)) -
                     log_factorial(static_cast<unsigned>(m));
        }
        for (std::size_t mm = 0; mm < m_max; ++mm) {
          const long kk = static_cast<long>(mm) + pp;
          if (!add && kk < static_cast<long>(cnt)) continue;
          double log_right;
          if (add) {
            log_right = 0.5 * log_factorial(static_cast<unsigned>(kk) + cnt) -
                        log_factorial(static_cast<unsigned>(mm));
          } else {
            log_right = log_factorial(static_cast<unsigned>(kk)) -
                        0.5 * log_factorial(static_cast<unsigned>(kk - cnt)) -
                        log_factorial(static_cast<unsigned>(mm));
          }
          const double log_mag =
              lb_p + lb_pp - log_n_fact - a2 +
              static_cast<double>(2 * n - p - pp + m + mm) * log_alpha +
              log_left + log_right;
          sum += sign * std::exp(log_mag) *
                 std::cos(rel * static_cast<double>(kk - k));
        }
      }
    }
  }
  return inv_norm_sq * sum / kTwoPi;
}

double husimi_q(const FockVector& state, Complex beta) {
  const double b = std::abs(beta);
  if (b * b + 8.0 * b > static_cast<double>(state.dim()))
    throw TruncationError("husimi_q: |beta| outside certified range for this cutoff");
  return coherent_overlap_sq(state, b, std::arg(beta)) / std::numbers::pi;
}

double angular_q_at(const FockVector& state, double theta1) {
  const std::size_t d = state.dim();
  Complex acc(0.0, 0.0);
  for (std::size_t k = 0; k < d; ++k) {
    for (std::size_t l = 0; l < d; ++l) {
      const double g = std::exp(
          std::lgamma(0.5 * static_cast<double>(k + l) + 1.0) -
          0.5 * (log_factorial(static_cast<unsigned>(k)) +
                 log_factorial(static_cast<unsigned>(l))));
      acc += state.amplitudes[k] * std::conj(state.amplitudes[l]) * g *
             std::polar(1.0, (static_cast<double>(l) - static_cast<double>(k)) * theta1);
    }
  }
  return acc.real() / kTwoPi;
}

PhaseDistribution angular_q(const FockVector& state, std::size_t grid_size,
                            std::optional<StateSpec> provenance) {
  const std::size_t d = state.dim();
  // Collapse the double sum to harmonics h_s = sum_k c_k conj(c_{k+s}) G(k, k+s).
  std::vector<Complex> h(d, Complex(0.0, 0.0));
  for (std::size_t s = 0; s < d; ++s) {
    for (std::size_t k = 0; k + s < d; ++k) {
      const std::size_t l = k + s;
      const double g = std::exp(
          std::lgamma(0.5 * static_cast<double>(k + l) + 1.0) -
          0.5 * (log_factorial(static_cast<unsigned>(k)) +
                 log_factorial(static_cast<unsigned>(l))));
      h[s] += state.amplitudes[k] * std::conj(state.amplitudes[l]) * g;
    }
  }
  const std::size_t g = effective_grid(grid_size, d);
  PhaseDistribution dist;
  dist.theta = uniform_theta_grid(g);
  dist.density.resize(g);
  for (std::size_t i = 0; i < g; ++i) {
    const double th = dist.theta[i];
    double val = h[0].real();
    for (std::size_t s = 1; s < d; ++s) {
      const Complex e = std::polar(1.0, static_cast<double>(s) * th);
      val += 2.0 * (h[s] * e).real();
    }
    dist.density[i] = val / kTwoPi;
  }
  dist.spec = std::move(provenance);
  return dist;
}

double angular_q_quadrature(const FockVector& state, double theta1,
                            std::size_t radial_points) {
  const double r_max = std::sqrt(static_cast<double>(state.dim())) + 6.0;
  auto integrand = [&](double r) {
    return coherent_overlap_sq(state, r, theta1) * r / std::numbers::pi;
  };
  if (integrand(r_max) > 1e-12)
    throw QuadratureError("angular_q_quadrature: tail beyond cutoff not negligible");

  std::vector<double> x, w;
  gauss_legendre(std::max<std::size_t>(radial_points, 8), x, w);
  const std::size_t panels = static_cast<std::size_t>(std::ceil(r_max));
  const double width = r_max / static_cast<double>(panels);
  double total = 0.0;
  for (std::size_t p = 0; p < panels; ++p) {
    const double lo = width * static_cast<double>(p);
    const double mid = lo + 0.5 * width;
    for (std::size_t i = 0; i < x.size(); ++i)
      total += 0.5 * width * w[i] * integrand(mid + 0.5 * width * x[i]);
  }
  return total;
}

FluctuationReport fluctuation_report(const FockVector& state) {
  const NumberMoments nm = number_moments(state);
  const Complex a1 = ladder_moment(state, 0, 1);
  const Complex a2 = ladder_moment(state, 0, 2);
  const double denom = nm.mean + 0.5;

  FluctuationReport rep;
  rep.mean_n = nm.mean;
  rep.var_n = nm.variance;
  rep.sin_mean = a1.imag() / std::sqrt(denom);
  rep.cos_mean = a1.real() / std::sqrt(denom);
  const double sin_sq = (2.0 * nm.mean + 1.0 - 2.0 * a2.real()) / (4.0 * denom);
  const double cos_sq = (2.0 * nm.mean + 1.0 + 2.0 * a2.real()) / (4.0 * denom);
  rep.sin_var = sin_sq - rep.sin_mean * rep.sin_mean;
  rep.cos_var = cos_sq - rep.cos_mean * rep.cos_mean;
  rep.s = rep.var_n * rep.sin_var;

  const double phase_ref = rep.sin_mean * rep.sin_mean + rep.cos_mean * rep.cos_mean;
  if (phase_ref > 1e-18)
    rep.u = rep.var_n * (rep.sin_var + rep.cos_var) / phase_ref;
  if (rep.cos_mean * rep.cos_mean > 1e-18)
    rep.q = rep.s / (rep.cos_mean * rep.cos_mean);
  return rep;
}

double phase_dispersion(const FockVector& state) {
  Complex first(0.0, 0.0);
  for (std::size_t k = 0; k + 1 < state.dim(); ++k)
    first += std::conj(state.amplitudes[k]) * state.amplitudes[k + 1];
  return 1.0 - std::norm(first);
}

double phase_dispersion_quadrature(const PhaseDistribution& dist) {
  const std::size_t g = dist.theta.size();
  const double dtheta = kTwoPi / static_cast<double>(g);
  Complex first(0.0, 0.0);
  for (std::size_t i = 0; i < g; ++i)
    first += dist.density[i] * std::polar(1.0, -dist.theta[i]) * dtheta;
  return 1.0 - std::norm(first);
}

double trapezoid_integral(const PhaseDistribution& dist) {
  const double dtheta = kTwoPi / static_cast<double>(dist.theta.size());
  double s = 0.0;
  for (double v : dist.density) s += v;
  return s * dtheta;
}

double fwhm(const PhaseDistribution& dist) {
  const std::size_t g = dist.density.size();
  const double vmax = *std::max_element(dist.density.begin(), dist.density.end());
  const double half = 0.5 * vmax;

  // Outermost half-max crossings, linearly interpolated.
  std::optional<double> left, right;
  for (std::size_t i = 1; i < g; ++i) {
    if (dist.density[i - 1] < half && dist.density[i] >= half) {
      const double f = (half - dist.density[i - 1]) / (dist.density[i] - dist.density[i - 1]);
      left = dist.theta[i - 1] + f * (dist.theta[i] - dist.theta[i - 1]);
      break;
    }
  }
  for (std::size_t i = g - 1; i >= 1; --i) {
    if (dist.density[i] < half && dist.density[i - 1] >= half) {
      const double f = (dist.density[i - 1] - half) / (dist.density[i - 1] - dist.density[i]);
      right = dist.theta[i - 1] + f * (dist.theta[i] - dist.theta[i - 1]);
      break;
    }
  }
  if (!left || !right || *right <= *left) return kTwoPi;
  return *right - *left;
}

}  // namespace qphase
