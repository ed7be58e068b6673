#include "qphase/fock.hpp"

#include <algorithm>
#include <cmath>

namespace qphase {

double RawFockVector::norm_sq() const {
  double s = 0.0;
  for (const Complex& c : amplitudes) s += std::norm(c);
  return s;
}

double log_factorial(unsigned k) {
  if (k <= 1) return 0.0;
  return std::lgamma(static_cast<double>(k) + 1.0);
}

double tail_mass_of(const std::vector<Complex>& amplitudes) {
  const std::size_t d = amplitudes.size();
  if (d == 0) return 0.0;
  const std::size_t count = std::max<std::size_t>(1, d / 10);
  double s = 0.0;
  for (std::size_t k = d - count; k < d; ++k) s += std::norm(amplitudes[k]);
  return s;
}

RawFockVector displaced_fock_amplitudes(unsigned n, double alpha_mag,
                                        double alpha_phase, std::size_t dim) {
  if (dim <= n) throw TruncationError("displaced_fock_amplitudes: dim must exceed n");
  RawFockVector out;
  out.amplitudes.assign(dim, Complex(0.0, 0.0));
  if (alpha_mag == 0.0) {
    out.amplitudes[n] = Complex(1.0, 0.0);
    return out;
  }
  const double log_alpha = std::log(alpha_mag);
  const double half_alpha_sq = 0.5 * alpha_mag * alpha_mag;
  const double log_n_fact = log_factorial(n);

  // Real part of the double sum of the DFS expansion; the phase
  // exp(i(k-n)theta2) is attached afterwards, index by index.
  std::vector<double> real_amp(dim, 0.0);
  for (unsigned p = 0; p <= n; ++p) {
    const double log_binom =
        log_n_fact - log_factorial(p) - log_factorial(n - p);
    const double sign = ((n - p) % 2 == 0) ? 1.0 : -1.0;
    for (std::size_t m = 0; m + p < dim; ++m) {
      const std::size_t k = m + p;
      const double log_mag = log_binom +
                             static_cast<double>(n - p + m) * log_alpha -
                             half_alpha_sq +
                             0.5 * log_factorial(static_cast<unsigned>(k)) -
                             log_factorial(static_cast<unsigned>(m)) -
                             0.5 * log_n_fact;
      real_amp[k] += sign * std::exp(log_mag);
    }
  }
  for (std::size_t k = 0; k < dim; ++k) {
    const double ph = (static_cast<double>(k) - static_cast<double>(n)) * alpha_phase;
    out.amplitudes[k] = real_amp[k] * Complex(std::cos(ph), std::sin(ph));
  }
  return out;
}

RawFockVector displaced_fock_amplitudes(unsigned n, Complex alpha,
                                        std::size_t dim) {
  return displaced_fock_amplitudes(n, std::abs(alpha), std::arg(alpha), dim);
}

RawFockVector apply_creation(const RawFockVector& state, unsigned u, double tol) {
  const std::size_t d = state.dim();
  if (u == 0) return state;
  if (u >= d) throw TruncationError("apply_creation: no headroom for u quanta");
  const double ns = state.norm_sq();
  double top_mass = 0.0;
  for (std::size_t k = d - u; k < d; ++k) top_mass += std::norm(state.amplitudes[k]);
  if (ns > 0.0 && top_mass > tol * ns)
    throw TruncationError("apply_creation: populated amplitudes at the cutoff");

  RawFockVector out;
  out.amplitudes.assign(d, Complex(0.0, 0.0));
  for (std::size_t k = 0; k + u < d; ++k) {
    const double factor = std::exp(
        0.5 * (log_factorial(static_cast<unsigned>(k) + u) -
               log_factorial(static_cast<unsigned>(k))));
    out.amplitudes[k + u] = state.amplitudes[k] * factor;
  }
  return out;
}

RawFockVector apply_annihilation(const RawFockVector& state, unsigned v) {
  const std::size_t d = state.dim();
  if (v == 0) return state;
  RawFockVector out;
  out.amplitudes.assign(d, Complex(0.0, 0.0));
  for (std::size_t k = v; k < d; ++k) {
    const double factor = std::exp(
        0.5 * (log_factorial(static_cast<unsigned>(k)) -
               log_factorial(static_cast<unsigned>(k) - v)));
    out.amplitudes[k - v] = state.amplitudes[k] * factor;
  }
  if (out.norm_sq() <= kZeroNormThreshold)
    throw ZeroStateError("apply_annihilation: state annihilated to zero");
  return out;
}

std::pair<FockVector, double> normalize(const RawFockVector& state) {
  const double ns = state.norm_sq();
  if (ns <= kZeroNormThreshold)
    throw ZeroStateError("normalize: zero-norm state");
  const double inv = 1.0 / std::sqrt(ns);
  FockVector out;
  out.amplitudes.resize(state.dim());
  for (std::size_t k = 0; k < state.dim(); ++k)
    out.amplitudes[k] = state.amplitudes[k] * inv;
  out.tail_mass = tail_mass_of(out.amplitudes);
  return {std::move(out), inv};
}

Complex ladder_moment(const FockVector& state, unsigned j, unsigned k) {
  const std::size_t d = state.dim();
  Complex acc(0.0, 0.0);
  for (std::size_t m = k; m < d; ++m) {
    const std::size_t target = m - k + j;
    if (target >= d) continue;
    const double factor = std::exp(
        0.5 * (log_factorial(static_cast<unsigned>(m)) +
               log_factorial(static_cast<unsigned>(target))) -
        log_factorial(static_cast<unsigned>(m - k)));
    acc += std::conj(state.amplitudes[target]) * state.amplitudes[m] * factor;
  }
  return acc;
}

NumberMoments number_moments(const FockVector& state) {
  NumberMoments nm;
  for (std::size_t k = 0; k < state.dim(); ++k) {
    const double w = std::norm(state.amplitudes[k]);
    const double kk = static_cast<double>(k);
    nm.mean += kk * w;
    nm.second_moment += kk * kk * w;
  }
  nm.variance = nm.second_moment - nm.mean * nm.mean;
  return nm;
}

}  // namespace qphase
