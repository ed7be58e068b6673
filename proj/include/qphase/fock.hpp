#ifndef QPHASE_FOCK_HPP
#define QPHASE_FOCK_HPP

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace qphase {

using Complex = std::complex<double>;

// The requested Fock-space cutoff could not certify a negligible tail.
struct TruncationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An operation produced the zero vector (e.g. annihilating the vacuum).
struct ZeroStateError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr double kZeroNormThreshold = 1e-300;
inline constexpr double kDefaultTruncationTol = 1e-12;
inline constexpr std::size_t kMaxDim = 4096;

// Unnormalized amplitude vector over |0>..|dim-1>.
struct RawFockVector {
  std::vector<Complex> amplitudes;

  std::size_t dim() const { return amplitudes.size(); }
  double norm_sq() const;
};

// Unit-norm amplitude vector. tail_mass is the |c_k|^2 mass carried by the
// top 10% of indices and certifies that the cutoff was adequate.
struct FockVector {
  std::vector<Complex> amplitudes;
  double tail_mass = 0.0;

  std::size_t dim() const { return amplitudes.size(); }
};

// ln(k!), exact for k <= 1 and via lgamma otherwise.
double log_factorial(unsigned k);

// |c_k|^2 mass in the top 10% of indices of an amplitude vector.
double tail_mass_of(const std::vector<Complex>& amplitudes);

// Fock expansion of D(alpha)|n> with alpha = alpha_mag * exp(i*alpha_phase).
// The displacement phase enters each amplitude exactly as exp(i(k-n)*phase);
// magnitudes are accumulated from log-domain factorials.
RawFockVector displaced_fock_amplitudes(unsigned n, double alpha_mag,
                                        double alpha_phase, std::size_t dim);
RawFockVector displaced_fock_amplitudes(unsigned n, Complex alpha,
                                        std::size_t dim);

// a^dag^u acting within the same cutoff. The top u input amplitudes must
// carry relative mass below tol, otherwise TruncationError is thrown.
RawFockVector apply_creation(const RawFockVector& state, unsigned u,
                             double tol = kDefaultTruncationTol);

// a^v acting within the same cutoff; components below |v> are annihilated.
// Throws ZeroStateError when nothing survives.
RawFockVector apply_annihilation(const RawFockVector& state, unsigned v);

// Returns the unit-norm vector and the normalization constant 1/sqrt(norm_sq).
std::pair<FockVector, double> normalize(const RawFockVector& state);

// <a^dag^j a^k> for a normalized state. Satisfies
// ladder_moment(j,k) == conj(ladder_moment(k,j)).
Complex ladder_moment(const FockVector& state, unsigned j, unsigned k);

struct NumberMoments {
  double mean = 0.0;
  double variance = 0.0;
  double second_moment = 0.0;
};
NumberMoments number_moments(const FockVector& state);

}  // namespace qphase

#endif
