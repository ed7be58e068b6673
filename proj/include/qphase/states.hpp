#ifndef QPHASE_STATES_HPP
#define QPHASE_STATES_HPP

#include <optional>
#include <stdexcept>

#include "qphase/fock.hpp"

namespace qphase {

struct InvalidSpecError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

enum class OpKind { Add, Subtract };

// Recipe for a photon-added/subtracted displaced Fock state:
// kind=Add applies a^dag^count, kind=Subtract applies a^count to
// D(alpha)|fock_n> with alpha = alpha_mag * exp(i*alpha_phase).
struct StateSpec {
  OpKind kind = OpKind::Add;
  unsigned count = 0;
  unsigned fock_n = 0;
  double alpha_mag = 0.0;
  double alpha_phase = 0.0;
};

inline constexpr unsigned kMaxCount = 16;
inline constexpr unsigned kMaxFockN = 32;
inline constexpr double kMaxAlphaMag = 8.0;

// Throws InvalidSpecError when a parameter is outside the certified range.
void validate(const StateSpec& spec);

// Poisson-tail cutoff for a displaced state, before tail certification.
std::size_t default_dim(const StateSpec& spec);

struct BuiltState {
  FockVector state;
  double norm_constant = 0.0;  // N+ or N- applied during normalization
};

// displaced_fock_amplitudes -> ladder action -> normalize, with the cutoff
// doubled until the tail mass certifies below `tolerance` (hard cap kMaxDim).
// The global phase is fixed so the first nonzero amplitude is real-positive.
BuiltState build_state(const StateSpec& spec,
                       double tolerance = kDefaultTruncationTol);

// Same pipeline at a fixed cutoff, without tail certification or cutoff
// doubling (convergence-study support).
BuiltState build_state_at_dim(const StateSpec& spec, std::size_t dim);

// Photon-number moments of the normalized state evaluated from the analytic
// normalization series (no amplitude vector involved): norm_sq is the series
// value 1/N^2, mean_n = <N>, mean_n_nm1 = <N(N-1)>.
struct SeriesPhotonMoments {
  double norm_sq = 0.0;
  double mean_n = 0.0;
  double mean_n_nm1 = 0.0;
};
SeriesPhotonMoments series_photon_moments(const StateSpec& spec);

// N+/N- from the double series.
double norm_constant_series(const StateSpec& spec);

enum class LimitName { Dfs, Coherent, Fock, Pacs, Pscs };

struct LimitParams {
  std::optional<unsigned> n;
  std::optional<unsigned> count;
  std::optional<double> alpha_mag;
  double alpha_phase = 0.0;
};

// StateSpec realizing a named limiting state. Throws InvalidSpecError when a
// required parameter is missing.
StateSpec limiting_state(LimitName name, const LimitParams& params);

// |<a|b>|^2 with the shorter vector zero-padded.
double fidelity(const FockVector& a, const FockVector& b);

}  // namespace qphase

#endif
