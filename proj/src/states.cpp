#include "qphase/states.hpp"

#include <algorithm>
#include <cmath>

namespace qphase {

void validate(const StateSpec& spec) {
  if (spec.count > kMaxCount)
    throw InvalidSpecError("StateSpec: count exceeds " + std::to_string(kMaxCount));
  if (spec.fock_n > kMaxFockN)
    throw InvalidSpecError("StateSpec: fock_n exceeds " + std::to_string(kMaxFockN));
  if (!(spec.alpha_mag >= 0.0) || spec.alpha_mag > kMaxAlphaMag)
    throw InvalidSpecError("StateSpec: alpha_mag outside [0, 8]");
  if (!std::isfinite(spec.alpha_phase))
    throw InvalidSpecError("StateSpec: alpha_phase not finite");
}

std::size_t default_dim(const StateSpec& spec) {
  const double a2 = spec.alpha_mag * spec.alpha_mag;
  const unsigned added = spec.kind == OpKind::Add ? spec.count : 0;
  const double poisson = std::ceil(a2 + 8.0 * std::sqrt(a2 + 1.0));
  return static_cast<std::size_t>(spec.fock_n + added + poisson) + 16;
}

BuiltState build_state(const StateSpec& spec, double tolerance) {
  validate(spec);
  if (!(tolerance > 0.0) || tolerance > 1e-6)
    throw InvalidSpecError("build_state: tolerance must be in (0, 1e-6]");

  std::size_t dim = default_dim(spec);
  for (;;) {
    bool overflow = false;
    try {
      RawFockVector raw =
          displaced_fock_amplitudes(spec.fock_n, spec.alpha_mag, spec.alpha_phase, dim);
      raw = spec.kind == OpKind::Add ? apply_creation(raw, spec.count, tolerance)
                                     : apply_annihilation(raw, spec.count);
      auto [state, norm_constant] = normalize(raw);
      if (state.tail_mass < tolerance) {
        // Global-phase convention: first nonzero amplitude real-positive.
        for (const Complex& c : state.amplitudes) {
          const double mag = std::abs(c);
          if (mag > 1e-12) {
            const Complex rot = std::conj(c) / mag;
            for (Complex& a : state.amplitudes) a *= rot;
            break;
          }
        }
        return {std::move(state), norm_constant};
      }
    } catch (const TruncationError&) {
      overflow = true;
    }
    if (dim >= kMaxDim)
      throw TruncationError(overflow
                                ? "build_state: ladder headroom exhausted at hard cap"
                                : "build_state: tail mass not certified at hard cap");
    dim = std::min(kMaxDim, dim * 2);
  }
}

BuiltState build_state_at_dim(const StateSpec& spec, std::size_t dim) {
  validate(spec);
  RawFockVector raw =
      displaced_fock_amplitudes(spec.fock_n, spec.alpha_mag, spec.alpha_phase, dim);
  raw = spec.kind == OpKind::Add ? apply_creation(raw, spec.count, 1e-6)
                                 : apply_annihilation(raw, spec.count);
  auto [state, norm_constant] = normalize(raw);
  for (const Complex& c : state.amplitudes) {
    const double mag = std::abs(c);
    if (mag > 1e-12) {
      const Complex rot = std::conj(c) / mag;
      for (Complex& a : state.amplitudes) a *= rot;
      break;
    }
  }
  return {std::move(state), norm_constant};
}

SeriesPhotonMoments series_photon_moments(const StateSpec& spec) {
  validate(spec);
  const unsigned n = spec.fock_n;
  const unsigned cnt = spec.count;
  const bool add = spec.kind == OpKind::Add;
  SeriesPhotonMoments out;

  if (spec.alpha_mag == 0.0) {
    // DFS degenerates to |n>; the ladder action is a single Fock state.
    if (!add && cnt > n) throw ZeroStateError("series: subtraction below vacuum");
    const double q = add ? static_cast<double>(n + cnt)
                         : static_cast<double>(n - cnt);
    out.norm_sq = add ? std::exp(log_factorial(n + cnt) - log_factorial(n))
                      : std::exp(log_factorial(n) - log_factorial(n - cnt));
    out.mean_n = q;
    out.mean_n_nm1 = q * (q - 1.0);
    return out;
  }

  const double a2 = spec.alpha_mag * spec.alpha_mag;
  const double log_alpha = std::log(spec.alpha_mag);
  const double log_n_fact = log_factorial(n);
  const std::size_t m_max = default_dim(spec) + 32;

  double s0 = 0.0, s1 = 0.0, s2 = 0.0;
  for (unsigned p = 0; p <= n; ++p) {
    const double lb_p = log_n_fact - log_factorial(p) - log_factorial(n - p);
    for (unsigned pp = 0; pp <= n; ++pp) {
      const double lb_pp = log_n_fact - log_factorial(pp) - log_factorial(n - pp);
      const double sign = ((p + pp) % 2 == 0) ? 1.0 : -1.0;
      for (std::size_t m = 0; m < m_max; ++m) {
        const long k = static_cast<long>(m) + p;        // m + p
        const long kd = k - static_cast<long>(pp);      // m + p - p'
        if (kd < 0) continue;
        long q;  // photon number carried by this diagonal term
        double log_ratio;
        if (add) {
          q = k + cnt;
          log_ratio = log_factorial(static_cast<unsigned>(q)) -
                      log_factorial(static_cast<unsigned>(m)) -
                      log_factorial(static_cast<unsigned>(kd));
        } else {
          q = k - static_cast<long>(cnt);
          if (q < 0) continue;
          log_ratio = 2.0 * log_factorial(static_cast<unsigned>(k)) -
                      log_factorial(static_cast<unsigned>(m)) -
                      log_factorial(static_cast<unsigned>(kd)) -
                      log_factorial(static_cast<unsigned>(q));
        }
        const double log_mag =
            lb_p + lb_pp - log_n_fact +
            2.0 * (static_cast<double>(m) + n - pp) * log_alpha - a2 + log_ratio;
        const double t = sign * std::exp(log_mag);
        const double qd = static_cast<double>(q);
        s0 += t;
        s1 += t * qd;
        s2 += t * qd * (qd - 1.0);
      }
    }
  }
  if (s0 <= kZeroNormThreshold)
    throw ZeroStateError("series: zero-norm state");
  out.norm_sq = s0;
  out.mean_n = s1 / s0;
  out.mean_n_nm1 = s2 / s0;
  return out;
}

double norm_constant_series(const StateSpec& spec) {
  return 1.0 / std::sqrt(series_photon_moments(spec).norm_sq);
}

StateSpec limiting_state(LimitName name, const LimitParams& params) {
  auto need_n = [&] {
    if (!params.n) throw InvalidSpecError("limiting_state: missing Fock parameter n");
    return *params.n;
  };
  auto need_count = [&] {
    if (!params.count) throw InvalidSpecError("limiting_state: missing count");
    return *params.count;
  };
  auto need_alpha = [&] {
    if (!params.alpha_mag) throw InvalidSpecError("limiting_state: missing alpha");
    return *params.alpha_mag;
  };
  switch (name) {
    case LimitName::Dfs:
      return {OpKind::Add, 0, need_n(), need_alpha(), params.alpha_phase};
    case LimitName::Coherent:
      return {OpKind::Add, 0, 0, need_alpha(), params.alpha_phase};
    case LimitName::Fock:
      return {OpKind::Add, 0, need_n(), 0.0, 0.0};
    case LimitName::Pacs:
      return {OpKind::Add, need_count(), 0, need_alpha(), params.alpha_phase};
    case LimitName::Pscs:
      return {OpKind::Subtract, need_count(), 0, need_alpha(), params.alpha_phase};
  }
  throw InvalidSpecError("limiting_state: unknown name");
}

double fidelity(const FockVector& a, const FockVector& b) {
  const std::size_t d = std::min(a.dim(), b.dim());
  Complex ov(0.0, 0.0);
  for (std::size_t k = 0; k < d; ++k)
    ov += std::conj(a.amplitudes[k]) * b.amplitudes[k];
  return std::norm(ov);
}

}  // namespace qphase
