#include "qphase/verification.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "qphase/interferometry.hpp"
#include "qphase/oracle.hpp"
#include "qphase/phase.hpp"

namespace qphase {

namespace {

constexpr double kPi = std::numbers::pi;

class Tally {
 public:
  explicit Tally(VerificationReport& report) : report_(report) {}

  void record(const std::string& name, double err, double tol) {
    CheckResult& cat = category(name, tol);
    ++cat.checks;
    cat.max_err = std::max(cat.max_err, err);
    if (!(err <= tol)) ++cat.failures;
  }

 private:
  CheckResult& category(const std::string& name, double tol) {
    for (CheckResult& c : report_.categories)
      if (c.name == name) return c;
    report_.categories.push_back({name, 0, 0, 0.0, tol});
    return report_.categories.back();
  }

  VerificationReport& report_;
};

bool expected_zero_state(const StateSpec& spec) {
  return spec.kind == OpKind::Subtract && spec.alpha_mag == 0.0 &&
         spec.count > spec.fock_n;
}

}  // namespace

std::size_t VerificationReport::total_checks() const {
  std::size_t n = 0;
  for (const CheckResult& c : categories) n += c.checks;
  return n;
}

std::size_t VerificationReport::total_failures() const {
  std::size_t n = 0;
  for (const CheckResult& c : categories) n += c.failures;
  return n;
}

std::vector<StateSpec> random_spec_suite(std::size_t count, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> kind_dist(0, 1);
  std::uniform_int_distribution<unsigned> count_dist(0, 3);
  std::uniform_int_distribution<unsigned> n_dist(0, 3);
  std::uniform_real_distribution<double> alpha_dist(0.0, 2.0);
  const double phases[] = {0.0, kPi / 4.0, kPi / 2.0, kPi};
  std::uniform_int_distribution<int> phase_dist(0, 3);

  std::vector<StateSpec> specs;
  specs.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    StateSpec s;
    s.kind = kind_dist(rng) == 0 ? OpKind::Add : OpKind::Subtract;
    s.count = count_dist(rng);
    s.fock_n = n_dist(rng);
    s.alpha_mag = alpha_dist(rng);
    s.alpha_phase = phases[phase_dist(rng)];
    specs.push_back(s);
  }
  return specs;
}

VerificationReport run_oracle_suite(std::size_t num_specs, unsigned seed) {
  VerificationReport report;
  Tally tally(report);

  for (const StateSpec& spec : random_spec_suite(num_specs, seed)) {
    if (expected_zero_state(spec)) {
      bool threw = false;
      try {
        build_state(spec);
      } catch (const ZeroStateError&) {
        threw = true;
      }
      tally.record("zero-state detection", threw ? 0.0 : 1.0, 0.5);
      continue;
    }

    const BuiltState built = build_state(spec);
    const FockVector& psi = built.state;
    const std::size_t dim = psi.dim();
    const FockVector psi_o = oracle::oracle_state(spec, dim);

    tally.record("state fidelity", 1.0 - fidelity(psi, psi_o), 1e-8);
    tally.record("normalization constant",
                 std::abs(built.norm_constant - norm_constant_series(spec)) /
                     std::max(1.0, built.norm_constant),
                 1e-8);

    // Operator moments against dense-matrix expectations.
    const auto [a, adag] = oracle::ladder_matrices(dim);
    const oracle::OperatorMatrix n_op = oracle::number_matrix(dim);
    const oracle::OperatorMatrix n2_op{n_op.entries * n_op.entries, "N^2"};
    const oracle::OperatorMatrix a2_op{a.entries * a.entries, "a^2"};

    const NumberMoments nm = number_moments(psi);
    const Complex mean_a_o = oracle::oracle_expectation(psi_o, a);
    const Complex mean_a2_o = oracle::oracle_expectation(psi_o, a2_op);
    const double mean_n_o = oracle::oracle_expectation(psi_o, n_op).real();
    const double mean_n2_o = oracle::oracle_expectation(psi_o, n2_op).real();

    tally.record("number moments", std::abs(nm.mean - mean_n_o), 1e-8);
    tally.record("number moments", std::abs(nm.second_moment - mean_n2_o), 1e-8);
    tally.record("ladder moments",
                 std::abs(ladder_moment(psi, 0, 1) - mean_a_o), 1e-8);
    tally.record("ladder moments",
                 std::abs(ladder_moment(psi, 0, 2) - mean_a2_o), 1e-8);
    tally.record("ladder moments",
                 std::abs(ladder_moment(psi, 1, 1) - Complex(mean_n_o, 0.0)),
                 1e-8);

    // Phase distribution: amplitude route and closed-form series against the
    // explicit phase-state projection.
    for (double theta : {0.0, 0.7, 2.0, spec.alpha_phase}) {
      const double p_oracle = oracle::oracle_p_theta(psi_o, theta);
      tally.record("P_theta amplitude route",
                   std::abs(phase_density_at(psi, theta) - p_oracle), 1e-8);
      tally.record("P_theta closed form",
                   std::abs(closed_form_p_theta(spec, theta) - p_oracle), 1e-8);
    }

    // Fluctuation parameters recomputed from oracle moments.
    {
      const FluctuationReport rep = fluctuation_report(psi);
      const double denom = mean_n_o + 0.5;
      const double sin_mean = mean_a_o.imag() / std::sqrt(denom);
      const double cos_mean = mean_a_o.real() / std::sqrt(denom);
      const double var_n = mean_n2_o - mean_n_o * mean_n_o;
      const double sin_var =
          (2.0 * mean_n_o + 1.0 - 2.0 * mean_a2_o.real()) / (4.0 * denom) -
          sin_mean * sin_mean;
      const double cos_var =
          (2.0 * mean_n_o + 1.0 + 2.0 * mean_a2_o.real()) / (4.0 * denom) -
          cos_mean * cos_mean;
      tally.record("fluctuation S", std::abs(rep.s - var_n * sin_var), 1e-8);
      const double ref = sin_mean * sin_mean + cos_mean * cos_mean;
      if (rep.u && ref > 1e-18)
        tally.record("fluctuation U",
                     std::abs(*rep.u - var_n * (sin_var + cos_var) / ref), 1e-8);
      if (rep.q && cos_mean * cos_mean > 1e-18)
        tally.record("fluctuation Q",
                     std::abs(*rep.q - var_n * sin_var / (cos_mean * cos_mean)),
                     1e-8);
    }

    // Dispersion: coefficient form vs the oracle state and vs quadrature.
    tally.record("dispersion",
                 std::abs(phase_dispersion(psi) - phase_dispersion(psi_o)), 1e-8);
    tally.record("dispersion quadrature",
                 std::abs(phase_dispersion(psi) -
                          phase_dispersion_quadrature(phase_distribution(psi))),
                 1e-6);

    // Angular Q: closed form vs radial quadrature at the symmetry axis.
    tally.record("angular Q quadrature",
                 std::abs(angular_q_at(psi, spec.alpha_phase) -
                          angular_q_quadrature(psi, spec.alpha_phase)),
                 1e-6);

    // Interferometry: direct moments vs appendix series vs oracle moments.
    for (double phi : {kPi / 4.0, kPi / 3.0}) {
      const double direct = delta_jz_direct(psi, phi);
      tally.record("delta Jz appendix series",
                   std::abs(direct - delta_jz_appendix(spec, phi)), 1e-8);
      const double c = std::cos(phi), s = std::sin(phi);
      const double from_oracle =
          c * c * 0.25 * (mean_n2_o - mean_n_o * mean_n_o) +
          s * s * 0.25 * mean_n_o;
      tally.record("delta Jz oracle", std::abs(direct - from_oracle), 1e-8);
      tally.record("slope appendix series",
                   std::abs(std::abs(slope_djz_dphi(psi, phi)) -
                            slope_appendix(spec, phi)),
                   1e-8);
      if (mean_n_o > 1e-12) {
        const double dphi = std::sqrt(direct) / (s * 0.5 * nm.mean);
        const double dphi_o = std::sqrt(from_oracle) / (s * 0.5 * mean_n_o);
        tally.record("delta phi", std::abs(dphi - dphi_o) / dphi_o, 1e-8);
      }
    }
  }
  return report;
}

VerificationReport run_cutoff_convergence(std::size_t num_specs, unsigned seed) {
  VerificationReport report;
  Tally tally(report);

  for (const StateSpec& spec : random_spec_suite(num_specs, seed)) {
    if (expected_zero_state(spec)) continue;
    const BuiltState coarse = build_state(spec);
    const BuiltState fine = build_state_at_dim(spec, 2 * coarse.state.dim());

    const NumberMoments nm_c = number_moments(coarse.state);
    const NumberMoments nm_f = number_moments(fine.state);
    tally.record("cutoff: <N>", std::abs(nm_c.mean - nm_f.mean), 1e-8);
    tally.record("cutoff: <N^2>",
                 std::abs(nm_c.second_moment - nm_f.second_moment), 1e-8);
    tally.record("cutoff: N constant",
                 std::abs(coarse.norm_constant - fine.norm_constant) /
                     std::max(1.0, fine.norm_constant),
                 1e-8);
    tally.record("cutoff: P_theta",
                 std::abs(phase_density_at(coarse.state, 0.7) -
                          phase_density_at(fine.state, 0.7)),
                 1e-8);
    tally.record("cutoff: dispersion",
                 std::abs(phase_dispersion(coarse.state) -
                          phase_dispersion(fine.state)),
                 1e-8);
    const FluctuationReport rep_c = fluctuation_report(coarse.state);
    const FluctuationReport rep_f = fluctuation_report(fine.state);
    tally.record("cutoff: S parameter", std::abs(rep_c.s - rep_f.s), 1e-8);
    if (rep_c.u && rep_f.u)
      tally.record("cutoff: U parameter", std::abs(*rep_c.u - *rep_f.u), 1e-8);
    tally.record("cutoff: delta Jz",
                 std::abs(delta_jz_direct(coarse.state, kPi / 3.0) -
                          delta_jz_direct(fine.state, kPi / 3.0)),
                 1e-8);
  }
  return report;
}

}  // namespace qphase
