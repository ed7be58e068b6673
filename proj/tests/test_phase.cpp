#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "qphase/phase.hpp"

using namespace qphase;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInv2Pi = 1.0 / (2.0 * kPi);

FockVector build(const StateSpec& spec) { return build_state(spec).state; }

}  // namespace

TEST_CASE("Fock states have uniform phase distributions") {
  for (unsigned n : {0u, 1u, 3u}) {
    const FockVector psi = build(StateSpec{OpKind::Add, 0, n, 0.0, 0.0});
    const PhaseDistribution dist = phase_distribution(psi, 128);
    for (double v : dist.density) CHECK(v == doctest::Approx(kInv2Pi).epsilon(1e-12));
    CHECK(trapezoid_integral(dist) == doctest::Approx(1.0).epsilon(1e-10));
  }
}

TEST_CASE("displaced |1> has a dip at the displacement phase") {
  const FockVector psi = build(StateSpec{OpKind::Add, 0, 1, 1.0, 0.0});
  const PhaseDistribution dist = phase_distribution(psi, 1024);
  const std::size_t i0 = dist.theta.size() / 2;  // theta = 0
  CHECK(dist.theta[i0] == doctest::Approx(0.0));
  CHECK(dist.density[i0] < dist.density[i0 - 1]);
  CHECK(dist.density[i0] < dist.density[i0 + 1]);
}

TEST_CASE("distributions integrate to one and stay nonnegative") {
  for (const StateSpec spec :
       {StateSpec{OpKind::Add, 2, 1, 1.0, 0.0}, StateSpec{OpKind::Subtract, 1, 2, 1.5, 0.8}}) {
    const FockVector psi = build(spec);
    for (const PhaseDistribution& dist :
         {phase_distribution(psi, 512), angular_q(psi, 512)}) {
      CHECK(trapezoid_integral(dist) == doctest::Approx(1.0).epsilon(1e-6));
      for (double v : dist.density) CHECK(v >= -1e-12);
    }
  }
}

TEST_CASE("closed-form P_theta: uniform vacuum and theta-theta2 dependence") {
  const StateSpec vacuum{OpKind::Add, 0, 0, 0.0, 0.0};
  for (double theta : {0.0, 1.0, -2.5})
    CHECK(closed_form_p_theta(vacuum, theta) == doctest::Approx(kInv2Pi));

  const StateSpec rotated{OpKind::Add, 1, 1, 1.0, kPi / 2.0};
  const StateSpec plain{OpKind::Add, 1, 1, 1.0, 0.0};
  CHECK(closed_form_p_theta(rotated, kPi / 2.0) ==
        doctest::Approx(closed_form_p_theta(plain, 0.0)).epsilon(1e-12));
}

TEST_CASE("closed-form P_theta equals the amplitude route") {
  for (const StateSpec spec :
       {StateSpec{OpKind::Add, 2, 1, 1.0, 0.0}, StateSpec{OpKind::Subtract, 1, 1, 1.0, 0.0},
        StateSpec{OpKind::Add, 1, 2, 1.7, 0.9}, StateSpec{OpKind::Subtract, 2, 3, 0.6, 2.0}}) {
    const FockVector psi = build(spec);
    for (double theta : {0.0, 0.5, -1.3, 3.0}) {
      CHECK(std::abs(closed_form_p_theta(spec, theta) -
                     phase_density_at(psi, theta)) < 1e-8);
    }
  }
}

TEST_CASE("husimi Q point values") {
  const FockVector vac = build(StateSpec{OpKind::Add, 0, 0, 0.0, 0.0});
  CHECK(husimi_q(vac, Complex(0.0, 0.0)) == doctest::Approx(1.0 / kPi).epsilon(1e-12));

  const FockVector one = build(StateSpec{OpKind::Add, 0, 1, 0.0, 0.0});
  CHECK(husimi_q(one, Complex(0.0, 0.0)) == doctest::Approx(0.0));

  const FockVector coh = build(StateSpec{OpKind::Add, 0, 0, 1.0, 0.0});
  CHECK(husimi_q(coh, Complex(1.0, 0.0)) == doctest::Approx(1.0 / kPi).epsilon(1e-10));

  CHECK_THROWS_AS(husimi_q(vac, Complex(100.0, 0.0)), TruncationError);
}

TEST_CASE("angular Q of phase-symmetric states is flat") {
  for (unsigned n : {0u, 2u}) {
    const FockVector psi = build(StateSpec{OpKind::Add, 0, n, 0.0, 0.0});
    const PhaseDistribution dist = angular_q(psi, 128);
    for (double v : dist.density) CHECK(v == doctest::Approx(kInv2Pi).epsilon(1e-10));
  }
}

TEST_CASE("angular Q peaks at the displacement phase") {
  // The bare displaced |1> carries shallow twin side peaks instead; photon
  // addition restores the single maximum at theta2.
  for (double theta2 : {0.0, kPi / 4.0, -1.0}) {
    const FockVector psi = build(StateSpec{OpKind::Add, 1, 1, 1.0, theta2});
    const PhaseDistribution dist = angular_q(psi, 1024);
    std::size_t imax = 0;
    for (std::size_t i = 1; i < dist.density.size(); ++i)
      if (dist.density[i] > dist.density[imax]) imax = i;
    const double cell = 2.0 * kPi / static_cast<double>(dist.theta.size());
    CHECK(std::abs(dist.theta[imax] - theta2) <= cell + 1e-12);
  }
}

TEST_CASE("angular Q quadrature agrees with the closed form") {
  const FockVector vac = build(StateSpec{OpKind::Add, 0, 0, 0.0, 0.0});
  CHECK(angular_q_quadrature(vac, 0.37) == doctest::Approx(kInv2Pi).epsilon(1e-6));

  const FockVector coh = build(StateSpec{OpKind::Add, 0, 0, 1.0, 0.0});
  CHECK(std::abs(angular_q_quadrature(coh, 0.0) - angular_q_at(coh, 0.0)) < 1e-6);

  const FockVector subtracted = build(StateSpec{OpKind::Subtract, 2, 1, 1.0, 0.0});
  CHECK(std::abs(angular_q_quadrature(subtracted, kPi / 4.0) -
                 angular_q_at(subtracted, kPi / 4.0)) < 1e-6);
}

TEST_CASE("mirror symmetry of both distributions about theta2") {
  for (const StateSpec spec :
       {StateSpec{OpKind::Add, 1, 1, 1.0, 0.7}, StateSpec{OpKind::Subtract, 2, 1, 1.3, -0.4}}) {
    const FockVector psi = build(spec);
    for (double delta : {0.1, 0.9, 2.2}) {
      CHECK(std::abs(phase_density_at(psi, spec.alpha_phase + delta) -
                     phase_density_at(psi, spec.alpha_phase - delta)) < 1e-10);
      CHECK(std::abs(angular_q_at(psi, spec.alpha_phase + delta) -
                     angular_q_at(psi, spec.alpha_phase - delta)) < 1e-10);
    }
  }
}

TEST_CASE("coherent-state U approaches 1/2") {
  for (double alpha : {2.0, 3.0, 4.0}) {
    const FockVector psi = build(StateSpec{OpKind::Add, 0, 0, alpha, 0.0});
    const FluctuationReport rep = fluctuation_report(psi);
    REQUIRE(rep.u.has_value());
    CHECK(*rep.u == doctest::Approx(0.5).epsilon(0.02));
    CHECK(std::abs(*rep.u - 0.5) < 0.01);
  }
}

TEST_CASE("single photon subtracted coherent state keeps U = 1/2") {
  for (double alpha : {2.0, 3.0}) {
    const FockVector psi = build(StateSpec{OpKind::Subtract, 1, 0, alpha, 0.0});
    const FluctuationReport rep = fluctuation_report(psi);
    REQUIRE(rep.u.has_value());
    CHECK(std::abs(*rep.u - 0.5) < 0.01);
  }
}

TEST_CASE("Fock states carry no phase reference") {
  const FockVector psi = build(StateSpec{OpKind::Add, 0, 2, 0.0, 0.0});
  const FluctuationReport rep = fluctuation_report(psi);
  CHECK(!rep.u.has_value());
  CHECK(!rep.q.has_value());
  CHECK(rep.sin_var >= -1e-12);
  CHECK(rep.cos_var >= -1e-12);
}

TEST_CASE("phase dispersion extremes and monotonicity") {
  CHECK(phase_dispersion(build(StateSpec{OpKind::Add, 0, 2, 0.0, 0.0})) ==
        doctest::Approx(1.0).epsilon(1e-12));
  CHECK(phase_dispersion(build(StateSpec{OpKind::Add, 0, 0, 0.0, 0.0})) ==
        doctest::Approx(1.0).epsilon(1e-12));

  const double d1 = phase_dispersion(build(StateSpec{OpKind::Add, 0, 0, 1.0, 0.0}));
  const double d2 = phase_dispersion(build(StateSpec{OpKind::Add, 0, 0, 2.0, 0.0}));
  CHECK(d2 < d1);
  CHECK(d1 < 1.0);
  CHECK(d2 > 0.0);
}

TEST_CASE("dispersion quadrature matches the coefficient form") {
  for (const StateSpec spec :
       {StateSpec{OpKind::Add, 1, 1, 1.0, 0.0}, StateSpec{OpKind::Subtract, 1, 2, 1.5, 0.5}}) {
    const FockVector psi = build(spec);
    CHECK(std::abs(phase_dispersion(psi) -
                   phase_dispersion_quadrature(phase_distribution(psi))) < 1e-6);
  }
}

TEST_CASE("P_theta narrows with photon addition and broadens with n") {
  // u = 0..3 at n=1, |alpha|=1.
  double prev = 1e9;
  for (unsigned u = 0; u <= 3; ++u) {
    const double width =
        fwhm(phase_distribution(build(StateSpec{OpKind::Add, u, 1, 1.0, 0.0}), 2048));
    CHECK(width < prev);
    prev = width;
  }
  // n = 1..3 at u=1, |alpha|=1.
  prev = 0.0;
  for (unsigned n = 1; n <= 3; ++n) {
    const double width =
        fwhm(phase_distribution(build(StateSpec{OpKind::Add, 1, n, 1.0, 0.0}), 2048));
    CHECK(width > prev);
    prev = width;
  }
}

TEST_CASE("U witnesses antibunching for the subtracted displaced |1> at small displacement") {
  // The witness region closes near |alpha| = 1.15; beyond it U rises above
  // 1/2 again.
  for (double alpha : {0.25, 0.5, 0.75, 1.0}) {
    const FluctuationReport rep =
        fluctuation_report(build(StateSpec{OpKind::Subtract, 1, 1, alpha, 0.0}));
    REQUIRE(rep.u.has_value());
    CHECK(*rep.u < 0.5);
  }
  const FluctuationReport far =
      fluctuation_report(build(StateSpec{OpKind::Subtract, 1, 1, 2.0, 0.0}));
  REQUIRE(far.u.has_value());
  CHECK(*far.u > 0.5);
}
