#include "qphase/oracle.hpp"

#include <cmath>
#include <numbers>

namespace qphase::oracle {

namespace {

Eigen::MatrixXcd matrix_exponential(const Eigen::MatrixXcd& m) {
  // Scaling and squaring with plain Taylor summation; the generator here is
  // anti-Hermitian, so the conditioning is benign.
  const double norm = m.cwiseAbs().rowwise().sum().maxCoeff();
  int squarings = 0;
  if (norm > 0.5)
    squarings = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
  const Eigen::MatrixXcd scaled = m / std::pow(2.0, squarings);

  const auto dim = m.rows();
  Eigen::MatrixXcd result = Eigen::MatrixXcd::Identity(dim, dim);
  Eigen::MatrixXcd term = Eigen::MatrixXcd::Identity(dim, dim);
  for (int k = 1; k <= 64; ++k) {
    term = (term * scaled) / static_cast<double>(k);
    result += term;
    if (term.cwiseAbs().maxCoeff() < 1e-18) break;
  }
  for (int k = 0; k < squarings; ++k) result = result * result;
  return result;
}

}  // namespace

std::pair<OperatorMatrix, OperatorMatrix> ladder_matrices(std::size_t dim) {
  if (dim < 2) throw InvalidSpecError("ladder_matrices: dim must be >= 2");
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(dim, dim);
  for (std::size_t k = 1; k < dim; ++k)
    a(k - 1, k) = std::sqrt(static_cast<double>(k));
  OperatorMatrix a_op{a, "a"};
  OperatorMatrix adag_op{a.adjoint(), "a_dagger"};
  return {std::move(a_op), std::move(adag_op)};
}

OperatorMatrix number_matrix(std::size_t dim) {
  Eigen::MatrixXcd n = Eigen::MatrixXcd::Zero(dim, dim);
  for (std::size_t k = 0; k < dim; ++k) n(k, k) = static_cast<double>(k);
  return {std::move(n), "N"};
}

OperatorMatrix displacement_matrix(Complex alpha, std::size_t dim) {
  if (dim > kOracleMaxDim)
    throw InvalidSpecError("displacement_matrix: oracle dimension above cap");
  auto [a, adag] = ladder_matrices(dim);
  const Eigen::MatrixXcd generator =
      alpha * adag.entries - std::conj(alpha) * a.entries;
  return {matrix_exponential(generator), "D(alpha)"};
}

FockVector oracle_state(const StateSpec& spec, std::size_t dim) {
  validate(spec);
  if (dim <= spec.fock_n)
    throw TruncationError("oracle_state: dim must exceed fock_n");
  const Complex alpha = std::polar(spec.alpha_mag, spec.alpha_phase);
  const OperatorMatrix d = displacement_matrix(alpha, dim);
  Eigen::VectorXcd v = d.entries.col(spec.fock_n);

  auto [a, adag] = ladder_matrices(dim);
  const Eigen::MatrixXcd& ladder =
      spec.kind == OpKind::Add ? adag.entries : a.entries;
  for (unsigned i = 0; i < spec.count; ++i) v = ladder * v;

  const double norm = v.norm();
  if (norm * norm <= kZeroNormThreshold)
    throw ZeroStateError("oracle_state: state annihilated to zero");
  v /= norm;

  FockVector out;
  out.amplitudes.assign(v.data(), v.data() + v.size());
  for (const Complex& c : out.amplitudes) {
    const double mag = std::abs(c);
    if (mag > 1e-12) {
      const Complex rot = std::conj(c) / mag;
      for (Complex& ampl : out.amplitudes) ampl *= rot;
      break;
    }
  }
  out.tail_mass = tail_mass_of(out.amplitudes);
  return out;
}

Complex oracle_expectation(const FockVector& state, const OperatorMatrix& op) {
  const auto dim = op.entries.rows();
  if (static_cast<std::size_t>(dim) < state.dim())
    throw InvalidSpecError("oracle_expectation: operator smaller than state");
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(dim);
  for (std::size_t k = 0; k < state.dim(); ++k) v(k) = state.amplitudes[k];
  return v.dot(op.entries * v);  // Eigen's dot conjugates the left argument
}

double oracle_p_theta(const FockVector& state, double theta) {
  Eigen::VectorXcd phase_state(state.dim());
  Eigen::VectorXcd v(state.dim());
  for (std::size_t k = 0; k < state.dim(); ++k) {
    phase_state(k) = std::polar(1.0, static_cast<double>(k) * theta);
    v(k) = state.amplitudes[k];
  }
  return std::norm(phase_state.dot(v)) / (2.0 * std::numbers::pi);
}

}  // namespace qphase::oracle
