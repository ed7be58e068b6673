#ifndef QPHASE_ORACLE_HPP
#define QPHASE_ORACLE_HPP

#include <Eigen/Dense>
#include <string>

#include "qphase/states.hpp"

namespace qphase::oracle {

// Brute-force verification path: dense matrices in the truncated number
// basis, no closed-form series anywhere.

struct OperatorMatrix {
  Eigen::MatrixXcd entries;
  std::string label;
};

inline constexpr std::size_t kOracleMaxDim = 256;

// (a, a_dagger) with a[k-1][k] = sqrt(k).
std::pair<OperatorMatrix, OperatorMatrix> ladder_matrices(std::size_t dim);

OperatorMatrix number_matrix(std::size_t dim);

// exp(alpha a^dag - conj(alpha) a) by scaled-and-squared Taylor summation.
OperatorMatrix displacement_matrix(Complex alpha, std::size_t dim);

// a^dag^u D(alpha) e_n or a^v D(alpha) e_n, normalized, with the same
// global-phase convention as build_state.
FockVector oracle_state(const StateSpec& spec, std::size_t dim);

// <psi|Op|psi>; the state is zero-padded up to the operator dimension.
Complex oracle_expectation(const FockVector& state, const OperatorMatrix& op);

// (1/2pi)|<theta|psi>|^2 with the truncated phase-state vector built
// explicitly.
double oracle_p_theta(const FockVector& state, double theta);

}  // namespace qphase::oracle

#endif
