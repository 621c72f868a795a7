/*
 * Copyright 2026 The rampqss developers.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE file in the root directory of this source tree.
 */

#ifndef RQSS_QLIN_HPP_
#define RQSS_QLIN_HPP_

#include <Eigen/Dense>
#include <complex>
#include <functional>
#include <vector>

#include "rqss/errors.hpp"
#include "rqss/rng.hpp"

namespace rqss::qlin {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using Index = Eigen::Index;

// Index convention, fixed project-wide: the leftmost tensor factor varies
// slowest (row-major mixed radix).

/// A normalized amplitude vector over a tensor product of finite factors.
struct PureState {
  Vector amp;
  std::vector<Index> factor_dims;

  Index dim() const { return amp.size(); }
  /// Checks length = prod(factor_dims) and unit norm within tol.
  void validate(double tol = 1e-12) const;
};

/// Hermitian, unit-trace matrix on a tensor product of finite factors.
struct DensityMatrix {
  Matrix mat;
  std::vector<Index> factor_dims;

  Index dim() const { return mat.rows(); }
  /// Hermiticity/trace within tol, eigenvalues >= -eig_tol.
  void validate(double tol = 1e-12, double eig_tol = 1e-10) const;
};

Index pack_index(const std::vector<Index>& digits, const std::vector<Index>& dims);
std::vector<Index> unpack_index(Index idx, const std::vector<Index>& dims);

/// Kronecker product, left factor major.
Matrix tensor(const Matrix& a, const Matrix& b);
PureState tensor(const PureState& a, const PureState& b);

DensityMatrix projector(const PureState& psi);

/// Reduced density matrix on the kept factors (sorted ascending), factor
/// order preserved.
DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<int>& keep);

struct EigResult {
  Eigen::VectorXd values;  // descending
  Matrix vectors;          // columns match values
};

/// H = U diag(lambda) U*, eigenvalues descending. Throws ParameterError with
/// the asymmetry magnitude if the input is not Hermitian within herm_tol.
EigResult eig_hermitian(const Matrix& h, double herm_tol = 1e-10);

/// Applies f to the eigenvalues of a PSD matrix. Eigenvalues at or below
/// zero_threshold (relative to the largest) map to 0, giving pseudo-inverse
/// square roots etc. on the support. Eigenvalues below -1e-8 are an error.
Matrix op_function(const Matrix& psd, const std::function<double(double)>& f,
                   double zero_threshold = 1e-10);

/// (1/2) sum |eig(rho - sigma)|.
double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma);
double trace_distance(const Matrix& rho, const Matrix& sigma);

/// <psi| rho |psi>.
double fidelity_pure(const PureState& psi, const DensityMatrix& rho);

/// Embeds an operator acting on the given factors (ascending) into the full
/// space described by dims.
Matrix embed_on_factors(const Matrix& op, const std::vector<int>& targets,
                        const std::vector<Index>& dims);

PureState random_pure_state(const std::vector<Index>& dims, rng::SplitMix& gen);
Matrix random_unitary(Index dim, rng::SplitMix& gen);
/// Random full-rank density matrix (Gaussian Wishart, normalized).
DensityMatrix random_density(const std::vector<Index>& dims, rng::SplitMix& gen);

}  // namespace rqss::qlin

#endif  // RQSS_QLIN_HPP_
