/*
 * Copyright 2026 The rampqss developers.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE file in the root directory of this source tree.
 */

#include "rqss/qlin.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace rqss::qlin {

namespace {

Index dims_product(const std::vector<Index>& dims) {
  Index p = 1;
  for (Index d : dims) p *= d;
  return p;
}

void check_keep(const std::vector<int>& keep, std::size_t n_factors) {
  if (keep.empty()) throw ParameterError("partial_trace: empty keep set");
  for (std::size_t i = 0; i < keep.size(); ++i) {
    if (keep[i] < 0 || static_cast<std::size_t>(keep[i]) >= n_factors) {
      throw ParameterError("factor index out of range: " + std::to_string(keep[i]));
    }
    if (i > 0 && keep[i] <= keep[i - 1]) {
      throw ParameterError("factor indices must be strictly increasing");
    }
  }
}

}  // namespace

void PureState::validate(double tol) const {
  if (amp.size() != dims_product(factor_dims)) {
    throw ParameterError("pure state length does not match factor dims");
  }
  if (std::abs(amp.norm() - 1.0) > tol) {
    throw ParameterError("pure state is not normalized: |norm-1| = " +
                         std::to_string(std::abs(amp.norm() - 1.0)));
  }
}

void DensityMatrix::validate(double tol, double eig_tol) const {
  if (mat.rows() != mat.cols() || mat.rows() != dims_product(factor_dims)) {
    throw ParameterError("density matrix shape does not match factor dims");
  }
  double herm = (mat - mat.adjoint()).cwiseAbs().maxCoeff();
  if (herm > tol) throw ParameterError("not Hermitian, deviation " + std::to_string(herm));
  double tr_err = std::abs(mat.trace().real() - 1.0) + std::abs(mat.trace().imag());
  if (tr_err > tol) throw ParameterError("trace != 1, deviation " + std::to_string(tr_err));
  Eigen::SelfAdjointEigenSolver<Matrix> es(mat, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -eig_tol) {
    throw ParameterError("negative eigenvalue " + std::to_string(es.eigenvalues().minCoeff()));
  }
}

Index pack_index(const std::vector<Index>& digits, const std::vector<Index>& dims) {
  Index idx = 0;
  for (std::size_t i = 0; i < dims.size(); ++i) idx = idx * dims[i] + digits[i];
  return idx;
}

std::vector<Index> unpack_index(Index idx, const std::vector<Index>& dims) {
  std::vector<Index> digits(dims.size());
  for (std::size_t i = dims.size(); i-- > 0;) {
    digits[i] = idx % dims[i];
    idx /= dims[i];
  }
  return digits;
}

Matrix tensor(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i) {
    for (Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

PureState tensor(const PureState& a, const PureState& b) {
  PureState out;
  out.amp = Vector(a.dim() * b.dim());
  for (Index i = 0; i < a.dim(); ++i) out.amp.segment(i * b.dim(), b.dim()) = a.amp(i) * b.amp;
  out.factor_dims = a.factor_dims;
  out.factor_dims.insert(out.factor_dims.end(), b.factor_dims.begin(), b.factor_dims.end());
  return out;
}

DensityMatrix projector(const PureState& psi) {
  return DensityMatrix{psi.amp * psi.amp.adjoint(), psi.factor_dims};
}

DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<int>& keep) {
  const auto& dims = rho.factor_dims;
  check_keep(keep, dims.size());

  std::vector<int> traced;
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (!std::binary_search(keep.begin(), keep.end(), static_cast<int>(i))) {
      traced.push_back(static_cast<int>(i));
    }
  }

  std::vector<Index> keep_dims, traced_dims;
  for (int i : keep) keep_dims.push_back(dims[i]);
  for (int i : traced) traced_dims.push_back(dims[i]);
  const Index dk = dims_product(keep_dims);
  const Index dt = dims_product(traced_dims);

  // Strides of each factor in the full index.
  std::vector<Index> stride(dims.size(), 1);
  for (std::size_t i = dims.size() - 1; i-- > 0;) stride[i] = stride[i + 1] * dims[i + 1];

  auto full_index = [&](Index ik, Index it) {
    Index idx = 0;
    auto kd = unpack_index(ik, keep_dims);
    auto td = unpack_index(it, traced_dims);
    for (std::size_t i = 0; i < keep.size(); ++i) idx += kd[i] * stride[keep[i]];
    for (std::size_t i = 0; i < traced.size(); ++i) idx += td[i] * stride[traced[i]];
    return idx;
  };

  Matrix out = Matrix::Zero(dk, dk);
  for (Index ik = 0; ik < dk; ++ik) {
    for (Index jk = 0; jk < dk; ++jk) {
      Complex acc = 0;
      for (Index it = 0; it < dt; ++it) acc += rho.mat(full_index(ik, it), full_index(jk, it));
      out(ik, jk) = acc;
    }
  }
  return DensityMatrix{std::move(out), std::move(keep_dims)};
}

EigResult eig_hermitian(const Matrix& h, double herm_tol) {
  if (h.rows() != h.cols()) throw ParameterError("eig_hermitian: not square");
  double asym = (h - h.adjoint()).cwiseAbs().maxCoeff();
  if (asym > herm_tol) {
    throw ParameterError("eig_hermitian: input not Hermitian, asymmetry " + std::to_string(asym));
  }
  Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (h + h.adjoint()));
  EigResult res;
  res.values = es.eigenvalues().reverse();
  res.vectors = es.eigenvectors().rowwise().reverse();
  return res;
}

Matrix op_function(const Matrix& psd, const std::function<double(double)>& f,
                   double zero_threshold) {
  EigResult eig = eig_hermitian(psd);
  double top = eig.values.size() > 0 ? eig.values(0) : 0.0;
  if (eig.values.size() > 0 && eig.values.minCoeff() < -1e-8) {
    throw ParameterError("op_function: input has negative eigenvalue " +
                         std::to_string(eig.values.minCoeff()));
  }
  double cut = zero_threshold * std::max(top, 0.0);
  Eigen::VectorXd mapped(eig.values.size());
  for (Index i = 0; i < eig.values.size(); ++i) {
    mapped(i) = eig.values(i) > cut ? f(eig.values(i)) : 0.0;
  }
  return eig.vectors * mapped.asDiagonal() * eig.vectors.adjoint();
}

double trace_distance(const Matrix& rho, const Matrix& sigma) {
  if (rho.rows() != sigma.rows() || rho.cols() != sigma.cols()) {
    throw ParameterError("trace_distance: dimension mismatch");
  }
  EigResult eig = eig_hermitian(rho - sigma, 1e-8);
  return 0.5 * eig.values.cwiseAbs().sum();
}

double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma) {
  return trace_distance(rho.mat, sigma.mat);
}

double fidelity_pure(const PureState& psi, const DensityMatrix& rho) {
  return (psi.amp.adjoint() * rho.mat * psi.amp)(0).real();
}

Matrix embed_on_factors(const Matrix& op, const std::vector<int>& targets,
                        const std::vector<Index>& dims) {
  check_keep(targets, dims.size());
  std::vector<int> rest;
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (!std::binary_search(targets.begin(), targets.end(), static_cast<int>(i))) {
      rest.push_back(static_cast<int>(i));
    }
  }
  std::vector<Index> tdims, rdims;
  for (int i : targets) tdims.push_back(dims[i]);
  for (int i : rest) rdims.push_back(dims[i]);
  const Index dt = dims_product(tdims);
  const Index dr = dims_product(rdims);
  if (op.rows() != dt || op.cols() != dt) {
    throw ParameterError("embed_on_factors: operator dimension mismatch");
  }

  std::vector<Index> stride(dims.size(), 1);
  for (std::size_t i = dims.size() - 1; i-- > 0;) stride[i] = stride[i + 1] * dims[i + 1];
  auto full_index = [&](Index it, Index ir) {
    Index idx = 0;
    auto td = unpack_index(it, tdims);
    auto rd = unpack_index(ir, rdims);
    for (std::size_t i = 0; i < targets.size(); ++i) idx += td[i] * stride[targets[i]];
    for (std::size_t i = 0; i < rest.size(); ++i) idx += rd[i] * stride[rest[i]];
    return idx;
  };

  Matrix out = Matrix::Zero(dims_product(dims), dims_product(dims));
  for (Index it = 0; it < dt; ++it) {
    for (Index jt = 0; jt < dt; ++jt) {
      if (op(it, jt) == Complex(0)) continue;
      for (Index ir = 0; ir < dr; ++ir) out(full_index(it, ir), full_index(jt, ir)) = op(it, jt);
    }
  }
  return out;
}

PureState random_pure_state(const std::vector<Index>& dims, rng::SplitMix& gen) {
  const Index d = dims_product(dims);
  Vector v(d);
  for (Index i = 0; i < d; ++i) v(i) = Complex(gen.gaussian(), gen.gaussian());
  v.normalize();
  return PureState{std::move(v), dims};
}

Matrix random_unitary(Index dim, rng::SplitMix& gen) {
  Matrix g(dim, dim);
  for (Index i = 0; i < dim; ++i) {
    for (Index j = 0; j < dim; ++j) g(i, j) = Complex(gen.gaussian(), gen.gaussian());
  }
  // Modified Gram-Schmidt; deterministic given the generator stream.
  for (Index j = 0; j < dim; ++j) {
    for (Index l = 0; l < j; ++l) g.col(j) -= g.col(l).dot(g.col(j)) * g.col(l);
    g.col(j).normalize();
  }
  return g;
}

DensityMatrix random_density(const std::vector<Index>& dims, rng::SplitMix& gen) {
  const Index d = dims_product(dims);
  Matrix g(d, d);
  for (Index i = 0; i < d; ++i) {
    for (Index j = 0; j < d; ++j) g(i, j) = Complex(gen.gaussian(), gen.gaussian());
  }
  Matrix w = g * g.adjoint();
  w /= w.trace().real();
  return DensityMatrix{std::move(w), dims};
}

}  // namespace rqss::qlin
