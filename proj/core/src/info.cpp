/*
 * Copyright 2026 The rampqss developers.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE file in the root directory of this source tree.
 */

#include "rqss/info.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace rqss::info {

namespace {
constexpr double kRelZeroThreshold = 1e-10;  // relative to the top eigenvalue
}

double EntropyValue::bits() const {
  return infinite ? std::numeric_limits<double>::infinity() : nats / std::log(2.0);
}

double EntropyValue::dits(std::uint64_t q) const {
  return infinite ? std::numeric_limits<double>::infinity()
                  : nats / std::log(static_cast<double>(q));
}

void Ensemble::validate(double tol) const {
  if (members.empty()) throw ParameterError("ensemble: no members");
  double wsum = 0.0;
  for (const auto& m : members) {
    if (m.weight <= 0.0 || m.weight > 1.0) throw ParameterError("ensemble: weight out of (0,1]");
    if (m.state.dim() != members.front().state.dim()) {
      throw ParameterError("ensemble: mixed state dimensions");
    }
    wsum += m.weight;
  }
  if (std::abs(wsum - 1.0) > tol) throw ParameterError("ensemble: weights do not sum to 1");
}

qlin::DensityMatrix Ensemble::average() const {
  qlin::Matrix acc = qlin::Matrix::Zero(members.front().state.dim(), members.front().state.dim());
  for (const auto& m : members) acc += m.weight * m.state.mat;
  return qlin::DensityMatrix{std::move(acc), members.front().state.factor_dims};
}

EntropyValue vn_entropy(const qlin::Matrix& rho) {
  qlin::EigResult eig = qlin::eig_hermitian(rho);
  double top = eig.values.size() > 0 ? std::max(eig.values(0), 0.0) : 0.0;
  double cut = kRelZeroThreshold * top;
  double h = 0.0;
  for (Eigen::Index i = 0; i < eig.values.size(); ++i) {
    double lam = eig.values(i);
    if (lam > cut) h -= lam * std::log(lam);
  }
  return EntropyValue{h, false};
}

EntropyValue vn_entropy(const qlin::DensityMatrix& rho) { return vn_entropy(rho.mat); }

EntropyValue rel_entropy(const qlin::DensityMatrix& rho, const qlin::DensityMatrix& sigma) {
  if (rho.dim() != sigma.dim()) throw ParameterError("rel_entropy: dimension mismatch");
  qlin::EigResult es = qlin::eig_hermitian(sigma.mat);
  double cut_s = kRelZeroThreshold * std::max(es.values(0), 0.0);

  // Support check: Tr[rho P_ker(sigma)].
  double leak = 0.0;
  for (Eigen::Index j = 0; j < es.values.size(); ++j) {
    if (es.values(j) <= cut_s) {
      leak += (es.vectors.col(j).adjoint() * rho.mat * es.vectors.col(j))(0).real();
    }
  }
  if (leak > 1e-10) return EntropyValue::infinity();

  // Tr rho log rho
  qlin::EigResult er = qlin::eig_hermitian(rho.mat);
  double cut_r = kRelZeroThreshold * std::max(er.values(0), 0.0);
  double tr_rho_log_rho = 0.0;
  for (Eigen::Index i = 0; i < er.values.size(); ++i) {
    if (er.values(i) > cut_r) tr_rho_log_rho += er.values(i) * std::log(er.values(i));
  }
  // Tr rho log sigma, on the support of sigma
  double tr_rho_log_sigma = 0.0;
  for (Eigen::Index j = 0; j < es.values.size(); ++j) {
    if (es.values(j) > cut_s) {
      double overlap = (es.vectors.col(j).adjoint() * rho.mat * es.vectors.col(j))(0).real();
      tr_rho_log_sigma += overlap * std::log(es.values(j));
    }
  }
  return EntropyValue{tr_rho_log_rho - tr_rho_log_sigma, false};
}

EntropyValue holevo(const Ensemble& mu, const Channel& channel) {
  mu.validate();
  qlin::DensityMatrix out_avg = channel(mu.average());
  double mean_h = 0.0;
  for (const auto& m : mu.members) {
    qlin::DensityMatrix out = channel(m.state);
    if (out.dim() != out_avg.dim()) throw ParameterError("holevo: channel output dim varies");
    mean_h += m.weight * vn_entropy(out).nats;
  }
  return EntropyValue{vn_entropy(out_avg).nats - mean_h, false};
}

EntropyValue cond_entropy(const qlin::DensityMatrix& rho_global, const std::vector<int>& x,
                          const std::vector<int>& y) {
  for (int i : x) {
    if (std::find(y.begin(), y.end(), i) != y.end()) {
      throw ParameterError("cond_entropy: X and Y overlap at factor " + std::to_string(i));
    }
  }
  std::vector<int> xy = x;
  xy.insert(xy.end(), y.begin(), y.end());
  std::sort(xy.begin(), xy.end());
  double h_xy = vn_entropy(partial_trace(rho_global, xy)).nats;
  std::vector<int> ys = y;
  std::sort(ys.begin(), ys.end());
  double h_y = ys.empty() ? 0.0 : vn_entropy(partial_trace(rho_global, ys)).nats;
  return EntropyValue{h_xy - h_y, false};
}

}  // namespace rqss::info
