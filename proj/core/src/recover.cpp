/*
 * Copyright 2026 The rampqss developers.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE file in the root directory of this source tree.
 */

#include "rqss/recover.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "rqss/access.hpp"
#include "rqss/info.hpp"

namespace rqss::recover {

namespace {

std::uint64_t ipow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t acc = 1;
  for (std::uint64_t i = 0; i < exp; ++i) acc *= base;
  return acc;
}

}  // namespace

void KrausChannel::validate(double tol) const {
  if (ops.empty()) throw ParameterError("kraus channel: no operators");
  qlin::Matrix acc = qlin::Matrix::Zero(in_dim(), in_dim());
  for (const auto& e : ops) {
    if (e.cols() != in_dim() || e.rows() != out_dim()) {
      throw ParameterError("kraus channel: inconsistent operator shapes");
    }
    acc += e.adjoint() * e;
  }
  double err = (acc - qlin::Matrix::Identity(in_dim(), in_dim())).cwiseAbs().maxCoeff();
  if (err > tol) {
    throw ParameterError("kraus channel: not trace preserving, deviation " + std::to_string(err));
  }
}

qlin::Matrix KrausChannel::apply(const qlin::Matrix& rho) const {
  if (rho.rows() != in_dim()) throw ParameterError("kraus apply: dimension mismatch");
  qlin::Matrix acc = qlin::Matrix::Zero(out_dim(), out_dim());
  for (const auto& e : ops) acc += e * rho * e.adjoint();
  return acc;
}

qlin::DensityMatrix KrausChannel::apply(const qlin::DensityMatrix& rho,
                                        const std::vector<qlin::Index>& out_dims) const {
  return qlin::DensityMatrix{apply(rho.mat), out_dims};
}

qlin::Matrix KrausChannel::dual_apply(const qlin::Matrix& y) const {
  if (y.rows() != out_dim()) throw ParameterError("kraus dual: dimension mismatch");
  qlin::Matrix acc = qlin::Matrix::Zero(in_dim(), in_dim());
  for (const auto& e : ops) acc += e.adjoint() * y * e;
  return acc;
}

KrausChannel KrausChannel::identity(qlin::Index dim) {
  return KrausChannel{{qlin::Matrix::Identity(dim, dim)}};
}

KrausChannel KrausChannel::depolarizing(qlin::Index dim) {
  // rho -> sum_ij |i><j| rho |j><i| / dim = Tr(rho) I/dim
  KrausChannel ch;
  const double w = 1.0 / std::sqrt(static_cast<double>(dim));
  for (qlin::Index i = 0; i < dim; ++i) {
    for (qlin::Index j = 0; j < dim; ++j) {
      qlin::Matrix e = qlin::Matrix::Zero(dim, dim);
      e(i, j) = w;
      ch.ops.push_back(std::move(e));
    }
  }
  return ch;
}

KrausChannel KrausChannel::dephasing(qlin::Index dim) {
  KrausChannel ch;
  for (qlin::Index i = 0; i < dim; ++i) {
    qlin::Matrix e = qlin::Matrix::Zero(dim, dim);
    e(i, i) = 1.0;
    ch.ops.push_back(std::move(e));
  }
  return ch;
}

KrausChannel KrausChannel::unitary(const qlin::Matrix& u) { return KrausChannel{{u}}; }

KrausChannel share_channel(const qss::Scheme& scheme, const std::vector<int>& X) {
  return KrausChannel{scheme.share_kraus_ops(X)};
}

PermutationDecoder build_decoder(const qss::Scheme& scheme, const std::vector<int>& X) {
  const auto& p = scheme.params();
  if (X.size() != p.k) {
    throw ParameterError("build_decoder: need exactly k = " + std::to_string(p.k) + " shares");
  }
  scheme.check_subset(X);
  if (!access::is_qualified(scheme, X)) {
    throw ParameterError("build_decoder: subset is not qualified");
  }

  // Step 1 inverts the evaluation map on X: share labels y = c * M where
  // M[i][j] = x_j^(k-i) (coefficient c_i multiplies x^(k-i)).
  std::vector<gf::Fp> points_x, points_rest;
  for (int i : X) points_x.push_back(p.eval_points[i]);
  for (int i : scheme.complement(X)) points_rest.push_back(p.eval_points[i]);

  gf::FpMatrix m(p.k, p.k, p.q);
  for (std::size_t j = 0; j < p.k; ++j) {
    for (std::uint64_t i = 0; i < p.k; ++i) {
      m.set(i, j, points_x[j].pow(p.k - 1 - i).value());
    }
  }
  gf::FpMatrix m_inv = m.inverse();  // distinct points: always invertible

  // Step 2 maps c to (s^L, p_c(N\X)): identity on the first L coordinates,
  // evaluation at the complement points on the rest. The bottom-right block
  // is a genuine Vandermonde (exponents 0..k-L-1), invertible for any
  // distinct points, so the combined map is a bijection.
  gf::FpMatrix b(p.k, p.k, p.q);
  for (std::uint64_t i = 0; i < p.L; ++i) b.set(i, i, 1);
  for (std::size_t j = 0; j < points_rest.size(); ++j) {
    for (std::uint64_t i = 0; i < p.k; ++i) {
      b.set(i, p.L + j, points_rest[j].pow(p.k - 1 - i).value());
    }
  }

  gf::FpMatrix t = m_inv * b;

  PermutationDecoder dec;
  dec.subset = X;
  dec.q = p.q;
  dec.k = p.k;
  dec.L = p.L;
  const std::uint64_t dim = ipow(p.q, p.k);
  dec.perm.resize(dim);
  std::vector<bool> hit(dim, false);
  std::vector<std::uint64_t> digits(p.k);
  for (std::uint64_t y = 0; y < dim; ++y) {
    std::uint64_t rem = y;
    for (std::uint64_t i = p.k; i-- > 0;) {
      digits[i] = rem % p.q;
      rem /= p.q;
    }
    auto w = t.apply_row(digits);
    std::uint64_t out = 0;
    for (std::uint64_t v : w) out = out * p.q + v;
    dec.perm[y] = static_cast<std::uint32_t>(out);
    if (hit[out]) throw ParameterError("build_decoder: permutation not bijective (internal)");
    hit[out] = true;
  }
  return dec;
}

qlin::DensityMatrix PermutationDecoder::decode(const qlin::DensityMatrix& rho_x) const {
  const std::uint64_t dim = perm.size();
  if (static_cast<std::uint64_t>(rho_x.dim()) != dim) {
    throw ParameterError("decode: state dimension must be q^k");
  }
  qlin::Matrix permuted(dim, dim);
  for (std::uint64_t i = 0; i < dim; ++i) {
    for (std::uint64_t j = 0; j < dim; ++j) permuted(perm[i], perm[j]) = rho_x.mat(i, j);
  }
  qlin::DensityMatrix full{std::move(permuted),
                           std::vector<qlin::Index>(k, static_cast<qlin::Index>(q))};
  if (L == k) return full;
  std::vector<int> keep;
  for (std::uint64_t i = 0; i < L; ++i) keep.push_back(static_cast<int>(i));
  return qlin::partial_trace(full, keep);
}

bool PermutationDecoder::decode_basis_exact(const qss::Scheme& scheme,
                                            std::uint64_t s_index) const {
  const std::uint64_t junk_dim = ipow(q, k - L);
  for (std::uint64_t c = s_index * scheme.normalization();
       c < (s_index + 1) * scheme.normalization(); ++c) {
    std::uint64_t label = scheme.subset_label(c, subset);
    if (perm[label] / junk_dim != s_index) return false;
  }
  return true;
}

qlin::DensityMatrix decode_any(const qss::Scheme& scheme, const std::vector<int>& X,
                               const qlin::DensityMatrix& rho_x) {
  const auto& p = scheme.params();
  if (X.size() < p.k) throw ParameterError("decode_any: fewer than k shares");
  if (X.size() == p.k) return build_decoder(scheme, X).decode(rho_x);
  // Lexicographically smallest size-k sub-subset = first k positions of X.
  std::vector<int> sub(X.begin(), X.begin() + p.k);
  std::vector<int> keep_positions;
  for (std::uint64_t i = 0; i < p.k; ++i) keep_positions.push_back(static_cast<int>(i));
  qlin::DensityMatrix rho_sub = qlin::partial_trace(rho_x, keep_positions);
  return build_decoder(scheme, sub).decode(rho_sub);
}

PetzMap::PetzMap(KrausChannel channel, const qlin::DensityMatrix& sigma)
    : channel_(std::move(channel)) {
  if (sigma.dim() != channel_.in_dim()) {
    throw ParameterError("petz: sigma dimension must match channel input");
  }
  auto sqrt_fn = [](double x) { return std::sqrt(x); };
  auto inv_sqrt_fn = [](double x) { return 1.0 / std::sqrt(x); };
  sigma_sqrt_ = qlin::op_function(sigma.mat, sqrt_fn);
  esigma_inv_sqrt_ = qlin::op_function(channel_.apply(sigma.mat), inv_sqrt_fn);
}

qlin::Matrix PetzMap::apply(const qlin::Matrix& tau) const {
  return sigma_sqrt_ * channel_.dual_apply(esigma_inv_sqrt_ * tau * esigma_inv_sqrt_) * sigma_sqrt_;
}

qlin::DensityMatrix PetzMap::apply(const qlin::DensityMatrix& tau,
                                   const std::vector<qlin::Index>& out_dims) const {
  return qlin::DensityMatrix{apply(tau.mat), out_dims};
}

DivergenceReport check_divergence_equality(const qlin::DensityMatrix& rho,
                                           const qlin::DensityMatrix& sigma,
                                           const KrausChannel& channel, double tol) {
  if (rho.dim() != sigma.dim()) throw ParameterError("divergence check: dimension mismatch");
  DivergenceReport rep;

  info::EntropyValue d_in = info::rel_entropy(rho, sigma);
  std::vector<qlin::Index> out_dims{channel.out_dim()};
  qlin::DensityMatrix e_rho = channel.apply(rho, out_dims);
  qlin::DensityMatrix e_sigma = channel.apply(sigma, out_dims);
  info::EntropyValue d_out = info::rel_entropy(e_rho, e_sigma);
  if (d_in.infinite || d_out.infinite) {
    rep.indeterminate = true;
  } else {
    rep.gap = d_in.nats - d_out.nats;
  }

  PetzMap petz(channel, sigma);
  rep.recovery_error = qlin::trace_distance(petz.apply(e_rho.mat), rho.mat);
  rep.gap_ok = !rep.indeterminate && rep.gap <= tol;
  rep.recovery_ok = rep.recovery_error <= tol;
  return rep;
}

TamperReport tamper_check(const qss::Scheme& scheme, const std::vector<int>& X,
                          const KrausChannel& adversary_on_complement,
                          const qlin::DensityMatrix& secret) {
  const auto& p = scheme.params();
  if (scheme.share_space_dim() > 4096) {
    throw ParameterError("tamper_check: q^n too large for the dense global state");
  }
  if (!access::is_qualified(scheme, X)) {
    throw ParameterError("tamper_check: subset is not qualified");
  }
  const auto comp = scheme.complement(X);
  std::vector<qlin::Index> share_dims(p.n, static_cast<qlin::Index>(p.q));

  // Global encoded state via the isometry columns.
  qlin::Matrix v = qlin::Matrix::Zero(scheme.share_space_dim(), scheme.secret_dim());
  const double inv_sqrt_c = 1.0 / std::sqrt(static_cast<double>(scheme.normalization()));
  for (std::uint64_t s = 0; s < scheme.secret_dim(); ++s) {
    for (std::uint64_t idx : scheme.column_support(s)) v(idx, s) = inv_sqrt_c;
  }
  qlin::Matrix global = v * secret.mat * v.adjoint();

  if (!comp.empty()) {
    qlin::Matrix tampered = qlin::Matrix::Zero(global.rows(), global.cols());
    for (const auto& e : adversary_on_complement.ops) {
      qlin::Matrix full = qlin::embed_on_factors(e, comp, share_dims);
      tampered += full * global * full.adjoint();
    }
    global = std::move(tampered);
  }

  qlin::DensityMatrix rho_x =
      qlin::partial_trace(qlin::DensityMatrix{std::move(global), share_dims}, X);
  qlin::DensityMatrix decoded = decode_any(scheme, X, rho_x);
  return TamperReport{qlin::trace_distance(decoded.mat, secret.mat)};
}

}  // namespace rqss::recover
