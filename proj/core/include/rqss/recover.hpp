/*
 * Copyright 2026 The rampqss developers.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE file in the root directory of this source tree.
 */

#ifndef RQSS_RECOVER_HPP_
#define RQSS_RECOVER_HPP_

#include <cstdint>
#include <vector>

#include "rqss/qlin.hpp"
#include "rqss/scheme.hpp"

namespace rqss::recover {

/// A quantum operation as a finite list of Kraus operators with common
/// input/output dimensions.
struct KrausChannel {
  std::vector<qlin::Matrix> ops;

  qlin::Index in_dim() const { return ops.empty() ? 0 : ops.front().cols(); }
  qlin::Index out_dim() const { return ops.empty() ? 0 : ops.front().rows(); }

  /// sum_a E_a* E_a = I within tol.
  void validate(double tol = 1e-10) const;

  qlin::Matrix apply(const qlin::Matrix& rho) const;
  qlin::DensityMatrix apply(const qlin::DensityMatrix& rho,
                            const std::vector<qlin::Index>& out_dims) const;
  /// Dual map E*(Y) = sum_a E_a* Y E_a.
  qlin::Matrix dual_apply(const qlin::Matrix& y) const;

  static KrausChannel identity(qlin::Index dim);
  /// The constant channel rho -> I/dim (complete depolarization).
  static KrausChannel depolarizing(qlin::Index dim);
  /// Complete dephasing in the computational basis.
  static KrausChannel dephasing(qlin::Index dim);
  static KrausChannel unitary(const qlin::Matrix& u);
};

/// The share channel W_X of a scheme, as a KrausChannel.
KrausChannel share_channel(const qss::Scheme& scheme, const std::vector<int>& X);

/// The two-step reconstruction for a qualified set of exactly k shares: a
/// basis-label permutation on F^k moving the secret to the first L factors.
struct PermutationDecoder {
  std::vector<int> subset;           // size k, strictly increasing
  std::uint64_t q = 0, k = 0, L = 0;
  std::vector<std::uint32_t> perm;   // bijection on [0, q^k)

  /// Permute basis labels, then trace out the junk factors L+1..k.
  qlin::DensityMatrix decode(const qlin::DensityMatrix& rho_x) const;

  /// Exact integer path: true iff every support label of basis secret s is
  /// permuted onto a label whose first L digits equal s.
  bool decode_basis_exact(const qss::Scheme& scheme, std::uint64_t s_index) const;
};

/// Builds the decoder for a qualified subset with |X| = k (throws
/// ParameterError otherwise).
PermutationDecoder build_decoder(const qss::Scheme& scheme, const std::vector<int>& X);

/// Decode from any qualified X (|X| >= k) via the lexicographically smallest
/// size-k sub-subset. rho_x is the reduced state on X.
qlin::DensityMatrix decode_any(const qss::Scheme& scheme, const std::vector<int>& X,
                               const qlin::DensityMatrix& rho_x);

/// The canonical reverse operation of a channel for a reference state sigma:
/// tau -> sigma^(1/2) E*(E(sigma)^(-1/2) tau E(sigma)^(-1/2)) sigma^(1/2),
/// with pseudo-inverse square roots on the support.
class PetzMap {
 public:
  PetzMap(KrausChannel channel, const qlin::DensityMatrix& sigma);

  qlin::Matrix apply(const qlin::Matrix& tau) const;
  qlin::DensityMatrix apply(const qlin::DensityMatrix& tau,
                            const std::vector<qlin::Index>& out_dims) const;

 private:
  KrausChannel channel_;
  qlin::Matrix sigma_sqrt_;
  qlin::Matrix esigma_inv_sqrt_;
};

inline PetzMap petz_map(KrausChannel channel, const qlin::DensityMatrix& sigma) {
  return PetzMap(std::move(channel), sigma);
}

struct DivergenceReport {
  double gap = 0.0;             // D(rho||sigma) - D(E(rho)||E(sigma))
  double recovery_error = 0.0;  // trace distance of Petz recovery
  bool gap_ok = false;
  bool recovery_ok = false;
  bool indeterminate = false;   // an infinite divergence appeared
};

/// Checks the divergence-equality/recovery equivalence on one triple.
DivergenceReport check_divergence_equality(const qlin::DensityMatrix& rho,
                                           const qlin::DensityMatrix& sigma,
                                           const KrausChannel& channel, double tol = 1e-8);

struct TamperReport {
  double recovery_error = 0.0;  // trace distance decoded vs original secret
};

/// Applies an adversary channel on the complement factors of the encoded
/// state, then decodes from the qualified subset X. Requires q^n small
/// enough to hold the global density matrix (guarded).
TamperReport tamper_check(const qss::Scheme& scheme, const std::vector<int>& X,
                          const KrausChannel& adversary_on_complement,
                          const qlin::DensityMatrix& secret);

}  // namespace rqss::recover

#endif  // RQSS_RECOVER_HPP_
