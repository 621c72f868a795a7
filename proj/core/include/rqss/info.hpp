/*
 * Copyright 2026 The rampqss developers.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE file in the root directory of this source tree.
 */

#ifndef RQSS_INFO_HPP_
#define RQSS_INFO_HPP_

#include <cstdint>
#include <functional>
#include <vector>

#include "rqss/qlin.hpp"

namespace rqss::info {

/// Entropy-like quantity. Internally nats; presentation helpers for bits and
/// base-q "dits". Relative entropy may be +infinity (tagged, never a float
/// overflow).
struct EntropyValue {
  double nats = 0.0;
  bool infinite = false;

  static EntropyValue infinity() { return EntropyValue{0.0, true}; }
  double bits() const;
  double dits(std::uint64_t q) const;
};

/// Finite ensemble of density matrices with weights summing to 1.
struct Ensemble {
  struct Member {
    double weight;
    qlin::DensityMatrix state;
  };
  std::vector<Member> members;

  void validate(double tol = 1e-12) const;
  qlin::DensityMatrix average() const;
};

using Channel = std::function<qlin::DensityMatrix(const qlin::DensityMatrix&)>;

/// Von Neumann entropy H(rho) = -Tr rho log rho, natural log.
EntropyValue vn_entropy(const qlin::DensityMatrix& rho);
EntropyValue vn_entropy(const qlin::Matrix& rho);

/// D(rho||sigma) = Tr rho (log rho - log sigma); +infinity when the support
/// of rho is not contained in the support of sigma.
EntropyValue rel_entropy(const qlin::DensityMatrix& rho, const qlin::DensityMatrix& sigma);

/// I(mu;E) = H(E(sigma_mu)) - sum_i w_i H(E(rho_i)).
EntropyValue holevo(const Ensemble& mu, const Channel& channel);

/// H_rho(W_X|W_Y) = H(rho_{X union Y}) - H(rho_Y) for disjoint factor sets.
EntropyValue cond_entropy(const qlin::DensityMatrix& rho_global, const std::vector<int>& x,
                          const std::vector<int>& y);

}  // namespace rqss::info

#endif  // RQSS_INFO_HPP_
