/*
 * Copyright 2026 The rampqss developers.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE file in the root directory of this source tree.
 */

#ifndef RQSS_VERIFY_HPP_
#define RQSS_VERIFY_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "rqss/access.hpp"
#include "rqss/scheme.hpp"

namespace rqss::verify {

/// One property check: `value` is the measured quantity (a maximum error or
/// an exact violation count) and `bound` the limit it must not exceed.
struct CheckResult {
  std::string name;
  double value = 0.0;
  double bound = 0.0;
  bool pass = false;
};

struct VerifyOptions {
  std::uint64_t seed = 1;
  double tol = 1e-8;
  int random_secrets = 20;       // decoder / Petz round trips per subset
  int ensembles = 50;            // random ensembles for the entropy bound
  int divergence_triples = 200;  // (rho, sigma, channel) monotonicity triples
  int adversaries = 20;          // tamper channels per qualified set
  // Tamper checks build the dense global state; skipped above this dim.
  std::uint64_t tamper_dim_limit = 1024;
};

/// Runs every structural and numerical property check applicable to the
/// scheme. Deterministic for a fixed seed.
std::vector<CheckResult> run_checks(const qss::Scheme& scheme, const VerifyOptions& opts);

bool all_pass(const std::vector<CheckResult>& results);

/// H(W_X(rho)) in nats for an arbitrary secret-space density matrix,
/// computed through the sparse encoder (never materializes H_N).
double reduced_entropy_nats(const qss::Scheme& scheme, const qlin::DensityMatrix& rho,
                            const std::vector<int>& X);

}  // namespace rqss::verify

#endif  // RQSS_VERIFY_HPP_
