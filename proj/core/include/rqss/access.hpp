/*
 * Copyright 2026 The rampqss developers.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE file in the root directory of this source tree.
 */

#ifndef RQSS_ACCESS_HPP_
#define RQSS_ACCESS_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "rqss/scheme.hpp"

namespace rqss::access {

enum class AccessClass : int { kForbidden = 0, kIntermediate = 1, kQualified = 2 };

const char* to_string(AccessClass c);

/// Complement-label pair (a, b) whose Gram block is not a scalar multiple of
/// the identity -- disproves qualification.
struct GramWitness {
  std::uint64_t a = 0;
  std::uint64_t b = 0;
};

/// Basis-secret pair disproving the vanishing property: either
/// W_X(|s><t|) != 0 with s != t, or W_X(|s><s|) != W_X(|t><t|).
struct VanishingWitness {
  std::uint64_t s = 0;
  std::uint64_t t = 0;
  bool off_diagonal = false;
};

struct AccessReport {
  std::vector<int> subset;  // 0-based share indices
  AccessClass cls = AccessClass::kForbidden;
  double holevo_dits = 0.0;   // uniform basis ensemble
  double entropy_dits = 0.0;  // H(W_X(sigma_mu)) in dits
  std::optional<GramWitness> gram_witness;
  std::optional<VanishingWitness> vanishing_witness;
};

/// Knill-Laflamme check, exact integer counting: X is qualified iff every
/// complement-label Gram block is an integer multiple of I.
bool is_qualified(const qss::Scheme& scheme, const std::vector<int>& X,
                  GramWitness* witness = nullptr);

/// Constant-channel check on the operator basis of H, exact counting.
bool is_vanishing(const qss::Scheme& scheme, const std::vector<int>& X,
                  VanishingWitness* witness = nullptr);

/// Qualified if is_qualified, else forbidden if is_vanishing, else
/// intermediate. The empty set is forbidden by convention.
AccessClass classify(const qss::Scheme& scheme, const std::vector<int>& X);

/// Classifies all 2^n - 1 nonempty subsets, ordered by size then
/// lexicographically, with Holevo/entropy values for the uniform basis
/// ensemble attached.
std::vector<AccessReport> access_structure(const qss::Scheme& scheme);

/// Holevo information of the uniform basis ensemble through W_X, in dits.
double basis_holevo_dits(const qss::Scheme& scheme, const std::vector<int>& X);
/// H(W_X(sigma_mu)) in dits, sigma_mu = I/q^L.
double mixed_entropy_dits(const qss::Scheme& scheme, const std::vector<int>& X);

/// True iff some forbidden Y (the empty set included) makes X union Y
/// qualified; intersecting Y allowed.
bool is_significant(const std::vector<AccessReport>& access, std::uint64_t n,
                    const std::vector<int>& X);

std::vector<int> mask_to_subset(std::uint64_t mask, std::uint64_t n);
std::uint64_t subset_to_mask(const std::vector<int>& subset);

}  // namespace rqss::access

#endif  // RQSS_ACCESS_HPP_
