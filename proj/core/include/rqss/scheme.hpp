/*
 * Copyright 2026 The rampqss developers.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE file in the root directory of this source tree.
 */

#ifndef RQSS_SCHEME_HPP_
#define RQSS_SCHEME_HPP_

#include <Eigen/Dense>
#include <cstdint>
#include <map>
#include <vector>

#include "rqss/gf.hpp"
#include "rqss/qlin.hpp"

namespace rqss::qss {

/// Parameters of a (k,L,n)-threshold ramp scheme over GF(q). Pure
/// construction: n = 2k - L, q prime, q >= n, eval points pairwise distinct.
struct SchemeParams {
  std::uint64_t q = 0;
  std::uint64_t k = 0;
  std::uint64_t L = 0;
  std::uint64_t n = 0;
  std::vector<gf::Fp> eval_points;

  /// n = 2k - L and default points x_i = i - 1.
  static SchemeParams make(std::uint64_t q, std::uint64_t k, std::uint64_t L);
  void validate() const;
};

/// The polynomial-code encoder. Column s^L of the isometry V is the uniform
/// superposition over the q^(k-L) share-basis indices obtained by evaluating
/// the degree-(k-1) polynomials whose leading L coefficients are fixed to
/// s^L. Coefficient c_i multiplies x^(k-i): the secret sits in the
/// high-order coefficients, so evaluation point 0 is a valid share point.
/// Stored sparsely as per-column support index lists.
class Scheme {
 public:
  explicit Scheme(SchemeParams params);

  const SchemeParams& params() const { return params_; }
  std::uint64_t secret_dim() const { return secret_dim_; }       // q^L
  std::uint64_t share_space_dim() const { return share_dim_; }   // q^n
  std::uint64_t coeff_count() const { return coeff_count_; }     // q^k
  std::uint64_t normalization() const { return coset_size_; }    // C = q^(k-L)

  /// Support (sorted share-basis indices) of column s^L.
  const std::vector<std::uint64_t>& column_support(std::uint64_t s_index) const;

  /// The q^(k-L) coefficient vectors with prefix s^L, lexicographic in the
  /// free coordinates.
  std::vector<gf::CoeffVector> enumerate_coset(std::uint64_t s_index) const;

  /// Dense amplitude vector of V|psi> on the n share factors.
  qlin::PureState encode(const qlin::PureState& psi) const;
  /// Sparse form: share-basis index -> amplitude (at most q^k nonzeros).
  std::map<std::uint64_t, qlin::Complex> encode_sparse(const qlin::PureState& psi) const;

  /// W_X(rho) = Tr_{N\X} V rho V*. X is a 0-based, strictly increasing,
  /// nonempty list of share indices.
  qlin::DensityMatrix reduced_state(const qlin::PureState& psi, const std::vector<int>& X) const;
  qlin::DensityMatrix reduced_state(const qlin::DensityMatrix& rho, const std::vector<int>& X) const;

  /// Kraus operators {(I_X (x) <a|) V}_a of the share channel W_X, each
  /// q^|X| x q^L.
  std::vector<qlin::Matrix> share_kraus_ops(const std::vector<int>& X) const;

  /// Exact Knill-Laflamme Gram data: G[s,t] = C <s|V*(I_X (x) |a><b|)V|t>
  /// = #{(c,d) in D(s) x D(t) : p_c(X) = p_d(X), p_c(N\X) = a, p_d(N\X) = b}.
  Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic> gram_counts(
      const std::vector<int>& X, std::uint64_t a, std::uint64_t b) const;

  // Exact combinatorial accessors used by the access and recover modules.
  std::uint64_t secret_of_coeff(std::uint64_t c_index) const { return c_index / coset_size_; }
  /// Mixed-radix label of the share values of coefficient vector c on the
  /// given (strictly increasing) subset.
  std::uint64_t subset_label(std::uint64_t c_index, const std::vector<int>& subset) const;
  std::vector<int> complement(const std::vector<int>& X) const;
  void check_subset(const std::vector<int>& X, bool allow_empty = false) const;

 private:
  SchemeParams params_;
  std::uint64_t secret_dim_, share_dim_, coeff_count_, coset_size_;
  // share_digits_[c * n + i] = p_c(x_{i+1})
  std::vector<std::uint8_t> share_digits_;
  std::vector<std::vector<std::uint64_t>> column_support_;
};

/// One nonzero amplitude of a sparse bipartite pure state; `keep` and `rest`
/// are mixed-radix labels of the two sides.
struct SparseEntry {
  std::uint64_t keep;
  std::uint64_t rest;
  qlin::Complex amp;
};

/// Nonzero spectrum of Tr_rest |psi><psi| via the Gram matrix over the rest
/// labels; never materializes the reduced matrix.
std::vector<double> reduced_spectrum(const std::vector<SparseEntry>& entries);

/// Entropy (nats) of the reduced state, from reduced_spectrum.
double reduced_entropy(const std::vector<SparseEntry>& entries);

}  // namespace rqss::qss

#endif  // RQSS_SCHEME_HPP_
