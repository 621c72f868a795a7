/*
 * Copyright 2026 The rampqss developers.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE file in the root directory of this source tree.
 */

#include "rqss/scheme.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

namespace rqss::qss {

namespace {

std::uint64_t ipow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t acc = 1;
  for (std::uint64_t i = 0; i < exp; ++i) acc *= base;
  return acc;
}

}  // namespace

SchemeParams SchemeParams::make(std::uint64_t q, std::uint64_t k, std::uint64_t L) {
  SchemeParams p;
  p.q = q;
  p.k = k;
  p.L = L;
  p.n = 2 * k - L;
  for (std::uint64_t i = 0; i < p.n; ++i) p.eval_points.emplace_back(i, q);
  p.validate();
  return p;
}

void SchemeParams::validate() const {
  if (!gf::is_prime(q)) throw ParameterError("scheme: q must be prime, got " + std::to_string(q));
  if (L < 1 || L > k) throw ParameterError("scheme: requires 1 <= L <= k");
  if (n != 2 * k - L) {
    throw ParameterError("scheme: pure construction requires n = 2k - L, got n = " +
                         std::to_string(n) + " with 2k - L = " + std::to_string(2 * k - L));
  }
  if (q < n) throw ParameterError("scheme: requires q >= n");
  if (eval_points.size() != n) throw ParameterError("scheme: need exactly n evaluation points");
  std::set<std::uint64_t> seen;
  for (const auto& x : eval_points) {
    if (x.modulus() != q) throw ParameterError("scheme: eval point modulus differs from q");
    if (!seen.insert(x.value()).second) {
      throw ParameterError("scheme: duplicate evaluation point " + std::to_string(x.value()));
    }
  }
}

Scheme::Scheme(SchemeParams params) : params_(std::move(params)) {
  params_.validate();
  const std::uint64_t q = params_.q, k = params_.k, L = params_.L, n = params_.n;
  secret_dim_ = ipow(q, L);
  share_dim_ = ipow(q, n);
  coeff_count_ = ipow(q, k);
  coset_size_ = ipow(q, k - L);

  // Coefficient index is factor-major in (c_1, ..., c_k), so the coset
  // D(s^L) is the contiguous block [s * C, (s+1) * C).
  share_digits_.resize(coeff_count_ * n);
  std::vector<std::uint64_t> digits(k, 0);
  for (std::uint64_t c = 0; c < coeff_count_; ++c) {
    std::uint64_t rem = c;
    for (std::uint64_t i = k; i-- > 0;) {
      digits[i] = rem % q;
      rem /= q;
    }
    for (std::uint64_t i = 0; i < n; ++i) {
      // p_c(x) = sum_j c_j x^(k-j), Horner from c_1 down.
      std::uint64_t x = params_.eval_points[i].value();
      std::uint64_t acc = 0;
      for (std::uint64_t j = 0; j < k; ++j) acc = (acc * x + digits[j]) % q;
      share_digits_[c * n + i] = static_cast<std::uint8_t>(acc);
    }
  }

  // Column supports; Lemma-3-style invariants verified at construction.
  column_support_.resize(secret_dim_);
  std::set<std::uint64_t> all_indices;
  for (std::uint64_t s = 0; s < secret_dim_; ++s) {
    auto& support = column_support_[s];
    support.reserve(coset_size_);
    for (std::uint64_t c = s * coset_size_; c < (s + 1) * coset_size_; ++c) {
      std::uint64_t idx = 0;
      for (std::uint64_t i = 0; i < n; ++i) idx = idx * q + share_digits_[c * n + i];
      support.push_back(idx);
      if (!all_indices.insert(idx).second) {
        throw ParameterError("scheme: encoder columns are not disjoint (internal invariant)");
      }
    }
    std::sort(support.begin(), support.end());
  }
}

const std::vector<std::uint64_t>& Scheme::column_support(std::uint64_t s_index) const {
  if (s_index >= secret_dim_) throw ParameterError("column_support: secret index out of range");
  return column_support_[s_index];
}

std::vector<gf::CoeffVector> Scheme::enumerate_coset(std::uint64_t s_index) const {
  if (s_index >= secret_dim_) throw ParameterError("enumerate_coset: secret index out of range");
  std::vector<gf::CoeffVector> out;
  out.reserve(coset_size_);
  for (std::uint64_t c = s_index * coset_size_; c < (s_index + 1) * coset_size_; ++c) {
    gf::CoeffVector coeffs;
    coeffs.reserve(params_.k);
    std::uint64_t rem = c;
    std::vector<std::uint64_t> digits(params_.k);
    for (std::uint64_t i = params_.k; i-- > 0;) {
      digits[i] = rem % params_.q;
      rem /= params_.q;
    }
    for (std::uint64_t d : digits) coeffs.emplace_back(d, params_.q);
    out.push_back(std::move(coeffs));
  }
  return out;
}

std::map<std::uint64_t, qlin::Complex> Scheme::encode_sparse(const qlin::PureState& psi) const {
  if (static_cast<std::uint64_t>(psi.dim()) != secret_dim_) {
    throw ParameterError("encode: input dimension must be q^L = " + std::to_string(secret_dim_));
  }
  const double inv_sqrt_c = 1.0 / std::sqrt(static_cast<double>(coset_size_));
  std::map<std::uint64_t, qlin::Complex> out;
  for (std::uint64_t s = 0; s < secret_dim_; ++s) {
    if (psi.amp(s) == qlin::Complex(0)) continue;
    for (std::uint64_t idx : column_support_[s]) out[idx] = psi.amp(s) * inv_sqrt_c;
  }
  return out;
}

qlin::PureState Scheme::encode(const qlin::PureState& psi) const {
  auto sparse = encode_sparse(psi);
  qlin::PureState out;
  out.amp = qlin::Vector::Zero(share_dim_);
  out.factor_dims.assign(params_.n, static_cast<qlin::Index>(params_.q));
  for (const auto& [idx, amp] : sparse) out.amp(idx) = amp;
  return out;
}

void Scheme::check_subset(const std::vector<int>& X, bool allow_empty) const {
  if (X.empty() && !allow_empty) throw ParameterError("subset: empty share set");
  for (std::size_t i = 0; i < X.size(); ++i) {
    if (X[i] < 0 || static_cast<std::uint64_t>(X[i]) >= params_.n) {
      throw ParameterError("subset: share index out of range: " + std::to_string(X[i]));
    }
    if (i > 0 && X[i] <= X[i - 1]) {
      throw ParameterError("subset: indices must be strictly increasing");
    }
  }
}

std::vector<int> Scheme::complement(const std::vector<int>& X) const {
  std::vector<int> out;
  for (std::uint64_t i = 0; i < params_.n; ++i) {
    if (!std::binary_search(X.begin(), X.end(), static_cast<int>(i))) {
      out.push_back(static_cast<int>(i));
    }
  }
  return out;
}

std::uint64_t Scheme::subset_label(std::uint64_t c_index, const std::vector<int>& subset) const {
  std::uint64_t label = 0;
  for (int i : subset) label = label * params_.q + share_digits_[c_index * params_.n + i];
  return label;
}

qlin::DensityMatrix Scheme::reduced_state(const qlin::PureState& psi,
                                          const std::vector<int>& X) const {
  check_subset(X);
  auto sparse = encode_sparse(psi);
  const auto comp = complement(X);
  const std::uint64_t dim_x = ipow(params_.q, X.size());

  // Unpack each nonzero share index into (X label, complement label).
  std::vector<qlin::Index> dims(params_.n, static_cast<qlin::Index>(params_.q));
  std::map<std::uint64_t, std::vector<std::pair<std::uint64_t, qlin::Complex>>> by_rest;
  for (const auto& [idx, amp] : sparse) {
    auto digits = qlin::unpack_index(static_cast<qlin::Index>(idx), dims);
    std::uint64_t xl = 0, cl = 0;
    for (int i : X) xl = xl * params_.q + static_cast<std::uint64_t>(digits[i]);
    for (int i : comp) cl = cl * params_.q + static_cast<std::uint64_t>(digits[i]);
    by_rest[cl].emplace_back(xl, amp);
  }

  qlin::Matrix out = qlin::Matrix::Zero(dim_x, dim_x);
  for (const auto& [rest, col] : by_rest) {
    for (const auto& [xi, ai] : col) {
      for (const auto& [xj, aj] : col) out(xi, xj) += ai * std::conj(aj);
    }
  }
  return qlin::DensityMatrix{std::move(out),
                             std::vector<qlin::Index>(X.size(), static_cast<qlin::Index>(params_.q))};
}

qlin::DensityMatrix Scheme::reduced_state(const qlin::DensityMatrix& rho,
                                          const std::vector<int>& X) const {
  check_subset(X);
  if (static_cast<std::uint64_t>(rho.dim()) != secret_dim_) {
    throw ParameterError("reduced_state: input dimension must be q^L");
  }
  qlin::EigResult eig = qlin::eig_hermitian(rho.mat);
  const std::uint64_t dim_x = ipow(params_.q, X.size());
  qlin::Matrix acc = qlin::Matrix::Zero(dim_x, dim_x);
  std::vector<qlin::Index> sdims(params_.L, static_cast<qlin::Index>(params_.q));
  for (qlin::Index i = 0; i < eig.values.size(); ++i) {
    if (eig.values(i) <= 1e-14) continue;
    qlin::PureState comp{eig.vectors.col(i), sdims};
    acc += eig.values(i) * reduced_state(comp, X).mat;
  }
  return qlin::DensityMatrix{std::move(acc),
                             std::vector<qlin::Index>(X.size(), static_cast<qlin::Index>(params_.q))};
}

std::vector<qlin::Matrix> Scheme::share_kraus_ops(const std::vector<int>& X) const {
  check_subset(X);
  const auto comp = complement(X);
  const std::uint64_t dim_x = ipow(params_.q, X.size());
  const std::uint64_t dim_c = ipow(params_.q, comp.size());
  const double inv_sqrt_c = 1.0 / std::sqrt(static_cast<double>(coset_size_));

  std::vector<qlin::Matrix> ops(dim_c, qlin::Matrix::Zero(dim_x, secret_dim_));
  for (std::uint64_t c = 0; c < coeff_count_; ++c) {
    std::uint64_t a = subset_label(c, comp);
    ops[a](subset_label(c, X), secret_of_coeff(c)) += inv_sqrt_c;
  }
  return ops;
}

Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic> Scheme::gram_counts(
    const std::vector<int>& X, std::uint64_t a, std::uint64_t b) const {
  check_subset(X);
  const auto comp = complement(X);
  const std::uint64_t dim_c = ipow(params_.q, comp.size());
  if (a >= dim_c || b >= dim_c) throw ParameterError("gram_counts: complement label out of range");

  Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic> g =
      Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>::Zero(secret_dim_, secret_dim_);
  // X labels reachable from each coset under the fixed complement label.
  std::vector<std::vector<std::uint64_t>> xs(secret_dim_), xt(secret_dim_);
  for (std::uint64_t c = 0; c < coeff_count_; ++c) {
    std::uint64_t cl = subset_label(c, comp);
    if (cl == a) xs[secret_of_coeff(c)].push_back(subset_label(c, X));
    if (cl == b) xt[secret_of_coeff(c)].push_back(subset_label(c, X));
  }
  for (auto& v : xs) std::sort(v.begin(), v.end());
  for (auto& v : xt) std::sort(v.begin(), v.end());
  for (std::uint64_t s = 0; s < secret_dim_; ++s) {
    for (std::uint64_t t = 0; t < secret_dim_; ++t) {
      std::vector<std::uint64_t> common;
      std::set_intersection(xs[s].begin(), xs[s].end(), xt[t].begin(), xt[t].end(),
                            std::back_inserter(common));
      g(s, t) = static_cast<std::int64_t>(common.size());
    }
  }
  return g;
}

std::vector<double> reduced_spectrum(const std::vector<SparseEntry>& entries) {
  // The nonzero spectrum of Tr_rest |psi><psi| can be read off either side:
  // the reduced matrix itself on compacted keep labels, or the Gram matrix
  // over the rest labels (A A* vs A* A). Work on whichever is smaller.
  std::map<std::uint64_t, std::map<std::uint64_t, qlin::Complex>> cols;  // rest -> keep -> amp
  std::map<std::uint64_t, std::size_t> keep_ids;
  for (const auto& e : entries) {
    cols[e.rest][e.keep] += e.amp;
    keep_ids.emplace(e.keep, 0);
  }
  {
    std::size_t next = 0;
    for (auto& [keep, id] : keep_ids) id = next++;
  }

  qlin::Matrix small;
  if (keep_ids.size() <= cols.size()) {
    small = qlin::Matrix::Zero(keep_ids.size(), keep_ids.size());
    for (const auto& [rest, col] : cols) {
      for (const auto& [ki, ai] : col) {
        for (const auto& [kj, aj] : col) {
          small(keep_ids.at(ki), keep_ids.at(kj)) += ai * std::conj(aj);
        }
      }
    }
  } else {
    const std::size_t r = cols.size();
    small = qlin::Matrix::Zero(r, r);
    std::size_t i = 0;
    for (auto it = cols.begin(); it != cols.end(); ++it, ++i) {
      std::size_t j = i;
      for (auto jt = it; jt != cols.end(); ++jt, ++j) {
        qlin::Complex acc = 0;
        for (const auto& [keep, amp] : it->second) {
          auto f = jt->second.find(keep);
          if (f != jt->second.end()) acc += std::conj(amp) * f->second;
        }
        small(i, j) = acc;
        if (i != j) small(j, i) = std::conj(acc);
      }
    }
  }
  qlin::EigResult eig = qlin::eig_hermitian(small);
  std::vector<double> out;
  for (qlin::Index l = 0; l < eig.values.size(); ++l) out.push_back(eig.values(l));
  return out;
}

double reduced_entropy(const std::vector<SparseEntry>& entries) {
  auto spec = reduced_spectrum(entries);
  double top = 0.0;
  for (double v : spec) top = std::max(top, v);
  double h = 0.0;
  for (double v : spec) {
    if (v > 1e-10 * top) h -= v * std::log(v);
  }
  return h;
}

}  // namespace rqss::qss
