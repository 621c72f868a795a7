/*
 * Copyright 2026 The rampqss developers.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE file in the root directory of this source tree.
 */

#ifndef RQSS_GF_HPP_
#define RQSS_GF_HPP_

#include <cstdint>
#include <vector>

#include "rqss/errors.hpp"

namespace rqss::gf {

bool is_prime(std::uint64_t n);

/// An element of the prime field GF(q). Value is always reduced to [0, q).
class Fp {
 public:
  Fp() = default;
  Fp(std::uint64_t value, std::uint64_t modulus);

  std::uint64_t value() const { return value_; }
  std::uint64_t modulus() const { return q_; }

  Fp operator+(Fp other) const;
  Fp operator-(Fp other) const;
  Fp operator*(Fp other) const;
  Fp operator-() const;
  Fp inv() const;  // throws ParameterError on zero
  Fp pow(std::uint64_t e) const;

  bool operator==(const Fp& other) const = default;

 private:
  void check_same_field(Fp other) const;

  std::uint64_t value_ = 0;
  std::uint64_t q_ = 2;
};

using CoeffVector = std::vector<Fp>;

/// p_c(x) = sum_i c_i x^(i-1), Horner form.
Fp poly_eval(const CoeffVector& c, Fp x);

/// Dense matrix over GF(q), row-major. Row-vector convention: v * M.
class FpMatrix {
 public:
  FpMatrix(std::size_t rows, std::size_t cols, std::uint64_t q);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::uint64_t modulus() const { return q_; }

  std::uint64_t at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, std::uint64_t v) { data_[r * cols_ + c] = v % q_; }

  static FpMatrix identity(std::size_t n, std::uint64_t q);

  FpMatrix operator*(const FpMatrix& other) const;

  /// Row vector times matrix (the paper's c * M convention).
  std::vector<std::uint64_t> apply_row(const std::vector<std::uint64_t>& row) const;

  /// Rank by Gaussian elimination with deterministic first-nonzero pivoting.
  std::size_t rank() const;

  /// Exact inverse; throws SingularMatrixError carrying the rank.
  FpMatrix inverse() const;

  bool full_column_rank() const { return rank() == cols_; }
  bool full_row_rank() const { return rank() == rows_; }

  bool operator==(const FpMatrix& other) const = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::uint64_t q_;
  std::vector<std::uint64_t> data_;
};

/// M_b^a(X): the (b-a+1) x |X| matrix with entry (r, j) = x_j^(a+r).
FpMatrix vandermonde(const std::vector<Fp>& points, std::uint64_t a, std::uint64_t b);

}  // namespace rqss::gf

#endif  // RQSS_GF_HPP_
