/*
 * Copyright 2026 The rampqss developers.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE file in the root directory of this source tree.
 */

#include "rqss/gf.hpp"

#include <set>
#include <string>

namespace rqss::gf {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

Fp::Fp(std::uint64_t value, std::uint64_t modulus) : value_(value % modulus), q_(modulus) {
  if (modulus < 2 || !is_prime(modulus)) {
    throw ParameterError("field modulus must be prime, got " + std::to_string(modulus));
  }
}

void Fp::check_same_field(Fp other) const {
  if (q_ != other.q_) {
    throw ParameterError("field modulus mismatch: " + std::to_string(q_) + " vs " +
                         std::to_string(other.q_));
  }
}

Fp Fp::operator+(Fp other) const {
  check_same_field(other);
  return Fp((value_ + other.value_) % q_, q_);
}

Fp Fp::operator-(Fp other) const {
  check_same_field(other);
  return Fp((value_ + q_ - other.value_) % q_, q_);
}

Fp Fp::operator*(Fp other) const {
  check_same_field(other);
  return Fp((value_ * other.value_) % q_, q_);
}

Fp Fp::operator-() const { return Fp((q_ - value_) % q_, q_); }

Fp Fp::pow(std::uint64_t e) const {
  std::uint64_t base = value_, acc = 1 % q_;
  while (e > 0) {
    if (e & 1) acc = acc * base % q_;
    base = base * base % q_;
    e >>= 1;
  }
  return Fp(acc, q_);
}

Fp Fp::inv() const {
  if (value_ == 0) throw ParameterError("zero has no inverse in GF(q)");
  return pow(q_ - 2);
}

Fp poly_eval(const CoeffVector& c, Fp x) {
  if (c.empty()) return Fp(0, x.modulus());
  Fp acc(0, x.modulus());
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    if (it->modulus() != x.modulus()) {
      throw ParameterError("poly_eval: coefficient modulus differs from point modulus");
    }
    acc = acc * x + *it;
  }
  return acc;
}

FpMatrix::FpMatrix(std::size_t rows, std::size_t cols, std::uint64_t q)
    : rows_(rows), cols_(cols), q_(q), data_(rows * cols, 0) {
  if (!is_prime(q)) throw ParameterError("matrix modulus must be prime");
}

FpMatrix FpMatrix::identity(std::size_t n, std::uint64_t q) {
  FpMatrix m(n, n, q);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

FpMatrix FpMatrix::operator*(const FpMatrix& other) const {
  if (cols_ != other.rows_ || q_ != other.q_) {
    throw ParameterError("matrix product: shape or modulus mismatch");
  }
  FpMatrix out(rows_, other.cols_, q_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < other.cols_; ++j) {
      std::uint64_t acc = 0;
      for (std::size_t l = 0; l < cols_; ++l) acc = (acc + at(i, l) * other.at(l, j)) % q_;
      out.set(i, j, acc);
    }
  }
  return out;
}

std::vector<std::uint64_t> FpMatrix::apply_row(const std::vector<std::uint64_t>& row) const {
  if (row.size() != rows_) throw ParameterError("apply_row: length mismatch");
  std::vector<std::uint64_t> out(cols_, 0);
  for (std::size_t j = 0; j < cols_; ++j) {
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < rows_; ++i) acc = (acc + row[i] % q_ * at(i, j)) % q_;
    out[j] = acc;
  }
  return out;
}

namespace {

std::uint64_t mod_inv(std::uint64_t a, std::uint64_t q) {
  // Fermat; q prime, a nonzero mod q.
  std::uint64_t e = q - 2, base = a % q, acc = 1;
  while (e > 0) {
    if (e & 1) acc = acc * base % q;
    base = base * base % q;
    e >>= 1;
  }
  return acc;
}

// Gauss-Jordan on [M | aug]; returns rank. First nonzero pivot in column order.
std::size_t eliminate(std::vector<std::uint64_t>& m, std::size_t rows, std::size_t cols,
                      std::uint64_t q) {
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot * cols + col] == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(m[pivot * cols + j], m[rank * cols + j]);
    }
    std::uint64_t inv = mod_inv(m[rank * cols + col], q);
    for (std::size_t j = 0; j < cols; ++j) m[rank * cols + j] = m[rank * cols + j] * inv % q;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || m[r * cols + col] == 0) continue;
      std::uint64_t f = m[r * cols + col];
      for (std::size_t j = 0; j < cols; ++j) {
        m[r * cols + j] = (m[r * cols + j] + (q - f) * m[rank * cols + j]) % q;
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace

std::size_t FpMatrix::rank() const {
  std::vector<std::uint64_t> work = data_;
  return eliminate(work, rows_, cols_, q_);
}

FpMatrix FpMatrix::inverse() const {
  if (rows_ != cols_) throw ParameterError("inverse: matrix not square");
  const std::size_t n = rows_;
  // Check the left block alone: elimination on [A | I] would keep finding
  // pivots in the identity columns and always report full rank.
  const std::size_t r = rank();
  if (r < n) throw SingularMatrixError("inverse: singular matrix", r);
  std::vector<std::uint64_t> work(n * 2 * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) work[i * 2 * n + j] = at(i, j);
    work[i * 2 * n + n + i] = 1;
  }
  eliminate(work, n, 2 * n, q_);
  // eliminate() pivots in column order and A has full rank, so the left
  // block is exactly I here.
  FpMatrix out(n, n, q_);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out.set(i, j, work[i * 2 * n + n + j]);
  }
  return out;
}

FpMatrix vandermonde(const std::vector<Fp>& points, std::uint64_t a, std::uint64_t b) {
  if (points.empty()) throw ParameterError("vandermonde: empty point set");
  if (a > b) throw ParameterError("vandermonde: requires a <= b");
  std::set<std::uint64_t> seen;
  for (const auto& p : points) {
    if (p.modulus() != points.front().modulus()) {
      throw ParameterError("vandermonde: mixed moduli");
    }
    if (!seen.insert(p.value()).second) throw ParameterError("vandermonde: duplicate points");
  }
  FpMatrix m(b - a + 1, points.size(), points.front().modulus());
  for (std::size_t j = 0; j < points.size(); ++j) {
    for (std::uint64_t r = 0; r <= b - a; ++r) m.set(r, j, points[j].pow(a + r).value());
  }
  return m;
}

}  // namespace rqss::gf
