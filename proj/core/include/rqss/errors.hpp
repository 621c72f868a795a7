/*
 * Copyright 2026 The rampqss developers.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE file in the root directory of this source tree.
 */

#ifndef RQSS_ERRORS_HPP_
#define RQSS_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rqss {

/// Invalid argument to an operation (modulus mismatch, bad dimensions, ...).
class ParameterError : public std::invalid_argument {
 public:
  explicit ParameterError(const std::string& what) : std::invalid_argument(what) {}
};

/// Matrix inversion requested on a singular matrix; carries the computed rank.
class SingularMatrixError : public std::runtime_error {
 public:
  SingularMatrixError(const std::string& what, std::size_t rank)
      : std::runtime_error(what), rank_(rank) {}
  std::size_t rank() const { return rank_; }

 private:
  std::size_t rank_;
};

}  // namespace rqss

#endif  // RQSS_ERRORS_HPP_
