/*
 * Copyright 2026 The rampqss developers.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE file in the root directory of this source tree.
 */

#ifndef RQSS_IO_HPP_
#define RQSS_IO_HPP_

#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "rqss/access.hpp"
#include "rqss/qlin.hpp"
#include "rqss/scheme.hpp"
#include "rqss/verify.hpp"

namespace rqss::io {

/// File format errors (missing fields, malformed JSON, bad dimensions).
class FormatError : public std::runtime_error {
 public:
  explicit FormatError(const std::string& what) : std::runtime_error(what) {}
};

// Scheme file: {"q":..,"k":..,"L":..,"n":..,"eval_points":[..]}.
qss::SchemeParams load_scheme(const std::string& path);
void save_scheme(const qss::SchemeParams& params, const std::string& path);

// Secret-space state: dense array of [re, im] pairs.
qlin::PureState load_secret_state(const std::string& path, const qss::Scheme& scheme);
void save_secret_state(const qlin::PureState& psi, const std::string& path);

// Share-space state: sparse map {"index": [re, im]}.
std::map<std::uint64_t, qlin::Complex> load_encoded_state(const std::string& path,
                                                          const qss::Scheme& scheme);
void save_encoded_state(const std::map<std::uint64_t, qlin::Complex>& amps,
                        const std::string& path);

// Density matrix: {"dims":[..],"mat":[[[re,im],..],..]}.
qlin::DensityMatrix load_density(const std::string& path);
void save_density(const qlin::DensityMatrix& rho, const std::string& path);

/// Fixed 12-decimal rendering so reports diff cleanly.
std::string format_real(double v);
/// "1,2,5": 1-based share indices.
std::string format_subset(const std::vector<int>& subset);
std::vector<int> parse_subset(const std::string& text, std::uint64_t n);

/// One line per subset: subset, class, holevo, entropy, optional witness.
/// Entropy unit selected by log_base ("2", "e" or "q").
void write_access_report(std::ostream& os, const qss::Scheme& scheme,
                         const std::vector<access::AccessReport>& reports,
                         const std::string& log_base);

/// One line per check: name, measured value, bound, pass/fail.
void write_verify_report(std::ostream& os, const std::vector<verify::CheckResult>& results);

}  // namespace rqss::io

#endif  // RQSS_IO_HPP_
