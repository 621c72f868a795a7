/*
 * Copyright 2026 The rampqss developers.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE file in the root directory of this source tree.
 */

#include "rqss/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace rqss::io {

namespace {

using nlohmann::json;

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw FormatError(path + ": " + e.what());
  }
  return j;
}

void write_json(const json& j, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw FormatError("cannot write " + path);
  out << j.dump(2) << "\n";
}

qlin::Complex parse_amp(const json& pair, const std::string& path) {
  if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number()) {
    throw FormatError(path + ": amplitude must be a [re, im] pair");
  }
  return qlin::Complex(pair[0].get<double>(), pair[1].get<double>());
}

json dump_amp(qlin::Complex a) { return json::array({a.real(), a.imag()}); }

}  // namespace

qss::SchemeParams load_scheme(const std::string& path) {
  const json j = read_json(path);
  for (const char* field : {"q", "k", "L", "n"}) {
    if (!j.contains(field) || !j[field].is_number_unsigned()) {
      throw FormatError(path + ": missing or non-integer field '" + field + "'");
    }
  }
  qss::SchemeParams p;
  p.q = j["q"].get<std::uint64_t>();
  p.k = j["k"].get<std::uint64_t>();
  p.L = j["L"].get<std::uint64_t>();
  p.n = j["n"].get<std::uint64_t>();
  if (j.contains("eval_points")) {
    if (!j["eval_points"].is_array()) {
      throw FormatError(path + ": eval_points must be an array");
    }
    for (const auto& x : j["eval_points"]) {
      if (!x.is_number_unsigned()) throw FormatError(path + ": eval_points must be integers");
      p.eval_points.emplace_back(x.get<std::uint64_t>(), p.q);
    }
  } else {
    for (std::uint64_t i = 0; i < p.n; ++i) p.eval_points.emplace_back(i, p.q);
  }
  return p;
}

void save_scheme(const qss::SchemeParams& params, const std::string& path) {
  json points = json::array();
  for (const auto& x : params.eval_points) points.push_back(x.value());
  write_json(json{{"q", params.q},
                  {"k", params.k},
                  {"L", params.L},
                  {"n", params.n},
                  {"eval_points", points}},
             path);
}

qlin::PureState load_secret_state(const std::string& path, const qss::Scheme& scheme) {
  const json j = read_json(path);
  if (!j.is_array()) throw FormatError(path + ": secret state must be an array of [re, im]");
  if (j.size() != scheme.secret_dim()) {
    throw FormatError(path + ": expected dimension " + std::to_string(scheme.secret_dim()) +
                      ", got " + std::to_string(j.size()));
  }
  qlin::PureState psi;
  psi.amp = qlin::Vector(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) psi.amp(i) = parse_amp(j[i], path);
  psi.factor_dims.assign(scheme.params().L, static_cast<qlin::Index>(scheme.params().q));
  return psi;
}

void save_secret_state(const qlin::PureState& psi, const std::string& path) {
  json j = json::array();
  for (qlin::Index i = 0; i < psi.dim(); ++i) j.push_back(dump_amp(psi.amp(i)));
  write_json(j, path);
}

std::map<std::uint64_t, qlin::Complex> load_encoded_state(const std::string& path,
                                                          const qss::Scheme& scheme) {
  const json j = read_json(path);
  if (!j.is_object()) throw FormatError(path + ": encoded state must be an index -> [re, im] map");
  std::map<std::uint64_t, qlin::Complex> amps;
  for (const auto& [key, val] : j.items()) {
    std::uint64_t idx = 0;
    try {
      idx = std::stoull(key);
    } catch (const std::exception&) {
      throw FormatError(path + ": non-integer index '" + key + "'");
    }
    if (idx >= scheme.share_space_dim()) {
      throw FormatError(path + ": index " + key + " out of range for dimension " +
                        std::to_string(scheme.share_space_dim()));
    }
    amps[idx] = parse_amp(val, path);
  }
  return amps;
}

void save_encoded_state(const std::map<std::uint64_t, qlin::Complex>& amps,
                        const std::string& path) {
  json j = json::object();
  for (const auto& [idx, amp] : amps) j[std::to_string(idx)] = dump_amp(amp);
  write_json(j, path);
}

qlin::DensityMatrix load_density(const std::string& path) {
  const json j = read_json(path);
  if (!j.contains("dims") || !j.contains("mat")) {
    throw FormatError(path + ": density matrix needs 'dims' and 'mat'");
  }
  qlin::DensityMatrix rho;
  for (const auto& d : j["dims"]) rho.factor_dims.push_back(d.get<qlin::Index>());
  const auto& mat = j["mat"];
  rho.mat = qlin::Matrix(mat.size(), mat.size());
  for (std::size_t r = 0; r < mat.size(); ++r) {
    if (mat[r].size() != mat.size()) throw FormatError(path + ": matrix must be square");
    for (std::size_t c = 0; c < mat.size(); ++c) rho.mat(r, c) = parse_amp(mat[r][c], path);
  }
  rho.validate();
  return rho;
}

void save_density(const qlin::DensityMatrix& rho, const std::string& path) {
  json dims = json::array();
  for (qlin::Index d : rho.factor_dims) dims.push_back(d);
  json mat = json::array();
  for (qlin::Index r = 0; r < rho.dim(); ++r) {
    json row = json::array();
    for (qlin::Index c = 0; c < rho.dim(); ++c) row.push_back(dump_amp(rho.mat(r, c)));
    mat.push_back(row);
  }
  write_json(json{{"dims", dims}, {"mat", mat}}, path);
}

std::string format_real(double v) {
  if (v == 0.0) v = 0.0;  // normalize -0
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12f", v);
  return buf;
}

std::string format_subset(const std::vector<int>& subset) {
  std::string out;
  for (std::size_t i = 0; i < subset.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(subset[i] + 1);
  }
  return out;
}

std::vector<int> parse_subset(const std::string& text, std::uint64_t n) {
  std::vector<int> subset;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t pos = 0;
    long v = 0;
    try {
      v = std::stol(item, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != item.size() || v < 1 || static_cast<std::uint64_t>(v) > n) {
      throw FormatError("bad subset element '" + item + "' (want 1.." + std::to_string(n) + ")");
    }
    subset.push_back(static_cast<int>(v - 1));
  }
  std::sort(subset.begin(), subset.end());
  if (std::adjacent_find(subset.begin(), subset.end()) != subset.end()) {
    throw FormatError("subset has repeated elements");
  }
  if (subset.empty()) throw FormatError("subset is empty");
  return subset;
}

void write_access_report(std::ostream& os, const qss::Scheme& scheme,
                         const std::vector<access::AccessReport>& reports,
                         const std::string& log_base) {
  const double q = static_cast<double>(scheme.params().q);
  // Values are stored in dits; rescale for the requested unit.
  double scale = 1.0;
  if (log_base == "2") {
    scale = std::log(q) / std::log(2.0);
  } else if (log_base == "e") {
    scale = std::log(q);
  } else if (log_base != "q") {
    throw FormatError("log_base must be one of 2, e, q");
  }
  for (const auto& r : reports) {
    os << "subset=" << format_subset(r.subset) << " class=" << access::to_string(r.cls)
       << " holevo=" << format_real(r.holevo_dits * scale)
       << " entropy=" << format_real(r.entropy_dits * scale);
    if (r.gram_witness) {
      os << " witness=gram(a=" << r.gram_witness->a << ",b=" << r.gram_witness->b << ")";
    } else if (r.vanishing_witness) {
      os << " witness=basis(s=" << r.vanishing_witness->s << ",t=" << r.vanishing_witness->t
         << "," << (r.vanishing_witness->off_diagonal ? "off-diagonal" : "diagonal") << ")";
    }
    os << "\n";
  }
}

void write_verify_report(std::ostream& os, const std::vector<verify::CheckResult>& results) {
  for (const auto& r : results) {
    os << "check=" << r.name << " value=" << format_real(r.value)
       << " bound=" << format_real(r.bound) << " result=" << (r.pass ? "pass" : "fail") << "\n";
  }
}

}  // namespace rqss::io
