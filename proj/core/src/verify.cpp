/*
 * Copyright 2026 The rampqss developers.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE file in the root directory of this source tree.
 */

#include "rqss/verify.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "rqss/info.hpp"
#include "rqss/recover.hpp"
#include "rqss/rng.hpp"

namespace rqss::verify {

namespace {

using access::AccessClass;
using access::AccessReport;

AccessClass expected_class(const qss::SchemeParams& p, std::size_t size) {
  if (size <= p.k - p.L) return AccessClass::kForbidden;
  if (size >= p.k) return AccessClass::kQualified;
  return AccessClass::kIntermediate;
}

CheckResult count_check(std::string name, double violations) {
  return CheckResult{std::move(name), violations, 0.0, violations == 0.0};
}

CheckResult bound_check(std::string name, double value, double bound) {
  return CheckResult{std::move(name), value, bound, value <= bound};
}

// Exact Definition-1 pattern over the full map.
CheckResult check_threshold_pattern(const qss::Scheme& scheme,
                                    const std::vector<AccessReport>& reports) {
  double bad = 0;
  for (const auto& r : reports) {
    if (r.cls != expected_class(scheme.params(), r.subset.size())) ++bad;
  }
  return count_check("threshold-pattern", bad);
}

CheckResult check_monotonicity(const qss::Scheme& scheme,
                               const std::vector<AccessReport>& reports) {
  const std::uint64_t n = scheme.params().n;
  std::vector<int> cls(std::uint64_t{1} << n, 0);  // empty set forbidden
  for (const auto& r : reports) cls[access::subset_to_mask(r.subset)] = static_cast<int>(r.cls);
  double bad = 0;
  for (std::uint64_t x = 0; x < cls.size(); ++x) {
    for (std::uint64_t y = x;; y = (y + 1) | x) {  // supersets of x
      if (cls[y] < cls[x]) ++bad;
      if (y == cls.size() - 1) break;
    }
  }
  return count_check("monotonicity", bad);
}

CheckResult check_duality(const qss::Scheme& scheme, const std::vector<AccessReport>& reports) {
  const std::uint64_t n = scheme.params().n;
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  std::vector<int> cls(full + 1, 0);
  for (const auto& r : reports) cls[access::subset_to_mask(r.subset)] = static_cast<int>(r.cls);
  double bad = 0;
  for (std::uint64_t x = 0; x <= full; ++x) {
    const bool q = cls[x] == 2;
    const bool f = cls[full & ~x] == 0;
    if (q != f) ++bad;
  }
  return count_check("duality", bad);
}

void check_holevo_values(const qss::Scheme& scheme, const std::vector<AccessReport>& reports,
                         double tol, std::vector<CheckResult>* out) {
  const auto& p = scheme.params();
  double dev_q = 0, dev_f = 0, dev_i = 0;
  bool has_i = false;
  for (const auto& r : reports) {
    switch (r.cls) {
      case AccessClass::kQualified:
        dev_q = std::max(dev_q, std::abs(r.holevo_dits - static_cast<double>(p.L)));
        break;
      case AccessClass::kForbidden:
        dev_f = std::max(dev_f, std::abs(r.holevo_dits));
        break;
      case AccessClass::kIntermediate: {
        has_i = true;
        const double expected =
            static_cast<double>(p.L) - static_cast<double>(p.k - r.subset.size());
        dev_i = std::max(dev_i, std::abs(r.holevo_dits - expected));
        break;
      }
    }
  }
  out->push_back(bound_check("holevo-qualified", dev_q, tol));
  out->push_back(bound_check("holevo-forbidden", dev_f, tol));
  if (has_i) out->push_back(bound_check("holevo-intermediate", dev_i, tol));
}

// H(sigma_mu) <= H(W_X(sigma_mu)) for significant X and random ensembles.
CheckResult check_entropy_bound(const qss::Scheme& scheme,
                                const std::vector<AccessReport>& reports,
                                const VerifyOptions& opts) {
  const auto& p = scheme.params();
  std::vector<std::vector<int>> significant;
  for (const auto& r : reports) {
    if (access::is_significant(reports, p.n, r.subset)) significant.push_back(r.subset);
  }
  rng::SplitMix gen(opts.seed * 0x9e37 + 3);
  const std::vector<qlin::Index> sdims(p.L, static_cast<qlin::Index>(p.q));
  double worst = 0;
  for (int e = 0; e < opts.ensembles; ++e) {
    const std::size_t m = scheme.secret_dim() + 1;
    qlin::Matrix avg = qlin::Matrix::Zero(scheme.secret_dim(), scheme.secret_dim());
    for (std::size_t i = 0; i < m; ++i) {
      const qlin::PureState psi = qlin::random_pure_state(sdims, gen);
      avg += psi.amp * psi.amp.adjoint() / static_cast<double>(m);
    }
    const qlin::DensityMatrix sigma{avg, sdims};
    const double h_sigma = info::vn_entropy(sigma).nats;
    for (const auto& x : significant) {
      const double h_x = reduced_entropy_nats(scheme, sigma, x);
      worst = std::max(worst, h_sigma - h_x);
    }
  }
  return bound_check("theorem3-entropy-bound", worst, opts.tol);
}

// (1/L) H(sigma_mu) = (1/n) sum_i H(W_i(sigma_mu)) = log q, uniform mu.
CheckResult check_share_size_equality(const qss::Scheme& scheme, double tol) {
  const auto& p = scheme.params();
  const double lhs = static_cast<double>(p.L) / static_cast<double>(p.L);  // H = L dits
  double avg = 0;
  for (std::uint64_t i = 0; i < p.n; ++i) {
    avg += access::mixed_entropy_dits(scheme, {static_cast<int>(i)});
  }
  avg /= static_cast<double>(p.n);
  const double dev = std::max(std::abs(lhs - 1.0), std::abs(avg - 1.0));
  return bound_check("theorem4-equality", dev, tol);
}

CheckResult check_corollary1(const qss::Scheme& scheme, const std::vector<AccessReport>& reports,
                             double tol) {
  const auto& p = scheme.params();
  const double log_q = std::log(static_cast<double>(p.q));
  const std::vector<qlin::Index> sdims(p.L, static_cast<qlin::Index>(p.q));
  qlin::DensityMatrix sigma{
      qlin::Matrix::Identity(scheme.secret_dim(), scheme.secret_dim()) /
          static_cast<double>(scheme.secret_dim()),
      sdims};
  const double h_sigma = info::vn_entropy(sigma).nats;
  double worst = 0;
  for (std::uint64_t i = 0; i < p.n; ++i) {
    if (!access::is_significant(reports, p.n, {static_cast<int>(i)})) continue;
    worst = std::max(worst, h_sigma - log_q);  // log dim H_i = log q
  }
  return bound_check("corollary1-share-size", worst, tol);
}

// Unique lexicographically-smallest size-k sub-subsets of the qualified sets.
std::vector<std::vector<int>> decoding_subsets(const qss::Scheme& scheme,
                                               const std::vector<AccessReport>& reports) {
  std::set<std::vector<int>> subs;
  const std::size_t k = scheme.params().k;
  for (const auto& r : reports) {
    if (r.cls != AccessClass::kQualified) continue;
    subs.insert(std::vector<int>(r.subset.begin(), r.subset.begin() + k));
  }
  return {subs.begin(), subs.end()};
}

void check_decoder(const qss::Scheme& scheme, const std::vector<AccessReport>& reports,
                   const VerifyOptions& opts, std::vector<CheckResult>* out) {
  const auto& p = scheme.params();
  const std::vector<qlin::Index> sdims(p.L, static_cast<qlin::Index>(p.q));
  rng::SplitMix gen(opts.seed * 0x9e37 + 5);
  double worst_infidelity = 0;
  double residual_dev = 0;
  double basis_bad = 0;
  for (const auto& sub : decoding_subsets(scheme, reports)) {
    const recover::PermutationDecoder dec = recover::build_decoder(scheme, sub);
    for (int t = 0; t < opts.random_secrets; ++t) {
      const qlin::PureState psi = qlin::random_pure_state(sdims, gen);
      const qlin::DensityMatrix rho_sub = scheme.reduced_state(psi, sub);
      const qlin::DensityMatrix rec = dec.decode(rho_sub);
      worst_infidelity = std::max(worst_infidelity, 1.0 - qlin::fidelity_pure(psi, rec));
    }
    for (std::uint64_t s = 0; s < scheme.secret_dim(); ++s) {
      if (!dec.decode_basis_exact(scheme, s)) ++basis_bad;
    }
    if (p.k > p.L) {
      // After the permutation a basis secret leaves I/q^(k-L) on the junk
      // factors (the residual uniform pairing of the construction).
      qlin::Vector e0 = qlin::Vector::Zero(scheme.secret_dim());
      e0(0) = 1.0;
      const qlin::DensityMatrix rho_sub =
          scheme.reduced_state(qlin::PureState{e0, sdims}, sub);
      qlin::Matrix permuted(rho_sub.dim(), rho_sub.dim());
      for (qlin::Index i = 0; i < rho_sub.dim(); ++i) {
        for (qlin::Index j = 0; j < rho_sub.dim(); ++j) {
          permuted(dec.perm[i], dec.perm[j]) = rho_sub.mat(i, j);
        }
      }
      std::vector<int> junk;
      for (std::uint64_t f = p.L; f < p.k; ++f) junk.push_back(static_cast<int>(f));
      const qlin::DensityMatrix residual = qlin::partial_trace(
          qlin::DensityMatrix{permuted, std::vector<qlin::Index>(
                                            p.k, static_cast<qlin::Index>(p.q))},
          junk);
      const qlin::Matrix uniform =
          qlin::Matrix::Identity(residual.dim(), residual.dim()) /
          static_cast<double>(residual.dim());
      residual_dev = std::max(residual_dev, qlin::trace_distance(residual.mat, uniform));
    }
  }
  out->push_back(bound_check("decoder-roundtrip", worst_infidelity, 1e-9));
  out->push_back(count_check("decoder-basis-exact", basis_bad));
  if (p.k > p.L) out->push_back(bound_check("decoder-residual-uniform", residual_dev, 1e-9));
}

void check_petz(const qss::Scheme& scheme, const std::vector<AccessReport>& reports,
                const VerifyOptions& opts, std::vector<CheckResult>* out) {
  const auto& p = scheme.params();
  const std::vector<qlin::Index> sdims(p.L, static_cast<qlin::Index>(p.q));
  const qlin::Matrix sigma_mat =
      qlin::Matrix::Identity(scheme.secret_dim(), scheme.secret_dim()) /
      static_cast<double>(scheme.secret_dim());
  const qlin::DensityMatrix sigma{sigma_mat, sdims};
  rng::SplitMix gen(opts.seed * 0x9e37 + 7);

  double worst_qualified = 0;
  for (const auto& sub : decoding_subsets(scheme, reports)) {
    const recover::KrausChannel channel = recover::share_channel(scheme, sub);
    const recover::PetzMap petz(channel, sigma);
    for (int t = 0; t < opts.random_secrets; ++t) {
      const qlin::PureState psi = qlin::random_pure_state(sdims, gen);
      const qlin::Matrix rho = psi.amp * psi.amp.adjoint();
      const qlin::Matrix recovered = petz.apply(channel.apply(rho));
      worst_qualified = std::max(worst_qualified, qlin::trace_distance(recovered, rho));
    }
  }
  out->push_back(bound_check("petz-qualified", worst_qualified, opts.tol));

  double best_witness = 0;
  bool has_intermediate = false;
  for (const auto& r : reports) {
    if (r.cls != AccessClass::kIntermediate) continue;
    has_intermediate = true;
    const recover::KrausChannel channel = recover::share_channel(scheme, r.subset);
    const recover::PetzMap petz(channel, sigma);
    for (std::uint64_t s = 0; s < scheme.secret_dim(); ++s) {
      qlin::Matrix rho = qlin::Matrix::Zero(scheme.secret_dim(), scheme.secret_dim());
      rho(s, s) = 1.0;
      const qlin::Matrix recovered = petz.apply(channel.apply(rho));
      best_witness = std::max(best_witness, qlin::trace_distance(recovered, rho));
    }
  }
  if (has_intermediate) {
    out->push_back(CheckResult{"petz-intermediate-witness", best_witness, 0.01,
                               best_witness > 0.01});
  }
}

CheckResult check_divergence(const qss::Scheme& scheme, const std::vector<AccessReport>& reports,
                             const VerifyOptions& opts) {
  const auto& p = scheme.params();
  const std::vector<qlin::Index> sdims(p.L, static_cast<qlin::Index>(p.q));
  rng::SplitMix gen(opts.seed * 0x9e37 + 11);
  const qlin::Index d = static_cast<qlin::Index>(scheme.secret_dim());

  std::vector<recover::KrausChannel> channels;
  channels.push_back(recover::KrausChannel::identity(d));
  channels.push_back(recover::KrausChannel::depolarizing(d));
  channels.push_back(recover::KrausChannel::dephasing(d));
  channels.push_back(recover::KrausChannel::unitary(qlin::random_unitary(d, gen)));
  const auto subs = decoding_subsets(scheme, reports);
  if (!subs.empty()) channels.push_back(recover::share_channel(scheme, subs.front()));
  for (const auto& r : reports) {
    if (r.cls == AccessClass::kIntermediate) {
      channels.push_back(recover::share_channel(scheme, r.subset));
      break;
    }
  }

  double disagreements = 0;
  double worst_negative_gap = 0;
  for (int t = 0; t < opts.divergence_triples; ++t) {
    const qlin::DensityMatrix rho = qlin::random_density(sdims, gen);
    const qlin::DensityMatrix sigma = qlin::random_density(sdims, gen);
    const auto& channel = channels[t % channels.size()];
    const recover::DivergenceReport rep =
        recover::check_divergence_equality(rho, sigma, channel, opts.tol);
    if (rep.indeterminate) continue;
    worst_negative_gap = std::max(worst_negative_gap, -rep.gap);
    if (rep.gap_ok != rep.recovery_ok) ++disagreements;
  }
  CheckResult res = count_check("divergence-flag-agreement", disagreements);
  if (worst_negative_gap > opts.tol) res.pass = false;
  return res;
}

CheckResult check_tamper(const qss::Scheme& scheme, const std::vector<AccessReport>& reports,
                         const VerifyOptions& opts) {
  const auto& p = scheme.params();
  const std::vector<qlin::Index> sdims(p.L, static_cast<qlin::Index>(p.q));
  rng::SplitMix gen(opts.seed * 0x9e37 + 13);
  double worst = 0;
  for (const auto& sub : decoding_subsets(scheme, reports)) {
    const std::vector<int> comp = scheme.complement(sub);
    qlin::Index comp_dim = 1;
    for (std::size_t i = 0; i < comp.size(); ++i) comp_dim *= static_cast<qlin::Index>(p.q);
    for (int a = 0; a < opts.adversaries; ++a) {
      recover::KrausChannel adv;
      if (a == 0) {
        adv = recover::KrausChannel::identity(comp_dim);
      } else if (a == 1) {
        adv = recover::KrausChannel::dephasing(comp_dim);
      } else {
        adv = recover::KrausChannel::unitary(qlin::random_unitary(comp_dim, gen));
      }
      const qlin::PureState psi = qlin::random_pure_state(sdims, gen);
      const qlin::DensityMatrix secret{psi.amp * psi.amp.adjoint(), sdims};
      const recover::TamperReport rep = recover::tamper_check(scheme, sub, adv, secret);
      worst = std::max(worst, rep.recovery_error);
    }
  }
  return bound_check("tamper-resilience", worst, 1e-9);
}

}  // namespace

double reduced_entropy_nats(const qss::Scheme& scheme, const qlin::DensityMatrix& rho,
                            const std::vector<int>& X) {
  scheme.check_subset(X);
  const qlin::EigResult eig = qlin::eig_hermitian(rho.mat);
  const std::vector<int> comp = scheme.complement(X);
  std::uint64_t comp_dim = 1;
  for (std::size_t i = 0; i < comp.size(); ++i) comp_dim *= scheme.params().q;
  const double inv_sqrt_c = 1.0 / std::sqrt(static_cast<double>(scheme.normalization()));

  std::vector<qss::SparseEntry> entries;
  for (qlin::Index j = 0; j < eig.values.size(); ++j) {
    if (eig.values(j) < 1e-14) continue;
    const double w = std::sqrt(eig.values(j)) * inv_sqrt_c;
    for (std::uint64_t c = 0; c < scheme.coeff_count(); ++c) {
      const qlin::Complex amp = w * eig.vectors(scheme.secret_of_coeff(c), j);
      if (std::abs(amp) < 1e-16) continue;
      entries.push_back(qss::SparseEntry{
          scheme.subset_label(c, X),
          static_cast<std::uint64_t>(j) * comp_dim + scheme.subset_label(c, comp), amp});
    }
  }
  return qss::reduced_entropy(entries);
}

std::vector<CheckResult> run_checks(const qss::Scheme& scheme, const VerifyOptions& opts) {
  const std::vector<AccessReport> reports = access::access_structure(scheme);
  std::vector<CheckResult> out;
  out.push_back(check_threshold_pattern(scheme, reports));
  out.push_back(check_monotonicity(scheme, reports));
  out.push_back(check_duality(scheme, reports));
  check_holevo_values(scheme, reports, opts.tol, &out);
  out.push_back(check_entropy_bound(scheme, reports, opts));
  out.push_back(check_share_size_equality(scheme, opts.tol));
  if (scheme.params().L == 1) out.push_back(check_corollary1(scheme, reports, opts.tol));
  check_decoder(scheme, reports, opts, &out);
  check_petz(scheme, reports, opts, &out);
  out.push_back(check_divergence(scheme, reports, opts));
  if (scheme.share_space_dim() <= opts.tamper_dim_limit) {
    out.push_back(check_tamper(scheme, reports, opts));
  }
  return out;
}

bool all_pass(const std::vector<CheckResult>& results) {
  return std::all_of(results.begin(), results.end(),
                     [](const CheckResult& r) { return r.pass; });
}

}  // namespace rqss::verify
