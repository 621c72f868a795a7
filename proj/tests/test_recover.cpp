/*
 * Copyright 2026 The rampqss developers.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE file in the root directory of this source tree.
 */

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "rqss/access.hpp"
#include "rqss/errors.hpp"
#include "rqss/info.hpp"
#include "rqss/recover.hpp"

using namespace rqss;
using qlin::DensityMatrix;
using qlin::Matrix;
using qlin::Vector;
using qss::Scheme;
using qss::SchemeParams;
using recover::KrausChannel;

namespace {

DensityMatrix maximally_mixed(qlin::Index d, std::vector<qlin::Index> dims) {
  return DensityMatrix{Matrix::Identity(d, d) / double(d), std::move(dims)};
}

qlin::PureState basis_secret(const Scheme& scheme, std::uint64_t s) {
  qlin::PureState psi;
  psi.amp = Vector::Unit(scheme.secret_dim(), s);
  psi.factor_dims.assign(scheme.params().L, static_cast<qlin::Index>(scheme.params().q));
  return psi;
}

}  // namespace

TEST_CASE("KrausChannel validation and built-ins") {
  KrausChannel::identity(3).validate();
  KrausChannel::depolarizing(3).validate();
  KrausChannel::dephasing(4).validate();
  rng::SplitMix gen(1);
  KrausChannel::unitary(qlin::random_unitary(4, gen)).validate();

  KrausChannel broken;
  broken.ops.push_back(Matrix::Identity(2, 2) * 0.5);
  CHECK_THROWS_AS(broken.validate(), ParameterError);

  const DensityMatrix rho = qlin::random_density({3}, gen);
  CHECK(KrausChannel::depolarizing(3).apply(rho.mat).isApprox(Matrix::Identity(3, 3) / 3.0,
                                                              1e-12));
  CHECK(KrausChannel::dephasing(3).apply(rho.mat).isApprox(
      Matrix(rho.mat.diagonal().asDiagonal()), 1e-12));
}

TEST_CASE("dual map satisfies the trace pairing") {
  rng::SplitMix gen(2);
  const KrausChannel e = KrausChannel::dephasing(3);
  const DensityMatrix rho = qlin::random_density({3}, gen);
  Matrix y(3, 3);
  for (qlin::Index r = 0; r < 3; ++r) {
    for (qlin::Index c = 0; c < 3; ++c) y(r, c) = qlin::Complex(gen.gaussian(), gen.gaussian());
  }
  const auto lhs = (e.apply(rho.mat) * y).trace();
  const auto rhs = (rho.mat * e.dual_apply(y)).trace();
  CHECK(std::abs(lhs - rhs) < 1e-10);
}

TEST_CASE("share_channel matches reduced_state") {
  const Scheme scheme(SchemeParams::make(3, 2, 1));
  rng::SplitMix gen(3);
  const auto psi = qlin::random_pure_state({3}, gen);
  for (const auto& x : std::vector<std::vector<int>>{{0}, {0, 1}, {1, 2}}) {
    const KrausChannel w = recover::share_channel(scheme, x);
    w.validate();
    const Matrix via_channel = w.apply(psi.amp * psi.amp.adjoint());
    CHECK(via_channel.isApprox(scheme.reduced_state(psi, x).mat, 1e-10));
  }
}

TEST_CASE("decoder permutation is a bijection with exact inverse") {
  const Scheme scheme(SchemeParams::make(5, 3, 2));
  const auto dec = recover::build_decoder(scheme, {0, 2, 3});
  std::vector<bool> hit(dec.perm.size(), false);
  for (std::uint32_t image : dec.perm) {
    CHECK_FALSE(hit[image]);
    hit[image] = true;
  }
}

TEST_CASE("build_decoder rejects wrong subset size") {
  const Scheme scheme(SchemeParams::make(5, 3, 2));
  CHECK_THROWS_AS(recover::build_decoder(scheme, {0, 1}), ParameterError);
  CHECK_THROWS_AS(recover::build_decoder(scheme, {0, 1, 2, 3}), ParameterError);
}

TEST_CASE("(3,2,1,3) basis secrets decode exactly from every size-2 subset") {
  const Scheme scheme(SchemeParams::make(3, 2, 1));
  for (const auto& x : std::vector<std::vector<int>>{{0, 1}, {0, 2}, {1, 2}}) {
    const auto dec = recover::build_decoder(scheme, x);
    for (std::uint64_t s = 0; s < 3; ++s) {
      CHECK(dec.decode_basis_exact(scheme, s));
      const auto rho_x = scheme.reduced_state(basis_secret(scheme, s), x);
      const auto out = dec.decode(rho_x);
      CHECK(std::abs(out.mat(s, s).real() - 1.0) < 1e-12);
    }
  }
}

TEST_CASE("k = L decoder is the step-1 inverse only, no junk factors") {
  const Scheme scheme(SchemeParams::make(3, 2, 2));
  const auto dec = recover::build_decoder(scheme, {0, 1});
  rng::SplitMix gen(5);
  const auto psi = qlin::random_pure_state({3, 3}, gen);
  const auto out = dec.decode(scheme.reduced_state(psi, {0, 1}));
  CHECK(out.dim() == 9);
  CHECK(qlin::fidelity_pure(psi, out) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("random secrets round-trip through every qualified k-subset") {
  for (auto [q, k, L] : std::vector<std::array<std::uint64_t, 3>>{{3, 2, 1}, {5, 3, 2}}) {
    const Scheme scheme(SchemeParams::make(q, k, L));
    const std::uint64_t n = scheme.params().n;
    std::vector<qlin::Index> sdims(L, static_cast<qlin::Index>(q));
    rng::SplitMix gen(7);
    for (std::uint64_t mask = 1; mask < (1ULL << n); ++mask) {
      std::vector<int> x;
      for (std::uint64_t i = 0; i < n; ++i) {
        if (mask & (1ULL << i)) x.push_back(static_cast<int>(i));
      }
      if (x.size() != k) continue;
      const auto dec = recover::build_decoder(scheme, x);
      for (int t = 0; t < 5; ++t) {
        const auto psi = qlin::random_pure_state(sdims, gen);
        const auto out = dec.decode(scheme.reduced_state(psi, x));
        CHECK(qlin::fidelity_pure(psi, out) >= 1.0 - 1e-9);
      }
    }
  }
}

TEST_CASE("maximally mixed secret round-trips by linearity") {
  const Scheme scheme(SchemeParams::make(5, 3, 2));
  const auto sigma = maximally_mixed(25, {5, 5});
  const auto dec = recover::build_decoder(scheme, {1, 2, 3});
  const auto out = dec.decode(scheme.reduced_state(sigma, {1, 2, 3}));
  CHECK(out.mat.isApprox(sigma.mat, 1e-10));
}

TEST_CASE("decode_any uses a size-k sub-subset for larger qualified sets") {
  const Scheme scheme(SchemeParams::make(3, 2, 1));
  rng::SplitMix gen(9);
  const auto psi = qlin::random_pure_state({3}, gen);
  const std::vector<int> all = {0, 1, 2};
  const auto out = recover::decode_any(scheme, all, scheme.reduced_state(psi, all));
  CHECK(qlin::fidelity_pure(psi, out) >= 1.0 - 1e-9);
}

TEST_CASE("Petz map of the identity channel is the identity") {
  rng::SplitMix gen(11);
  const DensityMatrix sigma = qlin::random_density({4}, gen);
  const recover::PetzMap petz(KrausChannel::identity(4), sigma);
  const DensityMatrix rho = qlin::random_density({4}, gen);
  CHECK(petz.apply(rho.mat).isApprox(rho.mat, 1e-9));
}

TEST_CASE("Petz recovery succeeds on qualified subsets") {
  const Scheme scheme(SchemeParams::make(5, 3, 2));
  const auto sigma = maximally_mixed(25, {5, 5});
  const KrausChannel w = recover::share_channel(scheme, {0, 1, 3});
  const recover::PetzMap petz(w, sigma);
  rng::SplitMix gen(13);
  for (int t = 0; t < 5; ++t) {
    const auto psi = qlin::random_pure_state({5, 5}, gen);
    const Matrix rho = psi.amp * psi.amp.adjoint();
    CHECK(qlin::trace_distance(petz.apply(w.apply(rho)), rho) <= 1e-8);
  }
}

TEST_CASE("Petz recovery fails on an intermediate subset for some basis secret") {
  const Scheme scheme(SchemeParams::make(5, 3, 2));
  const auto sigma = maximally_mixed(25, {5, 5});
  const KrausChannel w = recover::share_channel(scheme, {0, 1});
  const recover::PetzMap petz(w, sigma);
  double worst = 0;
  for (std::uint64_t s = 0; s < 25; ++s) {
    Matrix rho = Matrix::Zero(25, 25);
    rho(s, s) = 1.0;
    worst = std::max(worst, qlin::trace_distance(petz.apply(w.apply(rho)), rho));
  }
  CHECK(worst > 0.01);
}

TEST_CASE("Petz map is trace preserving on the support of E(sigma)") {
  const Scheme scheme(SchemeParams::make(3, 2, 1));
  const auto sigma = maximally_mixed(3, {3});
  const KrausChannel w = recover::share_channel(scheme, {0, 1});
  const recover::PetzMap petz(w, sigma);
  // the images E(|i><j|) span the support of E(sigma)
  for (qlin::Index i = 0; i < 3; ++i) {
    for (qlin::Index j = 0; j < 3; ++j) {
      Matrix unit = Matrix::Zero(3, 3);
      unit(i, j) = 1.0;
      const Matrix tau = w.apply(unit);
      CHECK(std::abs(petz.apply(tau).trace() - tau.trace()) < 1e-9);
    }
  }
}

TEST_CASE("divergence equality report") {
  rng::SplitMix gen(17);
  const DensityMatrix rho = qlin::random_density({3}, gen);

  // rho = sigma: zero gap, perfect recovery
  const auto same = recover::check_divergence_equality(rho, rho, KrausChannel::dephasing(3));
  CHECK(same.gap <= 1e-8);
  CHECK(same.recovery_error <= 1e-9);
  CHECK(same.gap_ok);
  CHECK(same.recovery_ok);

  // fully depolarizing with distinct diagonal states: positive gap, failed recovery
  Matrix a = Matrix::Zero(2, 2), b = Matrix::Zero(2, 2);
  a.diagonal() << 0.9, 0.1;
  b.diagonal() << 0.4, 0.6;
  const auto rep = recover::check_divergence_equality(
      DensityMatrix{a, {2}}, DensityMatrix{b, {2}}, KrausChannel::depolarizing(2));
  CHECK(rep.gap > 1e-4);
  CHECK(rep.recovery_error > 1e-4);
  CHECK_FALSE(rep.gap_ok);
  CHECK_FALSE(rep.recovery_ok);

  // disjoint supports: indeterminate
  Matrix p0 = Matrix::Zero(2, 2), p1 = Matrix::Zero(2, 2);
  p0(0, 0) = 1.0;
  p1(1, 1) = 1.0;
  const auto inf = recover::check_divergence_equality(
      DensityMatrix{p0, {2}}, DensityMatrix{p1, {2}}, KrausChannel::identity(2));
  CHECK(inf.indeterminate);
}

TEST_CASE("monotonicity gap is never significantly negative") {
  rng::SplitMix gen(19);
  const KrausChannel channels[] = {KrausChannel::identity(3), KrausChannel::dephasing(3),
                                   KrausChannel::depolarizing(3)};
  for (int t = 0; t < 60; ++t) {
    const DensityMatrix rho = qlin::random_density({3}, gen);
    const DensityMatrix sigma = qlin::random_density({3}, gen);
    const auto rep = recover::check_divergence_equality(rho, sigma, channels[t % 3]);
    if (!rep.indeterminate) CHECK(rep.gap >= -1e-8);
  }
}

TEST_CASE("tamper_check: adversary on the complement cannot disturb decoding") {
  const Scheme scheme(SchemeParams::make(3, 2, 1));
  rng::SplitMix gen(23);
  const auto psi = qlin::random_pure_state({3}, gen);
  const DensityMatrix secret{psi.amp * psi.amp.adjoint(), {3}};
  const std::vector<int> x = {0, 1};

  const auto ident = recover::tamper_check(scheme, x, KrausChannel::identity(3), secret);
  CHECK(ident.recovery_error <= 1e-9);

  const auto dephased = recover::tamper_check(scheme, x, KrausChannel::dephasing(3), secret);
  CHECK(dephased.recovery_error <= 1e-9);

  for (int t = 0; t < 5; ++t) {
    const auto u = KrausChannel::unitary(qlin::random_unitary(3, gen));
    CHECK(recover::tamper_check(scheme, x, u, secret).recovery_error <= 1e-9);
  }
}

TEST_CASE("tamper_check refuses oversized global states") {
  const Scheme scheme(SchemeParams::make(7, 3, 1));  // 7^5 = 16807
  const DensityMatrix secret = maximally_mixed(7, {7});
  CHECK_THROWS_AS(
      recover::tamper_check(scheme, {0, 1, 2}, KrausChannel::identity(49), secret),
      ParameterError);
}
