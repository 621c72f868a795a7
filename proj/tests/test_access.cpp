/*
 * Copyright 2026 The rampqss developers.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE file in the root directory of this source tree.
 */

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "rqss/access.hpp"
#include "rqss/info.hpp"

using namespace rqss;
using access::AccessClass;
using qss::Scheme;
using qss::SchemeParams;

TEST_CASE("(3,2,1,3): exactly the subsets of size >= 2 are qualified") {
  const Scheme scheme(SchemeParams::make(3, 2, 1));
  for (const auto& r : access::access_structure(scheme)) {
    const AccessClass expect =
        r.subset.size() >= 2 ? AccessClass::kQualified : AccessClass::kForbidden;
    CHECK(r.cls == expect);
  }
}

TEST_CASE("(5,3,2,4): sizes 1 / 2 / >=3 are forbidden / intermediate / qualified") {
  const Scheme scheme(SchemeParams::make(5, 3, 2));
  const auto reports = access::access_structure(scheme);
  CHECK(reports.size() == 15);
  for (const auto& r : reports) {
    AccessClass expect = AccessClass::kIntermediate;
    if (r.subset.size() <= 1) expect = AccessClass::kForbidden;
    if (r.subset.size() >= 3) expect = AccessClass::kQualified;
    CHECK(r.cls == expect);
  }
}

TEST_CASE("(3,2,2,2): no nonempty forbidden set, size-1 intermediate") {
  const Scheme scheme(SchemeParams::make(3, 2, 2));
  for (const auto& r : access::access_structure(scheme)) {
    const AccessClass expect =
        r.subset.size() >= 2 ? AccessClass::kQualified : AccessClass::kIntermediate;
    CHECK(r.cls == expect);
  }
}

TEST_CASE("X = N is qualified and not vanishing") {
  const Scheme scheme(SchemeParams::make(5, 3, 2));
  const std::vector<int> all = {0, 1, 2, 3};
  CHECK(access::is_qualified(scheme, all));
  CHECK_FALSE(access::is_vanishing(scheme, all));
}

TEST_CASE("witnesses accompany failed checks") {
  const Scheme scheme(SchemeParams::make(5, 3, 2));

  access::GramWitness gw;
  CHECK_FALSE(access::is_qualified(scheme, {0, 1}, &gw));
  // replay the witness: that block is not a scalar multiple of I
  const auto g = scheme.gram_counts({0, 1}, gw.a, gw.b);
  bool scalar = true;
  for (qlin::Index s = 0; s < g.rows() && scalar; ++s) {
    for (qlin::Index t = 0; t < g.cols(); ++t) {
      if (g(s, t) != (s == t ? g(0, 0) : 0)) {
        scalar = false;
        break;
      }
    }
  }
  CHECK_FALSE(scalar);

  access::VanishingWitness vw;
  CHECK_FALSE(access::is_vanishing(scheme, {0, 1}, &vw));
  if (!vw.off_diagonal) {
    // the two basis secrets really have distinct reduced states
    qlin::Vector es = qlin::Vector::Zero(25), et = qlin::Vector::Zero(25);
    es(vw.s) = 1.0;
    et(vw.t) = 1.0;
    const auto rs = scheme.reduced_state(qlin::PureState{es, {5, 5}}, {0, 1});
    const auto rt = scheme.reduced_state(qlin::PureState{et, {5, 5}}, {0, 1});
    CHECK(qlin::trace_distance(rs, rt) > 1e-6);
  }
}

TEST_CASE("forbidden subsets have identical reduced states across basis secrets") {
  const Scheme scheme(SchemeParams::make(5, 3, 2));
  const auto r0 = scheme.reduced_state(qlin::PureState{qlin::Vector::Unit(25, 0), {5, 5}}, {2});
  for (qlin::Index s = 1; s < 25; ++s) {
    const auto rs =
        scheme.reduced_state(qlin::PureState{qlin::Vector::Unit(25, s), {5, 5}}, {2});
    CHECK(qlin::trace_distance(r0, rs) < 1e-12);
  }
}

TEST_CASE("monotonicity and duality hold on (5,3,1,5)") {
  const Scheme scheme(SchemeParams::make(5, 3, 1));
  const auto reports = access::access_structure(scheme);
  const std::uint64_t n = scheme.params().n;
  const std::uint64_t full = (1ULL << n) - 1;
  std::vector<int> cls(full + 1, 0);
  for (const auto& r : reports) cls[access::subset_to_mask(r.subset)] = static_cast<int>(r.cls);
  for (std::uint64_t x = 0; x <= full; ++x) {
    for (std::uint64_t y = x;; y = (y + 1) | x) {
      CHECK(cls[y] >= cls[x]);
      if (y == full) break;
    }
    CHECK((cls[x] == 2) == (cls[full & ~x] == 0));
  }
}

TEST_CASE("holevo and entropy values in dits") {
  const Scheme scheme(SchemeParams::make(5, 3, 2));
  for (const auto& r : access::access_structure(scheme)) {
    switch (r.cls) {
      case AccessClass::kQualified:
        CHECK(r.holevo_dits == doctest::Approx(2.0).epsilon(1e-8));
        break;
      case AccessClass::kForbidden:
        CHECK(r.holevo_dits == doctest::Approx(0.0).epsilon(1e-8));
        break;
      case AccessClass::kIntermediate:
        // |X| = k - l with l = 1: leaks L - l = 1 dit
        CHECK(r.holevo_dits == doctest::Approx(1.0).epsilon(1e-8));
        CHECK(r.entropy_dits == doctest::Approx(2.0).epsilon(1e-8));
        break;
    }
  }
}

TEST_CASE("basis_holevo_dits agrees with the dense ensemble computation") {
  const Scheme scheme(SchemeParams::make(3, 2, 1));
  info::Ensemble mu;
  for (qlin::Index s = 0; s < 3; ++s) {
    qlin::Matrix m = qlin::Matrix::Zero(3, 3);
    m(s, s) = 1.0;
    mu.members.push_back({1.0 / 3, qlin::DensityMatrix{m, {3}}});
  }
  for (const auto& x : std::vector<std::vector<int>>{{0}, {0, 1}, {1, 2}, {0, 1, 2}}) {
    const auto channel = [&](const qlin::DensityMatrix& r) {
      return scheme.reduced_state(r, x);
    };
    const double dense = info::holevo(mu, channel).nats / std::log(3.0);
    CHECK(access::basis_holevo_dits(scheme, x) == doctest::Approx(dense).epsilon(1e-8));
  }
}

TEST_CASE("significance") {
  const Scheme scheme(SchemeParams::make(5, 3, 2));
  const auto reports = access::access_structure(scheme);
  const std::uint64_t n = scheme.params().n;
  // forbidden sets have size <= k-L = 1, so X union Y can reach size k = 3
  // only when |X| >= 2: thresholds give significant iff |X| >= L
  for (int i = 0; i < 4; ++i) CHECK_FALSE(access::is_significant(reports, n, {i}));
  CHECK(access::is_significant(reports, n, {0, 3}));
  CHECK_FALSE(access::is_significant(reports, n, {}));
  // qualified sets are significant via Y = empty set
  CHECK(access::is_significant(reports, n, {0, 1, 2}));

  // L = 1: every single share is significant
  const Scheme perfect(SchemeParams::make(3, 2, 1));
  const auto preports = access::access_structure(perfect);
  for (int i = 0; i < 3; ++i) CHECK(access::is_significant(preports, 3, {i}));
}

TEST_CASE("subset/mask round trip") {
  const std::vector<int> subset = {0, 2, 3};
  CHECK(access::subset_to_mask(subset) == 0b1101);
  CHECK(access::mask_to_subset(0b1101, 4) == subset);
}
