/*
 * Copyright 2026 The rampqss developers.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE file in the root directory of this source tree.
 */

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "rqss/errors.hpp"
#include "rqss/qlin.hpp"

using namespace rqss;
using qlin::Complex;
using qlin::DensityMatrix;
using qlin::Matrix;
using qlin::PureState;
using qlin::Vector;

namespace {

PureState basis_state(qlin::Index i, std::vector<qlin::Index> dims) {
  qlin::Index d = 1;
  for (qlin::Index f : dims) d *= f;
  PureState psi;
  psi.amp = Vector::Zero(d);
  psi.amp(i) = 1.0;
  psi.factor_dims = std::move(dims);
  return psi;
}

}  // namespace

TEST_CASE("tensor of identities and basis states") {
  CHECK(qlin::tensor(Matrix::Identity(2, 2), Matrix::Identity(3, 3))
            .isApprox(Matrix::Identity(6, 6)));

  const PureState ket0 = basis_state(0, {2});
  const PureState ket1 = basis_state(1, {2});
  const PureState prod = qlin::tensor(ket0, ket1);
  CHECK(prod.amp(1) == Complex(1.0, 0.0));  // left factor major

  Matrix a = Matrix::Zero(2, 2), b = Matrix::Zero(2, 2);
  a.diagonal() << 1.0, 2.0;
  b.diagonal() << 3.0, 4.0;
  Matrix expect = Matrix::Zero(4, 4);
  expect.diagonal() << 3.0, 4.0, 6.0, 8.0;
  CHECK(qlin::tensor(a, b).isApprox(expect));
}

TEST_CASE("tensor is associative") {
  Matrix a(2, 2), b(2, 2), c(2, 2);
  a << 1, 2, 3, 4;
  b << 0, 1, 1, 0;
  c << Complex(0, 1), 0, 0, Complex(0, -1);
  CHECK(qlin::tensor(qlin::tensor(a, b), c).isApprox(qlin::tensor(a, qlin::tensor(b, c))));
}

TEST_CASE("partial trace of a product state returns the kept factor") {
  rng::SplitMix gen(5);
  const DensityMatrix rho_a = qlin::random_density({3}, gen);
  const DensityMatrix rho_b = qlin::random_density({4}, gen);
  DensityMatrix joint{qlin::tensor(rho_a.mat, rho_b.mat), {3, 4}};
  CHECK(qlin::partial_trace(joint, {0}).mat.isApprox(rho_a.mat, 1e-12));
  CHECK(qlin::partial_trace(joint, {1}).mat.isApprox(rho_b.mat, 1e-12));
}

TEST_CASE("partial trace of the maximally entangled pair is maximally mixed") {
  const qlin::Index q = 3;
  PureState psi;
  psi.amp = Vector::Zero(q * q);
  for (qlin::Index s = 0; s < q; ++s) psi.amp(s * q + s) = 1.0 / std::sqrt(double(q));
  psi.factor_dims = {q, q};
  const DensityMatrix rho = qlin::projector(psi);
  for (int keep : {0, 1}) {
    const DensityMatrix red = qlin::partial_trace(rho, {keep});
    CHECK(red.mat.isApprox(Matrix::Identity(q, q) / double(q), 1e-12));
  }
}

TEST_CASE("partial trace composes") {
  rng::SplitMix gen(7);
  const DensityMatrix rho = qlin::random_density({2, 3, 2}, gen);
  const DensityMatrix two_step =
      qlin::partial_trace(qlin::partial_trace(rho, {0, 1}), {0});
  const DensityMatrix one_step = qlin::partial_trace(rho, {0});
  CHECK(two_step.mat.isApprox(one_step.mat, 1e-12));
  CHECK(std::abs(one_step.mat.trace().real() - 1.0) < 1e-12);
}

TEST_CASE("partial trace rejects out-of-range factors") {
  rng::SplitMix gen(1);
  const DensityMatrix rho = qlin::random_density({2, 2}, gen);
  CHECK_THROWS_AS(qlin::partial_trace(rho, {2}), ParameterError);
}

TEST_CASE("eig_hermitian basics") {
  const qlin::Index d = 4;
  const auto eye = qlin::eig_hermitian(Matrix::Identity(d, d) / double(d));
  for (qlin::Index i = 0; i < d; ++i) CHECK(eye.values(i) == doctest::Approx(0.25));

  const PureState psi = basis_state(2, {4});
  const auto proj = qlin::eig_hermitian(qlin::projector(psi).mat);
  CHECK(proj.values(0) == doctest::Approx(1.0));
  for (qlin::Index i = 1; i < d; ++i) CHECK(std::abs(proj.values(i)) < 1e-12);
}

TEST_CASE("eig_hermitian reconstructs random Hermitian matrices") {
  rng::SplitMix gen(11);
  for (int t = 0; t < 10; ++t) {
    Matrix h(5, 5);
    for (qlin::Index r = 0; r < 5; ++r) {
      for (qlin::Index c = 0; c < 5; ++c) h(r, c) = Complex(gen.gaussian(), gen.gaussian());
    }
    h = (h + Matrix(h.adjoint())).eval();
    const auto eig = qlin::eig_hermitian(h);
    const Matrix rebuilt =
        eig.vectors * eig.values.asDiagonal().toDenseMatrix().cast<Complex>() *
        eig.vectors.adjoint();
    CHECK((rebuilt - h).cwiseAbs().maxCoeff() < 1e-9);
    for (qlin::Index i = 1; i < 5; ++i) CHECK(eig.values(i - 1) >= eig.values(i));
  }
}

TEST_CASE("eig_hermitian rejects non-Hermitian input") {
  Matrix m(2, 2);
  m << 0, 1, 0, 0;
  CHECK_THROWS_AS(qlin::eig_hermitian(m), ParameterError);
}

TEST_CASE("eigenvalues of a density matrix sum to one") {
  rng::SplitMix gen(13);
  const DensityMatrix rho = qlin::random_density({2, 3}, gen);
  CHECK(qlin::eig_hermitian(rho.mat).values.sum() == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("op_function identity, sqrt, pseudo-inverse sqrt") {
  rng::SplitMix gen(17);
  const DensityMatrix rho = qlin::random_density({4}, gen);
  CHECK(qlin::op_function(rho.mat, [](double x) { return x; }).isApprox(rho.mat, 1e-10));

  const Matrix quarter = Matrix::Identity(4, 4) / 4.0;
  CHECK(qlin::op_function(quarter, [](double x) { return std::sqrt(x); })
            .isApprox(Matrix::Identity(4, 4) / 2.0, 1e-12));

  Matrix d = Matrix::Zero(4, 4);
  d.diagonal() << 0.5, 0.5, 0.0, 0.0;
  Matrix expect = Matrix::Zero(4, 4);
  expect.diagonal() << std::sqrt(2.0), std::sqrt(2.0), 0.0, 0.0;
  const Matrix inv_sqrt =
      qlin::op_function(d, [](double x) { return 1.0 / std::sqrt(x); });
  CHECK(inv_sqrt.isApprox(expect, 1e-12));
}

TEST_CASE("op_function sqrt squares back to the input on its support") {
  rng::SplitMix gen(19);
  const DensityMatrix rho = qlin::random_density({2, 2}, gen);
  const Matrix root = qlin::op_function(rho.mat, [](double x) { return std::sqrt(x); });
  CHECK((root * root - rho.mat).cwiseAbs().maxCoeff() < 1e-8);
}

TEST_CASE("op_function rejects clearly negative eigenvalues") {
  Matrix m = Matrix::Identity(2, 2);
  m(1, 1) = -0.5;
  CHECK_THROWS_AS(qlin::op_function(m, [](double x) { return std::sqrt(x); }), ParameterError);
}

TEST_CASE("trace distance") {
  rng::SplitMix gen(23);
  const DensityMatrix rho = qlin::random_density({3}, gen);
  CHECK(qlin::trace_distance(rho, rho) == doctest::Approx(0.0).epsilon(1e-12));

  const DensityMatrix p0 = qlin::projector(basis_state(0, {2}));
  const DensityMatrix p1 = qlin::projector(basis_state(1, {2}));
  CHECK(qlin::trace_distance(p0, p1) == doctest::Approx(1.0));

  Matrix a = Matrix::Zero(2, 2), b = Matrix::Zero(2, 2);
  a.diagonal() << 0.7, 0.3;
  b.diagonal() << 0.5, 0.5;
  CHECK(qlin::trace_distance(a, b) == doctest::Approx(0.2));
}

TEST_CASE("random unitary is unitary and seeded runs repeat") {
  rng::SplitMix g1(31), g2(31);
  const Matrix u = qlin::random_unitary(6, g1);
  CHECK((u.adjoint() * u).isApprox(Matrix::Identity(6, 6), 1e-10));
  CHECK(qlin::random_unitary(6, g2).isApprox(u, 0.0));
}

TEST_CASE("pack and unpack indices round-trip") {
  const std::vector<qlin::Index> dims = {3, 5, 2};
  for (qlin::Index i = 0; i < 30; ++i) {
    CHECK(qlin::pack_index(qlin::unpack_index(i, dims), dims) == i);
  }
  // leftmost factor slowest
  CHECK(qlin::pack_index({1, 0, 0}, dims) == 10);
}
