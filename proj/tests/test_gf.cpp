/*
 * Copyright 2026 The rampqss developers.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE file in the root directory of this source tree.
 */

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "rqss/errors.hpp"
#include "rqss/gf.hpp"
#include "rqss/rng.hpp"

using namespace rqss;
using gf::Fp;
using gf::FpMatrix;

namespace {

gf::CoeffVector coeffs(std::initializer_list<std::uint64_t> vals, std::uint64_t q) {
  gf::CoeffVector c;
  for (std::uint64_t v : vals) c.emplace_back(v, q);
  return c;
}

FpMatrix from_rows(const std::vector<std::vector<std::uint64_t>>& rows, std::uint64_t q) {
  FpMatrix m(rows.size(), rows[0].size(), q);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < rows[r].size(); ++c) m.set(r, c, rows[r][c]);
  }
  return m;
}

}  // namespace

TEST_CASE("field axioms hold exhaustively for small primes") {
  for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL}) {
    for (std::uint64_t a = 0; a < q; ++a) {
      for (std::uint64_t b = 1; b < q; ++b) {
        const Fp x(a, q), y(b, q);
        CHECK((x * y * y.inv()).value() == a);
        CHECK((x + (-x)).value() == 0);
      }
    }
  }
}

TEST_CASE("is_prime") {
  CHECK(gf::is_prime(2));
  CHECK(gf::is_prime(7));
  CHECK(gf::is_prime(13));
  CHECK_FALSE(gf::is_prime(1));
  CHECK_FALSE(gf::is_prime(9));
}

TEST_CASE("poly_eval trivial cases") {
  const std::uint64_t q = 7;
  for (std::uint64_t x = 0; x < q; ++x) {
    CHECK(gf::poly_eval(coeffs({0, 0, 0}, q), Fp(x, q)).value() == 0);
    CHECK(gf::poly_eval(coeffs({4, 0, 0}, q), Fp(x, q)).value() == 4);
  }
}

TEST_CASE("poly_eval hand arithmetic") {
  // 1 + 2*2 + 3*4 = 17 = 2 mod 5
  CHECK(gf::poly_eval(coeffs({1, 2, 3}, 5), Fp(2, 5)).value() == 2);
}

TEST_CASE("poly_eval rejects modulus mismatch") {
  CHECK_THROWS_AS(gf::poly_eval(coeffs({1, 2}, 5), Fp(1, 7)), ParameterError);
}

TEST_CASE("vandermonde power tables") {
  const auto one = gf::vandermonde({Fp(3, 5)}, 0, 0);
  CHECK(one.at(0, 0) == 1);

  const auto m01 = gf::vandermonde({Fp(1, 5), Fp(2, 5)}, 0, 1);
  CHECK(m01 == from_rows({{1, 1}, {1, 2}}, 5));

  const auto m12 = gf::vandermonde({Fp(1, 5), Fp(2, 5), Fp(3, 5)}, 1, 2);
  CHECK(m12 == from_rows({{1, 2, 3}, {1, 4, 4}}, 5));
}

TEST_CASE("vandermonde rejects duplicate points") {
  CHECK_THROWS_AS(gf::vandermonde({Fp(1, 5), Fp(1, 5)}, 0, 1), ParameterError);
}

TEST_CASE("inverse worked examples") {
  CHECK(from_rows({{1, 1}, {1, 2}}, 5).inverse() == from_rows({{2, 4}, {4, 1}}, 5));
  CHECK(from_rows({{1, 1}, {1, 2}}, 3).inverse() == from_rows({{2, 2}, {2, 1}}, 3));
  const auto id = FpMatrix::identity(4, 7);
  CHECK(id.inverse() == id);
}

TEST_CASE("inverse of singular matrix reports rank") {
  const auto m = from_rows({{1, 2}, {2, 4}}, 5);
  try {
    m.inverse();
    FAIL("expected SingularMatrixError");
  } catch (const SingularMatrixError& e) {
    CHECK(e.rank() == 1);
  }
}

TEST_CASE("random invertible matrices round-trip through inverse") {
  rng::SplitMix gen(42);
  for (std::uint64_t q : {3ULL, 5ULL, 7ULL}) {
    int done = 0;
    while (done < 100) {
      FpMatrix m(3, 3, q);
      for (std::size_t r = 0; r < 3; ++r) {
        for (std::size_t c = 0; c < 3; ++c) m.set(r, c, gen.below(q));
      }
      if (m.rank() < 3) continue;
      CHECK(m * m.inverse() == FpMatrix::identity(3, q));
      CHECK(m.inverse() * m == FpMatrix::identity(3, q));
      ++done;
    }
  }
}

TEST_CASE("full_column_rank basics") {
  CHECK_FALSE(FpMatrix(3, 2, 5).full_column_rank());  // zero matrix
  CHECK(from_rows({{1, 2}, {1, 4}}, 5).full_column_rank());
}

TEST_CASE("square Vandermonde on distinct points is invertible") {
  // k distinct points, rows x^0..x^(k-1): classic nonzero determinant.
  for (std::uint64_t q : {3ULL, 5ULL, 7ULL}) {
    std::vector<Fp> pts;
    for (std::uint64_t x = 0; x < q; ++x) pts.emplace_back(x, q);
    for (std::size_t k = 2; k <= q && k <= 4; ++k) {
      const auto m = gf::vandermonde(std::vector<Fp>(pts.begin(), pts.begin() + k), 0, k - 1);
      CHECK(m.full_column_rank());
    }
  }
}

TEST_CASE("rows x^L..x^(k-1) on k-L distinct nonzero points are invertible") {
  // Factoring x^L out of each column leaves a genuine Vandermonde block, so
  // the square case of the injectivity step never degenerates away from 0.
  for (std::uint64_t q : {5ULL, 7ULL}) {
    const std::uint64_t k = 3;
    for (std::uint64_t L = 1; L < k; ++L) {
      const std::size_t m = k - L;
      std::vector<Fp> pts;
      for (std::uint64_t x = 1; pts.size() < m; ++x) pts.emplace_back(x, q);
      const auto mat = gf::vandermonde(pts, L, k - 1);
      CHECK(mat.rows() == m);
      CHECK(mat.full_column_rank());
      CHECK(mat * mat.inverse() == FpMatrix::identity(m, q));
    }
  }
}

TEST_CASE("row-vector evaluation map matches poly_eval") {
  const std::uint64_t q = 7;
  std::vector<Fp> pts = {Fp(0, q), Fp(2, q), Fp(5, q)};
  const auto m = gf::vandermonde(pts, 0, 2);  // rows x^0, x^1, x^2
  rng::SplitMix gen(9);
  for (int t = 0; t < 50; ++t) {
    std::vector<std::uint64_t> c = {gen.below(q), gen.below(q), gen.below(q)};
    const auto image = m.apply_row(c);
    for (std::size_t j = 0; j < pts.size(); ++j) {
      const auto expect =
          gf::poly_eval(coeffs({c[0], c[1], c[2]}, q), pts[j]);
      CHECK(image[j] == expect.value());
    }
  }
}
