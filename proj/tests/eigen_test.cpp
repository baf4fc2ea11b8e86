// Copyright 2026 The gwcoarsen Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include "gwc/eigen.hpp"
#include "gwc/error.hpp"
#include "gwc/kernels.hpp"
#include "support.hpp"

namespace gwc {
namespace {

Matrix random_symmetric(std::size_t n, Rng& rng) {
  Matrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) a(i, j) = a(j, i) = rng.uniform(-1.0, 1.0);
  return a;
}

TEST(EigenTest, SpecExamples) {
  const Spectrum s = sym_eigvals(Matrix{{2, 1, 1}, {1, 2, 1}, {1, 1, 2}});
  EXPECT_NEAR(s.at1(1), 4.0, 1e-14);
  EXPECT_NEAR(s.at1(2), 1.0, 1e-14);
  EXPECT_NEAR(s.at1(3), 1.0, 1e-14);
  for (double v : sym_eigvals(Matrix::identity(3)).values) EXPECT_DOUBLE_EQ(v, 1.0);
  const double r = std::sqrt(2.0) / 3.0;
  const Spectrum uc = sym_eigvals(Matrix{{2.0 / 3, r}, {r, 1.0}});
  EXPECT_NEAR(uc.values[0], 4.0 / 3.0, 1e-14);
  EXPECT_NEAR(uc.values[1], 1.0 / 3.0, 1e-14);
}

TEST(EigenTest, RejectsAsymmetric) {
  try {
    sym_eig(Matrix{{1, 1}, {0, 1}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotSymmetric);
  }
}

TEST(EigenTest, EmptyAndScalar) {
  EXPECT_EQ(sym_eigvals(Matrix(0, 0)).size(), 0u);
  EXPECT_EQ(sym_eigvals(Matrix{{-3}}).values, Vector{-3});
}

TEST(EigenTest, MatchesEigenOracleAndReconstructs) {
  Rng rng(11);
  for (std::size_t n : {2, 3, 5, 10, 25, 60}) {
    const Matrix a = random_symmetric(n, rng);
    const EigenDecomposition e = sym_eig(a);
    const Vector ref = testing::eigen_values_desc(a);
    for (std::size_t i = 0; i < n; ++i) EXPECT_NEAR(e.spectrum.values[i], ref[i], 1e-11);
    for (std::size_t i = 1; i < n; ++i) EXPECT_GE(e.spectrum.values[i - 1], e.spectrum.values[i]);
    EXPECT_LE(frobenius_norm(a - reconstruct(e)), 1e-9 * frobenius_norm(a));
    const Matrix qtq = mul_at_b(e.vectors, e.vectors);
    EXPECT_LE(max_abs_diff(qtq, Matrix::identity(n)), 1e-12);
  }
}

TEST(EigenTest, ScalarAndSimdBackendsAgree) {
  Rng rng(12);
  const Matrix a = random_symmetric(40, rng);
  const auto before = kernels::active_backend();
  kernels::set_backend(kernels::Backend::Scalar);
  const Vector ref = sym_eigvals(a).values;
  for (auto b : {kernels::Backend::Avx2, kernels::Backend::Neon}) {
    if (!kernels::set_backend(b)) continue;
    const Vector got = sym_eigvals(a).values;
    for (std::size_t i = 0; i < ref.size(); ++i) EXPECT_NEAR(got[i], ref[i], 1e-12);
  }
  kernels::set_backend(before);
}

TEST(EigenTest, RepeatedEigenvalues) {
  // Rank-one plus identity: one simple and n-1 repeated eigenvalues.
  const std::size_t n = 12;
  Matrix a(n, n, 1.0);
  for (std::size_t i = 0; i < n; ++i) a(i, i) += 1.0;
  const EigenDecomposition e = sym_eig(a);
  EXPECT_NEAR(e.spectrum.values[0], n + 1.0, 1e-12);
  for (std::size_t i = 1; i < n; ++i) EXPECT_NEAR(e.spectrum.values[i], 1.0, 1e-12);
  EXPECT_LE(frobenius_norm(a - reconstruct(e)), 1e-12 * frobenius_norm(a));
}

}  // namespace
}  // namespace gwc
