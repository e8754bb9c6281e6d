// Copyright 2026 The frobayes Authors
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


#include "frobayes/dcc.hpp"

#include <gtest/gtest.h>

#include "test_util.hpp"

namespace frobayes::dcc {
namespace {

using testutil::random_density;
using testutil::random_mat;

double gap(const DMorphism& a, const DMorphism& b) {
  EXPECT_EQ(a.dom, b.dom);
  EXPECT_EQ(a.cod, b.cod);
  return linalg::max_abs_diff(a.tensor, b.tensor);
}

Mat pauli_x() { return Mat(2, 2, std::vector<linalg::Complex>{0, 1, 1, 0}); }
Mat pauli_z() { return Mat(2, 2, std::vector<linalg::Complex>{1, 0, 0, -1}); }

TEST(Dcc, LayoutsRoundTrip) {
  std::mt19937_64 rng(1);
  const std::vector<std::size_t> dims{2, 3};
  const Mat m = random_mat(rng, 36, 2);
  for (auto from : {Layout::nested, Layout::pair, Layout::row_major})
    for (auto to : {Layout::nested, Layout::pair, Layout::row_major}) {
      EXPECT_EQ(relayout_rows(relayout_rows(m, dims, from, to), dims, to, from), m);
    }
}

TEST(Dcc, TensorOfIdentities) {
  EXPECT_EQ(gap(d_tensor(d_identity({2}), d_identity({3})), d_identity({2, 3})), 0.0);
}

TEST(Dcc, FunctorPreservesCompositionAndTensor) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 20; ++trial) {
    const Mat f = random_mat(rng, 3, 2), g = random_mat(rng, 2, 3), h = random_mat(rng, 2, 2);
    EXPECT_LT(gap(F(linalg::matmul(f, g), {3}, {3}), d_compose(F(g, {3}, {2}), F(f, {2}, {3}))), 1e-12);
    EXPECT_LT(gap(F(linalg::tensor(f, h), {2, 2}, {3, 2}), d_tensor(F(f, {2}, {3}), F(h, {2}, {2}))), 1e-12);
  }
}

TEST(Dcc, TensorMatchesInterleavingOracle) {
  // d_tensor(F f, F g) reorders kron(f, conj f, g, conj g) to the nested
  // composite layout (P_f, P_g, D_g, D_f).
  std::mt19937_64 rng(3);
  const Mat f = random_mat(rng, 2, 2), g = random_mat(rng, 2, 2);
  const DMorphism t = d_tensor(F(f, {2}, {2}), F(g, {2}, {2}));
  const Mat fg = linalg::tensor(f, g);
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b)
      for (std::size_t bs = 0; bs < 2; ++bs)
        for (std::size_t as = 0; as < 2; ++as)
          for (std::size_t c = 0; c < 2; ++c)
            for (std::size_t d = 0; d < 2; ++d)
              for (std::size_t ds = 0; ds < 2; ++ds)
                for (std::size_t cs = 0; cs < 2; ++cs) {
                  const std::size_t row = ((a * 2 + b) * 2 + bs) * 2 + as;
                  const std::size_t col = ((c * 2 + d) * 2 + ds) * 2 + cs;
                  const auto want = fg(a * 2 + b, c * 2 + d) * std::conj(fg(as * 2 + bs, cs * 2 + ds));
                  EXPECT_LT(std::abs(t.tensor(row, col) - want), 1e-14);
                }
}

TEST(Dcc, TensorOfStatesIsProductOperator) {
  std::mt19937_64 rng(4);
  const Mat rho = random_density(rng, 2), sigma = random_density(rng, 3);
  const DMorphism s = d_tensor(xi(rho), xi(sigma));
  EXPECT_LT(linalg::max_abs_diff(xi_inv(s), linalg::tensor(rho, sigma)), 1e-14);
}

TEST(Dcc, XiRoundTripAndUnit) {
  std::mt19937_64 rng(5);
  for (std::size_t d : {2u, 3u, 4u}) {
    const Mat rho = random_mat(rng, d, d);
    EXPECT_LT(linalg::max_abs_diff(xi_inv(xi(rho)), rho), 1e-13);
    EXPECT_EQ(gap(xi(Mat::identity(d)), f_unit(d)), 0.0);
  }
}

TEST(Dcc, MultIsOperatorProduct) {
  std::mt19937_64 rng(6);
  for (std::size_t d : {2u, 3u}) {
    const Mat rho = random_mat(rng, d, d), sigma = random_mat(rng, d, d);
    const DMorphism lhs = d_compose(d_tensor(xi(rho), xi(sigma)), f_mult(d));
    EXPECT_LT(gap(lhs, xi(linalg::matmul(rho, sigma))), 1e-12);
  }
}

TEST(Dcc, MultScalarAndNoncommutative) {
  const DMorphism m1 = f_mult(1);
  EXPECT_EQ(m1.tensor.rows(), 1u);
  EXPECT_EQ(m1.tensor(0, 0), linalg::Complex(1));
  const DMorphism xz = d_tensor(xi(pauli_x()), xi(pauli_z()));
  const DMorphism direct = d_compose(xz, f_mult(2));
  const DMorphism swapped = d_compose(d_compose(xz, d_swap(2, 2)), f_mult(2));
  EXPECT_GT(linalg::max_abs_diff(direct.tensor, swapped.tensor), 0.5);
}

TEST(Dcc, FrobeniusLaws) {
  for (std::size_t d : {2u, 3u}) {
    const DMorphism m = f_mult(d), u = f_unit(d), c = f_comult(d), id = d_identity({d});
    EXPECT_LT(gap(d_compose(d_tensor(m, id), m), d_compose(d_tensor(id, m), m)), 1e-12);
    EXPECT_LT(gap(d_compose(d_tensor(u, id), m), id), 1e-12);
    EXPECT_LT(gap(d_compose(d_tensor(id, u), m), id), 1e-12);
    const DMorphism dm = d_compose(m, c);
    EXPECT_LT(gap(d_compose(d_tensor(c, id), d_tensor(id, m)), dm), 1e-12);
    EXPECT_LT(gap(d_compose(d_tensor(id, c), d_tensor(m, id)), dm), 1e-12);
  }
}

TEST(Dcc, InducedCupIsCommutative) {
  for (std::size_t d : {2u, 3u}) {
    const DMorphism cup = d_compose(f_unit(d), f_comult(d));
    EXPECT_LT(gap(d_compose(cup, d_swap(d, d)), cup), 1e-14);
  }
}

TEST(Dcc, PartialTraceSquare) {
  std::mt19937_64 rng(7);
  const Mat rho = random_density(rng, 2), sigma = random_density(rng, 3);
  EXPECT_LT(linalg::max_abs_diff(xi_inv(d_partial_trace(xi(linalg::tensor(rho, sigma), {2, 3}))), rho),
            1e-14);
  for (int trial = 0; trial < 10; ++trial) {
    const Mat r = random_mat(rng, 6, 6);
    const std::vector<std::size_t> dims{2, 3};
    const Mat want = linalg::partial_trace(r, dims, 1);
    EXPECT_LT(linalg::max_abs_diff(xi_inv(d_partial_trace(xi(r, dims))), want), 1e-12);
  }
  const Mat r = random_density(rng, 3);
  const DMorphism scalar = d_partial_trace(xi(r));
  EXPECT_LT(std::abs(scalar.tensor(0, 0) - linalg::trace(r)), 1e-14);
}

TEST(Dcc, CompletelyPositiveChecks) {
  const auto id = is_normalized_cp(d_identity({2}));
  EXPECT_TRUE(id.cp);
  EXPECT_TRUE(id.normalized);
  for (std::size_t d : {2u, 3u}) {
    const auto b = is_normalized_cp(f_comult(d));
    EXPECT_FALSE(b.cp);
    EXPECT_LT(b.min_choi_eigenvalue, -0.1);
  }
  std::mt19937_64 rng(8);
  const auto st = is_normalized_cp(xi(random_density(rng, 3)));
  EXPECT_TRUE(st.cp);
  EXPECT_TRUE(st.normalized);
  EXPECT_FALSE(is_normalized_cp(xi(linalg::scale(random_density(rng, 3), 2.0))).normalized);
}

}  // namespace
}  // namespace frobayes::dcc
