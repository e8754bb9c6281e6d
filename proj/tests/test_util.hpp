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


#pragma once

#include <complex>
#include <algorithm>
#include <numeric>
#include <random>
#include <string>

#include "frobayes/diagram.hpp"
#include "frobayes/linalg.hpp"
#include "frobayes/rewrite.hpp"

namespace frobayes::testutil {

using linalg::Complex;
using linalg::Mat;

inline Mat random_mat(std::mt19937_64& rng, std::size_t r, std::size_t c) {
  std::normal_distribution<double> n(0.0, 1.0);
  Mat m(r, c);
  for (auto& x : m.data()) x = Complex(n(rng), n(rng));
  return m;
}

inline Mat random_hermitian(std::mt19937_64& rng, std::size_t n) {
  const Mat g = random_mat(rng, n, n);
  return linalg::scale(linalg::add(g, linalg::dagger(g)), 0.5);
}

/// g g^dagger / tr, with g of shape n x rank.
inline Mat random_density(std::mt19937_64& rng, std::size_t n, std::size_t rank) {
  const Mat g = random_mat(rng, n, rank);
  const Mat p = linalg::matmul(g, linalg::dagger(g));
  return linalg::scale(p, 1.0 / linalg::trace(p).real());
}

inline Mat random_density(std::mt19937_64& rng, std::size_t n) {
  return random_density(rng, n, n);
}

/// Straight triple-loop product, independent of the library kernels.
inline Mat naive_matmul(const Mat& a, const Mat& b) {
  Mat out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j)
      for (std::size_t k = 0; k < a.cols(); ++k) out(i, j) += a(i, k) * b(k, j);
  return out;
}

inline std::vector<double> random_simplex(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> u(0.05, 1.0);
  std::vector<double> p(n);
  double s = 0;
  for (auto& x : p) s += (x = u(rng));
  for (auto& x : p) x /= s;
  return p;
}

using rewrite::random_spider_network;

/// Random distribution on `n` outcomes; with `zeros`, some entries vanish.
inline std::vector<double> random_distribution(std::mt19937_64& rng, std::size_t n,
                                               bool zeros = false) {
  auto p = random_simplex(rng, n);
  if (zeros) {
    std::bernoulli_distribution drop(0.3);
    double s = 0;
    for (auto& x : p) s += (x = drop(rng) ? 0.0 : x);
    if (s == 0) p.assign(n, 0.0), p[0] = s = 1.0;
    for (auto& x : p) x /= s;
  }
  return p;
}

/// Joint over (A, B) with whole columns b (and rows a) of zeros.
inline std::vector<double> random_joint_with_gaps(std::mt19937_64& rng, std::size_t da,
                                                  std::size_t db) {
  auto p = random_simplex(rng, da * db);
  std::uniform_int_distribution<std::size_t> pick_b(0, db - 1), pick_a(0, da - 1);
  const std::size_t zb = pick_b(rng), za = pick_a(rng);
  for (std::size_t a = 0; a < da; ++a) p[a * db + zb] = 0;
  if (da > 2) for (std::size_t b = 0; b < db; ++b) p[za * db + b] = 0;
  double s = 0;
  for (double x : p) s += x;
  for (auto& x : p) x /= s;
  return p;
}

/// p(a, b, c) = p(c) p(a|c) p(b|c), row-major over (A, B, C).
inline std::vector<double> markov_joint(std::mt19937_64& rng, std::size_t da, std::size_t db,
                                        std::size_t dc) {
  const auto pc = random_simplex(rng, dc);
  std::vector<std::vector<double>> pa(dc), pb(dc);
  for (std::size_t c = 0; c < dc; ++c) {
    pa[c] = random_simplex(rng, da);
    pb[c] = random_simplex(rng, db);
  }
  std::vector<double> p(da * db * dc);
  for (std::size_t a = 0; a < da; ++a)
    for (std::size_t b = 0; b < db; ++b)
      for (std::size_t c = 0; c < dc; ++c) p[(a * db + b) * dc + c] = pc[c] * pa[c][a] * pb[c][b];
  return p;
}

/// rho_ABC = sqrt(rho_C) X sqrt(rho_C) with X = sum_c alpha_c (x) beta_c (x) |c><c|
/// and a generic (non-diagonal) rho_C, so rho_AB|C = rho_B|C rho_A|C while
/// rho_C does not commute with the conditionals.
inline Mat noncommuting_ci_state(std::mt19937_64& rng, std::size_t da, std::size_t db,
                                 std::size_t dc) {
  const std::size_t n = da * db * dc;
  Mat x(n, n);
  for (std::size_t c = 0; c < dc; ++c) {
    Mat proj(dc, dc);
    proj(c, c) = 1.0;
    const Mat term = linalg::tensor(linalg::tensor(random_density(rng, da), random_density(rng, db)), proj);
    x = linalg::add(x, term);
  }
  const Mat root = linalg::embed_operator(linalg::psd_sqrt(random_density(rng, dc)),
                                          std::vector<std::size_t>{da, db, dc},
                                          std::vector<std::size_t>{2});
  return linalg::matmul(linalg::matmul(root, x), root);
}

/// Classical distribution on the diagonal of an operator.
inline Mat diagonal_state(const std::vector<double>& p) { return linalg::diag(p); }

}  // namespace frobayes::testutil
