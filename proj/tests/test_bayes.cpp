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


#include "frobayes/bayes.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "test_util.hpp"

namespace frobayes::bayes {
namespace {

using testutil::random_density;

const std::vector<double> kJoint = {0.1, 0.2, 0.3, 0.4};

State ab(Backend b, const std::vector<double>& p, std::size_t da = 2, std::size_t db = 2) {
  return classical_state(b, {"A", "B"}, {da, db}, p);
}

State abc(Backend b, const std::vector<double>& p, std::size_t d = 2) {
  return classical_state(b, {"A", "B", "C"}, {d, d, d}, p);
}

void expect_probs(const State& s, const std::vector<double>& want, double eps) {
  const auto got = probabilities(s);
  ASSERT_EQ(got.size(), want.size());
  for (std::size_t i = 0; i < want.size(); ++i) EXPECT_NEAR(got[i], want[i], eps) << i;
}

// p(a|b) = p(a,b) / p(b), zero where p(b) = 0.
std::vector<double> oracle_a_given_b(const std::vector<double>& p, std::size_t da, std::size_t db) {
  std::vector<double> out(p.size());
  for (std::size_t b = 0; b < db; ++b) {
    double pb = 0;
    for (std::size_t a = 0; a < da; ++a) pb += p[a * db + b];
    for (std::size_t a = 0; a < da; ++a) out[a * db + b] = pb > 0 ? p[a * db + b] / pb : 0.0;
  }
  return out;
}

TEST(Bayes, NormalizationExamples) {
  EXPECT_TRUE(is_normalized(classical_state(Backend::standard, {"A"}, {4}, {0.25, 0.25, 0.25, 0.25})));
  EXPECT_FALSE(is_normalized(classical_state(Backend::standard, {"A"}, {2}, {0.5, 0.6})));
  EXPECT_TRUE(is_normalized(quantum_state({"Q"}, {3}, linalg::scale(Mat::identity(3), 1.0 / 3))));
  EXPECT_TRUE(is_normalized(ab(Backend::neglog, kJoint)));
}

TEST(Bayes, MarginalRowSums) {
  expect_probs(marginal(ab(Backend::standard, kJoint), {"A"}), {0.3, 0.7}, 1e-15);
  expect_probs(marginal(ab(Backend::standard, kJoint), {"B"}), {0.4, 0.6}, 1e-15);
  expect_probs(marginal(ab(Backend::standard, kJoint), {"B", "A"}), {0.1, 0.3, 0.2, 0.4}, 1e-15);
  EXPECT_THROW(marginal(ab(Backend::standard, kJoint), {"Z"}), NameError);
}

TEST(Bayes, QuantumMarginalOfProduct) {
  std::mt19937_64 rng(1);
  const Mat ra = random_density(rng, 2), rb = random_density(rng, 3);
  const State s = quantum_state({"A", "B"}, {2, 3}, linalg::tensor(ra, rb));
  EXPECT_LT(linalg::max_abs_diff(marginal(s, {"A"}).rho, ra), 1e-14);
  EXPECT_LT(linalg::max_abs_diff(marginal(s, {"B"}).rho, rb), 1e-14);
  EXPECT_LT(linalg::max_abs_diff(marginal(s, {"B", "A"}).rho, linalg::tensor(rb, ra)), 1e-14);
}

TEST(Bayes, ConditionalTwoByTwo) {
  const State c = conditional(ab(Backend::standard, kJoint), {"A"}, {"B"});
  expect_probs(c, {0.25, 1.0 / 3, 0.75, 2.0 / 3}, 1e-15);
  EXPECT_EQ(c.givens(), ObjectList{"B"});
  EXPECT_THROW(conditional(ab(Backend::standard, kJoint), {"A"}, {"A"}), DomainError);
}

TEST(Bayes, NeglogConditioningIsSubtraction) {
  const State joint = ab(Backend::neglog, kJoint);
  const State c = conditional(joint, {"A"}, {"B"});
  const State b = marginal(joint, {"B"});
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t j = 0; j < 2; ++j) {
      EXPECT_NEAR(c.values(a * 2 + j, 0), joint.values(a * 2 + j, 0) - b.values(j, 0), 1e-14);
    }
}

TEST(Bayes, ModifierExamples) {
  const State s = classical_state(Backend::standard, {"A"}, {3}, {0.5, 0.25, 0.0});
  const State one = unit(Backend::standard, {"A"}, {3});
  expect_probs(apply(modifier_of(s), one), {0.5, 0.25, 0.0}, 0);
  expect_probs(apply(modifier_inverse(modifier_of(s)), one), {2.0, 4.0, 0.0}, 0);

  std::mt19937_64 rng(2);
  const Mat rho = random_density(rng, 3);
  const State q = quantum_state({"Q"}, {3}, rho);
  EXPECT_LT(linalg::max_abs_diff(apply(modifier_of(q), unit(Backend::quantum, {"Q"}, {3})).rho, rho),
            1e-10);
  const State mixed = quantum_state({"Q"}, {3}, linalg::scale(Mat::identity(3), 1.0 / 3));
  const State x = quantum_state({"Q"}, {3}, rho);
  EXPECT_LT(linalg::max_abs_diff(apply(modifier_of(mixed), x).rho, linalg::scale(rho, 1.0 / 3)),
            1e-14);
}

TEST(Bayes, ModifierInverseIsSupportProjection) {
  std::mt19937_64 rng(3);
  for (std::size_t rank : {3u, 2u}) {
    const Mat rho = random_density(rng, 3, rank);
    const State s = quantum_state({"Q"}, {3}, rho);
    const Mat y = testutil::random_hermitian(rng, 3);
    const State x = quantum_state({"Q"}, {3}, y);
    const State back = apply(modifier_of(s), apply(modifier_inverse(modifier_of(s)), x));
    const Mat p = linalg::support_proj(rho);
    EXPECT_LT(linalg::max_abs_diff(back.rho, linalg::matmul(linalg::matmul(p, y), p)), 1e-9);
  }
}

TEST(Bayes, ClassicalModifiersCommuteQuantumDoNot) {
  std::mt19937_64 rng(4);
  const State s = classical_state(Backend::standard, {"A"}, {3}, testutil::random_simplex(rng, 3));
  const State t = classical_state(Backend::standard, {"A"}, {3}, testutil::random_simplex(rng, 3));
  const State x = classical_state(Backend::standard, {"A"}, {3}, testutil::random_simplex(rng, 3));
  EXPECT_LT(distance(apply(modifier_of(s), apply(modifier_of(t), x)),
                     apply(modifier_of(t), apply(modifier_of(s), x))), 1e-15);
  const State r = quantum_state({"Q"}, {2}, random_density(rng, 2));
  const State q = quantum_state({"Q"}, {2}, random_density(rng, 2));
  const State y = quantum_state({"Q"}, {2}, random_density(rng, 2));
  EXPECT_GT(distance(apply(modifier_of(r), apply(modifier_of(q), y)),
                     apply(modifier_of(q), apply(modifier_of(r), y))), 1e-6);
}

TEST(Bayes, ClassicalStatesMultiplyCommutatively) {
  std::mt19937_64 rng(5);
  const State s = classical_state(Backend::standard, {"A"}, {4}, testutil::random_simplex(rng, 4));
  const State t = classical_state(Backend::standard, {"A"}, {4}, testutil::random_simplex(rng, 4));
  EXPECT_EQ(distance(product(s, t), product(t, s)), 0.0);
}

TEST(Bayes, ConditionalOracleWithGaps) {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t da = 2 + trial % 4, db = 2 + (trial / 4) % 4;
    const auto p = testutil::random_joint_with_gaps(rng, da, db);
    expect_probs(conditional(ab(Backend::standard, p, da, db), {"A"}, {"B"}),
                 oracle_a_given_b(p, da, db), 1e-15);
  }
}

TEST(Bayes, QuantumConditionalIsCdo) {
  std::mt19937_64 rng(7);
  const Mat rho = random_density(rng, 6);
  const State c = conditional(quantum_state({"A", "B"}, {2, 3}, rho), {"A"}, {"B"});
  const std::vector<std::size_t> dims{2, 3};
  EXPECT_LT(linalg::max_abs_diff(linalg::partial_trace(c.rho, dims, 0), Mat::identity(3)), 1e-10);
  EXPECT_GT(linalg::min_eigenvalue(c.rho), -1e-10);
}

TEST(Bayes, QuantumProductConditional) {
  std::mt19937_64 rng(8);
  const Mat ra = random_density(rng, 2), rb = random_density(rng, 2);
  const State s = quantum_state({"A", "B"}, {2, 2}, linalg::tensor(ra, rb));
  const State c = conditional(s, {"A"}, {"B"});
  EXPECT_LT(linalg::max_abs_diff(c.rho, linalg::tensor(ra, Mat::identity(2))), 1e-10);
  const State cba = conditional(s, {"B"}, {"A"});
  const State inv = bayes_invert(cba, marginal(s, {"A"}), marginal(s, {"B"}));
  EXPECT_LT(distance(inv, c), 1e-10);
}

TEST(Bayes, ClassicalBayesRoundTrip) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t da = 2 + trial % 4, db = 2 + (trial / 3) % 4;
    const auto p = testutil::random_joint_with_gaps(rng, da, db);
    for (Backend b : {Backend::standard, Backend::neglog}) {
      const State s = ab(b, p, da, db);
      const State inv = bayes_invert(conditional(s, {"B"}, {"A"}), marginal(s, {"A"}), marginal(s, {"B"}));
      EXPECT_LT(distance(inv, conditional(s, {"A"}, {"B"})), 1e-12);
      expect_probs(inv, oracle_a_given_b(p, da, db), 1e-12);
    }
  }
}

TEST(Bayes, QuantumBayesRule) {
  std::mt19937_64 rng(10);
  for (std::size_t rank : {4u, 2u}) {
    const State s = quantum_state({"A", "B"}, {2, 2}, random_density(rng, 4, rank));
    const State inv = bayes_invert(conditional(s, {"B"}, {"A"}), marginal(s, {"A"}), marginal(s, {"B"}));
    EXPECT_LT(distance(inv, conditional(s, {"A"}, {"B"})), 1e-8);
  }
}

TEST(Bayes, InversionIsAnInvolutionOnSupports) {
  std::mt19937_64 rng(11);
  const auto p = testutil::random_joint_with_gaps(rng, 3, 3);
  const State s = ab(Backend::standard, p, 3, 3);
  const State pa = marginal(s, {"A"}), pb = marginal(s, {"B"});
  const State c = conditional(s, {"B"}, {"A"});
  const State twice = bayes_invert(bayes_invert(c, pa, pb), pb, pa);
  EXPECT_LT(distance(twice, c), 1e-12);
}

TEST(Bayes, ChainRule) {
  std::mt19937_64 rng(12);
  const State s = abc(Backend::standard, testutil::random_simplex(rng, 8));
  const State c = conditional(s, {"A"}, {"B", "C"});
  EXPECT_LT(distance(apply(modifier_of(marginal(s, {"B", "C"})), c), s), 1e-15);
  const State q = quantum_state({"A", "B"}, {2, 2}, random_density(rng, 4));
  const State cq = conditional(q, {"A"}, {"B"});
  EXPECT_LT(distance(apply(modifier_of(marginal(q, {"B"})), cq), q), 1e-10);
}

TEST(Bayes, ProcessRoundTrip) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 3; ++trial) {
    const auto p = testutil::random_simplex(rng, 6);
    const State c = conditional(ab(Backend::standard, p, 2, 3), {"A"}, {"B"});
    const Process f = to_process(c);
    ASSERT_EQ(f.classical.rows(), 2u);
    ASSERT_EQ(f.classical.cols(), 3u);
    // The process is the stochastic matrix f(a, b) = p(a|b).
    const auto want = oracle_a_given_b(p, 2, 3);
    for (std::size_t a = 0; a < 2; ++a)
      for (std::size_t b = 0; b < 3; ++b) EXPECT_NEAR(f.classical(a, b), want[a * 3 + b], 1e-15);
    EXPECT_LT(distance(to_state(f), c), 1e-12);
  }
  const State q = quantum_state({"A", "B"}, {2, 2}, random_density(rng, 4));
  const State cq = conditional(q, {"A"}, {"B"});
  EXPECT_LT(distance(to_state(to_process(cq)), cq), 1e-12);
}

TEST(Bayes, ModifiedTransposeTwoObjects) {
  std::mt19937_64 rng(14);
  for (Backend b : {Backend::standard, Backend::neglog}) {
    const State s = ab(b, testutil::random_joint_with_gaps(rng, 3, 3), 3, 3);
    const Process f = to_process(conditional(s, {"B"}, {"A"}));
    const State via_transpose = to_state(modified_transpose(f, s, {"B"}, {"A"}));
    const State via_bayes = bayes_invert(conditional(s, {"B"}, {"A"}), marginal(s, {"A"}), marginal(s, {"B"}));
    EXPECT_LT(distance(via_transpose, via_bayes), 1e-10);
  }
  const State q = quantum_state({"A", "B"}, {2, 2}, random_density(rng, 4));
  const Process fq = to_process(conditional(q, {"B"}, {"A"}));
  EXPECT_LT(distance(to_state(modified_transpose(fq, q, {"B"}, {"A"})), conditional(q, {"A"}, {"B"})),
            1e-9);
}

TEST(Bayes, ModifiedTransposeFiveObjects) {
  std::mt19937_64 rng(15);
  const State s = classical_state(Backend::standard, {"A", "B", "C", "D", "E"}, {2, 2, 2, 2, 2},
                                  testutil::random_simplex(rng, 32));
  const Process f = to_process(conditional(s, {"A", "B"}, {"C", "D", "E"}));
  const State got = to_state(modified_transpose(f, s, {"B", "E"}, {"A", "C", "D"}));
  EXPECT_LT(distance(got, conditional(s, {"A", "C", "D"}, {"B", "E"})), 1e-9);
}

TEST(Bayes, CiOnProductJoint) {
  std::mt19937_64 rng(16);
  const auto pa = testutil::random_simplex(rng, 2), pb = testutil::random_simplex(rng, 2),
             pc = testutil::random_simplex(rng, 2);
  std::vector<double> p;
  for (double a : pa)
    for (double b : pb)
      for (double c : pc) p.push_back(a * b * c);
  const State s = abc(Backend::standard, p);
  for (auto v : {CiVariant::CI1_L, CiVariant::CI1_R, CiVariant::CI2_L, CiVariant::CI2_R,
                 CiVariant::F_L, CiVariant::F_R}) {
    EXPECT_TRUE(ci_test(s, {"A"}, {"B"}, {"C"}, v).holds) << ci_name(v);
  }
}

TEST(Bayes, CiOnMarkovChains) {
  std::mt19937_64 rng(17);
  for (std::size_t d : {2u, 3u}) {
    const State s = abc(Backend::standard, testutil::markov_joint(rng, d, d, d), d);
    for (auto v : {CiVariant::CI1_L, CiVariant::CI1_R, CiVariant::CI2_L, CiVariant::CI2_R,
                   CiVariant::F_L, CiVariant::F_R, CiVariant::CI1_L_prime, CiVariant::CI1_R_prime}) {
      const auto r = ci_test(s, {"A"}, {"B"}, {"C"}, v);
      EXPECT_LT(r.residual, 1e-12) << ci_name(v);
    }
  }
}

TEST(Bayes, CiFailsOnGenericJoint) {
  std::mt19937_64 rng(18);
  const State s = abc(Backend::standard, testutil::random_simplex(rng, 8));
  for (auto v : {CiVariant::CI1_L, CiVariant::CI1_R, CiVariant::CI2_L, CiVariant::CI2_R})
    EXPECT_FALSE(ci_test(s, {"A"}, {"B"}, {"C"}, v).holds) << ci_name(v);
  // F_L and F_R hold for every classical joint.
  EXPECT_TRUE(ci_test(s, {"A"}, {"B"}, {"C"}, CiVariant::F_L).holds);
  EXPECT_TRUE(ci_test(s, {"A"}, {"B"}, {"C"}, CiVariant::F_R).holds);
  const auto r = ci_two_imply_third(s, {"A"}, {"B"}, {"C"});
  EXPECT_FALSE(r.violated);
}

TEST(Bayes, CiPrimeMatchesCi1) {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 10; ++trial) {
    const bool ci = trial % 2 == 0;
    const auto p = ci ? testutil::markov_joint(rng, 2, 2, 2) : testutil::random_simplex(rng, 8);
    const State s = abc(Backend::standard, p);
    EXPECT_EQ(ci_test(s, {"A"}, {"B"}, {"C"}, CiVariant::CI1_L).holds,
              ci_test(s, {"A"}, {"B"}, {"C"}, CiVariant::CI1_L_prime).holds);
  }
}

TEST(Bayes, QuantumNoncommutingCiInstance) {
  std::mt19937_64 rng(20);
  const State s = quantum_state({"A", "B", "C"}, {2, 2, 2}, testutil::noncommuting_ci_state(rng, 2, 2, 2));
  ASSERT_TRUE(is_normalized(s));
  const auto l = ci_test(s, {"A"}, {"B"}, {"C"}, CiVariant::CI2_L, Tol{1e-8, 1e-8, 1e-10});
  EXPECT_TRUE(l.holds) << l.residual;
  const auto r = ci_test(s, {"A"}, {"B"}, {"C"}, CiVariant::CI2_R, Tol{1e-8, 1e-8, 1e-10});
  EXPECT_TRUE(r.holds) << r.residual;
  // The marginal on C does not commute with the conditionals.
  const State ac = conditional(s, {"A"}, {"C"});
  const State c = marginal(s, {"C"});
  EXPECT_GT(distance(product(ac, c), product(c, ac)), 1e-3);
  EXPECT_FALSE(ci_two_imply_third(s, {"A"}, {"B"}, {"C"}).violated);
}

TEST(Bayes, QuantumCiVariantsReportedSeparately) {
  std::mt19937_64 rng(21);
  const Mat rac = random_density(rng, 4), rb = random_density(rng, 2);
  // (A, C) entangled with B independent, stored in (A, B, C) order.
  const Mat prod = linalg::permute_operator(linalg::tensor(rac, rb), std::vector<std::size_t>{2, 2, 2},
                                            std::vector<std::size_t>{0, 2, 1});
  const State s = quantum_state({"A", "B", "C"}, {2, 2, 2}, prod);
  const auto l = ci_test(s, {"A"}, {"B"}, {"C"}, CiVariant::CI2_L);
  const auto r = ci_test(s, {"A"}, {"B"}, {"C"}, CiVariant::CI2_R);
  EXPECT_GE(l.residual, 0.0);
  EXPECT_GE(r.residual, 0.0);
  EXPECT_TRUE(ci_test(s, {"B"}, {"A"}, {"C"}, CiVariant::CI1_L).holds);
  EXPECT_FALSE(ci_two_imply_third(s, {"A"}, {"B"}, {"C"}).violated);
}

TEST(Bayes, ClassicalPooling) {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 10; ++trial) {
    const State s = abc(Backend::standard, testutil::markov_joint(rng, 2, 2, 2));
    const State pooled = pool(conditional(s, {"C"}, {"A"}), conditional(s, {"C"}, {"B"}),
                              marginal(s, {"A"}), marginal(s, {"B"}), marginal(s, {"A", "B"}),
                              marginal(s, {"C"}));
    const State direct = conditional(s, {"C"}, {"A", "B"});
    EXPECT_LT(distance(pooled, direct), 1e-10);
    // Componentwise oracle of the pooling formula.
    const auto p = probabilities(s);
    for (std::size_t a = 0; a < 2; ++a)
      for (std::size_t b = 0; b < 2; ++b)
        for (std::size_t c = 0; c < 2; ++c) {
          double pa = 0, pb = 0, pab = 0, pc = 0, pac = 0, pbc = 0;
          for (std::size_t x = 0; x < 2; ++x)
            for (std::size_t y = 0; y < 2; ++y) {
              pa += p[(a * 2 + x) * 2 + y];
              pb += p[(x * 2 + b) * 2 + y];
              pc += p[(x * 2 + y) * 2 + c];
            }
          for (std::size_t x = 0; x < 2; ++x) {
            pab += p[(a * 2 + b) * 2 + x];
            pac += p[(a * 2 + x) * 2 + c];
            pbc += p[(x * 2 + b) * 2 + c];
          }
          const double want = pa * pb / pab * (pac / pa) * (pbc / pb) / pc;
          EXPECT_NEAR(probabilities(pooled)[(c * 2 + a) * 2 + b], want, 1e-12);
        }
  }
}

TEST(Bayes, UninformativePooling) {
  const auto pc = std::vector<double>{0.2, 0.8};
  std::vector<double> p;
  for (double a : {0.5, 0.5})
    for (double b : {0.3, 0.7})
      for (double c : pc) p.push_back(a * b * c);
  const State s = abc(Backend::standard, p);
  const State pooled = pool(conditional(s, {"C"}, {"A"}), conditional(s, {"C"}, {"B"}), marginal(s, {"A"}),
                            marginal(s, {"B"}), marginal(s, {"A", "B"}), marginal(s, {"C"}));
  expect_probs(pooled, {0.2, 0.2, 0.2, 0.2, 0.8, 0.8, 0.8, 0.8}, 1e-12);
}

TEST(Bayes, QuantumPooling) {
  std::mt19937_64 rng(23);
  // Commuting family: a classical CI joint on the diagonal.
  const auto p = testutil::markov_joint(rng, 2, 2, 2);
  const State q = quantum_state({"A", "B", "C"}, {2, 2, 2}, testutil::diagonal_state(p));
  auto pooled = [](const State& s, PoolVariant v) {
    return pool(conditional(s, {"C"}, {"A"}), conditional(s, {"C"}, {"B"}), marginal(s, {"A"}),
                marginal(s, {"B"}), marginal(s, {"A", "B"}), marginal(s, {"C"}), v);
  };
  const State pq = pooled(q, PoolVariant::L);
  EXPECT_LT(distance(pq, conditional(q, {"C"}, {"A", "B"})), 1e-9);
  const State pc = pooled(abc(Backend::standard, p), PoolVariant::L);
  const auto classical = probabilities(pc);
  for (std::size_t i = 0; i < 8; ++i) EXPECT_NEAR(pq.rho(i, i).real(), classical[i], 1e-10);

  const State nc = quantum_state({"A", "B", "C"}, {2, 2, 2}, testutil::noncommuting_ci_state(rng, 2, 2, 2));
  EXPECT_LT(distance(pooled(nc, PoolVariant::L), conditional(nc, {"C"}, {"A", "B"})), 1e-7);
  EXPECT_LT(distance(pooled(nc, PoolVariant::R), conditional(nc, {"C"}, {"A", "B"})), 1e-7);
}

TEST(Bayes, GraphoidAxioms) {
  std::mt19937_64 rng(24);
  // p(x) p(u|x) p(w|x) p(y|x,w): U is independent of (W, Y) given X.
  for (int trial = 0; trial < 5; ++trial) {
    const auto px = testutil::random_simplex(rng, 2);
    std::vector<double> p(16);
    std::vector<std::vector<double>> pu(2), pw(2), py(4);
    for (std::size_t x = 0; x < 2; ++x) {
      pu[x] = testutil::random_simplex(rng, 2);
      pw[x] = testutil::random_simplex(rng, 2);
    }
    for (auto& v : py) v = testutil::random_simplex(rng, 2);
    for (std::size_t u = 0; u < 2; ++u)
      for (std::size_t w = 0; w < 2; ++w)
        for (std::size_t x = 0; x < 2; ++x)
          for (std::size_t y = 0; y < 2; ++y)
            p[((u * 2 + w) * 2 + x) * 2 + y] = px[x] * pu[x][u] * pw[x][w] * py[x * 2 + w][y];
    const State s = classical_state(Backend::standard, {"U", "W", "X", "Y"}, {2, 2, 2, 2}, p);
    for (auto a : {Axiom::symmetry, Axiom::decomposition, Axiom::weak_union, Axiom::contraction}) {
      const auto r = graphoid_check(s, a, {"U"}, {"W"}, {"X"}, {"Y"}, Tol{1e-8, 1e-8, 1e-10});
      EXPECT_TRUE(r.antecedents_hold()) << axiom_name(a);
      EXPECT_TRUE(r.passed()) << axiom_name(a);
    }
  }
}

TEST(Bayes, EntropyExamples) {
  EXPECT_NEAR(entropy(classical_state(Backend::standard, {"A"}, {4}, {0.25, 0.25, 0.25, 0.25})),
              std::log(4.0), 1e-15);
  EXPECT_EQ(entropy(classical_state(Backend::standard, {"A"}, {3}, {0.0, 1.0, 0.0})), 0.0);
  const State s = ab(Backend::standard, kJoint);
  double direct = 0;
  for (double p : kJoint) direct -= p * std::log(p);
  EXPECT_NEAR(entropy(s), direct, 1e-15);
  EXPECT_NEAR(conditional_entropy(s, {"A"}, {"B"}) + entropy(marginal(s, {"B"})), entropy(s), 1e-12);
  EXPECT_NEAR(conditional_entropy(s, {"A"}, {"B"}),
              conditional_entropy(s, {"B"}, {"A"}) + entropy(marginal(s, {"A"})) -
                  entropy(marginal(s, {"B"})),
              1e-12);
  EXPECT_THROW(entropy(quantum_state({"Q"}, {2}, Mat::identity(2))), UnsupportedError);
}

TEST(Bayes, RepresentationIndependence) {
  std::mt19937_64 rng(25);
  for (int trial = 0; trial < 10; ++trial) {
    const auto p = testutil::random_joint_with_gaps(rng, 3, 3);
    const State s = ab(Backend::standard, p, 3, 3), t = ab(Backend::neglog, p, 3, 3);
    EXPECT_LT(distance(marginal(s, {"B"}), marginal(t, {"B"})), 1e-12);
    EXPECT_LT(distance(conditional(s, {"A"}, {"B"}), conditional(t, {"A"}, {"B"})), 1e-12);
    EXPECT_LT(distance(bayes_invert(conditional(s, {"B"}, {"A"}), marginal(s, {"A"}), marginal(s, {"B"})),
                       bayes_invert(conditional(t, {"B"}, {"A"}), marginal(t, {"A"}), marginal(t, {"B"}))),
              1e-12);
  }
}

}  // namespace
}  // namespace frobayes::bayes
