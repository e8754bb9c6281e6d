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


// Scalar semirings for the classical models.  A semiring obtained from a
// monotone bijection f : [0, inf) -> S carries the transported operations
//
//     s (+) t = f(f^-1(s) + f^-1(t)),    s (.) t = f(f^-1(s) * f^-1(t)).
//
// The standard and negative-log cases have closed forms and are dispatched
// without going through std::function.

#pragma once

#include <functional>
#include <random>
#include <string>

#include "frobayes/linalg.hpp"

namespace frobayes::models {

class Semiring {
 public:
  enum class Kind { standard, neglog, custom };

  static Semiring standard();
  /// f = -ln: (+) is -ln(e^-s + e^-t) via log-sum-exp, (.) is +, zero is
  /// +inf and one is 0.
  static Semiring neglog();
  static Semiring from_monotone(std::string name, std::function<double(double)> f,
                                std::function<double(double)> f_inv);

  Kind kind() const noexcept { return kind_; }
  const std::string& name() const noexcept { return name_; }
  double zero() const noexcept { return zero_; }
  double one() const noexcept { return one_; }

  double add(double s, double t) const;
  double mul(double s, double t) const;
  double embed(double p) const;    // probability -> semiring
  double extract(double s) const;  // semiring -> probability

  /// Inverse relative to the support: the image of 1/p for p != 0, zero
  /// for zero.
  double support_inverse(double s) const;

  bool is_zero(double s) const noexcept { return s == zero_; }

  /// Distance between two semiring scalars; equal infinities are at
  /// distance 0.
  double distance(double s, double t) const noexcept;

 private:
  Kind kind_ = Kind::standard;
  std::string name_;
  double zero_ = 0;
  double one_ = 1;
  std::function<double(double)> f_;
  std::function<double(double)> f_inv_;
};

using linalg::RMat;

RMat sr_identity(std::size_t n, const Semiring& sr);
RMat sr_matmul(const RMat& a, const RMat& b, const Semiring& sr);
RMat sr_tensor(const RMat& a, const RMat& b, const Semiring& sr);
RMat sr_embed(const RMat& p, const Semiring& sr);
RMat sr_extract(const RMat& s, const Semiring& sr);
double sr_distance(const RMat& a, const RMat& b, const Semiring& sr);

/// Largest violation of the semiring axioms over `samples` random triples of
/// probabilities mapped through embed.  Compared in probability space.
double semiring_axiom_residual(const Semiring& sr, std::size_t samples, std::mt19937_64& rng);

}  // namespace frobayes::models
