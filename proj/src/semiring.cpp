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


#include "frobayes/semiring.hpp"

#include <cmath>
#include <limits>

namespace frobayes::models {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

Semiring Semiring::standard() {
  Semiring s;
  s.kind_ = Kind::standard;
  s.name_ = "standard";
  s.zero_ = 0;
  s.one_ = 1;
  return s;
}

Semiring Semiring::neglog() {
  Semiring s;
  s.kind_ = Kind::neglog;
  s.name_ = "neglog";
  s.zero_ = kInf;
  s.one_ = 0;
  return s;
}

Semiring Semiring::from_monotone(std::string name, std::function<double(double)> f,
                                 std::function<double(double)> f_inv) {
  Semiring s;
  s.kind_ = Kind::custom;
  s.name_ = std::move(name);
  s.zero_ = f(0.0);
  s.one_ = f(1.0);
  s.f_ = std::move(f);
  s.f_inv_ = std::move(f_inv);
  return s;
}

double Semiring::add(double s, double t) const {
  switch (kind_) {
    case Kind::standard:
      return s + t;
    case Kind::neglog: {
      if (s == kInf) return t;
      if (t == kInf) return s;
      const double lo = std::min(s, t), hi = std::max(s, t);
      return lo - std::log1p(std::exp(lo - hi));
    }
    case Kind::custom:
      return f_(f_inv_(s) + f_inv_(t));
  }
  return 0;
}

double Semiring::mul(double s, double t) const {
  switch (kind_) {
    case Kind::standard:
      return s * t;
    case Kind::neglog:
      return s + t;  // inf + finite = inf, which is the absorbing zero
    case Kind::custom:
      return f_(f_inv_(s) * f_inv_(t));
  }
  return 0;
}

double Semiring::embed(double p) const {
  switch (kind_) {
    case Kind::standard:
      return p;
    case Kind::neglog:
      return p == 0 ? kInf : -std::log(p);
    case Kind::custom:
      return f_(p);
  }
  return 0;
}

double Semiring::extract(double s) const {
  switch (kind_) {
    case Kind::standard:
      return s;
    case Kind::neglog:
      return std::exp(-s);
    case Kind::custom:
      return f_inv_(s);
  }
  return 0;
}

double Semiring::support_inverse(double s) const {
  if (s == zero_) return zero_;
  switch (kind_) {
    case Kind::standard:
      return 1.0 / s;
    case Kind::neglog:
      return -s;
    case Kind::custom:
      return f_(1.0 / f_inv_(s));
  }
  return 0;
}

double Semiring::distance(double s, double t) const noexcept {
  if (s == t) return 0;
  return std::abs(s - t);
}

RMat sr_identity(std::size_t n, const Semiring& sr) {
  RMat m(n, n, sr.zero());
  for (std::size_t i = 0; i < n; ++i) m(i, i) = sr.one();
  return m;
}

RMat sr_matmul(const RMat& a, const RMat& b, const Semiring& sr) {
  if (a.cols() != b.rows()) throw ShapeError("matmul: inner dimensions differ");
  const std::size_t n = a.rows(), k = a.cols(), m = b.cols();
  if (sr.kind() == Semiring::Kind::standard) {
    RMat out(n, m, 0.0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < k; ++l) {
        const double x = a(i, l);
        if (x == 0) continue;
        for (std::size_t j = 0; j < m; ++j) out(i, j) += x * b(l, j);
      }
    return out;
  }
  RMat out(n, m, sr.zero());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < k; ++l) {
      const double x = a(i, l);
      if (sr.is_zero(x)) continue;
      for (std::size_t j = 0; j < m; ++j) {
        const double y = b(l, j);
        if (sr.is_zero(y)) continue;
        out(i, j) = sr.add(out(i, j), sr.mul(x, y));
      }
    }
  return out;
}

RMat sr_tensor(const RMat& a, const RMat& b, const Semiring& sr) {
  RMat out(a.rows() * b.rows(), a.cols() * b.cols(), sr.zero());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const double x = a(i, j);
      if (sr.is_zero(x)) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = sr.mul(x, b(k, l));
    }
  return out;
}

RMat sr_embed(const RMat& p, const Semiring& sr) {
  RMat out(p.rows(), p.cols());
  for (std::size_t i = 0; i < p.size(); ++i) out.data()[i] = sr.embed(p.data()[i]);
  return out;
}

RMat sr_extract(const RMat& s, const Semiring& sr) {
  RMat out(s.rows(), s.cols());
  for (std::size_t i = 0; i < s.size(); ++i) out.data()[i] = sr.extract(s.data()[i]);
  return out;
}

double sr_distance(const RMat& a, const RMat& b, const Semiring& sr) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw ShapeError("distance: shape mismatch");
  double d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, sr.distance(a.data()[i], b.data()[i]));
  return d;
}

double semiring_axiom_residual(const Semiring& sr, std::size_t samples, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double worst = 0;
  auto gap = [&](double s, double t) {
    worst = std::max(worst, std::abs(sr.extract(s) - sr.extract(t)));
  };
  for (std::size_t n = 0; n < samples; ++n) {
    // Include exact zeros so the absorbing element is exercised.
    const double x = n % 7 == 0 ? sr.zero() : sr.embed(u(rng));
    const double y = sr.embed(u(rng));
    const double z = sr.embed(u(rng));
    gap(sr.add(x, y), sr.add(y, x));
    gap(sr.mul(x, y), sr.mul(y, x));
    gap(sr.add(sr.add(x, y), z), sr.add(x, sr.add(y, z)));
    gap(sr.mul(sr.mul(x, y), z), sr.mul(x, sr.mul(y, z)));
    gap(sr.mul(x, sr.add(y, z)), sr.add(sr.mul(x, y), sr.mul(x, z)));
    gap(sr.add(x, sr.zero()), x);
    gap(sr.mul(x, sr.one()), x);
    gap(sr.mul(x, sr.zero()), sr.zero());
  }
  return worst;
}

}  // namespace frobayes::models
