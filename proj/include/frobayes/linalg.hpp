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

/*
 * Dense matrix kernel shared by every numeric backend.
 *
 * Index convention: a composite index over factors with dimensions
 * (d_1, ..., d_k) is row-major / big-endian,
 *
 *     flat(i_1, ..., i_k) = sum_j i_j * prod_{l > j} d_l,
 *
 * so tensor(a, b) places a's indices in the high-order position.  The same
 * convention is used by partial_trace, permute_axes and by every caller that
 * lays out joint states.
 *
 * The hot kernels (matmul, tensor, partial_trace) are OpenMP parallel.  The
 * frobayes::linalg::serial namespace keeps plain single-threaded versions
 * that the tests compare against and that bench/ times.
 */

#pragma once

#include <algorithm>
#include <complex>
#include <cstddef>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "frobayes/error.hpp"

namespace frobayes::linalg {

using Complex = std::complex<double>;

template <class T>
class BasicMat {
 public:
  using value_type = T;

  BasicMat() = default;

  BasicMat(std::size_t rows, std::size_t cols, T fill = T{})
      : rows_(rows), cols_(cols), data_(checked_size(rows, cols), fill) {}

  BasicMat(std::size_t rows, std::size_t cols, std::vector<T> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != checked_size(rows, cols)) {
      throw ShapeError("matrix data has " + std::to_string(data_.size()) +
                       " entries, expected " + std::to_string(rows) + "x" +
                       std::to_string(cols));
    }
  }

  static BasicMat identity(std::size_t n, T one = T{1}) {
    BasicMat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
    return m;
  }

  static BasicMat column(std::vector<T> v) {
    const std::size_t n = v.size();
    return BasicMat(n, 1, std::move(v));
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t size() const noexcept { return data_.size(); }
  bool is_square() const noexcept { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  std::span<T> data() noexcept { return data_; }
  std::span<const T> data() const noexcept { return data_; }
  const std::vector<T>& values() const noexcept { return data_; }

  friend bool operator==(const BasicMat&, const BasicMat&) = default;

 private:
  static std::size_t checked_size(std::size_t rows, std::size_t cols) {
    if (cols != 0 && rows > (std::size_t{1} << 40) / cols) {
      throw ShapeError("matrix dimensions overflow");
    }
    return rows * cols;
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using Mat = BasicMat<Complex>;
using RMat = BasicMat<double>;

/// Numerical tolerances.  rank_eps is relative to the largest eigenvalue.
struct Tol {
  double abs_eps = 1e-9;
  double rel_eps = 1e-9;
  double rank_eps = 1e-10;

  /// Eigenvalues at or below this are outside the support.
  double cutoff(double largest) const noexcept {
    return rank_eps * std::max(largest, 0.0);
  }

  /// Comparison threshold for two tensors of the given magnitude.
  double scaled(double magnitude) const noexcept {
    return abs_eps + rel_eps * magnitude;
  }

  /// Defaults overridden by FROBAYES_TOL ("1e-8" or
  /// "abs_eps=1e-8,rel_eps=1e-8,rank_eps=1e-12").
  static Tol from_env();
  static Tol parse(const std::string& spec);
};

// ---- element-wise helpers --------------------------------------------------

Mat from_real(const RMat& m);
RMat real_part(const Mat& m);
Mat add(const Mat& a, const Mat& b);
Mat sub(const Mat& a, const Mat& b);
Mat scale(const Mat& a, Complex s);
Mat conj(const Mat& a);
Mat transpose(const Mat& a);
Mat dagger(const Mat& a);
Complex trace(const Mat& a);
double max_abs(const Mat& a);
double max_abs_diff(const Mat& a, const Mat& b);
double frobenius_norm(const Mat& a);
bool all_finite(const Mat& a);
Mat diag(std::span<const double> values);

// ---- parallel kernels ------------------------------------------------------

Mat matmul(const Mat& a, const Mat& b);

/// Kronecker product: result((i,k),(j,l)) = a(i,j) * b(k,l).
Mat tensor(const Mat& a, const Mat& b);

/// Contract factor `traced` of a square operator on prod(dims).
Mat partial_trace(const Mat& a, std::span<const std::size_t> dims,
                  std::size_t traced);

/// Trace out every factor whose keep flag is false; kept factors stay in
/// their original order.
Mat partial_trace_keep(const Mat& a, std::span<const std::size_t> dims,
                       const std::vector<bool>& keep);

namespace serial {
Mat matmul(const Mat& a, const Mat& b);
Mat tensor(const Mat& a, const Mat& b);
Mat partial_trace(const Mat& a, std::span<const std::size_t> dims,
                  std::size_t traced);
}  // namespace serial

// ---- Hermitian spectral toolkit --------------------------------------------

struct HermEig {
  std::vector<double> values;  // ascending
  Mat vectors;                 // columns are eigenvectors
};

bool is_hermitian(const Mat& a, const Tol& tol = {});

/// Cyclic complex Jacobi.  Eigenvectors are phase-fixed so that their first
/// component of non-negligible magnitude is positive real.
HermEig herm_eig(const Mat& a, const Tol& tol = {});

Mat psd_sqrt(const Mat& a, const Tol& tol = {});
Mat support_proj(const Mat& a, const Tol& tol = {});
Mat support_pinv(const Mat& a, const Tol& tol = {});

/// Pseudo-inverse of psd_sqrt(a), i.e. (sqrt a)^+ on the support of a.
Mat psd_inv_sqrt(const Mat& a, const Tol& tol = {});

/// Smallest eigenvalue of a Hermitian matrix.
double min_eigenvalue(const Mat& a, const Tol& tol = {});

// ---- axis bookkeeping -------------------------------------------------------

std::size_t product(std::span<const std::size_t> dims);

/// For new axis order `perm` (perm[new_axis] = old_axis) returns, for every
/// flat index of the permuted layout, the flat index in the original layout.
std::vector<std::size_t> axis_gather(std::span<const std::size_t> dims,
                                     std::span<const std::size_t> perm);

template <class T>
BasicMat<T> permute_rows(const BasicMat<T>& a,
                         std::span<const std::size_t> dims,
                         std::span<const std::size_t> perm) {
  if (product(dims) != a.rows()) throw ShapeError("permute_rows: dims");
  const auto gather = axis_gather(dims, perm);
  BasicMat<T> out(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(gather[r], c);
  return out;
}

template <class T>
BasicMat<T> permute_cols(const BasicMat<T>& a,
                         std::span<const std::size_t> dims,
                         std::span<const std::size_t> perm) {
  if (product(dims) != a.cols()) throw ShapeError("permute_cols: dims");
  const auto gather = axis_gather(dims, perm);
  BasicMat<T> out(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, gather[c]);
  return out;
}

/// Reorders the tensor factors of a square operator: both sides permuted.
template <class T>
BasicMat<T> permute_operator(const BasicMat<T>& a,
                             std::span<const std::size_t> dims,
                             std::span<const std::size_t> perm) {
  return permute_cols(permute_rows(a, dims, perm), dims, perm);
}

/// Places `op` (acting on the factors listed in `positions`, in that order)
/// inside the full tensor product over `dims`, identity elsewhere.
Mat embed_operator(const Mat& op, std::span<const std::size_t> dims,
                   std::span<const std::size_t> positions);

}  // namespace frobayes::linalg
