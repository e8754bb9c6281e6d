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


// Single-threaded reference kernels.  Deliberately plain: the tests compare
// the OpenMP versions against these and bench/ times both.

#include "frobayes/linalg.hpp"

namespace frobayes::linalg::serial {

Mat matmul(const Mat& a, const Mat& b) {
  if (a.cols() != b.rows()) throw ShapeError("matmul: inner dimensions differ");
  Mat out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      Complex s = 0;
      for (std::size_t k = 0; k < a.cols(); ++k) s += a(i, k) * b(k, j);
      out(i, j) = s;
    }
  return out;
}

Mat tensor(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return out;
}

Mat partial_trace(const Mat& a, std::span<const std::size_t> dims,
                  std::size_t traced) {
  if (!a.is_square() || traced >= dims.size() || product(dims) != a.rows()) {
    throw ShapeError("partial_trace: dims do not match operator");
  }
  std::size_t pre = 1, post = 1;
  for (std::size_t i = 0; i < traced; ++i) pre *= dims[i];
  for (std::size_t i = traced + 1; i < dims.size(); ++i) post *= dims[i];
  const std::size_t dt = dims[traced];
  Mat out(pre * post, pre * post);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    const std::size_t rp = r / (dt * post), rt = (r / post) % dt, rq = r % post;
    for (std::size_t c = 0; c < a.cols(); ++c) {
      const std::size_t cp = c / (dt * post), ct = (c / post) % dt, cq = c % post;
      if (rt != ct) continue;
      out(rp * post + rq, cp * post + cq) += a(r, c);
    }
  }
  return out;
}

}  // namespace frobayes::linalg::serial
