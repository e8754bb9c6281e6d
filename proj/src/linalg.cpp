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

#include "frobayes/linalg.hpp"

#include <cmath>
#include <cstdlib>
#include <sstream>

namespace frobayes::linalg {

namespace {

// Below this many output entries the OpenMP runtime costs more than it saves.
constexpr std::size_t kParallelThreshold = 1 << 12;

void require_same_shape(const Mat& a, const Mat& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw ShapeError(std::string(op) + ": shape mismatch " +
                     std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                     " vs " + std::to_string(b.rows()) + "x" +
                     std::to_string(b.cols()));
  }
}

void require_square(const Mat& a, const char* op) {
  if (!a.is_square()) throw ShapeError(std::string(op) + ": not square");
}

}  // namespace

// ---- Tol --------------------------------------------------------------------

Tol Tol::parse(const std::string& spec) {
  Tol tol;
  if (spec.empty()) return tol;
  if (spec.find('=') == std::string::npos) {
    char* end = nullptr;
    const double v = std::strtod(spec.c_str(), &end);
    if (end == spec.c_str() || *end != '\0' || !(v > 0)) {
      throw DomainError("invalid tolerance '" + spec + "'");
    }
    tol.abs_eps = v;
    tol.rel_eps = v;
    return tol;
  }
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw DomainError("invalid tolerance '" + item + "'");
    const std::string key = item.substr(0, eq);
    const std::string val = item.substr(eq + 1);
    char* end = nullptr;
    const double v = std::strtod(val.c_str(), &end);
    if (end == val.c_str() || *end != '\0' || !(v > 0)) {
      throw DomainError("invalid tolerance value '" + val + "'");
    }
    if (key == "abs_eps") {
      tol.abs_eps = v;
    } else if (key == "rel_eps") {
      tol.rel_eps = v;
    } else if (key == "rank_eps") {
      tol.rank_eps = v;
    } else {
      throw DomainError("unknown tolerance key '" + key + "'");
    }
  }
  return tol;
}

Tol Tol::from_env() {
  const char* env = std::getenv("FROBAYES_TOL");
  return env ? parse(env) : Tol{};
}

// ---- element-wise -----------------------------------------------------------

Mat from_real(const RMat& m) {
  Mat out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.size(); ++i) out.data()[i] = m.data()[i];
  return out;
}

RMat real_part(const Mat& m) {
  RMat out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.size(); ++i) out.data()[i] = m.data()[i].real();
  return out;
}

Mat add(const Mat& a, const Mat& b) {
  require_same_shape(a, b, "add");
  Mat out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.size(); ++i) out.data()[i] = a.data()[i] + b.data()[i];
  return out;
}

Mat sub(const Mat& a, const Mat& b) {
  require_same_shape(a, b, "sub");
  Mat out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.size(); ++i) out.data()[i] = a.data()[i] - b.data()[i];
  return out;
}

Mat scale(const Mat& a, Complex s) {
  Mat out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.size(); ++i) out.data()[i] = s * a.data()[i];
  return out;
}

Mat conj(const Mat& a) {
  Mat out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.size(); ++i) out.data()[i] = std::conj(a.data()[i]);
  return out;
}

Mat transpose(const Mat& a) {
  Mat out(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = a(i, j);
  return out;
}

Mat dagger(const Mat& a) {
  Mat out(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = std::conj(a(i, j));
  return out;
}

Complex trace(const Mat& a) {
  require_square(a, "trace");
  Complex t = 0;
  for (std::size_t i = 0; i < a.rows(); ++i) t += a(i, i);
  return t;
}

double max_abs(const Mat& a) {
  double m = 0;
  for (const auto& x : a.data()) m = std::max(m, std::abs(x));
  return m;
}

double max_abs_diff(const Mat& a, const Mat& b) {
  require_same_shape(a, b, "max_abs_diff");
  double m = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    m = std::max(m, std::abs(a.data()[i] - b.data()[i]));
  return m;
}

double frobenius_norm(const Mat& a) {
  double s = 0;
  for (const auto& x : a.data()) s += std::norm(x);
  return std::sqrt(s);
}

bool all_finite(const Mat& a) {
  return std::all_of(a.data().begin(), a.data().end(), [](const Complex& x) {
    return std::isfinite(x.real()) && std::isfinite(x.imag());
  });
}

Mat diag(std::span<const double> values) {
  Mat out(values.size(), values.size());
  for (std::size_t i = 0; i < values.size(); ++i) out(i, i) = values[i];
  return out;
}

// ---- parallel kernels -------------------------------------------------------

Mat matmul(const Mat& a, const Mat& b) {
  if (a.cols() != b.rows()) {
    throw ShapeError("matmul: inner dimensions " + std::to_string(a.cols()) +
                     " and " + std::to_string(b.rows()));
  }
  const std::size_t n = a.rows(), k = a.cols(), m = b.cols();
  Mat out(n, m);
  const Complex* pa = a.data().data();
  const Complex* pb = b.data().data();
  Complex* po = out.data().data();
  const bool par = n * m * std::max<std::size_t>(k, 1) >= kParallelThreshold * 8;
#pragma omp parallel for schedule(static) if (par)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i) {
    Complex* row = po + i * m;
    for (std::size_t l = 0; l < k; ++l) {
      const Complex x = pa[i * k + l];
      if (x == Complex{}) continue;
      const Complex* brow = pb + l * m;
      // Spelled out so the loop avoids the library complex multiply.
      const double xr = x.real(), xi = x.imag();
      for (std::size_t j = 0; j < m; ++j) {
        const double yr = brow[j].real(), yi = brow[j].imag();
        row[j] += Complex(xr * yr - xi * yi, xr * yi + xi * yr);
      }
    }
  }
  return out;
}

Mat tensor(const Mat& a, const Mat& b) {
  const std::size_t ar = a.rows(), ac = a.cols(), br = b.rows(), bc = b.cols();
  Mat out(ar * br, ac * bc);
  const std::size_t oc = ac * bc;
  const bool par = out.size() >= kParallelThreshold;
#pragma omp parallel for schedule(static) if (par)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(ar); ++i) {
    for (std::size_t j = 0; j < ac; ++j) {
      const Complex x = a(i, j);
      if (x == Complex{}) continue;
      for (std::size_t k = 0; k < br; ++k) {
        Complex* dst = out.data().data() + (i * br + k) * oc + j * bc;
        for (std::size_t l = 0; l < bc; ++l) dst[l] = x * b(k, l);
      }
    }
  }
  return out;
}

Mat partial_trace(const Mat& a, std::span<const std::size_t> dims,
                  std::size_t traced) {
  require_square(a, "partial_trace");
  if (traced >= dims.size()) throw ShapeError("partial_trace: factor index out of range");
  if (product(dims) != a.rows()) throw ShapeError("partial_trace: dims do not match operator");
  std::size_t pre = 1, post = 1;
  for (std::size_t i = 0; i < traced; ++i) pre *= dims[i];
  for (std::size_t i = traced + 1; i < dims.size(); ++i) post *= dims[i];
  const std::size_t dt = dims[traced];
  const std::size_t n = pre * post;
  Mat out(n, n);
  const bool par = n * n * dt >= kParallelThreshold;
#pragma omp parallel for collapse(2) schedule(static) if (par)
  for (std::ptrdiff_t p = 0; p < static_cast<std::ptrdiff_t>(pre); ++p) {
    for (std::ptrdiff_t q = 0; q < static_cast<std::ptrdiff_t>(post); ++q) {
      for (std::size_t p2 = 0; p2 < pre; ++p2) {
        for (std::size_t q2 = 0; q2 < post; ++q2) {
          Complex s = 0;
          for (std::size_t t = 0; t < dt; ++t) {
            s += a((p * dt + t) * post + q, (p2 * dt + t) * post + q2);
          }
          out(p * post + q, p2 * post + q2) = s;
        }
      }
    }
  }
  return out;
}

Mat partial_trace_keep(const Mat& a, std::span<const std::size_t> dims,
                       const std::vector<bool>& keep) {
  if (keep.size() != dims.size()) throw ShapeError("partial_trace_keep: mask size");
  std::vector<std::size_t> cur(dims.begin(), dims.end());
  Mat out = a;
  for (std::size_t i = dims.size(); i-- > 0;) {
    if (keep[i]) continue;
    out = partial_trace(out, cur, i);
    cur.erase(cur.begin() + static_cast<std::ptrdiff_t>(i));
  }
  return out;
}

// ---- Hermitian spectral toolkit --------------------------------------------

bool is_hermitian(const Mat& a, const Tol& tol) {
  if (!a.is_square()) return false;
  const double scale_ = max_abs(a);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = i; j < a.cols(); ++j)
      if (std::abs(a(i, j) - std::conj(a(j, i))) > tol.scaled(scale_)) return false;
  return true;
}

HermEig herm_eig(const Mat& input, const Tol& tol) {
  require_square(input, "herm_eig");
  if (!is_hermitian(input, tol)) throw DomainError("herm_eig: matrix is not Hermitian");
  const std::size_t n = input.rows();
  // Work on the exactly Hermitian part.
  Mat a(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    a(i, i) = input(i, i).real();
    for (std::size_t j = i + 1; j < n; ++j) {
      const Complex v = 0.5 * (input(i, j) + std::conj(input(j, i)));
      a(i, j) = v;
      a(j, i) = std::conj(v);
    }
  }
  Mat v = Mat::identity(n);

  double total = 0;
  for (const auto& x : a.data()) total += std::norm(x);

  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off += std::norm(a(p, q));
    if (off <= 1e-30 * total || off == 0.0) break;

    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double mag = std::abs(a(p, q));
        if (mag <= 1e-300) continue;
        const Complex phase = a(p, q) / mag;  // e^{i phi}
        const double app = a(p, p).real(), aqq = a(q, q).real();
        const double theta = (aqq - app) / (2.0 * mag);
        const double t = (theta >= 0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const Complex eph = std::conj(phase);  // e^{-i phi}
        const Complex jpp = c, jpq = s, jqp = -s * eph, jqq = c * eph;
        // A <- A J
        for (std::size_t k = 0; k < n; ++k) {
          const Complex akp = a(k, p), akq = a(k, q);
          a(k, p) = akp * jpp + akq * jqp;
          a(k, q) = akp * jpq + akq * jqq;
        }
        // A <- J^dagger A
        for (std::size_t k = 0; k < n; ++k) {
          const Complex apk = a(p, k), aqk = a(q, k);
          a(p, k) = std::conj(jpp) * apk + std::conj(jqp) * aqk;
          a(q, k) = std::conj(jpq) * apk + std::conj(jqq) * aqk;
        }
        a(p, q) = 0;
        a(q, p) = 0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
        // V <- V J
        for (std::size_t k = 0; k < n; ++k) {
          const Complex vkp = v(k, p), vkq = v(k, q);
          v(k, p) = vkp * jpp + vkq * jqp;
          v(k, q) = vkp * jpq + vkq * jqq;
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return a(x, x).real() < a(y, y).real();
  });

  HermEig out;
  out.values.resize(n);
  out.vectors = Mat(n, n);
  for (std::size_t c = 0; c < n; ++c) {
    const std::size_t src = order[c];
    out.values[c] = a(src, src).real();
    Complex fix = 1.0;
    for (std::size_t k = 0; k < n; ++k) {
      if (std::abs(v(k, src)) > 1e-8) {
        fix = std::conj(v(k, src)) / std::abs(v(k, src));
        break;
      }
    }
    for (std::size_t k = 0; k < n; ++k) out.vectors(k, c) = v(k, src) * fix;
  }
  return out;
}

namespace {

// V f(lambda) V^dagger over the spectrum, after the PSD check.
template <class F>
Mat spectral_map(const Mat& a, const Tol& tol, const char* op, F f) {
  const HermEig eig = herm_eig(a, tol);
  const std::size_t n = a.rows();
  const double largest = n ? std::max(eig.values.back(), 0.0) : 0.0;
  const double cut = tol.cutoff(largest);
  if (n && eig.values.front() < -(tol.abs_eps + cut)) {
    throw DomainError(std::string(op) + ": matrix is not positive semidefinite (eigenvalue " +
                      std::to_string(eig.values.front()) + ")");
  }
  Mat out(n, n);
  for (std::size_t c = 0; c < n; ++c) {
    const double lam = eig.values[c];
    if (lam <= cut) continue;
    const double w = f(lam);
    if (w == 0.0) continue;
    for (std::size_t i = 0; i < n; ++i) {
      const Complex vi = eig.vectors(i, c) * w;
      for (std::size_t j = 0; j < n; ++j) out(i, j) += vi * std::conj(eig.vectors(j, c));
    }
  }
  return out;
}

}  // namespace

Mat psd_sqrt(const Mat& a, const Tol& tol) {
  return spectral_map(a, tol, "psd_sqrt", [](double l) { return std::sqrt(l); });
}

Mat support_proj(const Mat& a, const Tol& tol) {
  return spectral_map(a, tol, "support_proj", [](double) { return 1.0; });
}

Mat support_pinv(const Mat& a, const Tol& tol) {
  return spectral_map(a, tol, "support_pinv", [](double l) { return 1.0 / l; });
}

Mat psd_inv_sqrt(const Mat& a, const Tol& tol) {
  return spectral_map(a, tol, "psd_inv_sqrt", [](double l) { return 1.0 / std::sqrt(l); });
}

double min_eigenvalue(const Mat& a, const Tol& tol) {
  const HermEig eig = herm_eig(a, tol);
  return eig.values.empty() ? 0.0 : eig.values.front();
}

// ---- axis bookkeeping -------------------------------------------------------

std::size_t product(std::span<const std::size_t> dims) {
  std::size_t p = 1;
  for (auto d : dims) p *= d;
  return p;
}

std::vector<std::size_t> axis_gather(std::span<const std::size_t> dims,
                                     std::span<const std::size_t> perm) {
  const std::size_t k = dims.size();
  if (perm.size() != k) throw ShapeError("axis permutation has wrong length");
  std::vector<bool> seen(k, false);
  for (auto p : perm) {
    if (p >= k || seen[p]) throw ShapeError("invalid axis permutation");
    seen[p] = true;
  }
  std::vector<std::size_t> old_stride(k, 1);
  for (std::size_t i = k; i-- > 1;) old_stride[i - 1] = old_stride[i] * dims[i];
  std::vector<std::size_t> new_dims(k), stride(k);
  for (std::size_t a = 0; a < k; ++a) {
    new_dims[a] = dims[perm[a]];
    stride[a] = old_stride[perm[a]];
  }
  const std::size_t total = product(dims);
  std::vector<std::size_t> out(total);
  std::vector<std::size_t> idx(k, 0);
  std::size_t src = 0;
  for (std::size_t f = 0; f < total; ++f) {
    out[f] = src;
    for (std::size_t a = k; a-- > 0;) {
      ++idx[a];
      src += stride[a];
      if (idx[a] < new_dims[a]) break;
      src -= stride[a] * idx[a];
      idx[a] = 0;
    }
  }
  return out;
}

Mat embed_operator(const Mat& op, std::span<const std::size_t> dims,
                   std::span<const std::size_t> positions) {
  require_square(op, "embed_operator");
  std::vector<bool> used(dims.size(), false);
  std::vector<std::size_t> layout;  // layout[axis in op (x) I] = original axis
  for (auto p : positions) {
    if (p >= dims.size() || used[p]) throw ShapeError("embed_operator: bad positions");
    used[p] = true;
    layout.push_back(p);
  }
  std::size_t rest = 1;
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (!used[i]) {
      layout.push_back(i);
      rest *= dims[i];
    }
  }
  std::size_t sub = 1;
  for (auto p : positions) sub *= dims[p];
  if (sub != op.rows()) throw ShapeError("embed_operator: operator size does not match positions");
  const Mat big = tensor(op, Mat::identity(rest));
  std::vector<std::size_t> layout_dims(layout.size());
  for (std::size_t i = 0; i < layout.size(); ++i) layout_dims[i] = dims[layout[i]];
  // perm[original axis] = its axis in the op (x) I layout.
  std::vector<std::size_t> perm(layout.size());
  for (std::size_t i = 0; i < layout.size(); ++i) perm[layout[i]] = i;
  return permute_operator(big, layout_dims, perm);
}

}  // namespace frobayes::linalg
