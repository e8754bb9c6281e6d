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

#include <algorithm>

namespace frobayes::dcc {

namespace {

// Axis labels: 2i is the primal wire of object i, 2i+1 its dual.
std::vector<std::size_t> labels(Layout layout, std::size_t k) {
  std::vector<std::size_t> out;
  out.reserve(2 * k);
  switch (layout) {
    case Layout::nested:
      for (std::size_t i = 0; i < k; ++i) out.push_back(2 * i);
      for (std::size_t i = k; i-- > 0;) out.push_back(2 * i + 1);
      break;
    case Layout::pair:
      for (std::size_t i = 0; i < k; ++i) {
        out.push_back(2 * i);
        out.push_back(2 * i + 1);
      }
      break;
    case Layout::row_major:
      for (std::size_t i = 0; i < k; ++i) out.push_back(2 * i);
      for (std::size_t i = 0; i < k; ++i) out.push_back(2 * i + 1);
      break;
  }
  return out;
}

// Axis dims and the gather permutation turning layout `from` into `to`.
std::pair<std::vector<std::size_t>, std::vector<std::size_t>> relabel(
    const std::vector<std::size_t>& dims, Layout from, Layout to) {
  const auto lf = labels(from, dims.size());
  const auto lt = labels(to, dims.size());
  std::vector<std::size_t> axis_dims(lf.size()), perm(lt.size());
  for (std::size_t a = 0; a < lf.size(); ++a) axis_dims[a] = dims[lf[a] / 2];
  for (std::size_t a = 0; a < lt.size(); ++a)
    perm[a] = std::find(lf.begin(), lf.end(), lt[a]) - lf.begin();
  return {axis_dims, perm};
}

}  // namespace

Mat relayout_rows(const Mat& m, const std::vector<std::size_t>& dims, Layout from, Layout to) {
  if (from == to) return m;
  auto [axis_dims, perm] = relabel(dims, from, to);
  return linalg::permute_rows(m, axis_dims, perm);
}

Mat relayout_cols(const Mat& m, const std::vector<std::size_t>& dims, Layout from, Layout to) {
  if (from == to) return m;
  auto [axis_dims, perm] = relabel(dims, from, to);
  return linalg::permute_cols(m, axis_dims, perm);
}

std::size_t wire_size(const std::vector<std::size_t>& dims) {
  std::size_t n = 1;
  for (auto d : dims) n *= d * d;
  return n;
}

namespace {

void check_shape(const DMorphism& f) {
  if (f.tensor.rows() != wire_size(f.cod) || f.tensor.cols() != wire_size(f.dom)) {
    throw ShapeError("D-morphism tensor does not match its objects");
  }
}

std::vector<std::size_t> concat(const std::vector<std::size_t>& a,
                                const std::vector<std::size_t>& b) {
  std::vector<std::size_t> out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

// Axis order of kron(f, g) on one side, as labels of the combined list:
// f's nested block followed by g's nested block.
Mat kron_to_nested_rows(const Mat& m, const std::vector<std::size_t>& a,
                        const std::vector<std::size_t>& b) {
  const std::size_t ka = a.size(), kb = b.size();
  std::vector<std::size_t> from;
  for (std::size_t i = 0; i < ka; ++i) from.push_back(2 * i);
  for (std::size_t i = ka; i-- > 0;) from.push_back(2 * i + 1);
  for (std::size_t i = 0; i < kb; ++i) from.push_back(2 * (ka + i));
  for (std::size_t i = kb; i-- > 0;) from.push_back(2 * (ka + i) + 1);
  const auto all = concat(a, b);
  const auto to = labels(Layout::nested, all.size());
  std::vector<std::size_t> axis_dims(from.size()), perm(to.size());
  for (std::size_t x = 0; x < from.size(); ++x) axis_dims[x] = all[from[x] / 2];
  for (std::size_t x = 0; x < to.size(); ++x)
    perm[x] = std::find(from.begin(), from.end(), to[x]) - from.begin();
  return linalg::permute_rows(m, axis_dims, perm);
}

}  // namespace

DMorphism d_identity(const std::vector<std::size_t>& dims) {
  return {dims, dims, Mat::identity(wire_size(dims))};
}

DMorphism d_compose(const DMorphism& first, const DMorphism& then) {
  check_shape(first);
  check_shape(then);
  if (first.cod != then.dom) throw ShapeError("d_compose: objects do not match");
  return {first.dom, then.cod, linalg::matmul(then.tensor, first.tensor)};
}

DMorphism d_tensor(const DMorphism& f, const DMorphism& g) {
  check_shape(f);
  check_shape(g);
  // Kronecker product gives (P_f, D_f, P_g, D_g) on each side; the nested
  // layout of the composite is (P_f, P_g, D_g, D_f).
  Mat k = linalg::tensor(f.tensor, g.tensor);
  k = kron_to_nested_rows(k, f.cod, g.cod);
  k = linalg::transpose(kron_to_nested_rows(linalg::transpose(k), f.dom, g.dom));
  return {concat(f.dom, g.dom), concat(f.cod, g.cod), std::move(k)};
}

DMorphism d_dagger(const DMorphism& f) { return {f.cod, f.dom, linalg::dagger(f.tensor)}; }

DMorphism d_swap(std::size_t da, std::size_t db) {
  // Under F the swap of C becomes the swap of D(C).
  Mat s(da * db, da * db);
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < db; ++j) s(j * da + i, i * db + j) = 1;
  return F(s, {da, db}, {db, da});
}

DMorphism f_mult(std::size_t d) {
  // Input (p1, p2, p3, p4) = (a1, a2, a2*, a1*) in nested layout; sigma
  // swaps the two dual wires, then the cap joins a2 with a1*.
  Mat m(d * d, d * d * d * d);
  for (std::size_t p1 = 0; p1 < d; ++p1)
    for (std::size_t k = 0; k < d; ++k)
      for (std::size_t p3 = 0; p3 < d; ++p3) {
        const std::size_t col = ((p1 * d + k) * d + p3) * d + k;
        m(p1 * d + p3, col) = 1;
      }
  return {{d, d}, {d}, std::move(m)};
}

DMorphism f_unit(std::size_t d) {
  Mat u(d * d, 1);
  for (std::size_t i = 0; i < d; ++i) u(i * d + i, 0) = 1;
  return {{}, {d}, std::move(u)};
}

DMorphism f_comult(std::size_t d) { return d_dagger(f_mult(d)); }
DMorphism f_counit(std::size_t d) { return d_dagger(f_unit(d)); }

DMorphism d_counit(const std::vector<std::size_t>& dims) {
  const std::size_t n = linalg::product(dims);
  return d_dagger(xi(Mat::identity(n), dims));
}

DMorphism F(const Mat& h, const std::vector<std::size_t>& dom,
            const std::vector<std::size_t>& cod) {
  if (h.rows() != linalg::product(cod) || h.cols() != linalg::product(dom)) {
    throw ShapeError("F: morphism does not match its objects");
  }
  Mat k = linalg::tensor(h, linalg::conj(h));
  k = relayout_rows(k, cod, Layout::row_major, Layout::nested);
  k = relayout_cols(k, dom, Layout::row_major, Layout::nested);
  return {dom, cod, std::move(k)};
}

DMorphism xi(const Mat& rho, const std::vector<std::size_t>& dims) {
  const std::size_t n = linalg::product(dims);
  if (rho.rows() != n || rho.cols() != n) throw ShapeError("xi: operator does not match objects");
  Mat v(n * n, 1, std::vector<linalg::Complex>(rho.data().begin(), rho.data().end()));
  return {{}, dims, relayout_rows(v, dims, Layout::row_major, Layout::nested)};
}

DMorphism xi(const Mat& rho) {
  if (!rho.is_square()) throw ShapeError("xi: operator is not square");
  return xi(rho, {rho.rows()});
}

Mat xi_inv(const DMorphism& point) {
  check_shape(point);
  if (!point.dom.empty()) throw ShapeError("xi_inv: not a point");
  const Mat v = relayout_rows(point.tensor, point.cod, Layout::nested, Layout::row_major);
  const std::size_t n = linalg::product(point.cod);
  return Mat(n, n, std::vector<linalg::Complex>(v.data().begin(), v.data().end()));
}

DMorphism d_partial_trace(const DMorphism& point) {
  check_shape(point);
  if (!point.dom.empty() || point.cod.empty()) throw ShapeError("d_partial_trace: not a point");
  std::vector<std::size_t> rest(point.cod.begin(), point.cod.end() - 1);
  const std::size_t dk = point.cod.back();
  const std::size_t pre = linalg::product(rest);
  // Nested layout: (P_rest, a_k, a_k*, D_rest); the traced wires are adjacent.
  Mat out(pre * pre, 1);
  for (std::size_t p = 0; p < pre; ++p)
    for (std::size_t q = 0; q < pre; ++q) {
      linalg::Complex s = 0;
      for (std::size_t x = 0; x < dk; ++x) s += point.tensor(((p * dk + x) * dk + x) * pre + q, 0);
      out(p * pre + q, 0) = s;
    }
  return {{}, rest, std::move(out)};
}

Mat choi_row_major(const Mat& superop, std::size_t n_in, std::size_t n_out) {
  if (superop.rows() != n_out * n_out || superop.cols() != n_in * n_in) {
    throw ShapeError("choi: super-operator does not match dimensions");
  }
  Mat j(n_in * n_out, n_in * n_out);
  for (std::size_t i = 0; i < n_in; ++i)
    for (std::size_t jj = 0; jj < n_in; ++jj)
      for (std::size_t k = 0; k < n_out; ++k)
        for (std::size_t l = 0; l < n_out; ++l)
          j(i * n_out + k, jj * n_out + l) = superop(k * n_out + l, i * n_in + jj);
  return j;
}

CpReport is_normalized_cp(const DMorphism& f, const linalg::Tol& tol) {
  check_shape(f);
  Mat s = relayout_rows(f.tensor, f.cod, Layout::nested, Layout::row_major);
  s = relayout_cols(s, f.dom, Layout::nested, Layout::row_major);
  const Mat j = choi_row_major(s, linalg::product(f.dom), linalg::product(f.cod));
  CpReport r;
  // See models::is_cp: the Hermitian part's spectrum witnesses non-positivity.
  const bool hermitian = linalg::is_hermitian(j, tol);
  const Mat h = linalg::scale(linalg::add(j, linalg::dagger(j)), 0.5);
  const auto eig = linalg::herm_eig(h, tol);
  r.min_choi_eigenvalue = eig.values.empty() ? 0.0 : eig.values.front();
  const double largest = eig.values.empty() ? 0.0 : eig.values.back();
  r.cp = hermitian && r.min_choi_eigenvalue >= -(tol.abs_eps + tol.cutoff(largest));
  const DMorphism lhs = d_compose(f, d_counit(f.cod));
  const DMorphism rhs = d_counit(f.dom);
  r.normalization_residual = linalg::max_abs_diff(lhs.tensor, rhs.tensor);
  r.normalized = r.normalization_residual <= tol.scaled(1.0);
  return r;
}

}  // namespace frobayes::dcc
