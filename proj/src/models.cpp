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


#include "frobayes/models.hpp"

#include <algorithm>
#include <limits>

namespace frobayes::models {

// ---- classical ------------------------------------------------------------------

ClassicalBackend::ClassicalBackend(diagram::Signature sig, Semiring sr)
    : sig_(std::move(sig)), sr_(std::move(sr)) {}

std::size_t ClassicalBackend::wire_dim(const std::string& obj) const {
  const auto& o = sig_.object(obj);
  if (o.kind != diagram::ObjectKind::classical) {
    throw KindError("object '" + obj + "' is quantum; the classical backend needs classical objects");
  }
  return o.dim;
}

std::size_t ClassicalBackend::wire_dim(const diagram::ObjectList& objs) const {
  std::size_t n = 1;
  for (const auto& o : objs) n *= wire_dim(o);
  return n;
}

RMat ClassicalBackend::dagger(const RMat& a) const {
  RMat out(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = a(i, j);
  return out;
}

RMat ClassicalBackend::spider(const std::string& obj, std::size_t in, std::size_t out) const {
  const std::size_t n = wire_dim(obj);
  std::size_t rows = 1, cols = 1;
  for (std::size_t k = 0; k < out; ++k) rows *= n;
  for (std::size_t k = 0; k < in; ++k) cols *= n;
  RMat m(rows, cols, sr_.zero());
  // Index (i, i, ..., i) over k legs is i * (n^k - 1) / (n - 1).
  std::size_t rstep = 0, cstep = 0;
  for (std::size_t k = 0, p = 1; k < out; ++k, p *= n) rstep += p;
  for (std::size_t k = 0, p = 1; k < in; ++k, p *= n) cstep += p;
  for (std::size_t i = 0; i < n; ++i) m(i * rstep, i * cstep) = sr_.one();
  return m;
}

RMat ClassicalBackend::swap(const std::string& a, const std::string& b) const {
  const std::size_t da = wire_dim(a), db = wire_dim(b);
  RMat s(da * db, da * db, sr_.zero());
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < db; ++j) s(j * da + i, i * db + j) = sr_.one();
  return s;
}

GeneratorBundle<RMat> ClassicalBackend::generators(const std::string& obj) const {
  return {spider(obj, 2, 1), spider(obj, 1, 2), spider(obj, 0, 1),
          spider(obj, 1, 0), spider(obj, 0, 2), spider(obj, 2, 0)};
}

// ---- CDO ------------------------------------------------------------------------

CdoBackend::CdoBackend(diagram::Signature sig) : sig_(std::move(sig)) {}

std::size_t CdoBackend::hilbert_dim(const std::string& obj) const {
  const auto& o = sig_.object(obj);
  if (o.kind != diagram::ObjectKind::quantum) {
    throw KindError("object '" + obj + "' is classical; the CDO backend needs quantum objects");
  }
  return o.dim;
}

std::vector<std::size_t> CdoBackend::hilbert_dims(const diagram::ObjectList& objs) const {
  std::vector<std::size_t> out;
  for (const auto& o : objs) out.push_back(hilbert_dim(o));
  return out;
}

std::size_t CdoBackend::wire_dim(const std::string& obj) const {
  const std::size_t d = hilbert_dim(obj);
  return d * d;
}

std::size_t CdoBackend::wire_dim(const diagram::ObjectList& objs) const {
  std::size_t n = 1;
  for (const auto& o : objs) n *= wire_dim(o);
  return n;
}

namespace {

Mat pair_mult(std::size_t d) {
  return dcc::relayout_cols(dcc::f_mult(d).tensor, {d, d}, dcc::Layout::nested, dcc::Layout::pair);
}

}  // namespace

Mat CdoBackend::spider(const std::string& obj, std::size_t in, std::size_t out) const {
  const std::size_t d = hilbert_dim(obj);
  const std::size_t w = d * d;
  if (in == 0 && out == 0) throw TypeError("spider with no legs");
  const Mat mult = pair_mult(d);
  const Mat unit = dcc::f_unit(d).tensor;
  const Mat id = Mat::identity(w);
  Mat down = in == 0 ? unit : id;  // mult^(in)
  for (std::size_t k = 2; k <= in; ++k) down = linalg::matmul(mult, linalg::tensor(down, id));
  Mat up = out == 0 ? linalg::dagger(unit) : id;  // comult^(out)
  const Mat comult = linalg::dagger(mult);
  for (std::size_t k = 2; k <= out; ++k) up = linalg::matmul(linalg::tensor(up, id), comult);
  return linalg::matmul(up, down);
}

Mat CdoBackend::swap(const std::string& a, const std::string& b) const {
  const std::size_t da = wire_dim(a), db = wire_dim(b);
  Mat s(da * db, da * db);
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < db; ++j) s(j * da + i, i * db + j) = 1;
  return s;
}

GeneratorBundle<Mat> CdoBackend::generators(const std::string& obj) const {
  const std::size_t d = hilbert_dim(obj);
  const Mat mult = pair_mult(d);
  const Mat unit = dcc::f_unit(d).tensor;
  const Mat comult = linalg::dagger(mult);
  const Mat counit = linalg::dagger(unit);
  return {mult, comult, unit, counit, linalg::matmul(comult, unit), linalg::matmul(counit, mult)};
}

Mat cdo_point(const Mat& rho, const std::vector<std::size_t>& dims) {
  const auto p = dcc::xi(rho, dims);
  return dcc::relayout_rows(p.tensor, dims, dcc::Layout::nested, dcc::Layout::pair);
}

Mat cdo_unpoint(const Mat& point, const std::vector<std::size_t>& dims) {
  dcc::DMorphism p{{}, dims, dcc::relayout_rows(point, dims, dcc::Layout::pair, dcc::Layout::nested)};
  return dcc::xi_inv(p);
}

Mat cdo_sandwich(const Mat& l, const Mat& r, const std::vector<std::size_t>& dims) {
  const std::size_t n = linalg::product(dims);
  if (l.rows() != n || l.cols() != n || r.rows() != n || r.cols() != n) {
    throw ShapeError("sandwich: operators do not match objects");
  }
  Mat s = linalg::tensor(l, linalg::transpose(r));  // row-major vec(L X R)
  s = dcc::relayout_rows(s, dims, dcc::Layout::row_major, dcc::Layout::pair);
  return dcc::relayout_cols(s, dims, dcc::Layout::row_major, dcc::Layout::pair);
}

Mat cdo_kraus(const std::vector<Mat>& kraus, const std::vector<std::size_t>& in_dims,
              const std::vector<std::size_t>& out_dims) {
  const std::size_t ni = linalg::product(in_dims), no = linalg::product(out_dims);
  Mat s(no * no, ni * ni);
  for (const auto& k : kraus) {
    if (k.rows() != no || k.cols() != ni) throw ShapeError("kraus operator has wrong shape");
    s = linalg::add(s, linalg::tensor(k, linalg::conj(k)));
  }
  s = dcc::relayout_rows(s, out_dims, dcc::Layout::row_major, dcc::Layout::pair);
  return dcc::relayout_cols(s, in_dims, dcc::Layout::row_major, dcc::Layout::pair);
}

Mat choi(const Mat& superop, const std::vector<std::size_t>& in_dims,
         const std::vector<std::size_t>& out_dims) {
  const std::size_t ni = linalg::product(in_dims), no = linalg::product(out_dims);
  if (superop.rows() != no * no || superop.cols() != ni * ni) {
    throw ShapeError("choi: super-operator does not match dimensions");
  }
  Mat s = dcc::relayout_rows(superop, out_dims, dcc::Layout::pair, dcc::Layout::row_major);
  s = dcc::relayout_cols(s, in_dims, dcc::Layout::pair, dcc::Layout::row_major);
  return dcc::choi_row_major(s, ni, no);
}

CpResult is_cp(const Mat& superop, const std::vector<std::size_t>& in_dims,
               const std::vector<std::size_t>& out_dims, const linalg::Tol& tol) {
  const Mat j = choi(superop, in_dims, out_dims);
  CpResult r;
  r.hermitian = linalg::is_hermitian(j, tol);
  // Smallest eigenvalue of the Hermitian part: x^dagger J x has real part
  // below zero for its eigenvector, so a negative value certifies that J is
  // not positive even when J is not Hermitian.
  const Mat h = linalg::scale(linalg::add(j, linalg::dagger(j)), 0.5);
  const auto eig = linalg::herm_eig(h, tol);
  r.min_eigenvalue = eig.values.front();
  r.cp = r.hermitian && r.min_eigenvalue >= -(tol.abs_eps + tol.cutoff(eig.values.back()));
  return r;
}

// ---- reports --------------------------------------------------------------------

double LawReport::residual(const std::string& law) const {
  for (const auto& r : residuals)
    if (r.law == law) return r.residual;
  throw NameError("no law named '" + law + "'");
}

bool LawReport::frobenius_ok(double bound) const {
  return std::all_of(residuals.begin(), residuals.end(), [&](const LawResidual& r) {
    return r.law == "commutativity" || r.residual < bound;
  });
}

}  // namespace frobayes::models
