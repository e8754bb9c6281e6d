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


// Operators as points: the doubled category D(FdHilb).
//
// An object A of dimension d is carried by the two wires A (x) A*.  For a
// list of objects (A1, ..., Ak) a D-morphism tensor uses the nested layout
//
//     (a1, ..., ak, ak*, ..., a1*)
//
// on both sides: dual wires sit to the right of the primal ones, in the
// opposite order.  Other layouts used in the library:
//
//     pair:       (a1, a1*, a2, a2*, ...)   per-object blocks; the CDO backend
//     row_major:  (a1, ..., ak, a1*, ..., ak*)   vec of an operator on A1..Ak
//
// xi sends an operator rho to (rho (x) 1) o eta, which in row-major layout is
// the vector with entry rho(i, j) at index (i, j).

#pragma once

#include <cstddef>
#include <vector>

#include "frobayes/linalg.hpp"

namespace frobayes::dcc {

using linalg::Mat;

enum class Layout { nested, pair, row_major };

/// Re-indexes the row (or column) space of a D-morphism tensor between two
/// layouts of the same object list.
Mat relayout_rows(const Mat& m, const std::vector<std::size_t>& dims, Layout from, Layout to);
Mat relayout_cols(const Mat& m, const std::vector<std::size_t>& dims, Layout from, Layout to);

struct DMorphism {
  std::vector<std::size_t> dom;  // base Hilbert dimensions
  std::vector<std::size_t> cod;
  Mat tensor;  // nested layout, prod(cod)^2 x prod(dom)^2
};

/// prod(d^2).
std::size_t wire_size(const std::vector<std::size_t>& dims);

DMorphism d_identity(const std::vector<std::size_t>& dims);
/// `then` after `first`.
DMorphism d_compose(const DMorphism& first, const DMorphism& then);
DMorphism d_tensor(const DMorphism& f, const DMorphism& g);
DMorphism d_dagger(const DMorphism& f);
/// sigma_D : A (x)_D B -> B (x)_D A.
DMorphism d_swap(std::size_t da, std::size_t db);

/// Multiplication (1 (x) cap (x) 1) o (1 (x) 1 (x) sigma) on A (x)_D A.
DMorphism f_mult(std::size_t d);
/// eta: the cup on (A, A*), a point of A.
DMorphism f_unit(std::size_t d);
DMorphism f_comult(std::size_t d);
DMorphism f_counit(std::size_t d);

/// Counit on a list of objects: the partial trace of everything.
DMorphism d_counit(const std::vector<std::size_t>& dims);

/// The embedding h |-> h (x) conj(h), dual factors reversed.
DMorphism F(const Mat& h, const std::vector<std::size_t>& dom,
            const std::vector<std::size_t>& cod);

DMorphism xi(const Mat& rho, const std::vector<std::size_t>& dims);
DMorphism xi(const Mat& rho);
Mat xi_inv(const DMorphism& point);

/// Traces out the last object of a point.
DMorphism d_partial_trace(const DMorphism& point);

/// Choi matrix sum_ij |i><j| (x) Phi(|i><j|) of a super-operator acting on
/// row-major vectorized operators (n_in x n_in -> n_out x n_out).
Mat choi_row_major(const Mat& superop, std::size_t n_in, std::size_t n_out);

struct CpReport {
  bool cp = false;
  double min_choi_eigenvalue = 0;  // of the Hermitian part
  bool normalized = false;
  double normalization_residual = 0;
};

CpReport is_normalized_cp(const DMorphism& f, const linalg::Tol& tol = {});

}  // namespace frobayes::dcc
