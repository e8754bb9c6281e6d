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


// Concrete models of the diagram calculus.
//
//   ClassicalBackend  objects are finite sets; a morphism A -> B is a
//                     prod(B) x prod(A) matrix over a Semiring.
//   CdoBackend        objects are Hilbert spaces; a morphism is a
//                     super-operator on vectorized operators, per-object
//                     (a, a*) pair layout, built from the doubled category.
//
// evaluate() interprets a Term in either backend by applying each generator
// in place to the relevant block of wires, so Par(id, g, id) never
// materializes a Kronecker product with an identity.

#pragma once

#include <map>
#include <string>
#include <vector>

#include "frobayes/dcc.hpp"
#include "frobayes/diagram.hpp"
#include "frobayes/linalg.hpp"
#include "frobayes/semiring.hpp"

namespace frobayes::models {

using linalg::Complex;
using linalg::Mat;

template <class M>
struct GeneratorBundle {
  M mult;
  M comult;
  M unit;
  M counit;
  M cup;
  M cap;
};

class ClassicalBackend {
 public:
  using Scalar = double;
  using Tensor = RMat;

  explicit ClassicalBackend(diagram::Signature sig, Semiring sr = Semiring::standard());

  const diagram::Signature& signature() const noexcept { return sig_; }
  const Semiring& semiring() const noexcept { return sr_; }

  std::size_t wire_dim(const std::string& obj) const;
  std::size_t wire_dim(const diagram::ObjectList& objs) const;

  Scalar zero() const noexcept { return sr_.zero(); }
  bool is_zero(Scalar s) const noexcept { return sr_.is_zero(s); }
  Scalar add(Scalar a, Scalar b) const { return sr_.add(a, b); }
  Scalar mul(Scalar a, Scalar b) const { return sr_.mul(a, b); }

  Tensor identity(std::size_t n) const { return sr_identity(n, sr_); }
  Tensor compose(const Tensor& first, const Tensor& then) const {
    return sr_matmul(then, first, sr_);
  }
  Tensor tensor(const Tensor& a, const Tensor& b) const { return sr_tensor(a, b, sr_); }
  Tensor dagger(const Tensor& a) const;
  double distance(const Tensor& a, const Tensor& b) const { return sr_distance(a, b, sr_); }

  /// Entry one exactly where every leg carries the same index.
  Tensor spider(const std::string& obj, std::size_t in, std::size_t out) const;
  Tensor swap(const std::string& a, const std::string& b) const;

  GeneratorBundle<Tensor> generators(const std::string& obj) const;

 private:
  diagram::Signature sig_;
  Semiring sr_;
};

class CdoBackend {
 public:
  using Scalar = Complex;
  using Tensor = Mat;

  explicit CdoBackend(diagram::Signature sig);

  const diagram::Signature& signature() const noexcept { return sig_; }

  /// d^2 for an object of Hilbert dimension d.
  std::size_t wire_dim(const std::string& obj) const;
  std::size_t wire_dim(const diagram::ObjectList& objs) const;
  std::size_t hilbert_dim(const std::string& obj) const;
  std::vector<std::size_t> hilbert_dims(const diagram::ObjectList& objs) const;

  Scalar zero() const noexcept { return 0.0; }
  bool is_zero(Scalar s) const noexcept { return s == Scalar{}; }
  Scalar add(Scalar a, Scalar b) const noexcept { return a + b; }
  Scalar mul(Scalar a, Scalar b) const noexcept { return a * b; }

  Tensor identity(std::size_t n) const { return Mat::identity(n); }
  Tensor compose(const Tensor& first, const Tensor& then) const {
    return linalg::matmul(then, first);
  }
  Tensor tensor(const Tensor& a, const Tensor& b) const { return linalg::tensor(a, b); }
  Tensor dagger(const Tensor& a) const { return linalg::dagger(a); }
  double distance(const Tensor& a, const Tensor& b) const { return linalg::max_abs_diff(a, b); }

  /// Spider(n, m) = comult^(m) o mult^(n), both folded to the left.
  Tensor spider(const std::string& obj, std::size_t in, std::size_t out) const;
  Tensor swap(const std::string& a, const std::string& b) const;

  GeneratorBundle<Tensor> generators(const std::string& obj) const;

 private:
  diagram::Signature sig_;
};

// ---- pair-layout helpers for the CDO backend ---------------------------------

/// Point of an operator on prod(dims) (pair layout column).
Mat cdo_point(const Mat& rho, const std::vector<std::size_t>& dims);
Mat cdo_unpoint(const Mat& point, const std::vector<std::size_t>& dims);
/// Super-operator X |-> L X R on operators over prod(dims).
Mat cdo_sandwich(const Mat& l, const Mat& r, const std::vector<std::size_t>& dims);
/// Super-operator of X |-> sum_k K_k X K_k^dagger between two object lists.
Mat cdo_kraus(const std::vector<Mat>& kraus, const std::vector<std::size_t>& in_dims,
              const std::vector<std::size_t>& out_dims);

/// Choi matrix of a pair-layout super-operator, sized prod(in) * prod(out).
Mat choi(const Mat& superop, const std::vector<std::size_t>& in_dims,
         const std::vector<std::size_t>& out_dims);

struct CpResult {
  bool cp = false;
  bool hermitian = false;  // Choi matrix Hermitian (map preserves Hermiticity)
  double min_eigenvalue = 0;  // of the Hermitian part of the Choi matrix
};
CpResult is_cp(const Mat& superop, const std::vector<std::size_t>& in_dims,
               const std::vector<std::size_t>& out_dims, const linalg::Tol& tol = {});

// ---- evaluation ----------------------------------------------------------------

template <class B>
using Bindings = std::map<std::string, typename B::Tensor>;

namespace detail {

// out[(p, j, q), c] = sum_i g[j, i] * x[(p, i, q), c]
template <class B>
typename B::Tensor apply_block(const B& be, const typename B::Tensor& g,
                               const typename B::Tensor& x, std::size_t pre,
                               std::size_t post) {
  const std::size_t mid_in = g.cols(), mid_out = g.rows(), cols = x.cols();
  if (x.rows() != pre * mid_in * post) throw ShapeError("evaluate: wire bookkeeping mismatch");
  typename B::Tensor out(pre * mid_out * post, cols, be.zero());
  for (std::size_t p = 0; p < pre; ++p)
    for (std::size_t j = 0; j < mid_out; ++j)
      for (std::size_t i = 0; i < mid_in; ++i) {
        const auto gji = g(j, i);
        if (be.is_zero(gji)) continue;
        for (std::size_t q = 0; q < post; ++q) {
          const auto* src = &x((p * mid_in + i) * post + q, 0);
          auto* dst = &out((p * mid_out + j) * post + q, 0);
          for (std::size_t c = 0; c < cols; ++c) {
            if (be.is_zero(src[c])) continue;
            dst[c] = be.add(dst[c], be.mul(gji, src[c]));
          }
        }
      }
  return out;
}

template <class B>
typename B::Tensor generator_tensor(const diagram::Generator& g, const B& be,
                                    const Bindings<B>& bindings) {
  using namespace diagram;
  if (const auto* s = std::get_if<Spider>(&g)) return be.spider(s->obj, s->in, s->out);
  if (const auto* c = std::get_if<Cup>(&g)) return be.spider(c->obj, 0, 2);
  if (const auto* c = std::get_if<Cap>(&g)) return be.spider(c->obj, 2, 0);
  if (const auto* s = std::get_if<Swap>(&g)) return be.swap(s->first, s->second);
  if (const auto* i = std::get_if<Identity>(&g)) return be.identity(be.wire_dim(i->obj));
  const auto& b = std::get<Box>(g);
  auto it = bindings.find(b.label);
  if (it == bindings.end()) throw NameError("box '" + b.label + "' is not bound to a tensor");
  const auto& t = it->second;
  if (t.rows() != be.wire_dim(b.cod) || t.cols() != be.wire_dim(b.dom)) {
    throw ShapeError("tensor bound to box '" + b.label + "' is " + std::to_string(t.rows()) +
                     "x" + std::to_string(t.cols()) + ", interface needs " +
                     std::to_string(be.wire_dim(b.cod)) + "x" + std::to_string(be.wire_dim(b.dom)));
  }
  return b.dagger ? be.dagger(t) : t;
}

template <class B>
void walk(const diagram::Term& t, const B& be, const Bindings<B>& bindings,
          typename B::Tensor& x, std::vector<std::size_t>& wires, std::size_t offset) {
  using K = diagram::Term::Kind;
  switch (t.kind()) {
    case K::empty:
      return;
    case K::gen: {
      if (std::holds_alternative<diagram::Identity>(t.generator())) return;
      const auto g = generator_tensor(t.generator(), be, bindings);
      const std::size_t arity = t.dom().size();
      if (offset + arity > wires.size()) throw ShapeError("evaluate: wire bookkeeping mismatch");
      std::size_t pre = 1, post = 1;
      for (std::size_t i = 0; i < offset; ++i) pre *= wires[i];
      for (std::size_t i = offset + arity; i < wires.size(); ++i) post *= wires[i];
      x = apply_block(be, g, x, pre, post);
      std::vector<std::size_t> cod;
      for (const auto& o : t.cod()) cod.push_back(be.wire_dim(o));
      wires.erase(wires.begin() + offset, wires.begin() + offset + arity);
      wires.insert(wires.begin() + offset, cod.begin(), cod.end());
      return;
    }
    case K::seq:
      if (t.first().cod() != t.second().dom()) {
        throw TypeError("evaluate: ill-typed sequential composition " +
                        diagram::format_list(t.first().cod()) + " vs " +
                        diagram::format_list(t.second().dom()));
      }
      walk(t.first(), be, bindings, x, wires, offset);
      walk(t.second(), be, bindings, x, wires, offset);
      return;
    case K::par:
      // Right block first so the left block's offset is unaffected.
      walk(t.second(), be, bindings, x, wires, offset + t.first().dom().size());
      walk(t.first(), be, bindings, x, wires, offset);
      return;
  }
}

}  // namespace detail

/// Denotation of a term: a wire_dim(cod) x wire_dim(dom) tensor.
template <class B>
typename B::Tensor evaluate(const diagram::Term& t, const B& be,
                            const Bindings<B>& bindings = {}) {
  std::vector<std::size_t> wires;
  for (const auto& o : t.dom()) wires.push_back(be.wire_dim(o));
  typename B::Tensor x = be.identity(be.wire_dim(t.dom()));
  detail::walk(t, be, bindings, x, wires, 0);
  return x;
}

// ---- law verification ----------------------------------------------------------

struct LawResidual {
  std::string law;
  double residual = 0;
};

struct LawReport {
  std::string object;
  std::size_t dim = 0;
  std::vector<LawResidual> residuals;

  double residual(const std::string& law) const;
  /// Every law except commutativity below `bound`.
  bool frobenius_ok(double bound) const;
};

/// Associativity, units, the Frobenius law, dagger compatibility, snakes
/// and commutativity, each as the max entrywise gap between the two sides.
template <class B>
LawReport verify_frobenius_laws(const B& be, const std::string& obj) {
  const auto g = be.generators(obj);
  const std::size_t n = be.wire_dim(obj);
  const auto id = be.identity(n);
  const auto sw = be.swap(obj, obj);
  auto c = [&](const auto& first, const auto& then) { return be.compose(first, then); };
  auto t = [&](const auto& a, const auto& b) { return be.tensor(a, b); };
  LawReport r;
  r.object = obj;
  r.dim = n;
  auto add = [&](const char* law, double v) { r.residuals.push_back({law, v}); };

  add("associativity", be.distance(c(t(g.mult, id), g.mult), c(t(id, g.mult), g.mult)));
  add("coassociativity", be.distance(c(g.comult, t(g.comult, id)), c(g.comult, t(id, g.comult))));
  add("left_unit", be.distance(c(t(g.unit, id), g.mult), id));
  add("right_unit", be.distance(c(t(id, g.unit), g.mult), id));
  add("counit", std::max(be.distance(c(g.comult, t(g.counit, id)), id),
                         be.distance(c(g.comult, t(id, g.counit)), id)));
  const auto dm = c(g.mult, g.comult);
  add("frobenius", std::max(be.distance(c(t(g.comult, id), t(id, g.mult)), dm),
                            be.distance(c(t(id, g.comult), t(g.mult, id)), dm)));
  add("dagger", std::max(be.distance(g.comult, be.dagger(g.mult)),
                         be.distance(g.counit, be.dagger(g.unit))));
  add("snake", std::max(be.distance(c(t(id, g.cup), t(g.cap, id)), id),
                        be.distance(c(t(g.cup, id), t(id, g.cap)), id)));
  add("commutativity", be.distance(c(sw, g.mult), g.mult));
  return r;
}

}  // namespace frobayes::models
