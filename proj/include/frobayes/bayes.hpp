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


// Bayesian operations over labeled states.
//
// A State carries an ordered object list with conditioned objects first and
// the `given` conditioning objects last.  Classical states hold a column of
// semiring values (probabilities, or -ln p for the neg-log backend); quantum
// states hold an operator on the tensor product of the objects.  Every
// inverse is taken relative to the support.

#pragma once

#include <string>
#include <vector>

#include "frobayes/diagram.hpp"
#include "frobayes/linalg.hpp"
#include "frobayes/semiring.hpp"

namespace frobayes::bayes {

using diagram::ObjectList;
using linalg::Mat;
using linalg::RMat;
using linalg::Tol;

enum class Backend { standard, neglog, quantum };

const char* backend_name(Backend b) noexcept;
models::Semiring semiring_of(Backend b);

struct State {
  Backend backend = Backend::standard;
  ObjectList objects;
  std::vector<std::size_t> dims;
  std::size_t given = 0;  // trailing conditioning objects
  RMat values;            // classical: semiring column
  Mat rho;                // quantum: operator

  bool classical() const noexcept { return backend != Backend::quantum; }
  ObjectList targets() const;
  ObjectList givens() const;
  std::size_t dim(const std::string& obj) const;
};

/// Probabilities in row-major order over `objects`, embedded into the backend.
State classical_state(Backend b, ObjectList objects, std::vector<std::size_t> dims,
                      const std::vector<double>& probabilities);
State quantum_state(ObjectList objects, std::vector<std::size_t> dims, Mat rho);

/// Classical state as probabilities (extracted from the semiring).
std::vector<double> probabilities(const State& s);
/// Same state in another classical backend.
State convert(const State& s, Backend to);

/// The unit: semiring one everywhere, or the identity operator.
State unit(Backend b, ObjectList objects, std::vector<std::size_t> dims);

bool is_normalized(const State& s, const Tol& tol = {});
/// Counit residual: |sum - 1| or |tr - 1|.
double normalization_residual(const State& s);

/// Counit on everything outside `keep`; result ordered as `keep`.
State marginal(const State& s, const ObjectList& keep);
State reorder(const State& s, const ObjectList& order);

/// Support-relative Frobenius inverse of a state: 1/p on the support, or
/// the pseudo-inverse operator.
State frobenius_inverse(const State& s, const Tol& tol = {});

/// Frobenius square root: sqrt(p) entrywise, or the PSD square root.
State frobenius_sqrt(const State& s, const Tol& tol = {});

struct Modifier {
  State base;  // the state the modifier belongs to
  bool inverse = false;
};

Modifier modifier_of(const State& s);
Modifier modifier_inverse(const Modifier& m);

/// Applies the modifier to the objects of `x` it names: componentwise
/// product with p (or its support inverse), or the sandwich sqrt(rho) x
/// sqrt(rho) (or with the support pseudo-inverse square root).
State apply(const Modifier& m, const State& x, const Tol& tol = {});

/// Frobenius product on the union of the objects, `a` first.  Classical:
/// componentwise.  Quantum: a b with both padded by identities.
State product(const State& a, const State& b);

/// Largest entrywise gap after reordering `b` to `a`'s objects; classical
/// states are compared as probabilities.
double distance(const State& a, const State& b);
double magnitude(const State& s);

/// p(target | given).  An empty given yields the marginal.
State conditional(const State& joint, const ObjectList& target, const ObjectList& given,
                  const Tol& tol = {});

/// From c = p(B|A) with prior_target = p(A) and prior_given = p(B), returns
/// p(A|B): the inverse modifier of p(B) applied after the modifier of p(A).
State bayes_invert(const State& c, const State& prior_target, const State& prior_given,
                   const Tol& tol = {});

// ---- conditional processes ------------------------------------------------------

struct Process {
  Backend backend = Backend::standard;
  ObjectList dom;  // givens
  ObjectList cod;  // conclusions
  std::vector<std::size_t> dom_dims;
  std::vector<std::size_t> cod_dims;
  RMat classical;  // prod(cod) x prod(dom), semiring values
  Mat quantum;     // super-operator, per-object (a, a*) layout
};

/// Bends the conditioning wires of the state into inputs with caps.
Process to_process(const State& c);
/// Feeds one leg of a cup into the process.
State to_state(const Process& p);

/// Re-expresses `p` with the givens `new_givens` and conclusions
/// `new_conclusions`, using the compact structure modified by the marginals
/// of `joint`.
Process modified_transpose(const Process& p, const State& joint, const ObjectList& new_givens,
                           const ObjectList& new_conclusions, const Tol& tol = {});

// ---- conditional independence ---------------------------------------------------

enum class CiVariant { CI1_L, CI1_R, CI2_L, CI2_R, F_L, F_R, CI1_L_prime, CI1_R_prime };

const char* ci_name(CiVariant v) noexcept;
CiVariant parse_ci(const std::string& name);

struct CiResult {
  CiVariant variant = CiVariant::CI1_L;
  double residual = 0;
  double bound = 0;  // tolerance scaled by the tensors compared
  bool holds = false;
};

CiResult ci_test(const State& joint, const ObjectList& a, const ObjectList& b,
                 const ObjectList& c, CiVariant variant, const Tol& tol = {});

/// Norm of the commutator of p(A|C) and p(B|C) under the Frobenius product.
double ci_commutator(const State& joint, const ObjectList& a, const ObjectList& b,
                     const ObjectList& c, const Tol& tol = {});

struct TwoThirdReport {
  bool left = true;  // CI1_L, CI2_L, F_L; otherwise the R side
  CiResult ci1, ci2, f;
  bool violated = false;  // two hold within tol but the third exceeds 10 tol
};

TwoThirdReport ci_two_imply_third(const State& joint, const ObjectList& a, const ObjectList& b,
                                  const ObjectList& c, bool left = true, const Tol& tol = {});

enum class PoolVariant { L, R };

/// Reconstructs p(C|AB) from p(C|A) and p(C|B) and the priors, assuming A and
/// B are conditionally independent given C in the declared sense.
State pool(const State& c_given_a, const State& c_given_b, const State& prior_a,
           const State& prior_b, const State& prior_ab, const State& prior_c,
           PoolVariant variant = PoolVariant::L, const Tol& tol = {});

// ---- semi-graphoid axioms -------------------------------------------------------

enum class Axiom { symmetry, decomposition, weak_union, contraction };

const char* axiom_name(Axiom a) noexcept;
Axiom parse_axiom(const std::string& name);

struct GraphoidReport {
  Axiom axiom = Axiom::symmetry;
  std::vector<CiResult> antecedents;
  CiResult consequent;
  bool experimental = false;  // quantum backend
  bool antecedents_hold() const;
  bool passed() const { return !antecedents_hold() || consequent.holds; }
};

/// Independence I(X, Y | Z) is read as CI2_L.  The partition is (U, W, X, Y):
///   symmetry       I(U,W|X) => I(W,U|X)
///   decomposition  I(U,WY|X) => I(U,W|X)
///   weak union     I(U,WY|X) => I(U,W|XY)
///   contraction    I(U,W|X) and I(U,Y|XW) => I(U,WY|X)
GraphoidReport graphoid_check(const State& joint, Axiom axiom, const ObjectList& u,
                              const ObjectList& w, const ObjectList& x, const ObjectList& y,
                              const Tol& tol = {});

// ---- entropy --------------------------------------------------------------------

/// Shannon entropy sum p s with s = -ln p, 0 * inf = 0.  Classical only.
double entropy(const State& joint);
/// S(target | given) = sum p(t, g) s(t | g).
double conditional_entropy(const State& joint, const ObjectList& target, const ObjectList& given);

}  // namespace frobayes::bayes
