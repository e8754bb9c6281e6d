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


#include "frobayes/bayes.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "frobayes/models.hpp"

namespace frobayes::bayes {

using models::Semiring;

const char* backend_name(Backend b) noexcept {
  switch (b) {
    case Backend::standard: return "standard";
    case Backend::neglog: return "neglog";
    case Backend::quantum: return "quantum";
  }
  return "?";
}

Semiring semiring_of(Backend b) {
  if (b == Backend::neglog) return Semiring::neglog();
  if (b == Backend::quantum) throw KindError("quantum states have no semiring");
  return Semiring::standard();
}

ObjectList State::targets() const {
  return ObjectList(objects.begin(), objects.end() - static_cast<std::ptrdiff_t>(given));
}

ObjectList State::givens() const {
  return ObjectList(objects.end() - static_cast<std::ptrdiff_t>(given), objects.end());
}

std::size_t State::dim(const std::string& obj) const {
  for (std::size_t i = 0; i < objects.size(); ++i)
    if (objects[i] == obj) return dims[i];
  throw NameError("state has no object '" + obj + "'");
}

namespace {

std::vector<std::size_t> positions(const State& s, const ObjectList& subset) {
  std::vector<std::size_t> pos;
  for (const auto& o : subset) {
    auto it = std::find(s.objects.begin(), s.objects.end(), o);
    if (it == s.objects.end()) {
      throw NameError("object '" + o + "' is not in " + diagram::format_list(s.objects));
    }
    const std::size_t p = it - s.objects.begin();
    if (std::find(pos.begin(), pos.end(), p) != pos.end()) {
      throw DomainError("object '" + o + "' listed twice");
    }
    pos.push_back(p);
  }
  return pos;
}

std::vector<std::size_t> dims_at(const State& s, const std::vector<std::size_t>& pos) {
  std::vector<std::size_t> d;
  for (auto p : pos) d.push_back(s.dims[p]);
  return d;
}

// For each flat index over `dims`, the flat index over the axes `pos`.
std::vector<std::size_t> project(const std::vector<std::size_t>& dims,
                                 const std::vector<std::size_t>& pos) {
  const std::size_t total = linalg::product(dims);
  std::vector<std::size_t> out(total, 0), idx(dims.size(), 0);
  for (std::size_t f = 0; f < total; ++f) {
    std::size_t g = 0;
    for (auto p : pos) g = g * dims[p] + idx[p];
    out[f] = g;
    for (std::size_t a = dims.size(); a-- > 0;) {
      if (++idx[a] < dims[a]) break;
      idx[a] = 0;
    }
  }
  return out;
}

void check_disjoint(const ObjectList& a, const ObjectList& b) {
  for (const auto& o : a)
    if (std::find(b.begin(), b.end(), o) != b.end()) {
      throw DomainError("object '" + o + "' appears on both sides");
    }
}

ObjectList concat(ObjectList a, const ObjectList& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

bool same_set(ObjectList a, ObjectList b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

}  // namespace

// ---- construction ---------------------------------------------------------------

State classical_state(Backend b, ObjectList objects, std::vector<std::size_t> dims,
                      const std::vector<double>& probabilities) {
  if (objects.size() != dims.size()) throw ShapeError("state: objects and dims differ in length");
  if (probabilities.size() != linalg::product(dims)) {
    throw ShapeError("state: " + std::to_string(probabilities.size()) + " values for " +
                     std::to_string(linalg::product(dims)) + " outcomes");
  }
  const auto sr = semiring_of(b);
  State s;
  s.backend = b;
  s.objects = std::move(objects);
  s.dims = std::move(dims);
  s.values = RMat(probabilities.size(), 1);
  for (std::size_t i = 0; i < probabilities.size(); ++i) {
    if (!(probabilities[i] >= 0)) throw DomainError("state: negative probability");
    s.values(i, 0) = sr.embed(probabilities[i]);
  }
  return s;
}

State quantum_state(ObjectList objects, std::vector<std::size_t> dims, Mat rho) {
  if (objects.size() != dims.size()) throw ShapeError("state: objects and dims differ in length");
  const std::size_t n = linalg::product(dims);
  if (rho.rows() != n || rho.cols() != n) throw ShapeError("state: operator size mismatch");
  State s;
  s.backend = Backend::quantum;
  s.objects = std::move(objects);
  s.dims = std::move(dims);
  s.rho = std::move(rho);
  return s;
}

std::vector<double> probabilities(const State& s) {
  if (!s.classical()) throw KindError("probabilities of a quantum state");
  const auto sr = semiring_of(s.backend);
  std::vector<double> p(s.values.rows());
  for (std::size_t i = 0; i < p.size(); ++i) p[i] = sr.extract(s.values(i, 0));
  return p;
}

State convert(const State& s, Backend to) {
  State out = classical_state(to, s.objects, s.dims, probabilities(s));
  out.given = s.given;
  return out;
}

State unit(Backend b, ObjectList objects, std::vector<std::size_t> dims) {
  const std::size_t n = linalg::product(dims);
  if (b == Backend::quantum) return quantum_state(std::move(objects), std::move(dims), Mat::identity(n));
  State s;
  s.backend = b;
  s.objects = std::move(objects);
  s.dims = std::move(dims);
  s.values = RMat(n, 1, semiring_of(b).one());
  return s;
}

double normalization_residual(const State& s) {
  if (!s.classical()) return std::abs(linalg::trace(s.rho) - 1.0);
  const auto sr = semiring_of(s.backend);
  double total = sr.zero();
  for (std::size_t i = 0; i < s.values.rows(); ++i) total = sr.add(total, s.values(i, 0));
  return std::abs(sr.extract(total) - 1.0);
}

bool is_normalized(const State& s, const Tol& tol) {
  return normalization_residual(s) <= tol.scaled(1.0);
}

// ---- structure ------------------------------------------------------------------

State marginal(const State& s, const ObjectList& keep) {
  const auto pos = positions(s, keep);
  State out;
  out.backend = s.backend;
  out.objects = keep;
  out.dims = dims_at(s, pos);
  if (s.classical()) {
    const auto sr = semiring_of(s.backend);
    const auto proj = project(s.dims, pos);
    out.values = RMat(linalg::product(out.dims), 1, sr.zero());
    for (std::size_t i = 0; i < proj.size(); ++i) {
      out.values(proj[i], 0) = sr.add(out.values(proj[i], 0), s.values(i, 0));
    }
    return out;
  }
  std::vector<bool> mask(s.objects.size(), false);
  for (auto p : pos) mask[p] = true;
  Mat reduced = linalg::partial_trace_keep(s.rho, s.dims, mask);
  // partial_trace_keep leaves the kept axes in their original order.
  std::vector<std::size_t> sorted = pos;
  std::sort(sorted.begin(), sorted.end());
  std::vector<std::size_t> perm;
  for (auto p : pos) perm.push_back(std::find(sorted.begin(), sorted.end(), p) - sorted.begin());
  std::vector<std::size_t> sorted_dims;
  for (auto p : sorted) sorted_dims.push_back(s.dims[p]);
  out.rho = linalg::permute_operator(reduced, sorted_dims, perm);
  return out;
}

State reorder(const State& s, const ObjectList& order) {
  if (order.size() != s.objects.size()) {
    throw ShapeError("reorder: " + diagram::format_list(order) + " is not a permutation of " +
                     diagram::format_list(s.objects));
  }
  const auto perm = positions(s, order);
  State out;
  out.backend = s.backend;
  out.objects = order;
  out.dims = dims_at(s, perm);
  out.given = same_set(ObjectList(order.end() - static_cast<std::ptrdiff_t>(s.given), order.end()),
                       s.givens())
                  ? s.given
                  : 0;
  if (s.classical()) {
    out.values = linalg::permute_rows(s.values, s.dims, perm);
  } else {
    out.rho = linalg::permute_operator(s.rho, s.dims, perm);
  }
  return out;
}

State frobenius_inverse(const State& s, const Tol& tol) {
  State out = s;
  if (s.classical()) {
    const auto sr = semiring_of(s.backend);
    for (auto& v : out.values.data()) v = sr.support_inverse(v);
  } else {
    out.rho = linalg::support_pinv(s.rho, tol);
  }
  return out;
}

State frobenius_sqrt(const State& s, const Tol& tol) {
  State out = s;
  if (s.classical()) {
    const auto sr = semiring_of(s.backend);
    for (auto& v : out.values.data()) v = sr.embed(std::sqrt(sr.extract(v)));
  } else {
    out.rho = linalg::psd_sqrt(s.rho, tol);
  }
  return out;
}

Modifier modifier_of(const State& s) { return Modifier{s, false}; }

Modifier modifier_inverse(const Modifier& m) { return Modifier{m.base, !m.inverse}; }

State apply(const Modifier& m, const State& x, const Tol& tol) {
  if (m.base.backend != x.backend) throw KindError("modifier and state use different backends");
  if (m.base.objects.empty()) return x;
  const auto pos = positions(x, m.base.objects);
  if (dims_at(x, pos) != m.base.dims) throw ShapeError("modifier dimensions do not match state");
  State out = x;
  if (x.classical()) {
    const auto sr = semiring_of(x.backend);
    const auto proj = project(x.dims, pos);
    for (std::size_t i = 0; i < proj.size(); ++i) {
      double f = m.base.values(proj[i], 0);
      if (m.inverse) f = sr.support_inverse(f);
      out.values(i, 0) = sr.mul(f, x.values(i, 0));
    }
    return out;
  }
  const Mat root = m.inverse ? linalg::psd_inv_sqrt(m.base.rho, tol) : linalg::psd_sqrt(m.base.rho, tol);
  const Mat l = linalg::embed_operator(root, x.dims, pos);
  out.rho = linalg::matmul(linalg::matmul(l, x.rho), l);
  return out;
}

State product(const State& a, const State& b) {
  if (a.backend != b.backend) throw KindError("product of states from different backends");
  State out;
  out.backend = a.backend;
  out.objects = a.objects;
  out.dims = a.dims;
  for (std::size_t i = 0; i < b.objects.size(); ++i) {
    auto it = std::find(out.objects.begin(), out.objects.end(), b.objects[i]);
    if (it == out.objects.end()) {
      out.objects.push_back(b.objects[i]);
      out.dims.push_back(b.dims[i]);
    } else if (out.dims[it - out.objects.begin()] != b.dims[i]) {
      throw ShapeError("object '" + b.objects[i] + "' has two dimensions");
    }
  }
  const auto pa = positions(out, a.objects), pb = positions(out, b.objects);
  if (a.classical()) {
    const auto sr = semiring_of(a.backend);
    const auto ia = project(out.dims, pa), ib = project(out.dims, pb);
    out.values = RMat(ia.size(), 1);
    for (std::size_t i = 0; i < ia.size(); ++i) {
      out.values(i, 0) = sr.mul(a.values(ia[i], 0), b.values(ib[i], 0));
    }
    return out;
  }
  out.rho = linalg::matmul(linalg::embed_operator(a.rho, out.dims, pa),
                           linalg::embed_operator(b.rho, out.dims, pb));
  return out;
}

double distance(const State& a, const State& b) {
  if (a.backend == Backend::quantum || b.backend == Backend::quantum) {
    if (a.backend != b.backend) throw KindError("distance between classical and quantum states");
    return linalg::max_abs_diff(a.rho, reorder(b, a.objects).rho);
  }
  const auto pa = probabilities(a), pb = probabilities(reorder(b, a.objects));
  double d = 0;
  for (std::size_t i = 0; i < pa.size(); ++i) d = std::max(d, std::abs(pa[i] - pb[i]));
  return d;
}

double magnitude(const State& s) {
  if (!s.classical()) return linalg::max_abs(s.rho);
  double m = 0;
  for (double p : probabilities(s)) m = std::max(m, std::abs(p));
  return m;
}

// ---- conditionals ---------------------------------------------------------------

State conditional(const State& joint, const ObjectList& target, const ObjectList& given,
                  const Tol& tol) {
  check_disjoint(target, given);
  State tg = marginal(joint, concat(target, given));
  if (given.empty()) return tg;
  const State g = marginal(joint, given);
  State out = apply(modifier_inverse(modifier_of(g)), tg, tol);
  out.given = given.size();
  return out;
}

State bayes_invert(const State& c, const State& prior_target, const State& prior_given,
                   const Tol& tol) {
  if (!same_set(c.givens(), prior_target.objects) || !same_set(c.targets(), prior_given.objects)) {
    throw DomainError("bayes_invert: priors " + diagram::format_list(prior_target.objects) +
                      " and " + diagram::format_list(prior_given.objects) +
                      " do not match the conditional " + diagram::format_list(c.targets()) +
                      "|" + diagram::format_list(c.givens()));
  }
  State x = apply(modifier_of(prior_target), c, tol);
  x = apply(modifier_inverse(modifier_of(prior_given)), x, tol);
  x.given = 0;
  State out = reorder(x, concat(prior_target.objects, prior_given.objects));
  out.given = prior_given.objects.size();
  return out;
}

// ---- processes ------------------------------------------------------------------

namespace {

diagram::Signature signature_for(Backend b, const ObjectList& objs,
                                 const std::vector<std::size_t>& dims) {
  diagram::Signature sig;
  const auto kind = b == Backend::quantum ? diagram::ObjectKind::quantum : diagram::ObjectKind::classical;
  for (std::size_t i = 0; i < objs.size(); ++i) {
    if (!sig.find_object(objs[i])) sig.add_object({objs[i], kind, dims[i]});
  }
  return sig;
}

// Evaluates a term whose boxes are bound to states, modifiers or processes.
struct Evaluator {
  Backend backend;
  diagram::Signature sig;
  models::Bindings<models::ClassicalBackend> classical;
  models::Bindings<models::CdoBackend> quantum;

  Evaluator(Backend b, const ObjectList& objs, const std::vector<std::size_t>& dims)
      : backend(b), sig(signature_for(b, objs, dims)) {}

  diagram::Term bind_state(const std::string& label, const State& s) {
    diagram::BoxDecl decl{label, {}, s.objects, diagram::Flavor::state};
    sig.add_box(decl);
    if (s.classical()) {
      classical[label] = s.values;
    } else {
      quantum[label] = models::cdo_point(s.rho, s.dims);
    }
    return diagram::box(decl);
  }

  diagram::Term bind_modifier(const std::string& label, const Modifier& m, const Tol& tol) {
    const auto& s = m.base;
    diagram::BoxDecl decl{label, s.objects, s.objects,
                          m.inverse ? diagram::Flavor::modifier_inverse : diagram::Flavor::modifier};
    sig.add_box(decl);
    if (s.classical()) {
      const auto sr = semiring_of(s.backend);
      const std::size_t n = s.values.rows();
      RMat d(n, n, sr.zero());
      for (std::size_t i = 0; i < n; ++i) {
        d(i, i) = m.inverse ? sr.support_inverse(s.values(i, 0)) : s.values(i, 0);
      }
      classical[label] = d;
    } else {
      const Mat root = m.inverse ? linalg::psd_inv_sqrt(s.rho, tol) : linalg::psd_sqrt(s.rho, tol);
      quantum[label] = models::cdo_sandwich(root, root, s.dims);
    }
    return diagram::box(decl);
  }

  diagram::Term bind_process(const std::string& label, const Process& p) {
    diagram::BoxDecl decl{label, p.dom, p.cod, diagram::Flavor::process};
    sig.add_box(decl);
    if (backend == Backend::quantum) {
      quantum[label] = p.quantum;
    } else {
      classical[label] = p.classical;
    }
    return diagram::box(decl);
  }

  // Classical tensors as RMat; quantum tensors returned through `q`.
  RMat run(const diagram::Term& t, Mat* q) const {
    diagram::typecheck(t, sig);
    if (backend == Backend::quantum) {
      models::CdoBackend be(sig);
      *q = models::evaluate(t, be, quantum);
      return {};
    }
    models::ClassicalBackend be(sig, semiring_of(backend));
    return models::evaluate(t, be, classical);
  }
};

std::vector<std::size_t> dims_of(const State& s, const ObjectList& objs) {
  std::vector<std::size_t> d;
  for (const auto& o : objs) d.push_back(s.dim(o));
  return d;
}

}  // namespace

Process to_process(const State& c) {
  const ObjectList t = c.targets(), g = c.givens();
  Evaluator ev(c.backend, c.objects, c.dims);
  const diagram::Term state = ev.bind_state("c", State{c.backend, c.objects, c.dims, 0, c.values, c.rho});
  diagram::Term term = state;
  if (!g.empty()) {
    term = diagram::Term::seq(diagram::Term::par(state, diagram::id(g)),
                              diagram::par_all({diagram::id(t), diagram::composite_cap(g)}));
  }
  Process p;
  p.backend = c.backend;
  p.dom = g;
  p.cod = t;
  p.dom_dims = dims_of(c, g);
  p.cod_dims = dims_of(c, t);
  p.classical = ev.run(term, &p.quantum);
  return p;
}

State to_state(const Process& p) {
  const ObjectList objs = concat(p.cod, p.dom);
  std::vector<std::size_t> dims = p.cod_dims;
  dims.insert(dims.end(), p.dom_dims.begin(), p.dom_dims.end());
  Evaluator ev(p.backend, objs, dims);
  const diagram::Term f = ev.bind_process("p", p);
  diagram::Term term = f;
  if (!p.dom.empty()) {
    term = diagram::Term::seq(diagram::composite_cup(p.dom), diagram::Term::par(f, diagram::id(p.dom)));
  }
  State s;
  s.backend = p.backend;
  s.objects = objs;
  s.dims = dims;
  s.given = p.dom.size();
  Mat q;
  s.values = ev.run(term, &q);
  if (p.backend == Backend::quantum) s.rho = models::cdo_unpoint(q, dims);
  return s;
}

Process modified_transpose(const Process& p, const State& joint, const ObjectList& new_givens,
                           const ObjectList& new_conclusions, const Tol& tol) {
  check_disjoint(new_givens, new_conclusions);
  const ObjectList all = concat(p.cod, p.dom);
  const ObjectList target = concat(new_conclusions, new_givens);
  if (!same_set(all, target) || all.size() != target.size()) {
    throw DomainError("modified_transpose: " + diagram::format_list(target) +
                      " does not repartition " + diagram::format_list(all));
  }
  std::vector<std::size_t> dims = p.cod_dims;
  dims.insert(dims.end(), p.dom_dims.begin(), p.dom_dims.end());
  Evaluator ev(p.backend, all, dims);
  using diagram::Term;

  // Joint state: one leg of the cup through p, the other through the modifier
  // of the givens' marginal.
  Term state = ev.bind_process("p", p);
  if (!p.dom.empty()) {
    const Term m = ev.bind_modifier("M", modifier_of(marginal(joint, p.dom)), tol);
    state = Term::seq(diagram::composite_cup(p.dom), Term::par(state, m));
  }
  std::vector<std::size_t> perm;
  for (const auto& o : target) perm.push_back(std::find(all.begin(), all.end(), o) - all.begin());
  state = Term::seq(state, diagram::permutation(all, perm));
  if (new_givens.empty()) {
    Process out{p.backend, {}, new_conclusions, {}, dims_of(joint, new_conclusions), {}, {}};
    out.classical = ev.run(state, &out.quantum);
    return out;
  }
  // Conditional state on the new givens, then bend them into inputs.
  const Term minv =
      ev.bind_modifier("Minv", modifier_inverse(modifier_of(marginal(joint, new_givens))), tol);
  state = Term::seq(state, diagram::par_all({diagram::id(new_conclusions), minv}));
  const Term process =
      Term::seq(Term::par(state, diagram::id(new_givens)),
                diagram::par_all({diagram::id(new_conclusions), diagram::composite_cap(new_givens)}));
  Process out{p.backend, new_givens, new_conclusions, dims_of(joint, new_givens),
              dims_of(joint, new_conclusions), {}, {}};
  out.classical = ev.run(process, &out.quantum);
  return out;
}

// ---- conditional independence ---------------------------------------------------

const char* ci_name(CiVariant v) noexcept {
  switch (v) {
    case CiVariant::CI1_L: return "CI1_L";
    case CiVariant::CI1_R: return "CI1_R";
    case CiVariant::CI2_L: return "CI2_L";
    case CiVariant::CI2_R: return "CI2_R";
    case CiVariant::F_L: return "F_L";
    case CiVariant::F_R: return "F_R";
    case CiVariant::CI1_L_prime: return "CI1_L'";
    case CiVariant::CI1_R_prime: return "CI1_R'";
  }
  return "?";
}

CiVariant parse_ci(const std::string& name) {
  for (auto v : {CiVariant::CI1_L, CiVariant::CI1_R, CiVariant::CI2_L, CiVariant::CI2_R,
                 CiVariant::F_L, CiVariant::F_R, CiVariant::CI1_L_prime, CiVariant::CI1_R_prime}) {
    if (name == ci_name(v)) return v;
  }
  throw NameError("unknown independence variant '" + name + "'");
}

namespace {

CiResult compare(CiVariant v, const State& lhs, const State& rhs, const Tol& tol) {
  CiResult r;
  r.variant = v;
  r.residual = distance(lhs, rhs);
  r.bound = tol.scaled(std::max(magnitude(lhs), magnitude(rhs)));
  r.holds = r.residual <= r.bound;
  return r;
}

// x | C (x) 1_y
State padded(const State& joint, const ObjectList& x, const ObjectList& c, const ObjectList& y,
             const Tol& tol) {
  return product(conditional(joint, x, c, tol), unit(joint.backend, y, dims_of(joint, y)));
}

// M_{c}^{-1} M_{yc} (x|c (x) 1_y)
State modified(const State& joint, const ObjectList& x, const ObjectList& y, const ObjectList& c,
               const ObjectList& outer, const Tol& tol) {
  State s = apply(modifier_of(marginal(joint, concat(y, c))), padded(joint, x, c, y, tol), tol);
  return apply(modifier_inverse(modifier_of(marginal(joint, outer))), s, tol);
}

}  // namespace

CiResult ci_test(const State& joint, const ObjectList& a, const ObjectList& b, const ObjectList& c,
                 CiVariant variant, const Tol& tol) {
  check_disjoint(a, b);
  check_disjoint(a, c);
  check_disjoint(b, c);
  auto cond = [&](const ObjectList& x, const ObjectList& g) { return conditional(joint, x, g, tol); };
  switch (variant) {
    case CiVariant::CI1_L:
      return compare(variant, cond(a, concat(b, c)), padded(joint, a, c, b, tol), tol);
    case CiVariant::CI1_R:
      return compare(variant, cond(b, concat(a, c)), padded(joint, b, c, a, tol), tol);
    case CiVariant::CI2_L:
      return compare(variant, cond(concat(a, b), c), product(cond(b, c), cond(a, c)), tol);
    case CiVariant::CI2_R:
      return compare(variant, cond(concat(a, b), c), product(cond(a, c), cond(b, c)), tol);
    case CiVariant::F_L:
      return compare(variant, modified(joint, a, b, c, c, tol), product(cond(b, c), cond(a, c)), tol);
    case CiVariant::F_R:
      return compare(variant, modified(joint, b, a, c, c, tol), product(cond(a, c), cond(b, c)), tol);
    case CiVariant::CI1_L_prime:
      return compare(variant, cond(b, concat(a, c)), modified(joint, a, b, c, concat(a, c), tol), tol);
    case CiVariant::CI1_R_prime:
      return compare(variant, cond(a, concat(b, c)), modified(joint, b, a, c, concat(b, c), tol), tol);
  }
  throw DomainError("unknown independence variant");
}

double ci_commutator(const State& joint, const ObjectList& a, const ObjectList& b,
                     const ObjectList& c, const Tol& tol) {
  const State ac = conditional(joint, a, c, tol), bc = conditional(joint, b, c, tol);
  return distance(product(ac, bc), product(bc, ac));
}

TwoThirdReport ci_two_imply_third(const State& joint, const ObjectList& a, const ObjectList& b,
                                  const ObjectList& c, bool left, const Tol& tol) {
  TwoThirdReport r;
  r.left = left;
  r.ci1 = ci_test(joint, a, b, c, left ? CiVariant::CI1_L : CiVariant::CI1_R, tol);
  r.ci2 = ci_test(joint, a, b, c, left ? CiVariant::CI2_L : CiVariant::CI2_R, tol);
  r.f = ci_test(joint, a, b, c, left ? CiVariant::F_L : CiVariant::F_R, tol);
  const CiResult* all[] = {&r.ci1, &r.ci2, &r.f};
  for (int k = 0; k < 3; ++k) {
    const auto& x = *all[(k + 1) % 3];
    const auto& y = *all[(k + 2) % 3];
    const auto& z = *all[k];
    if (x.holds && y.holds && z.residual > 10 * z.bound) r.violated = true;
  }
  return r;
}

State pool(const State& c_given_a, const State& c_given_b, const State& prior_a,
           const State& prior_b, const State& prior_ab, const State& prior_c,
           PoolVariant variant, const Tol& tol) {
  const State inv_c = frobenius_inverse(prior_c, tol);
  State x = variant == PoolVariant::L ? product(product(c_given_b, inv_c), c_given_a)
                                      : product(product(c_given_a, inv_c), c_given_b);
  x = apply(modifier_of(prior_b), x, tol);
  x = apply(modifier_of(prior_a), x, tol);
  x = apply(modifier_inverse(modifier_of(prior_ab)), x, tol);
  x.given = 0;
  State out = reorder(x, concat(prior_c.objects, concat(prior_a.objects, prior_b.objects)));
  out.given = prior_a.objects.size() + prior_b.objects.size();
  return out;
}

// ---- semi-graphoid axioms -------------------------------------------------------

const char* axiom_name(Axiom a) noexcept {
  switch (a) {
    case Axiom::symmetry: return "symmetry";
    case Axiom::decomposition: return "decomposition";
    case Axiom::weak_union: return "weak_union";
    case Axiom::contraction: return "contraction";
  }
  return "?";
}

Axiom parse_axiom(const std::string& name) {
  for (auto a : {Axiom::symmetry, Axiom::decomposition, Axiom::weak_union, Axiom::contraction})
    if (name == axiom_name(a)) return a;
  throw NameError("unknown axiom '" + name + "'");
}

bool GraphoidReport::antecedents_hold() const {
  return std::all_of(antecedents.begin(), antecedents.end(), [](const CiResult& r) { return r.holds; });
}

GraphoidReport graphoid_check(const State& joint, Axiom axiom, const ObjectList& u,
                              const ObjectList& w, const ObjectList& x, const ObjectList& y,
                              const Tol& tol) {
  auto indep = [&](const ObjectList& a, const ObjectList& b, const ObjectList& c) {
    return ci_test(joint, a, b, c, CiVariant::CI2_L, tol);
  };
  GraphoidReport r;
  r.axiom = axiom;
  r.experimental = joint.backend == Backend::quantum;
  switch (axiom) {
    case Axiom::symmetry:
      r.antecedents = {indep(u, w, x)};
      r.consequent = indep(w, u, x);
      break;
    case Axiom::decomposition:
      r.antecedents = {indep(u, concat(w, y), x)};
      r.consequent = indep(u, w, x);
      break;
    case Axiom::weak_union:
      r.antecedents = {indep(u, concat(w, y), x)};
      r.consequent = indep(u, w, concat(x, y));
      break;
    case Axiom::contraction:
      r.antecedents = {indep(u, w, x), indep(u, y, concat(x, w))};
      r.consequent = indep(u, concat(w, y), x);
      break;
  }
  return r;
}

// ---- entropy --------------------------------------------------------------------

namespace {

double pair(const std::vector<double>& p, const State& s) {
  double total = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 0) continue;
    total += p[i] * s.values(i, 0);
  }
  return total;
}

}  // namespace

double entropy(const State& joint) {
  if (!joint.classical()) throw UnsupportedError("entropy is defined for classical states only");
  return pair(probabilities(joint), convert(joint, Backend::neglog));
}

double conditional_entropy(const State& joint, const ObjectList& target, const ObjectList& given) {
  if (!joint.classical()) throw UnsupportedError("entropy is defined for classical states only");
  const State s = conditional(convert(joint, Backend::neglog), target, given);
  return pair(probabilities(marginal(joint, concat(target, given))), s);
}

}  // namespace frobayes::bayes
