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


#include "frobayes/diagram.hpp"

#include <algorithm>
#include <numeric>

namespace frobayes::diagram {

namespace {

constexpr const char* kFlavorNames[] = {
    "state",       "modifier", "modifier_inverse", "sqrt_point",
    "conditional", "process",  "support",          "opaque",
};

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

}  // namespace

const char* flavor_name(Flavor f) noexcept {
  return kFlavorNames[static_cast<int>(f)];
}

std::optional<Flavor> parse_flavor(std::string_view name) noexcept {
  for (int i = 0; i < 8; ++i)
    if (name == kFlavorNames[i]) return static_cast<Flavor>(i);
  return std::nullopt;
}

ObjectList generator_dom(const Generator& g) {
  return std::visit(
      Overloaded{
          [](const Spider& s) { return ObjectList(s.in, s.obj); },
          [](const Cup&) { return ObjectList{}; },
          [](const Cap& c) { return ObjectList{c.obj, c.obj}; },
          [](const Swap& s) { return ObjectList{s.first, s.second}; },
          [](const Identity& i) { return ObjectList{i.obj}; },
          [](const Box& b) { return b.dagger ? b.cod : b.dom; },
      },
      g);
}

ObjectList generator_cod(const Generator& g) {
  return std::visit(
      Overloaded{
          [](const Spider& s) { return ObjectList(s.out, s.obj); },
          [](const Cup& c) { return ObjectList{c.obj, c.obj}; },
          [](const Cap&) { return ObjectList{}; },
          [](const Swap& s) { return ObjectList{s.second, s.first}; },
          [](const Identity& i) { return ObjectList{i.obj}; },
          [](const Box& b) { return b.dagger ? b.dom : b.cod; },
      },
      g);
}

Generator generator_dagger(const Generator& g) {
  return std::visit(
      Overloaded{
          [](const Spider& s) -> Generator { return Spider{s.obj, s.out, s.in}; },
          [](const Cup& c) -> Generator { return Cap{c.obj}; },
          [](const Cap& c) -> Generator { return Cup{c.obj}; },
          [](const Swap& s) -> Generator { return Swap{s.second, s.first}; },
          [](const Identity& i) -> Generator { return i; },
          [](const Box& b) -> Generator {
            Box d = b;
            d.dagger = !b.dagger;
            return d;
          },
      },
      g);
}

// ---- Term -------------------------------------------------------------------

struct Term::Node {
  Kind kind = Kind::empty;
  std::optional<Generator> gen;
  Term a;
  Term b;
  ObjectList dom;
  ObjectList cod;
  std::size_t size = 1;
};

Term::Term() : node_(nullptr) {}

Term::Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

Term Term::gen(Generator g) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::gen;
  n->dom = generator_dom(g);
  n->cod = generator_cod(g);
  if (const auto* s = std::get_if<Spider>(&g); s && s->in == 0 && s->out == 0) {
    throw TypeError("spider with no legs is not a generator; use the empty diagram");
  }
  n->gen = std::move(g);
  return Term(std::move(n));
}

Term Term::seq(Term first, Term then) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::seq;
  n->dom = first.dom();
  n->cod = then.cod();
  n->size = 1 + first.size() + then.size();
  n->a = std::move(first);
  n->b = std::move(then);
  return Term(std::move(n));
}

Term Term::par(Term left, Term right) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::par;
  n->dom = left.dom();
  n->dom.insert(n->dom.end(), right.dom().begin(), right.dom().end());
  n->cod = left.cod();
  n->cod.insert(n->cod.end(), right.cod().begin(), right.cod().end());
  n->size = 1 + left.size() + right.size();
  n->a = std::move(left);
  n->b = std::move(right);
  return Term(std::move(n));
}

Term::Kind Term::kind() const noexcept { return node_ ? node_->kind : Kind::empty; }

const Generator& Term::generator() const {
  if (kind() != Kind::gen) throw TypeError("term is not a generator");
  return *node_->gen;
}

const Term& Term::first() const {
  if (kind() != Kind::seq && kind() != Kind::par) throw TypeError("term has no children");
  return node_->a;
}

const Term& Term::second() const {
  if (kind() != Kind::seq && kind() != Kind::par) throw TypeError("term has no children");
  return node_->b;
}

const ObjectList& Term::dom() const noexcept {
  static const ObjectList kEmpty;
  return node_ ? node_->dom : kEmpty;
}

const ObjectList& Term::cod() const noexcept {
  static const ObjectList kEmpty;
  return node_ ? node_->cod : kEmpty;
}

std::size_t Term::size() const noexcept { return node_ ? node_->size : 1; }

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Term::Kind::empty:
      return true;
    case Term::Kind::gen:
      return a.generator() == b.generator();
    default:
      return a.size() == b.size() && a.first() == b.first() && a.second() == b.second();
  }
}

// ---- Signature --------------------------------------------------------------

void Signature::add_object(Object obj) {
  if (obj.name.empty()) throw NameError("object name is empty");
  if (obj.dim < 1) throw ShapeError("object '" + obj.name + "' has dimension 0");
  if (find_object(obj.name)) throw NameError("duplicate object '" + obj.name + "'");
  objects_.push_back(std::move(obj));
}

void Signature::add_box(BoxDecl box) {
  if (find_box(box.label)) throw NameError("duplicate box '" + box.label + "'");
  for (const auto& o : box.dom) object(o);
  for (const auto& o : box.cod) object(o);
  boxes_.push_back(std::move(box));
}

const Object* Signature::find_object(std::string_view name) const noexcept {
  for (const auto& o : objects_)
    if (o.name == name) return &o;
  return nullptr;
}

const Object& Signature::object(std::string_view name) const {
  if (const auto* o = find_object(name)) return *o;
  throw NameError("unknown object '" + std::string(name) + "'");
}

const BoxDecl* Signature::find_box(std::string_view label) const noexcept {
  for (const auto& b : boxes_)
    if (b.label == label) return &b;
  return nullptr;
}

std::vector<std::size_t> Signature::dims(const ObjectList& objs) const {
  std::vector<std::size_t> out;
  out.reserve(objs.size());
  for (const auto& o : objs) out.push_back(object(o).dim);
  return out;
}

// ---- typecheck / dagger -----------------------------------------------------

std::string format_list(const ObjectList& objs) {
  std::string s = "[";
  for (std::size_t i = 0; i < objs.size(); ++i) {
    if (i) s += ", ";
    s += objs[i];
  }
  return s + "]";
}

namespace {

void check(const Term& t, const Signature& sig, const std::string& path) {
  switch (t.kind()) {
    case Term::Kind::empty:
      return;
    case Term::Kind::gen: {
      const Generator& g = t.generator();
      for (const auto& o : t.dom()) sig.object(o);
      for (const auto& o : t.cod()) sig.object(o);
      std::visit(Overloaded{
                     [&](const Spider& s) { sig.object(s.obj); },
                     [&](const Cup& c) { sig.object(c.obj); },
                     [&](const Cap& c) { sig.object(c.obj); },
                     [&](const Box& b) {
                       const BoxDecl* d = sig.find_box(b.label);
                       if (!d) throw NameError("unknown box '" + b.label + "'");
                       if (d->dom != b.dom || d->cod != b.cod) {
                         throw TypeError("box '" + b.label + "' used with interface " +
                                         format_list(b.dom) + " -> " + format_list(b.cod) +
                                         ", declared " + format_list(d->dom) + " -> " +
                                         format_list(d->cod));
                       }
                     },
                     [](const auto&) {},
                 },
                 g);
      return;
    }
    case Term::Kind::seq:
      check(t.first(), sig, path + "/0");
      check(t.second(), sig, path + "/1");
      if (t.first().cod() != t.second().dom()) {
        throw TypeError("sequential composition at " + (path.empty() ? "/" : path) +
                        ": codomain " + format_list(t.first().cod()) +
                        " does not match domain " + format_list(t.second().dom()));
      }
      return;
    case Term::Kind::par:
      check(t.first(), sig, path + "/0");
      check(t.second(), sig, path + "/1");
      return;
  }
}

}  // namespace

std::pair<ObjectList, ObjectList> typecheck(const Term& t, const Signature& sig) {
  check(t, sig, "");
  return {t.dom(), t.cod()};
}

Term term_dagger(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::empty:
      return t;
    case Term::Kind::gen:
      return Term::gen(generator_dagger(t.generator()));
    case Term::Kind::seq:
      return Term::seq(term_dagger(t.second()), term_dagger(t.first()));
    case Term::Kind::par:
      return Term::par(term_dagger(t.first()), term_dagger(t.second()));
  }
  return t;
}

// ---- builders ---------------------------------------------------------------

Term spider(const std::string& obj, std::size_t in, std::size_t out) {
  return Term::gen(Spider{obj, in, out});
}
Term cup(const std::string& obj) { return Term::gen(Cup{obj}); }
Term cap(const std::string& obj) { return Term::gen(Cap{obj}); }
Term swap(const std::string& a, const std::string& b) { return Term::gen(Swap{a, b}); }
Term id(const std::string& obj) { return Term::gen(Identity{obj}); }

Term id(const ObjectList& objs) {
  std::vector<Term> ids;
  ids.reserve(objs.size());
  for (const auto& o : objs) ids.push_back(id(o));
  return par_all(ids);
}

Term box(const BoxDecl& decl, bool dagger) {
  return Term::gen(Box{decl.label, decl.dom, decl.cod, decl.flavor, dagger});
}

Term par_all(const std::vector<Term>& terms) {
  if (terms.empty()) return Term();
  Term t = terms.front();
  for (std::size_t i = 1; i < terms.size(); ++i) t = Term::par(t, terms[i]);
  return t;
}

Term seq_all(const std::vector<Term>& terms) {
  if (terms.empty()) return Term();
  Term t = terms.front();
  for (std::size_t i = 1; i < terms.size(); ++i) t = Term::seq(t, terms[i]);
  return t;
}

namespace {

// id(objs[0..i)) * g * id(rest), skipping empty identity blocks.
Term layer(const ObjectList& before, const Term& g, const ObjectList& after) {
  std::vector<Term> parts;
  if (!before.empty()) parts.push_back(id(before));
  parts.push_back(g);
  if (!after.empty()) parts.push_back(id(after));
  return par_all(parts);
}

}  // namespace

Term permutation(const ObjectList& objs, const std::vector<std::size_t>& perm) {
  const std::size_t n = objs.size();
  if (perm.size() != n) throw ShapeError("permutation has wrong length");
  std::vector<bool> seen(n, false);
  for (auto p : perm) {
    if (p >= n || seen[p]) throw ShapeError("invalid permutation");
    seen[p] = true;
  }
  std::vector<std::size_t> cur(n);
  std::iota(cur.begin(), cur.end(), 0);
  std::vector<Term> layers;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t at = std::find(cur.begin(), cur.end(), perm[i]) - cur.begin();
    while (at > i) {
      ObjectList before, after;
      for (std::size_t k = 0; k + 1 < at; ++k) before.push_back(objs[cur[k]]);
      for (std::size_t k = at + 1; k < n; ++k) after.push_back(objs[cur[k]]);
      layers.push_back(layer(before, swap(objs[cur[at - 1]], objs[cur[at]]), after));
      std::swap(cur[at - 1], cur[at]);
      --at;
    }
  }
  if (layers.empty()) return id(objs);
  return seq_all(layers);
}

Term composite_cup(const ObjectList& objs) {
  if (objs.empty()) return Term();
  std::vector<Term> cups;
  ObjectList paired;
  for (const auto& o : objs) {
    cups.push_back(cup(o));
    paired.push_back(o);
    paired.push_back(o);
  }
  const std::size_t k = objs.size();
  if (k == 1) return cups.front();
  // paired wires are (A1, A1, A2, A2, ...); bring them to (A1..Ak, A1..Ak).
  std::vector<std::size_t> perm(2 * k);
  for (std::size_t i = 0; i < k; ++i) {
    perm[i] = 2 * i;
    perm[k + i] = 2 * i + 1;
  }
  return Term::seq(par_all(cups), permutation(paired, perm));
}

Term composite_cap(const ObjectList& objs) { return term_dagger(composite_cup(objs)); }

Term frobenius_transpose(const Term& f) {
  const ObjectList& a = f.dom();
  const ObjectList& b = f.cod();
  const Term grow = Term::par(composite_cup(a), id(b));
  const Term apply = par_all({id(a), f, id(b)});
  const Term shrink = Term::par(id(a), composite_cap(b));
  return seq_all({grow, apply, shrink});
}

}  // namespace frobayes::diagram
