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


// Typed string-diagram terms.  Objects are referred to by name and resolved
// against a Signature; every wire list is read left to right as drawn.

#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "frobayes/error.hpp"

namespace frobayes::diagram {

enum class ObjectKind { classical, quantum };

struct Object {
  std::string name;
  ObjectKind kind = ObjectKind::classical;
  std::size_t dim = 1;  // Hilbert dimension for quantum objects

  bool commutative() const noexcept { return kind == ObjectKind::classical; }
  friend bool operator==(const Object&, const Object&) = default;
};

using ObjectList = std::vector<std::string>;

enum class Flavor {
  state,
  modifier,
  modifier_inverse,
  sqrt_point,
  conditional,
  process,
  support,
  opaque,
};

const char* flavor_name(Flavor f) noexcept;
std::optional<Flavor> parse_flavor(std::string_view name) noexcept;

struct Spider {
  std::string obj;
  std::size_t in = 0;
  std::size_t out = 0;
  friend bool operator==(const Spider&, const Spider&) = default;
};

struct Cup {
  std::string obj;
  friend bool operator==(const Cup&, const Cup&) = default;
};

struct Cap {
  std::string obj;
  friend bool operator==(const Cap&, const Cap&) = default;
};

struct Swap {
  std::string first;
  std::string second;
  friend bool operator==(const Swap&, const Swap&) = default;
};

struct Identity {
  std::string obj;
  friend bool operator==(const Identity&, const Identity&) = default;
};

/// A named black box.  dom/cod are the declared interface; a daggered box
/// runs from cod to dom.
struct Box {
  std::string label;
  ObjectList dom;
  ObjectList cod;
  Flavor flavor = Flavor::opaque;
  bool dagger = false;
  friend bool operator==(const Box&, const Box&) = default;
};

using Generator = std::variant<Spider, Cup, Cap, Swap, Identity, Box>;

ObjectList generator_dom(const Generator& g);
ObjectList generator_cod(const Generator& g);
Generator generator_dagger(const Generator& g);

class Term {
 public:
  enum class Kind { empty, gen, seq, par };

  /// The empty diagram on no wires.
  Term();

  static Term gen(Generator g);
  /// Sequential composition, `first` applied first.  Junction types are
  /// checked by typecheck, not here.
  static Term seq(Term first, Term then);
  static Term par(Term left, Term right);

  Kind kind() const noexcept;
  const Generator& generator() const;
  const Term& first() const;   // seq: first, par: left
  const Term& second() const;  // seq: then, par: right
  const ObjectList& dom() const noexcept;
  const ObjectList& cod() const noexcept;

  /// Number of nodes in the tree.
  std::size_t size() const noexcept;

  friend bool operator==(const Term& a, const Term& b);

 private:
  struct Node;
  explicit Term(std::shared_ptr<const Node> node);
  std::shared_ptr<const Node> node_;
};

struct BoxDecl {
  std::string label;
  ObjectList dom;
  ObjectList cod;
  Flavor flavor = Flavor::opaque;
};

class Signature {
 public:
  void add_object(Object obj);
  void add_box(BoxDecl box);

  const Object* find_object(std::string_view name) const noexcept;
  const Object& object(std::string_view name) const;  // NameError if absent
  const BoxDecl* find_box(std::string_view label) const noexcept;

  const std::vector<Object>& objects() const noexcept { return objects_; }
  const std::vector<BoxDecl>& boxes() const noexcept { return boxes_; }

  /// Dimension of every object in the list.
  std::vector<std::size_t> dims(const ObjectList& objs) const;

 private:
  std::vector<Object> objects_;
  std::vector<BoxDecl> boxes_;
};

/// Returns (dom, cod) or throws TypeError naming the offending junction,
/// NameError for undeclared objects or boxes.
std::pair<ObjectList, ObjectList> typecheck(const Term& t, const Signature& sig);

Term term_dagger(const Term& t);

// ---- builders ---------------------------------------------------------------

Term spider(const std::string& obj, std::size_t in, std::size_t out);
Term cup(const std::string& obj);
Term cap(const std::string& obj);
Term swap(const std::string& a, const std::string& b);
Term id(const std::string& obj);
Term id(const ObjectList& objs);
Term box(const BoxDecl& decl, bool dagger = false);

/// Left-nested parallel / sequential folds; empty input gives the empty term.
Term par_all(const std::vector<Term>& terms);
Term seq_all(const std::vector<Term>& terms);

/// Wire permutation built from adjacent swaps: output wire k is input wire
/// perm[k].
Term permutation(const ObjectList& objs, const std::vector<std::size_t>& perm);

/// Cup on a list of objects with outputs (A1..Ak, A1..Ak).
Term composite_cup(const ObjectList& objs);
Term composite_cap(const ObjectList& objs);

/// Transpose of f : A -> B with respect to the self-dual compact structure:
/// (cup_A * id_B) ; (id_A * f * id_B) ; (id_A * cap_B), a term B -> A.
Term frobenius_transpose(const Term& f);

std::string format_list(const ObjectList& objs);

}  // namespace frobayes::diagram
