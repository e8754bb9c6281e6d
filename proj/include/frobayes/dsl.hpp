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


// Text formats.
//
// Term files (.fbg):
//
//     term := par (";" par)*
//     par  := atom ("*" atom)*
//     atom := "spider" "[" obj "]" "(" n "," m ")"
//           | "cup" "[" obj "]" | "cap" "[" obj "]" | "id" "[" obj "]"
//           | "swap" "[" obj "," obj "]"
//           | flavor "(" label ["," "dagger"] ")"
//           | "(" [term] ")"
//
// ";" composes left-to-right (the left operand is applied first) and binds
// weaker than "*".  "#" starts a comment running to the end of the line.
//
// Model files (.fbm) hold one JSON document:
//
//     {"objects":   [{"name": "A", "kind": "classical", "dim": 2}, ...],
//      "tensors":   [{"name": "pAB", "objects": ["A", "B"], "data": [...]}],
//      "processes": [{"name": "f", "dom": ["A"], "cod": ["B"], "data": [...]}],
//      "joint":     "pAB",
//      "options":   {"abs_eps": 1e-9, "rel_eps": 1e-9, "rank_eps": 1e-10}}
//
// Classical tensors are flat nonnegative vectors; quantum tensors are square
// matrices flattened row-major.  Complex entries are written [re, im].
// Both formats start with the line "frobayes-v1".

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "frobayes/diagram.hpp"
#include "frobayes/linalg.hpp"

namespace frobayes::dsl {

inline constexpr std::string_view kHeader = "frobayes-v1";

/// Parses a term (no header) and typechecks it against `sig`.
diagram::Term parse_term(std::string_view src, const diagram::Signature& sig);

/// Canonical text: parse_term(serialize(t)) == t.
std::string serialize(const diagram::Term& t);

/// As parse_term, but requires the version header line.
diagram::Term parse_term_file(std::string_view src, const diagram::Signature& sig);
std::string serialize_term_file(const diagram::Term& t);

struct NamedTensor {
  std::string name;
  diagram::ObjectList dom;  // empty for states
  diagram::ObjectList cod;
  diagram::Flavor flavor = diagram::Flavor::state;
  // Classical state: column of length prod(dims).  Quantum state: square
  // density operator.  Process: prod(cod) x prod(dom) (quantum processes are
  // super-operators in the per-object (a, a*) layout).
  linalg::Mat value;
};

struct ModelFile {
  diagram::Signature signature;
  diagram::ObjectKind kind = diagram::ObjectKind::classical;
  std::vector<NamedTensor> tensors;
  std::string joint;
  linalg::Tol tol;

  const NamedTensor& tensor(std::string_view name) const;
  const NamedTensor& joint_tensor() const { return tensor(joint); }
};

/// Parses and validates a model file (header required).  `defaults` supplies
/// tolerances not set in the file's options.
ModelFile parse_model(std::string_view src, const linalg::Tol& defaults = linalg::Tol::from_env());

/// Reads a whole file; throws Error if it cannot be opened.
std::string read_file(const std::string& path);

}  // namespace frobayes::dsl
