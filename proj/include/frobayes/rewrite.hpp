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


// Graph form of diagram terms and spider fusion.
//
// Cups and caps become spiders with (0, 2) and (2, 0) legs.  On commutative
// objects swaps dissolve into the wiring and any two connected spiders fuse,
// absorbing every wire between them.  On noncommutative objects swaps stay
// as nodes and two spiders fuse only across a single wire whose position
// keeps the merged spider planar.  Boxes are never rewritten.

#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "frobayes/diagram.hpp"

namespace frobayes::rewrite {

inline constexpr std::size_t kBoundary = std::numeric_limits<std::size_t>::max();

/// A port: node index and leg, or kBoundary and the boundary position.
struct End {
  std::size_t node = kBoundary;
  std::size_t port = 0;
};

struct Edge {
  std::string obj;
  End src;  // node output or boundary input
  End dst;  // node input or boundary output
  bool alive = true;
};

struct Node {
  enum class Kind { spider, swap, box };
  Kind kind = Kind::spider;
  std::string obj;              // spider object
  diagram::Generator gen;       // swap / box generator
  bool commutative = true;      // spider object is commutative
  std::vector<std::size_t> in;  // edge ids by input leg
  std::vector<std::size_t> out;
  bool alive = true;
};

struct OpenGraph {
  diagram::ObjectList dom;
  diagram::ObjectList cod;
  std::vector<Node> nodes;  // index = creation order
  std::vector<Edge> edges;
  std::vector<std::size_t> inputs;   // edge id per dom wire
  std::vector<std::size_t> outputs;  // edge id per cod wire

  std::size_t live_nodes() const;
  std::size_t live_spiders() const;
};

OpenGraph to_graph(const diagram::Term& t, const diagram::Signature& sig);

/// Term with the same denotation: nodes placed in topological order (ties by
/// creation index), wires routed with swaps where needed.
diagram::Term from_graph(const OpenGraph& g);

struct FuseOptions {
  /// Visit candidate fusions in a random order instead of creation order.
  std::optional<std::uint64_t> shuffle_seed;
};

/// Fuses to a fixpoint.  Every step removes a node or a wire.
OpenGraph spider_fuse(OpenGraph g, const FuseOptions& opts = {});

diagram::Term normalize(const diagram::Term& t, const diagram::Signature& sig,
                        const FuseOptions& opts = {});

/// Canonical description of a fused graph built only from spiders on
/// commutative objects: one entry per connected component listing its
/// boundary ports.  Throws UnsupportedError otherwise.
std::string normal_form(const OpenGraph& fused);

/// Equality modulo the spider theorem for pure commutative Frobenius terms.
/// Terms with boxes or noncommutative objects raise UnsupportedError; compare
/// those numerically instead.
bool frob_equal(const diagram::Term& a, const diagram::Term& b, const diagram::Signature& sig);

/// Random connected network of at most `max_nodes` spiders on one object.
/// Each layer feeds a nonempty random subset of the open wires into a new
/// spider, with swaps routing the chosen wires together.
diagram::Term random_spider_network(std::mt19937_64& rng, const std::string& obj,
                                    std::size_t max_nodes);

}  // namespace frobayes::rewrite
