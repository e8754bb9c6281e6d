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


#include "frobayes/rewrite.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <random>
#include <set>
#include <tuple>

namespace frobayes::rewrite {

using diagram::ObjectList;
using diagram::Term;

std::size_t OpenGraph::live_nodes() const {
  return std::count_if(nodes.begin(), nodes.end(), [](const Node& n) { return n.alive; });
}

std::size_t OpenGraph::live_spiders() const {
  return std::count_if(nodes.begin(), nodes.end(), [](const Node& n) {
    return n.alive && n.kind == Node::Kind::spider;
  });
}

// ---- to_graph -------------------------------------------------------------------

namespace {

struct Wire {
  End src;
  std::string obj;
};

class Builder {
 public:
  Builder(OpenGraph& g, const diagram::Signature& sig) : g_(g), sig_(sig) {}

  std::vector<Wire> build(const Term& t, std::vector<Wire> in) {
    using K = Term::Kind;
    switch (t.kind()) {
      case K::empty:
        return in;
      case K::seq:
        return build(t.second(), build(t.first(), std::move(in)));
      case K::par: {
        const std::size_t split = t.first().dom().size();
        std::vector<Wire> left(in.begin(), in.begin() + split);
        std::vector<Wire> right(in.begin() + split, in.end());
        auto out = build(t.first(), std::move(left));
        auto r = build(t.second(), std::move(right));
        out.insert(out.end(), r.begin(), r.end());
        return out;
      }
      case K::gen:
        return generator(t.generator(), std::move(in));
    }
    return in;
  }

  void connect(const Wire& w, End dst) {
    const std::size_t id = g_.edges.size();
    g_.edges.push_back({w.obj, w.src, dst, true});
    if (w.src.node != kBoundary) g_.nodes[w.src.node].out[w.src.port] = id;
    if (w.src.node == kBoundary) g_.inputs[w.src.port] = id;
    if (dst.node != kBoundary) g_.nodes[dst.node].in[dst.port] = id;
    if (dst.node == kBoundary) g_.outputs[dst.port] = id;
  }

 private:
  std::vector<Wire> node(Node n, std::vector<Wire> in, const ObjectList& cod) {
    const std::size_t idx = g_.nodes.size();
    n.in.assign(in.size(), kBoundary);
    n.out.assign(cod.size(), kBoundary);
    g_.nodes.push_back(std::move(n));
    for (std::size_t k = 0; k < in.size(); ++k) connect(in[k], End{idx, k});
    std::vector<Wire> out;
    for (std::size_t k = 0; k < cod.size(); ++k) out.push_back({End{idx, k}, cod[k]});
    return out;
  }

  std::vector<Wire> spider(const std::string& obj, std::vector<Wire> in, std::size_t out) {
    Node n;
    n.kind = Node::Kind::spider;
    n.obj = obj;
    n.commutative = sig_.object(obj).commutative();
    return node(std::move(n), std::move(in), ObjectList(out, obj));
  }

  std::vector<Wire> generator(const diagram::Generator& gen, std::vector<Wire> in) {
    using namespace diagram;
    if (std::holds_alternative<Identity>(gen)) return in;
    if (const auto* s = std::get_if<Spider>(&gen)) return spider(s->obj, std::move(in), s->out);
    if (const auto* c = std::get_if<Cup>(&gen)) return spider(c->obj, std::move(in), 2);
    if (const auto* c = std::get_if<Cap>(&gen)) return spider(c->obj, std::move(in), 0);
    if (const auto* s = std::get_if<Swap>(&gen)) {
      if (sig_.object(s->first).commutative() && sig_.object(s->second).commutative()) {
        return {in[1], in[0]};
      }
      Node n;
      n.kind = Node::Kind::swap;
      n.gen = gen;
      return node(std::move(n), std::move(in), generator_cod(gen));
    }
    Node n;
    n.kind = Node::Kind::box;
    n.gen = gen;
    return node(std::move(n), std::move(in), generator_cod(gen));
  }

  OpenGraph& g_;
  const diagram::Signature& sig_;
};

}  // namespace

OpenGraph to_graph(const Term& t, const diagram::Signature& sig) {
  diagram::typecheck(t, sig);
  OpenGraph g;
  g.dom = t.dom();
  g.cod = t.cod();
  g.inputs.assign(g.dom.size(), kBoundary);
  g.outputs.assign(g.cod.size(), kBoundary);
  Builder b(g, sig);
  std::vector<Wire> in;
  for (std::size_t k = 0; k < g.dom.size(); ++k) in.push_back({End{kBoundary, k}, g.dom[k]});
  const auto out = b.build(t, std::move(in));
  for (std::size_t k = 0; k < out.size(); ++k) b.connect(out[k], End{kBoundary, k});
  return g;
}

// ---- fusion ---------------------------------------------------------------------

namespace {

class Fuser {
 public:
  Fuser(OpenGraph& g, const FuseOptions& opts) : g_(g) {
    if (opts.shuffle_seed) rng_.emplace(*opts.shuffle_seed);
  }

  void run() {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t u : order()) {
        if (!g_.nodes[u].alive || g_.nodes[u].kind != Node::Kind::spider) continue;
        if (step(u)) {
          changed = true;
          break;
        }
      }
    }
  }

 private:
  std::vector<std::size_t> order() {
    std::vector<std::size_t> ids(g_.nodes.size());
    std::iota(ids.begin(), ids.end(), 0);
    if (rng_) std::shuffle(ids.begin(), ids.end(), *rng_);
    return ids;
  }

  Node& node(std::size_t i) { return g_.nodes[i]; }

  void set_end(std::size_t e, const End& at, bool as_src) {
    Edge& edge = g_.edges[e];
    (as_src ? edge.src : edge.dst) = at;
    if (at.node == kBoundary) {
      (as_src ? g_.inputs : g_.outputs)[at.port] = e;
    } else {
      (as_src ? node(at.node).out : node(at.node).in)[at.port] = e;
    }
  }

  void renumber(std::size_t n) {
    Node& x = node(n);
    for (std::size_t k = 0; k < x.in.size(); ++k) g_.edges[x.in[k]].dst = End{n, k};
    for (std::size_t k = 0; k < x.out.size(); ++k) g_.edges[x.out[k]].src = End{n, k};
  }

  bool is_spider(std::size_t n, const std::string& obj) const {
    return n != kBoundary && g_.nodes[n].alive && g_.nodes[n].kind == Node::Kind::spider &&
           g_.nodes[n].obj == obj;
  }

  // Some path from u to v with at least one intermediate node.
  bool indirect_path(std::size_t u, std::size_t v) {
    std::vector<bool> seen(g_.nodes.size(), false);
    std::vector<std::size_t> stack;
    for (std::size_t e : node(u).out) {
      const std::size_t w = g_.edges[e].dst.node;
      if (w != kBoundary && w != v && !seen[w]) {
        seen[w] = true;
        stack.push_back(w);
      }
    }
    while (!stack.empty()) {
      const std::size_t x = stack.back();
      stack.pop_back();
      for (std::size_t e : node(x).out) {
        const std::size_t w = g_.edges[e].dst.node;
        if (w == v) return true;
        if (w != kBoundary && !seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
    return false;
  }

  std::vector<std::size_t> out_ports(std::size_t u) {
    std::vector<std::size_t> ports(node(u).out.size());
    std::iota(ports.begin(), ports.end(), 0);
    if (rng_) std::shuffle(ports.begin(), ports.end(), *rng_);
    return ports;
  }

  bool step(std::size_t u) {
    Node& n = node(u);
    if (n.commutative) {
      for (std::size_t k = 0; k < n.out.size(); ++k) {
        if (g_.edges[n.out[k]].dst.node == u) {
          remove_self_loop(u, n.out[k]);
          return true;
        }
      }
    }
    if (n.in.size() == 1 && n.out.size() == 1 && n.in[0] != n.out[0]) {
      remove_identity(u);
      return true;
    }
    for (std::size_t k : out_ports(u)) {
      const Edge& e = g_.edges[node(u).out[k]];
      const std::size_t v = e.dst.node;
      if (!is_spider(v, n.obj) || v == u) continue;
      if (indirect_path(u, v)) continue;
      if (n.commutative) {
        fuse_commutative(u, v);
        return true;
      }
      if (fuse_planar(u, v, k, e.dst.port)) return true;
    }
    return false;
  }

  void remove_self_loop(std::size_t u, std::size_t e) {
    Node& n = node(u);
    g_.edges[e].alive = false;
    n.in.erase(std::find(n.in.begin(), n.in.end(), e));
    n.out.erase(std::find(n.out.begin(), n.out.end(), e));
    renumber(u);
  }

  void remove_identity(std::size_t u) {
    Node& n = node(u);
    const std::size_t a = n.in[0], b = n.out[0];
    const End dst = g_.edges[b].dst;
    g_.edges[b].alive = false;
    n.alive = false;
    n.in.clear();
    n.out.clear();
    set_end(a, dst, false);
  }

  void fuse_commutative(std::size_t u, std::size_t v) {
    Node& a = node(u);
    Node& b = node(v);
    std::vector<std::size_t> out, in = a.in;
    for (std::size_t e : a.out) {
      if (g_.edges[e].dst.node == v) {
        g_.edges[e].alive = false;
      } else {
        out.push_back(e);
      }
    }
    for (std::size_t e : b.in)
      if (g_.edges[e].alive) in.push_back(e);
    out.insert(out.end(), b.out.begin(), b.out.end());
    a.in = std::move(in);
    a.out = std::move(out);
    b.alive = false;
    b.in.clear();
    b.out.clear();
    renumber(u);
  }

  // u's output k feeds v's input j through the only wire between them.
  bool fuse_planar(std::size_t u, std::size_t v, std::size_t k, std::size_t j) {
    Node& a = node(u);
    Node& b = node(v);
    std::size_t shared = 0;
    for (std::size_t e : a.out) shared += g_.edges[e].dst.node == v;
    if (shared != 1) return false;
    const bool left_ok = k == 0 || j == 0;
    const bool right_ok = k + 1 == a.out.size() || j + 1 == b.in.size();
    if (!left_ok || !right_ok) return false;
    const std::size_t e = a.out[k];
    std::vector<std::size_t> in(b.in.begin(), b.in.begin() + j);
    in.insert(in.end(), a.in.begin(), a.in.end());
    in.insert(in.end(), b.in.begin() + j + 1, b.in.end());
    std::vector<std::size_t> out(a.out.begin(), a.out.begin() + k);
    out.insert(out.end(), b.out.begin(), b.out.end());
    out.insert(out.end(), a.out.begin() + k + 1, a.out.end());
    g_.edges[e].alive = false;
    a.in = std::move(in);
    a.out = std::move(out);
    b.alive = false;
    b.in.clear();
    b.out.clear();
    renumber(u);
    return true;
  }

  OpenGraph& g_;
  std::optional<std::mt19937_64> rng_;
};

}  // namespace

namespace {

// Legs of a commutative spider are interchangeable; order them by their far
// ends so the emitted term does not depend on the order of fusion.
void sort_legs(OpenGraph& g) {
  auto key = [](const End& e) {
    return std::make_tuple(e.node != kBoundary, e.node == kBoundary ? 0 : e.node, e.port);
  };
  for (auto& n : g.nodes) {
    if (!n.alive || n.kind != Node::Kind::spider || !n.commutative) continue;
    std::stable_sort(n.in.begin(), n.in.end(),
                     [&](std::size_t a, std::size_t b) { return key(g.edges[a].src) < key(g.edges[b].src); });
    std::stable_sort(n.out.begin(), n.out.end(),
                     [&](std::size_t a, std::size_t b) { return key(g.edges[a].dst) < key(g.edges[b].dst); });
    for (std::size_t k = 0; k < n.in.size(); ++k) g.edges[n.in[k]].dst.port = k;
    for (std::size_t k = 0; k < n.out.size(); ++k) g.edges[n.out[k]].src.port = k;
  }
}

}  // namespace

OpenGraph spider_fuse(OpenGraph g, const FuseOptions& opts) {
  Fuser(g, opts).run();
  sort_legs(g);
  return g;
}

// ---- from_graph -----------------------------------------------------------------

Term from_graph(const OpenGraph& g) {
  std::vector<std::size_t> indeg(g.nodes.size(), 0);
  for (std::size_t n = 0; n < g.nodes.size(); ++n) {
    if (!g.nodes[n].alive) continue;
    for (std::size_t e : g.nodes[n].in)
      if (g.edges[e].src.node != kBoundary) ++indeg[n];
  }
  std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> ready;
  for (std::size_t n = 0; n < g.nodes.size(); ++n)
    if (g.nodes[n].alive && indeg[n] == 0) ready.push(n);

  std::vector<std::size_t> wires = g.inputs;  // dangling edge ids, left to right
  auto objects = [&](auto first, auto last) {
    ObjectList objs;
    for (auto it = first; it != last; ++it) objs.push_back(g.edges[*it].obj);
    return objs;
  };
  std::vector<Term> layers;
  std::size_t placed = 0;
  while (!ready.empty()) {
    const std::size_t n = ready.top();
    ready.pop();
    ++placed;
    const Node& node = g.nodes[n];

    // Gather the node's input wires into one contiguous block.
    std::vector<std::size_t> pos;
    for (std::size_t e : node.in)
      pos.push_back(std::find(wires.begin(), wires.end(), e) - wires.begin());
    std::size_t at = wires.size();
    if (!pos.empty()) {
      bool contiguous = true;
      for (std::size_t k = 1; k < pos.size(); ++k) contiguous &= pos[k] == pos[0] + k;
      if (!contiguous) {
        std::vector<bool> used(wires.size(), false);
        for (auto p : pos) used[p] = true;
        std::size_t before = 0;
        for (std::size_t p = 0; p < *std::min_element(pos.begin(), pos.end()); ++p) before += !used[p];
        std::vector<std::size_t> perm;
        for (std::size_t p = 0; p < wires.size(); ++p) {
          if (perm.size() == before) perm.insert(perm.end(), pos.begin(), pos.end());
          if (!used[p]) perm.push_back(p);
        }
        if (perm.size() == before) perm.insert(perm.end(), pos.begin(), pos.end());
        layers.push_back(diagram::permutation(objects(wires.begin(), wires.end()), perm));
        std::vector<std::size_t> next;
        for (auto p : perm) next.push_back(wires[p]);
        wires = std::move(next);
      }
      at = std::find(wires.begin(), wires.end(), node.in[0]) - wires.begin();
    }

    Term gen;
    switch (node.kind) {
      case Node::Kind::spider:
        gen = node.in.empty() && node.out.empty()
                  ? Term::seq(diagram::spider(node.obj, 0, 1), diagram::spider(node.obj, 1, 0))
                  : diagram::spider(node.obj, node.in.size(), node.out.size());
        break;
      default:
        gen = Term::gen(node.gen);
    }
    const ObjectList before = objects(wires.begin(), wires.begin() + at);
    const ObjectList after = objects(wires.begin() + at + node.in.size(), wires.end());
    std::vector<Term> parts;
    if (!before.empty()) parts.push_back(diagram::id(before));
    parts.push_back(gen);
    if (!after.empty()) parts.push_back(diagram::id(after));
    layers.push_back(diagram::par_all(parts));
    wires.erase(wires.begin() + at, wires.begin() + at + node.in.size());
    wires.insert(wires.begin() + at, node.out.begin(), node.out.end());

    for (std::size_t e : node.out) {
      const std::size_t m = g.edges[e].dst.node;
      if (m != kBoundary && --indeg[m] == 0) ready.push(m);
    }
  }
  if (placed != g.live_nodes()) throw Error("from_graph: graph has a directed cycle");

  std::vector<std::size_t> perm;
  for (std::size_t e : g.outputs)
    perm.push_back(std::find(wires.begin(), wires.end(), e) - wires.begin());
  bool identity = true;
  for (std::size_t k = 0; k < perm.size(); ++k) identity &= perm[k] == k;
  if (!identity) layers.push_back(diagram::permutation(objects(wires.begin(), wires.end()), perm));
  if (layers.empty()) return diagram::id(g.dom);
  return diagram::seq_all(layers);
}

Term normalize(const Term& t, const diagram::Signature& sig, const FuseOptions& opts) {
  return from_graph(spider_fuse(to_graph(t, sig), opts));
}

// ---- decision procedure ---------------------------------------------------------

std::string normal_form(const OpenGraph& g) {
  std::vector<std::string> comps;
  auto port = [](const End& e, char side) { return std::string(1, side) + std::to_string(e.port); };
  for (const auto& n : g.nodes) {
    if (!n.alive) continue;
    if (n.kind != Node::Kind::spider || !n.commutative) {
      throw UnsupportedError("normal form is only decided for pure commutative Frobenius terms; "
                             "compare numerically instead");
    }
    std::vector<std::string> ports;
    for (std::size_t e : n.in) {
      if (g.edges[e].src.node != kBoundary) throw UnsupportedError("graph is not fully fused");
      ports.push_back(port(g.edges[e].src, 'i'));
    }
    for (std::size_t e : n.out) {
      if (g.edges[e].dst.node != kBoundary) throw UnsupportedError("graph is not fully fused");
      ports.push_back(port(g.edges[e].dst, 'o'));
    }
    std::sort(ports.begin(), ports.end());
    std::string c = n.obj + "{";
    for (std::size_t k = 0; k < ports.size(); ++k) c += (k ? "," : "") + ports[k];
    comps.push_back(c + "}");
  }
  for (const auto& e : g.edges) {
    if (e.alive && e.src.node == kBoundary && e.dst.node == kBoundary) {
      comps.push_back(e.obj + "{" + port(e.src, 'i') + "," + port(e.dst, 'o') + "}");
    }
  }
  std::sort(comps.begin(), comps.end());
  std::string out = diagram::format_list(g.dom) + "->" + diagram::format_list(g.cod) + ":";
  for (const auto& c : comps) out += c;
  return out;
}

bool frob_equal(const Term& a, const Term& b, const diagram::Signature& sig) {
  const auto na = normal_form(spider_fuse(to_graph(a, sig)));
  const auto nb = normal_form(spider_fuse(to_graph(b, sig)));
  return na == nb;
}

diagram::Term random_spider_network(std::mt19937_64& rng, const std::string& obj,
                                    std::size_t max_nodes) {
  using namespace diagram;
  std::uniform_int_distribution<std::size_t> arity(1, 3);
  std::uniform_int_distribution<std::size_t> outs(0, 3);
  std::vector<Term> layers;
  std::size_t wires = arity(rng);
  layers.push_back(spider(obj, wires, std::max<std::size_t>(outs(rng), 1)));
  wires = layers.back().cod().size();
  std::uniform_int_distribution<std::size_t> count(2, max_nodes);
  const std::size_t nodes = count(rng);
  for (std::size_t n = 1; n < nodes && wires > 0; ++n) {
    std::vector<std::size_t> perm(wires);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const ObjectList objs(wires, obj);
    layers.push_back(permutation(objs, perm));
    const std::size_t k = std::uniform_int_distribution<std::size_t>(1, wires)(rng);
    std::size_t m = outs(rng);
    if (n + 1 < nodes && wires - k + m == 0) m = 1;
    std::vector<Term> parts{spider(obj, k, m)};
    if (wires > k) parts.push_back(id(ObjectList(wires - k, obj)));
    layers.push_back(par_all(parts));
    wires = wires - k + m;
  }
  return seq_all(layers);
}

}  // namespace frobayes::rewrite
