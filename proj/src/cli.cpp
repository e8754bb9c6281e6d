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


#include "frobayes/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <random>

#include "frobayes/bayes.hpp"
#include "frobayes/dsl.hpp"
#include "frobayes/error.hpp"
#include "frobayes/models.hpp"
#include "frobayes/rewrite.hpp"

namespace frobayes::cli {
namespace {

using bayes::Backend;
using bayes::State;
using diagram::ObjectList;
using linalg::Mat;
using linalg::RMat;
using linalg::Tol;
using nlohmann::json;

struct Options {
  std::string format = "json";
  std::uint64_t seed = 0;
  bool seeded = false;
  std::string model, term, expr, backend;
  ObjectList target, given, a, b, c, u, w, x, y;
  std::string variant = "all", pool_variant = "L", axiom = "all", laws = "frobenius";
  std::size_t dim = 2, samples = 100, max_nodes = 8;
};

struct Report {
  explicit Report(std::string name) : command(std::move(name)) {}

  std::string command;
  json residual = nullptr;
  Tol tol;
  json result = json::object();
  std::vector<std::string> warnings;
  bool failed = false;
};

// ---- JSON helpers ----------------------------------------------------------------

json number(double v) {
  if (std::isfinite(v)) return v;
  if (std::isnan(v)) return "nan";
  return v > 0 ? "inf" : "-inf";
}

json complex_entries(const Mat& m) {
  json data = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) data.push_back({m(i, j).real(), m(i, j).imag()});
  return data;
}

json matrix_json(const Mat& m) {
  return {{"shape", {m.rows(), m.cols()}}, {"data", complex_entries(m)}};
}

json matrix_json(const RMat& m) {
  json data = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) data.push_back(number(m(i, j)));
  return {{"shape", {m.rows(), m.cols()}}, {"data", data}};
}

json state_json(const State& s) {
  json j = {{"backend", bayes::backend_name(s.backend)},
            {"objects", s.targets()},
            {"given", s.givens()},
            {"dims", s.dims}};
  if (s.classical()) {
    json data = json::array();
    for (std::size_t i = 0; i < s.values.rows(); ++i) data.push_back(number(s.values(i, 0)));
    j["data"] = data;
  } else {
    j["shape"] = {s.rho.rows(), s.rho.cols()};
    j["data"] = complex_entries(s.rho);
  }
  return j;
}

json ci_json(const bayes::CiResult& r) {
  return {{"variant", bayes::ci_name(r.variant)},
          {"holds", r.holds},
          {"residual", number(r.residual)},
          {"bound", number(r.bound)}};
}

json tol_json(const Tol& t) {
  return {{"abs_eps", t.abs_eps}, {"rel_eps", t.rel_eps}, {"rank_eps", t.rank_eps}};
}

// ---- model loading ---------------------------------------------------------------

struct Loaded {
  dsl::ModelFile model;
  Backend backend = Backend::standard;
};

Loaded load(const Options& o) {
  if (o.model.empty()) throw ParseError("--model is required");
  Loaded l{dsl::parse_model(dsl::read_file(o.model), Tol::from_env()), Backend::standard};
  const bool quantum = l.model.kind == diagram::ObjectKind::quantum;
  const std::string& b = o.backend;
  if (quantum) {
    if (!b.empty() && b != "quantum" && b != "cdo") {
      throw KindError("backend '" + b + "' cannot evaluate a quantum model");
    }
    l.backend = Backend::quantum;
  } else if (b.empty() || b == "standard") {
    l.backend = Backend::standard;
  } else if (b == "neglog") {
    l.backend = Backend::neglog;
  } else {
    throw KindError("backend '" + b + "' cannot evaluate a classical model");
  }
  return l;
}

State joint_of(const Loaded& l) {
  const auto& t = l.model.joint_tensor();
  const auto dims = l.model.signature.dims(t.cod);
  if (l.backend == Backend::quantum) return bayes::quantum_state(t.cod, dims, t.value);
  std::vector<double> p(t.value.rows());
  for (std::size_t i = 0; i < p.size(); ++i) p[i] = t.value(i, 0).real();
  return bayes::classical_state(l.backend, t.cod, dims, p);
}

diagram::Term load_term(const Options& o, const diagram::Signature& sig) {
  if (!o.term.empty()) return dsl::parse_term_file(dsl::read_file(o.term), sig);
  if (!o.expr.empty()) return dsl::parse_term(o.expr, sig);
  throw ParseError("one of --term or --expr is required");
}

models::Bindings<models::ClassicalBackend> classical_bindings(const Loaded& l) {
  const auto sr = bayes::semiring_of(l.backend);
  models::Bindings<models::ClassicalBackend> out;
  for (const auto& t : l.model.tensors) out[t.name] = models::sr_embed(linalg::real_part(t.value), sr);
  return out;
}

models::Bindings<models::CdoBackend> quantum_bindings(const Loaded& l) {
  models::Bindings<models::CdoBackend> out;
  for (const auto& t : l.model.tensors) {
    out[t.name] = t.dom.empty() && t.flavor == diagram::Flavor::state
                      ? models::cdo_point(t.value, l.model.signature.dims(t.cod))
                      : t.value;
  }
  return out;
}

double magnitude(const RMat& m, const models::Semiring& sr) {
  double out = 0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out = std::max(out, std::abs(sr.extract(m(i, j))));
  return out;
}

ObjectList join(const ObjectList& a, const ObjectList& b) {
  ObjectList out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

// ---- commands --------------------------------------------------------------------

Report cmd_eval(const Options& o) {
  Report r("eval");
  const Loaded l = load(o);
  r.tol = l.model.tol;
  const auto t = load_term(o, l.model.signature);
  r.result = {{"term", dsl::serialize(t)}, {"dom", t.dom()}, {"cod", t.cod()},
              {"backend", bayes::backend_name(l.backend)}};
  if (l.backend == Backend::quantum) {
    const Mat v = models::evaluate(t, models::CdoBackend(l.model.signature), quantum_bindings(l));
    r.result["value"] = matrix_json(v);
    if (t.dom().empty()) {
      r.result["operator"] = matrix_json(models::cdo_unpoint(v, l.model.signature.dims(t.cod())));
    }
  } else {
    const models::ClassicalBackend be(l.model.signature, bayes::semiring_of(l.backend));
    r.result["value"] = matrix_json(models::evaluate(t, be, classical_bindings(l)));
  }
  return r;
}

Report cmd_normalize(const Options& o) {
  Report r("normalize");
  const Loaded l = load(o);
  r.tol = l.model.tol;
  const auto& sig = l.model.signature;
  const auto t = load_term(o, sig);
  rewrite::FuseOptions opts;
  if (o.seeded) opts.shuffle_seed = o.seed;
  const auto fused = rewrite::spider_fuse(rewrite::to_graph(t, sig), opts);
  const auto n = rewrite::from_graph(fused);
  r.result = {{"input", dsl::serialize(t)},
              {"term", dsl::serialize(n)},
              {"nodes", fused.live_nodes()},
              {"spiders", fused.live_spiders()}};
  try {
    r.result["normal_form"] = rewrite::normal_form(fused);
  } catch (const UnsupportedError&) {
    r.warnings.push_back("no canonical form for terms with boxes or noncommutative objects");
  }
  double gap = 0, mag = 0;
  if (l.backend == Backend::quantum) {
    const models::CdoBackend be(sig);
    const auto bind = quantum_bindings(l);
    const Mat before = models::evaluate(t, be, bind);
    gap = be.distance(before, models::evaluate(n, be, bind));
    mag = linalg::max_abs(before);
  } else {
    const auto sr = bayes::semiring_of(l.backend);
    const models::ClassicalBackend be(sig, sr);
    const auto bind = classical_bindings(l);
    const RMat before = models::evaluate(t, be, bind);
    gap = be.distance(before, models::evaluate(n, be, bind));
    mag = magnitude(before, sr);
  }
  r.residual = number(gap);
  r.failed = !(gap <= r.tol.scaled(mag));
  return r;
}

Report cmd_condition(const Options& o) {
  Report r("condition");
  const Loaded l = load(o);
  r.tol = l.model.tol;
  const State joint = joint_of(l);
  const State c = bayes::conditional(joint, o.target, o.given, r.tol);
  const State whole = bayes::marginal(joint, join(o.target, o.given));
  const State back = o.given.empty()
                         ? c
                         : bayes::apply(bayes::modifier_of(bayes::marginal(joint, o.given)), c, r.tol);
  r.residual = number(bayes::distance(back, whole));
  r.result = state_json(c);
  return r;
}

Report cmd_invert(const Options& o) {
  Report r("invert");
  const Loaded l = load(o);
  r.tol = l.model.tol;
  if (o.given.empty()) throw ParseError("invert needs --given");
  const State joint = joint_of(l);
  const State c = bayes::conditional(joint, o.given, o.target, r.tol);
  const State inv = bayes::bayes_invert(c, bayes::marginal(joint, o.target),
                                        bayes::marginal(joint, o.given), r.tol);
  const double gap = bayes::distance(inv, bayes::conditional(joint, o.target, o.given, r.tol));
  r.residual = number(gap);
  if (!(gap <= r.tol.scaled(bayes::magnitude(inv)))) {
    r.warnings.push_back("inverted conditional differs from the direct conditional");
  }
  r.result = state_json(inv);
  return r;
}

Report cmd_pool(const Options& o) {
  Report r("pool");
  const Loaded l = load(o);
  r.tol = l.model.tol;
  const State joint = joint_of(l);
  const auto variant = o.pool_variant == "R" ? bayes::PoolVariant::R : bayes::PoolVariant::L;
  const State pooled = bayes::pool(
      bayes::conditional(joint, o.c, o.a, r.tol), bayes::conditional(joint, o.c, o.b, r.tol),
      bayes::marginal(joint, o.a), bayes::marginal(joint, o.b), bayes::marginal(joint, join(o.a, o.b)),
      bayes::marginal(joint, o.c), variant, r.tol);
  r.residual = number(bayes::distance(pooled, bayes::conditional(joint, o.c, join(o.a, o.b), r.tol)));
  const auto ci = bayes::ci_test(joint, o.a, o.b, o.c,
                                 variant == bayes::PoolVariant::L ? bayes::CiVariant::CI2_L
                                                                  : bayes::CiVariant::CI2_R,
                                 r.tol);
  if (!ci.holds) {
    r.warnings.push_back(std::string("A and B are not independent given C in the ") +
                         bayes::ci_name(ci.variant) + " sense; pooling does not recover p(C|AB)");
  }
  r.result = {{"variant", o.pool_variant}, {"independence", ci_json(ci)}, {"state", state_json(pooled)}};
  return r;
}

Report cmd_ci(const Options& o) {
  Report r("ci");
  const Loaded l = load(o);
  r.tol = l.model.tol;
  const State joint = joint_of(l);
  std::vector<bayes::CiVariant> variants;
  if (o.variant == "all") {
    for (int v = 0; v <= static_cast<int>(bayes::CiVariant::CI1_R_prime); ++v) {
      variants.push_back(static_cast<bayes::CiVariant>(v));
    }
  } else {
    variants.push_back(bayes::parse_ci(o.variant));
  }
  json tests = json::array();
  bool holds = true;
  double worst = 0;
  for (auto v : variants) {
    const auto res = bayes::ci_test(joint, o.a, o.b, o.c, v, r.tol);
    tests.push_back(ci_json(res));
    holds = holds && res.holds;
    worst = std::max(worst, res.residual);
  }
  r.residual = number(worst);
  r.result = {{"holds", holds}, {"tests", tests}};
  if (!joint.classical()) {
    r.result["commutator"] = number(bayes::ci_commutator(joint, o.a, o.b, o.c, r.tol));
    if (variants.size() > 1) {
      r.warnings.push_back("CI2_L and CI2_R are tested separately; for quantum states they need not agree");
    }
  }
  return r;
}

Report cmd_graphoid(const Options& o) {
  Report r("graphoid");
  const Loaded l = load(o);
  r.tol = l.model.tol;
  const State joint = joint_of(l);
  std::vector<bayes::Axiom> axioms;
  if (o.axiom == "all") {
    axioms = {bayes::Axiom::symmetry, bayes::Axiom::decomposition, bayes::Axiom::weak_union,
              bayes::Axiom::contraction};
  } else {
    axioms.push_back(bayes::parse_axiom(o.axiom));
  }
  json reports = json::array();
  double worst = 0;
  bool passed = true;
  for (auto ax : axioms) {
    const auto g = bayes::graphoid_check(joint, ax, o.u, o.w, o.x, o.y, r.tol);
    json ante = json::array();
    for (const auto& a : g.antecedents) ante.push_back(ci_json(a));
    reports.push_back({{"axiom", bayes::axiom_name(ax)},
                       {"antecedents", ante},
                       {"antecedents_hold", g.antecedents_hold()},
                       {"consequent", ci_json(g.consequent)},
                       {"passed", g.passed()}});
    if (g.antecedents_hold()) worst = std::max(worst, g.consequent.residual);
    passed = passed && g.passed();
    if (g.experimental && r.warnings.empty()) {
      r.warnings.push_back("graphoid axioms on quantum states are experimental");
    }
  }
  r.residual = number(worst);
  r.result = {{"passed", passed}, {"axioms", reports}};
  r.failed = !passed;
  return r;
}

Report cmd_entropy(const Options& o) {
  Report r("entropy");
  const Loaded l = load(o);
  r.tol = l.model.tol;
  const State joint = joint_of(l);
  if (!joint.classical()) throw UnsupportedError("entropy is defined for classical models only");
  r.result = {{"unit", "nats"}};
  if (o.target.empty()) {
    if (!o.given.empty()) throw ParseError("--given needs --target");
    r.result["objects"] = joint.objects;
    r.result["entropy"] = number(bayes::entropy(joint));
    return r;
  }
  r.result["objects"] = o.target;
  r.result["given"] = o.given;
  if (o.given.empty()) {
    r.result["entropy"] = number(bayes::entropy(bayes::marginal(joint, o.target)));
    return r;
  }
  const double s_tg = bayes::conditional_entropy(joint, o.target, o.given);
  const double s_gt = bayes::conditional_entropy(joint, o.given, o.target);
  const double s_t = bayes::entropy(bayes::marginal(joint, o.target));
  const double s_g = bayes::entropy(bayes::marginal(joint, o.given));
  r.result["entropy"] = number(s_tg);
  r.residual = number(std::abs(s_tg - (s_gt + s_t - s_g)));
  return r;
}

diagram::Signature single_object(diagram::ObjectKind kind, std::size_t dim) {
  diagram::Signature sig;
  sig.add_object({"A", kind, dim});
  return sig;
}

void verify_laws(const Options& o, Report& r) {
  const std::string backend = o.backend.empty() ? "standard" : o.backend;
  models::LawReport laws;
  if (backend == "cdo" || backend == "quantum") {
    laws = models::verify_frobenius_laws(
        models::CdoBackend(single_object(diagram::ObjectKind::quantum, o.dim)), "A");
  } else {
    const auto sr = backend == "neglog" ? models::Semiring::neglog() : models::Semiring::standard();
    laws = models::verify_frobenius_laws(
        models::ClassicalBackend(single_object(diagram::ObjectKind::classical, o.dim), sr), "A");
  }
  const double bound = r.tol.scaled(1.0);
  json table = json::array();
  double worst = 0;
  for (const auto& law : laws.residuals) {
    table.push_back({{"law", law.law}, {"residual", number(law.residual)}});
    const bool counted = o.laws == "commutative" || law.law != "commutativity";
    if (counted) worst = std::max(worst, law.residual);
  }
  r.residual = number(worst);
  r.result = {{"backend", backend}, {"dim", o.dim}, {"bound", bound}, {"laws", table}};
  r.failed = !(worst <= bound);
}

void verify_spider(const Options& o, Report& r) {
  const auto sig = single_object(diagram::ObjectKind::classical, o.dim);
  const models::ClassicalBackend be(sig);
  std::mt19937_64 rng(o.seed);
  std::size_t single = 0, stable = 0;
  double worst = 0;
  for (std::size_t i = 0; i < o.samples; ++i) {
    const auto t = rewrite::random_spider_network(rng, "A", o.max_nodes);
    const auto fused = rewrite::spider_fuse(rewrite::to_graph(t, sig));
    if (fused.live_spiders() <= 1 && fused.live_nodes() == fused.live_spiders()) ++single;
    const auto shuffled = rewrite::spider_fuse(rewrite::to_graph(t, sig), {rng()});
    if (rewrite::normal_form(shuffled) == rewrite::normal_form(fused)) ++stable;
    const RMat before = models::evaluate(t, be);
    const double gap = be.distance(before, models::evaluate(rewrite::from_graph(fused), be));
    worst = std::max(worst, gap / std::max(1.0, magnitude(before, be.semiring())));
  }
  r.residual = number(worst);
  r.result = {{"samples", o.samples},
              {"seed", o.seed},
              {"dim", o.dim},
              {"max_nodes", o.max_nodes},
              {"single_spider", single},
              {"order_independent", stable}};
  r.failed = single != o.samples || stable != o.samples || !(worst <= r.tol.scaled(0));
}

void verify_model(const Options& o, Report& r) {
  const Loaded l = load(o);
  r.tol = l.model.tol;
  const auto& sig = l.model.signature;
  const double bound = r.tol.scaled(1.0);
  json checks = json::array();
  double worst = 0;
  bool ok = true;
  auto record = [&](json check, double residual, bool good) {
    check["residual"] = number(residual);
    check["ok"] = good;
    checks.push_back(check);
    worst = std::max(worst, residual);
    ok = ok && good;
  };
  for (const auto& t : l.model.tensors) {
    const bool quantum = l.backend == Backend::quantum;
    if (t.flavor == diagram::Flavor::state && t.dom.empty()) {
      double sum = 0;
      if (quantum) {
        sum = linalg::trace(t.value).real();
      } else {
        for (std::size_t i = 0; i < t.value.rows(); ++i) sum += t.value(i, 0).real();
      }
      const double res = std::abs(sum - 1);
      record({{"name", t.name}, {"check", "normalized"}}, res, res <= bound);
    } else if (t.flavor == diagram::Flavor::process) {
      const auto in = sig.dims(t.dom), out = sig.dims(t.cod);
      double res = 0;
      if (quantum) {
        const auto cp = models::is_cp(t.value, in, out);
        const std::size_t n = t.value.cols() == 0 ? 0 : static_cast<std::size_t>(
                                                          std::llround(std::sqrt(double(t.value.cols()))));
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j) {
            Mat e(n, n);
            e(i, j) = 1;
            const Mat image = models::cdo_unpoint(linalg::matmul(t.value, models::cdo_point(e, in)), out);
            res = std::max(res, std::abs(linalg::trace(image) - (i == j ? 1.0 : 0.0)));
          }
        record({{"name", t.name}, {"check", "cptp"}, {"cp", cp.cp}, {"min_eigenvalue", cp.min_eigenvalue}},
               res, cp.cp && res <= bound);
      } else {
        for (std::size_t j = 0; j < t.value.cols(); ++j) {
          double sum = 0;
          for (std::size_t i = 0; i < t.value.rows(); ++i) sum += t.value(i, j).real();
          res = std::max(res, std::abs(sum - 1));
        }
        record({{"name", t.name}, {"check", "stochastic"}}, res, res <= bound);
      }
    }
  }
  r.residual = number(worst);
  r.result = {{"bound", bound}, {"checks", checks}};
  r.failed = !ok;
}

Report cmd_verify(const Options& o) {
  Report r("verify");
  r.tol = Tol::from_env();
  if (o.laws == "frobenius" || o.laws == "commutative") {
    if (!o.model.empty()) throw ParseError("--laws " + o.laws + " takes --backend and --dim, not --model");
    verify_laws(o, r);
  } else if (o.laws == "spider") {
    if (!o.backend.empty() && o.backend != "standard") {
      throw UnsupportedError("spider sweeps run on the standard backend");
    }
    verify_spider(o, r);
  } else {
    verify_model(o, r);
  }
  r.result["laws"] = r.result.contains("laws") ? r.result["laws"] : json(o.laws);
  return r;
}

// ---- output ----------------------------------------------------------------------

void flatten(const std::string& prefix, const json& j, std::ostream& out) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) flatten(prefix.empty() ? k : prefix + "." + k, v, out);
    return;
  }
  out << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
}

void emit(const Report& r, const std::string& format, std::ostream& out) {
  if (format == "text") {
    out << "command: " << r.command << "\n";
    out << "residual: " << r.residual.dump() << "\n";
    out << "tol: " << tol_json(r.tol).dump() << "\n";
    flatten("result", r.result, out);
    for (const auto& w : r.warnings) out << "warning: " << w << "\n";
    return;
  }
  const json doc = {{"command", r.command},
                    {"residual", r.residual},
                    {"tol", tol_json(r.tol)},
                    {"result", r.result},
                    {"warnings", r.warnings}};
  out << doc.dump(2) << "\n";
}

void add_objects(CLI::App* cmd, const std::string& flag, ObjectList& into, const std::string& help,
                 bool required = false) {
  auto* opt = cmd->add_option(flag, into, help)->delimiter(',');
  if (required) opt->required();
}

}  // namespace

int exit_code(const std::exception& e) noexcept {
  if (dynamic_cast<const DomainError*>(&e) || dynamic_cast<const KindError*>(&e) ||
      dynamic_cast<const UnsupportedError*>(&e)) {
    return kDomain;
  }
  if (dynamic_cast<const Error*>(&e) || dynamic_cast<const json::exception*>(&e)) return kParse;
  return kDomain;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"String-diagram Bayesian inference", "frobayes"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--seed", o.seed, "Seed for sampled sweeps and shuffled rewriting");

  const std::vector<std::string> backends{"standard", "neglog", "quantum", "cdo"};
  auto with_model = [&](CLI::App* cmd) {
    cmd->add_option("--model", o.model, "Model file (.fbm)")->required();
    cmd->add_option("--backend", o.backend, "standard, neglog, or quantum/cdo")
        ->check(CLI::IsMember(backends));
  };

  std::map<std::string, std::function<Report(const Options&)>> commands;

  auto* eval = app.add_subcommand("eval", "Evaluate a term against a model");
  with_model(eval);
  eval->add_option("--term", o.term, "Term file (.fbg)");
  eval->add_option("--expr", o.expr, "Inline term");
  commands["eval"] = cmd_eval;

  auto* norm = app.add_subcommand("normalize", "Fuse spiders and print the normal form");
  with_model(norm);
  norm->add_option("--term", o.term, "Term file (.fbg)");
  norm->add_option("--expr", o.expr, "Inline term");
  commands["normalize"] = cmd_normalize;

  auto* cond = app.add_subcommand("condition", "Conditional state p(target | given)");
  with_model(cond);
  add_objects(cond, "--target", o.target, "Conditioned objects", true);
  add_objects(cond, "--given", o.given, "Conditioning objects");
  commands["condition"] = cmd_condition;

  auto* inv = app.add_subcommand("invert", "Bayesian inversion of p(given | target)");
  with_model(inv);
  add_objects(inv, "--target", o.target, "Objects of the inverted conditional", true);
  add_objects(inv, "--given", o.given, "Its conditioning objects", true);
  commands["invert"] = cmd_invert;

  auto* pool = app.add_subcommand("pool", "Pool p(C|A) and p(C|B) into p(C|AB)");
  with_model(pool);
  add_objects(pool, "--A", o.a, "Objects A", true);
  add_objects(pool, "--B", o.b, "Objects B", true);
  add_objects(pool, "--C", o.c, "Objects C", true);
  pool->add_option("--variant", o.pool_variant, "L or R")->check(CLI::IsMember({"L", "R"}));
  commands["pool"] = cmd_pool;

  auto* ci = app.add_subcommand("ci", "Test conditional independence of A and B given C");
  with_model(ci);
  add_objects(ci, "--A", o.a, "Objects A", true);
  add_objects(ci, "--B", o.b, "Objects B", true);
  add_objects(ci, "--C", o.c, "Objects C");
  ci->add_option("--variant", o.variant, "CI1_L, CI1_R, CI2_L, CI2_R, F_L, F_R, CI1_L', CI1_R' or all");
  commands["ci"] = cmd_ci;

  auto* gr = app.add_subcommand("graphoid", "Check the semi-graphoid axioms");
  with_model(gr);
  add_objects(gr, "--U", o.u, "Objects U", true);
  add_objects(gr, "--W", o.w, "Objects W", true);
  add_objects(gr, "--X", o.x, "Objects X");
  add_objects(gr, "--Y", o.y, "Objects Y");
  gr->add_option("--axiom", o.axiom, "symmetry, decomposition, weak_union, contraction or all");
  commands["graphoid"] = cmd_graphoid;

  auto* ent = app.add_subcommand("entropy", "Shannon entropy S(target | given)");
  with_model(ent);
  add_objects(ent, "--target", o.target, "Objects (default: all)");
  add_objects(ent, "--given", o.given, "Conditioning objects");
  commands["entropy"] = cmd_entropy;

  auto* ver = app.add_subcommand("verify", "Run a verification suite");
  ver->add_option("--laws", o.laws, "frobenius, commutative, spider or model")
      ->check(CLI::IsMember({"frobenius", "commutative", "spider", "model"}));
  ver->add_option("--backend", o.backend, "standard, neglog or cdo")->check(CLI::IsMember(backends));
  ver->add_option("--dim", o.dim, "Object dimension")->check(CLI::Range(1, 8));
  ver->add_option("--samples", o.samples, "Random networks for --laws spider")->check(CLI::Range(1, 100000));
  ver->add_option("--max-nodes", o.max_nodes, "Spiders per random network")->check(CLI::Range(2, 16));
  ver->add_option("--model", o.model, "Model file for --laws model");
  commands["verify"] = cmd_verify;

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? kOk : kParse;
  }
  o.seeded = app.count("--seed") > 0;

  try {
    const Report r = commands.at(app.get_subcommands().front()->get_name())(o);
    emit(r, o.format, out);
    return r.failed ? kFailed : kOk;
  } catch (const std::exception& e) {
    err << "frobayes: " << e.what() << "\n";
    return exit_code(e);
  }
}

}  // namespace frobayes::cli
