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


#include "frobayes/dsl.hpp"

#include <gtest/gtest.h>

#include <random>

#include "frobayes/bayes.hpp"
#include "frobayes/models.hpp"

namespace frobayes::dsl {
namespace {

using namespace diagram;

const std::string kFixtures = FROBAYES_FIXTURE_DIR;

Signature sig() {
  Signature s;
  s.add_object({"A", ObjectKind::classical, 2});
  s.add_object({"B", ObjectKind::classical, 3});
  s.add_box({"pAB", {}, {"A", "B"}, Flavor::state});
  s.add_box({"f", {"A"}, {"B"}, Flavor::process});
  return s;
}

TEST(Dsl, ParseExamples) {
  const auto s = sig();
  EXPECT_EQ(parse_term("spider[A](1,2)", s), spider("A", 1, 2));
  const Term t = parse_term("cup[A] ; (id[A] * spider[A](1,1))", s);
  EXPECT_EQ(t.dom(), ObjectList{});
  EXPECT_EQ(t.cod(), (ObjectList{"A", "A"}));
  EXPECT_EQ(parse_term("swap[A,B]", s), swap("A", "B"));
  EXPECT_EQ(parse_term("process(f, dagger)", s), box(*s.find_box("f"), true));
  EXPECT_EQ(parse_term("", s), Term());
  EXPECT_EQ(parse_term("()", s), Term());
}

TEST(Dsl, SerializeExamples) {
  EXPECT_EQ(serialize(id("A")), "id[A]");
  EXPECT_EQ(serialize(Term()), "");
  EXPECT_EQ(serialize(Term::seq(spider("A", 1, 2), Term::par(id("A"), id("A")))),
            "spider[A](1,2) ; id[A] * id[A]");
}

TEST(Dsl, ConditionalStateRoundTrip) {
  const auto s = sig();
  const std::string src = "(state(pAB) * id[B]) ; (id[A] * cap[B])";
  const Term t = parse_term(src, s);
  EXPECT_EQ(t.dom(), ObjectList{"B"});
  EXPECT_EQ(parse_term(serialize(t), s), t);
  EXPECT_EQ(serialize(parse_term(serialize(t), s)), serialize(t));
}

TEST(Dsl, SeqIsDiagrammaticOrder) {
  // "a ; b" applies a first: the spider copies, then the cap closes both legs.
  auto s = sig();
  models::ClassicalBackend be(s);
  const Term t = parse_term("spider[A](1,2) ; cap[A]", s);
  const auto v = models::evaluate(t, be);
  EXPECT_EQ(v.rows(), 1u);
  EXPECT_EQ(v(0, 0), 1.0);
  EXPECT_EQ(v(0, 1), 1.0);
}

TEST(Dsl, SyntaxErrorsCarryPositions) {
  const auto s = sig();
  try {
    parse_term("spider[A](1,2) ;\n  * id[A]", s);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(std::string(e.what()).rfind("2:3:", 0), 0u) << e.what();
  }
  EXPECT_THROW(parse_term("spider[A](0,0)", s), ParseError);
  EXPECT_THROW(parse_term("spider[Z](1,1)", s), NameError);
  EXPECT_THROW(parse_term("state(nope)", s), NameError);
  EXPECT_THROW(parse_term("state(f)", s), TypeError);
  EXPECT_THROW(parse_term("spider[A](1,2) ; id[A]", s), TypeError);
  EXPECT_THROW(parse_term(std::string(300, '(') + std::string(300, ')'), s), ParseError);
}

// Random well-typed terms over A and B.
Term random_layer(std::mt19937_64& rng, const ObjectList& dom) {
  std::vector<Term> parts;
  std::uniform_int_distribution<int> pick(0, 5);
  for (std::size_t i = 0; i < dom.size(); ++i) {
    const auto& o = dom[i];
    switch (pick(rng)) {
      case 0: parts.push_back(id(o)); break;
      case 1: parts.push_back(spider(o, 1, 2)); break;
      case 2: parts.push_back(spider(o, 1, 0)); break;
      case 3:
        if (i + 1 < dom.size()) {
          parts.push_back(swap(o, dom[i + 1]));
          ++i;
        } else {
          parts.push_back(id(o));
        }
        break;
      case 4: parts.push_back(o == "A" ? Term::seq(id("A"), Term::par(id("A"), cup("B"))) : id(o)); break;
      default: parts.push_back(o == "A" ? Term::gen(Box{"f", {"A"}, {"B"}, Flavor::process, false}) : id(o));
    }
  }
  return par_all(parts);
}

TEST(Dsl, RandomRoundTrips) {
  const auto s = sig();
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    Term t = Term::par(id("A"), Term::par(spider("B", 0, 1), id("A")));
    for (int k = 0; k < 4 && !t.cod().empty(); ++k) t = Term::seq(t, random_layer(rng, t.cod()));
    typecheck(t, s);
    const std::string text = serialize(t);
    const Term back = parse_term(text, s);
    EXPECT_EQ(back, t) << text;
    EXPECT_EQ(serialize(back), text);
  }
}

TEST(Dsl, FuzzedInputNeverCrashes) {
  const auto s = sig();
  const std::string alphabet = "spidercupcapswapidstate[]()A,B;*0123456789 \n\t#";
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<std::size_t> len(0, 40), ch(0, alphabet.size() - 1);
  std::uniform_int_distribution<int> byte(0, 255);
  for (int trial = 0; trial < 3000; ++trial) {
    std::string src(len(rng), ' ');
    for (auto& c : src) c = trial % 3 == 0 ? static_cast<char>(byte(rng)) : alphabet[ch(rng)];
    try {
      parse_term(src, s);
    } catch (const Error&) {
    }
  }
}

TEST(Dsl, TermFilesNeedHeader) {
  const auto s = sig();
  EXPECT_EQ(parse_term_file("frobayes-v1\nid[A]\n", s), id("A"));
  EXPECT_THROW(parse_term_file("id[A]\n", s), ParseError);
  EXPECT_EQ(serialize_term_file(id("A")), "frobayes-v1\nid[A]\n");
}

TEST(Dsl, ClassicalModelAccepted) {
  const auto m = parse_model(read_file(kFixtures + "/joint2x2.fbm"));
  EXPECT_EQ(m.kind, ObjectKind::classical);
  EXPECT_EQ(m.joint, "pAB");
  const auto& j = m.joint_tensor();
  ASSERT_EQ(j.value.rows(), 4u);
  double sum = 0;
  for (std::size_t i = 0; i < 4; ++i) sum += j.value(i, 0).real();
  EXPECT_NEAR(sum, 1.0, 1e-15);
  EXPECT_NE(m.signature.find_box("pAB"), nullptr);
  EXPECT_NE(m.signature.find_box("f"), nullptr);
  const Term t = parse_term_file(read_file(kFixtures + "/marginal.fbg"), m.signature);
  EXPECT_EQ(t.cod(), ObjectList{"A"});
}

TEST(Dsl, QuantumModelAccepted) {
  const auto m = parse_model(read_file(kFixtures + "/quantum2x2.fbm"));
  EXPECT_EQ(m.kind, ObjectKind::quantum);
  const auto& rho = m.joint_tensor().value;
  EXPECT_TRUE(linalg::is_hermitian(rho));
  EXPECT_NEAR(linalg::trace(rho).real(), 1.0, 1e-12);
  EXPECT_NEAR(rho(0, 3).imag(), -0.35, 1e-12);
}

TEST(Dsl, ModelErrors) {
  EXPECT_THROW(parse_model(read_file(kFixtures + "/nonhermitian.fbm")), DomainError);
  EXPECT_THROW(parse_model(read_file(kFixtures + "/shape_error.fbm")), ShapeError);
  try {
    parse_model(read_file(kFixtures + "/bad_syntax.fbm"));
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(std::string(e.what()).rfind("3:", 0), 0u) << e.what();
  }
  const std::string mixed = R"(frobayes-v1
{"objects": [{"name": "A", "kind": "classical", "dim": 2}, {"name": "Q", "kind": "quantum", "dim": 2}],
 "tensors": [{"name": "p", "objects": ["A"], "data": [0.5, 0.5]}]})";
  EXPECT_THROW(parse_model(mixed), KindError);
  const std::string negative = R"(frobayes-v1
{"objects": [{"name": "A", "kind": "classical", "dim": 2}],
 "tensors": [{"name": "p", "objects": ["A"], "data": [1.5, -0.5]}]})";
  EXPECT_THROW(parse_model(negative), DomainError);
  const std::string not_psd = R"(frobayes-v1
{"objects": [{"name": "Q", "kind": "quantum", "dim": 2}],
 "tensors": [{"name": "r", "objects": ["Q"], "data": [1.5, 0, 0, -0.5]}]})";
  EXPECT_THROW(parse_model(not_psd), DomainError);
  try {
    parse_model(read_file(kFixtures + "/shape_error.fbm"));
  } catch (const ShapeError& e) {
    EXPECT_NE(std::string(e.what()).find("/tensors/0/data"), std::string::npos) << e.what();
  }
}

TEST(Dsl, ModelToleranceOptions) {
  const std::string src = R"(frobayes-v1
{"objects": [{"name": "A", "kind": "classical", "dim": 2}],
 "tensors": [{"name": "p", "objects": ["A"], "data": [0.5, 0.5]}],
 "options": {"abs_eps": 1e-6}})";
  EXPECT_EQ(parse_model(src, linalg::Tol{}).tol.abs_eps, 1e-6);
}

TEST(Dsl, ConditionalTermMatchesBayes) {
  // Def. of the conditional state as a diagram: the inverse modifier of the
  // B marginal acts on the B leg of the joint.
  const auto m = parse_model(read_file(kFixtures + "/joint2x2.fbm"));
  Signature s = m.signature;
  s.add_box({"MBinv", {"B"}, {"B"}, Flavor::modifier_inverse});
  const Term t = parse_term("state(pAB) ; (id[A] * modifier_inverse(MBinv))", s);
  models::ClassicalBackend be(s);
  linalg::RMat joint(4, 1), inv(2, 2);
  for (std::size_t i = 0; i < 4; ++i) joint(i, 0) = m.joint_tensor().value(i, 0).real();
  inv(0, 0) = 1 / 0.4;
  inv(1, 1) = 1 / 0.6;
  const auto v = models::evaluate(t, be, {{"pAB", joint}, {"MBinv", inv}});
  const double want[] = {0.25, 1.0 / 3, 0.75, 2.0 / 3};
  for (std::size_t i = 0; i < 4; ++i) EXPECT_NEAR(v(i, 0), want[i], 1e-15);
}

}  // namespace
}  // namespace frobayes::dsl
