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

#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace frobayes::dsl {

using diagram::Term;

namespace {

// Deeper nesting than this is rejected rather than risking the stack.
constexpr std::size_t kMaxDepth = 256;
constexpr std::size_t kMaxArity = 64;

enum class Tok { ident, number, lbrack, rbrack, lparen, rparen, comma, semi, star, end };

struct Token {
  Tok kind = Tok::end;
  std::string text;
  SourceSpan span;
};

const char* tok_name(Tok t) {
  switch (t) {
    case Tok::ident: return "identifier";
    case Tok::number: return "number";
    case Tok::lbrack: return "'['";
    case Tok::rbrack: return "']'";
    case Tok::lparen: return "'('";
    case Tok::rparen: return "')'";
    case Tok::comma: return "','";
    case Tok::semi: return "';'";
    case Tok::star: return "'*'";
    case Tok::end: return "end of input";
  }
  return "?";
}

class Lexer {
 public:
  Lexer(std::string_view src, std::size_t line) : src_(src), line_(line) {}

  Token next() {
    skip_blank();
    Token t;
    t.span = here();
    if (pos_ >= src_.size()) {
      t.span.end = pos_;
      return t;
    }
    const char c = src_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
        advance();
      }
      t.kind = Tok::ident;
      t.text = std::string(src_.substr(start, pos_ - start));
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) advance();
      t.kind = Tok::number;
      t.text = std::string(src_.substr(start, pos_ - start));
    } else {
      switch (c) {
        case '[': t.kind = Tok::lbrack; break;
        case ']': t.kind = Tok::rbrack; break;
        case '(': t.kind = Tok::lparen; break;
        case ')': t.kind = Tok::rparen; break;
        case ',': t.kind = Tok::comma; break;
        case ';': t.kind = Tok::semi; break;
        case '*': t.kind = Tok::star; break;
        default: {
          SourceSpan s = here();
          s.end = s.begin + 1;
          const auto uc = static_cast<unsigned char>(c);
          std::string shown = std::isprint(uc) ? std::string(1, c) : "\\x" + hex(uc);
          throw ParseError("unexpected character '" + shown + "'", s);
        }
      }
      t.text = std::string(1, c);
      advance();
    }
    t.span.end = pos_;
    return t;
  }

 private:
  static std::string hex(unsigned char c) {
    static const char* digits = "0123456789abcdef";
    return {digits[c >> 4], digits[c & 15]};
  }

  SourceSpan here() const { return SourceSpan{line_, col_, pos_, pos_}; }

  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip_blank() {
    while (pos_ < src_.size()) {
      const char c = src_[pos_];
      if (c == '#') {
        while (pos_ < src_.size() && src_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  std::size_t line_;
  std::size_t col_ = 1;
};

class Parser {
 public:
  Parser(std::string_view src, const diagram::Signature& sig, std::size_t first_line)
      : lex_(src, first_line), sig_(sig) {
    tok_ = lex_.next();
  }

  Term parse() {
    if (tok_.kind == Tok::end) return Term();
    Term t = term(0);
    if (tok_.kind != Tok::end) {
      throw ParseError(std::string("expected ';', '*' or end of input, found ") +
                           tok_name(tok_.kind),
                       tok_.span);
    }
    return t;
  }

 private:
  Token take(Tok kind) {
    if (tok_.kind != kind) {
      throw ParseError(std::string("expected ") + tok_name(kind) + ", found " +
                           tok_name(tok_.kind),
                       tok_.span);
    }
    Token t = std::move(tok_);
    tok_ = lex_.next();
    return t;
  }

  Term term(std::size_t depth) {
    Term t = par(depth);
    while (tok_.kind == Tok::semi) {
      take(Tok::semi);
      t = Term::seq(t, par(depth));
    }
    return t;
  }

  Term par(std::size_t depth) {
    Term t = atom(depth);
    while (tok_.kind == Tok::star) {
      take(Tok::star);
      t = Term::par(t, atom(depth));
    }
    return t;
  }

  std::string object_name() {
    Token t = take(Tok::ident);
    if (!sig_.find_object(t.text)) {
      throw NameError(std::to_string(t.span.line) + ":" + std::to_string(t.span.column) +
                      ": unknown object '" + t.text + "'");
    }
    return t.text;
  }

  std::size_t count() {
    Token t = take(Tok::number);
    if (t.text.size() > 4 || std::stoul(t.text) > kMaxArity) {
      throw ParseError("spider arity " + t.text + " exceeds " + std::to_string(kMaxArity),
                       t.span);
    }
    return std::stoul(t.text);
  }

  Term atom(std::size_t depth) {
    if (depth > kMaxDepth) throw ParseError("nesting too deep", tok_.span);
    if (tok_.kind == Tok::lparen) {
      take(Tok::lparen);
      if (tok_.kind == Tok::rparen) {
        take(Tok::rparen);
        return Term();
      }
      Term t = term(depth + 1);
      take(Tok::rparen);
      return t;
    }
    const Token head = take(Tok::ident);
    const std::string& w = head.text;
    if (w == "spider") {
      take(Tok::lbrack);
      std::string obj = object_name();
      take(Tok::rbrack);
      take(Tok::lparen);
      const std::size_t n = count();
      take(Tok::comma);
      const std::size_t m = count();
      const Token close = take(Tok::rparen);
      if (n == 0 && m == 0) {
        SourceSpan s = head.span;
        s.end = close.span.end;
        throw ParseError("spider(0,0) is not allowed; write () for the empty diagram", s);
      }
      return diagram::spider(obj, n, m);
    }
    if (w == "cup" || w == "cap" || w == "id") {
      take(Tok::lbrack);
      std::string obj = object_name();
      take(Tok::rbrack);
      if (w == "cup") return diagram::cup(obj);
      if (w == "cap") return diagram::cap(obj);
      return diagram::id(obj);
    }
    if (w == "swap") {
      take(Tok::lbrack);
      std::string a = object_name();
      take(Tok::comma);
      std::string b = object_name();
      take(Tok::rbrack);
      return diagram::swap(a, b);
    }
    if (auto flavor = diagram::parse_flavor(w)) {
      take(Tok::lparen);
      const Token label = take(Tok::ident);
      bool dagger = false;
      if (tok_.kind == Tok::comma) {
        take(Tok::comma);
        const Token d = take(Tok::ident);
        if (d.text != "dagger") throw ParseError("expected 'dagger', found '" + d.text + "'", d.span);
        dagger = true;
      }
      take(Tok::rparen);
      const diagram::BoxDecl* decl = sig_.find_box(label.text);
      const std::string where =
          std::to_string(label.span.line) + ":" + std::to_string(label.span.column) + ": ";
      if (!decl) throw NameError(where + "unknown box '" + label.text + "'");
      if (decl->flavor != *flavor) {
        throw TypeError(where + "box '" + label.text + "' is declared as " +
                        diagram::flavor_name(decl->flavor) + ", used as " + w);
      }
      return diagram::box(*decl, dagger);
    }
    throw ParseError("unknown generator '" + w + "'", head.span);
  }

  Lexer lex_;
  const diagram::Signature& sig_;
  Token tok_;
};

// Strips the header line; returns the remaining text and its first line number.
std::pair<std::string_view, std::size_t> strip_header(std::string_view src) {
  std::size_t eol = src.find('\n');
  std::string_view first = src.substr(0, eol == std::string_view::npos ? src.size() : eol);
  while (!first.empty() && std::isspace(static_cast<unsigned char>(first.back())))
    first.remove_suffix(1);
  if (first != kHeader) {
    SourceSpan s{1, 1, 0, first.size()};
    throw ParseError("missing version header '" + std::string(kHeader) + "'", s);
  }
  if (eol == std::string_view::npos) return {std::string_view{}, 2};
  return {src.substr(eol + 1), 2};
}

void serialize_into(const Term& t, std::string& out) {
  using K = Term::Kind;
  auto wrapped = [&](const Term& c, bool paren) {
    if (c.kind() == K::empty) {
      out += "()";
      return;
    }
    if (paren) out += '(';
    serialize_into(c, out);
    if (paren) out += ')';
  };
  switch (t.kind()) {
    case K::empty:
      out += "()";
      return;
    case K::gen: {
      const auto& g = t.generator();
      if (const auto* s = std::get_if<diagram::Spider>(&g)) {
        out += "spider[" + s->obj + "](" + std::to_string(s->in) + "," + std::to_string(s->out) + ")";
      } else if (const auto* c = std::get_if<diagram::Cup>(&g)) {
        out += "cup[" + c->obj + "]";
      } else if (const auto* c = std::get_if<diagram::Cap>(&g)) {
        out += "cap[" + c->obj + "]";
      } else if (const auto* s = std::get_if<diagram::Swap>(&g)) {
        out += "swap[" + s->first + "," + s->second + "]";
      } else if (const auto* i = std::get_if<diagram::Identity>(&g)) {
        out += "id[" + i->obj + "]";
      } else {
        const auto& b = std::get<diagram::Box>(g);
        out += std::string(diagram::flavor_name(b.flavor)) + "(" + b.label;
        if (b.dagger) out += ", dagger";
        out += ")";
      }
      return;
    }
    case K::seq:
      wrapped(t.first(), false);
      out += " ; ";
      wrapped(t.second(), t.second().kind() == K::seq);
      return;
    case K::par:
      wrapped(t.first(), t.first().kind() == K::seq);
      out += " * ";
      wrapped(t.second(), t.second().kind() != K::gen);
      return;
  }
}

}  // namespace

Term parse_term(std::string_view src, const diagram::Signature& sig) {
  Term t = Parser(src, sig, 1).parse();
  diagram::typecheck(t, sig);
  return t;
}

std::string serialize(const Term& t) {
  if (t.kind() == Term::Kind::empty) return "";
  std::string out;
  serialize_into(t, out);
  return out;
}

Term parse_term_file(std::string_view src, const diagram::Signature& sig) {
  auto [body, line] = strip_header(src);
  Term t = Parser(body, sig, line).parse();
  diagram::typecheck(t, sig);
  return t;
}

std::string serialize_term_file(const Term& t) {
  return std::string(kHeader) + "\n" + serialize(t) + "\n";
}

// ---- model files -------------------------------------------------------------

namespace {

using nlohmann::json;

[[noreturn]] void schema_error(const std::string& path, const std::string& what) {
  throw ParseError((path.empty() ? "/" : path) + ": " + what);
}

const json& member(const json& obj, const std::string& key, const std::string& path) {
  auto it = obj.find(key);
  if (it == obj.end()) schema_error(path, "missing key '" + key + "'");
  return *it;
}

std::string as_string(const json& j, const std::string& path) {
  if (!j.is_string()) schema_error(path, "expected a string");
  return j.get<std::string>();
}

diagram::ObjectList as_objects(const json& j, const std::string& path,
                               const diagram::Signature& sig) {
  if (!j.is_array()) schema_error(path, "expected an array of object names");
  diagram::ObjectList out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string name = as_string(j[i], path + "/" + std::to_string(i));
    if (!sig.find_object(name)) {
      throw NameError(path + "/" + std::to_string(i) + ": unknown object '" + name + "'");
    }
    out.push_back(name);
  }
  return out;
}

linalg::Complex as_scalar(const json& j, const std::string& path) {
  if (j.is_number()) return j.get<double>();
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
    return {j[0].get<double>(), j[1].get<double>()};
  }
  schema_error(path, "expected a number or [re, im]");
}

std::vector<linalg::Complex> as_data(const json& j, const std::string& path,
                                     std::size_t expected) {
  if (!j.is_array()) schema_error(path, "expected an array");
  if (j.size() != expected) {
    throw ShapeError(path + ": expected " + std::to_string(expected) + " entries, got " +
                     std::to_string(j.size()));
  }
  std::vector<linalg::Complex> out;
  out.reserve(expected);
  for (std::size_t i = 0; i < j.size(); ++i) {
    const auto z = as_scalar(j[i], path + "/" + std::to_string(i));
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw DomainError(path + "/" + std::to_string(i) + ": entry is not finite");
    }
    out.push_back(z);
  }
  return out;
}

std::size_t checked_product(const std::vector<std::size_t>& dims, const std::string& path) {
  std::size_t p = 1;
  for (auto d : dims) {
    if (p > (std::size_t{1} << 20) / d) schema_error(path, "tensor is too large");
    p *= d;
  }
  return p;
}

}  // namespace

const NamedTensor& ModelFile::tensor(std::string_view name) const {
  for (const auto& t : tensors)
    if (t.name == name) return t;
  throw NameError("unknown tensor '" + std::string(name) + "'");
}

ModelFile parse_model(std::string_view src, const linalg::Tol& defaults) {
  auto [body, first_line] = strip_header(src);
  json doc;
  try {
    doc = json::parse(body.begin(), body.end());
  } catch (const json::parse_error& e) {
    // Map the byte offset back to a line and column of the original text.
    const std::size_t off = std::min<std::size_t>(e.byte ? e.byte - 1 : 0, body.size());
    SourceSpan s{first_line, 1, off, off};
    for (std::size_t i = 0; i < off; ++i) {
      if (body[i] == '\n') {
        ++s.line;
        s.column = 1;
      } else {
        ++s.column;
      }
    }
    std::string msg = e.what();
    if (auto p = msg.find("syntax error"); p != std::string::npos) msg = msg.substr(p);
    throw ParseError(msg, s);
  }
  if (!doc.is_object()) schema_error("/", "expected a JSON object");

  ModelFile model;
  model.tol = defaults;

  const json& objects = member(doc, "objects", "");
  if (!objects.is_array() || objects.empty()) schema_error("/objects", "expected a non-empty array");
  bool any_quantum = false, any_classical = false;
  for (std::size_t i = 0; i < objects.size(); ++i) {
    const std::string p = "/objects/" + std::to_string(i);
    const json& o = objects[i];
    if (!o.is_object()) schema_error(p, "expected an object");
    diagram::Object obj;
    obj.name = as_string(member(o, "name", p), p + "/name");
    const std::string kind = as_string(member(o, "kind", p), p + "/kind");
    if (kind == "classical") {
      obj.kind = diagram::ObjectKind::classical;
      any_classical = true;
    } else if (kind == "quantum") {
      obj.kind = diagram::ObjectKind::quantum;
      any_quantum = true;
    } else {
      schema_error(p + "/kind", "expected \"classical\" or \"quantum\"");
    }
    const json& dim = member(o, "dim", p);
    if (!dim.is_number_unsigned() || dim.get<std::uint64_t>() < 1 ||
        dim.get<std::uint64_t>() > 4096) {
      schema_error(p + "/dim", "expected an integer between 1 and 4096");
    }
    obj.dim = dim.get<std::size_t>();
    model.signature.add_object(std::move(obj));
  }
  if (any_quantum && any_classical) {
    throw KindError("/objects: a model is either all classical or all quantum");
  }
  model.kind = any_quantum ? diagram::ObjectKind::quantum : diagram::ObjectKind::classical;
  const bool quantum = any_quantum;

  if (auto it = doc.find("options"); it != doc.end()) {
    if (!it->is_object()) schema_error("/options", "expected an object");
    for (const auto& [key, val] : it->items()) {
      if (!val.is_number() || !(val.get<double>() > 0)) {
        schema_error("/options/" + key, "expected a positive number");
      }
      if (key == "abs_eps") {
        model.tol.abs_eps = val.get<double>();
      } else if (key == "rel_eps") {
        model.tol.rel_eps = val.get<double>();
      } else if (key == "rank_eps") {
        model.tol.rank_eps = val.get<double>();
      } else {
        schema_error("/options/" + key, "unknown option");
      }
    }
  }

  const json& tensors = member(doc, "tensors", "");
  if (!tensors.is_array() || tensors.empty()) schema_error("/tensors", "expected a non-empty array");
  for (std::size_t i = 0; i < tensors.size(); ++i) {
    const std::string p = "/tensors/" + std::to_string(i);
    const json& t = tensors[i];
    if (!t.is_object()) schema_error(p, "expected an object");
    NamedTensor nt;
    nt.name = as_string(member(t, "name", p), p + "/name");
    nt.cod = as_objects(member(t, "objects", p), p + "/objects", model.signature);
    const std::size_t n = checked_product(model.signature.dims(nt.cod), p);
    if (quantum) {
      if (n > 1024) schema_error(p, "tensor is too large");
      nt.value = linalg::Mat(n, n, as_data(member(t, "data", p), p + "/data", n * n));
      if (!linalg::is_hermitian(nt.value, model.tol)) {
        throw DomainError(p + "/data: density operator is not Hermitian");
      }
      const double lmin = linalg::min_eigenvalue(nt.value, model.tol);
      const double largest = linalg::max_abs(nt.value);
      if (lmin < -(model.tol.abs_eps + model.tol.cutoff(largest))) {
        throw DomainError(p + "/data: density operator is not positive semidefinite "
                          "(eigenvalue " + std::to_string(lmin) + ")");
      }
    } else {
      nt.value = linalg::Mat(n, 1, as_data(member(t, "data", p), p + "/data", n));
      for (std::size_t k = 0; k < n; ++k) {
        const auto z = nt.value(k, 0);
        if (z.imag() != 0 || z.real() < 0) {
          throw DomainError(p + "/data/" + std::to_string(k) +
                            ": classical entries must be nonnegative reals");
        }
      }
    }
    model.signature.add_box({nt.name, {}, nt.cod, diagram::Flavor::state});
    model.tensors.push_back(std::move(nt));
  }

  if (auto it = doc.find("processes"); it != doc.end()) {
    if (!it->is_array()) schema_error("/processes", "expected an array");
    for (std::size_t i = 0; i < it->size(); ++i) {
      const std::string p = "/processes/" + std::to_string(i);
      const json& t = (*it)[i];
      if (!t.is_object()) schema_error(p, "expected an object");
      NamedTensor nt;
      nt.name = as_string(member(t, "name", p), p + "/name");
      nt.dom = as_objects(member(t, "dom", p), p + "/dom", model.signature);
      nt.cod = as_objects(member(t, "cod", p), p + "/cod", model.signature);
      nt.flavor = diagram::Flavor::process;
      if (auto f = t.find("flavor"); f != t.end()) {
        auto parsed = diagram::parse_flavor(as_string(*f, p + "/flavor"));
        if (!parsed) schema_error(p + "/flavor", "unknown flavor");
        nt.flavor = *parsed;
      }
      std::size_t rows = checked_product(model.signature.dims(nt.cod), p);
      std::size_t cols = checked_product(model.signature.dims(nt.dom), p);
      if (quantum) {
        rows *= rows;
        cols *= cols;
      }
      if (rows * cols > (std::size_t{1} << 22)) schema_error(p, "process is too large");
      nt.value = linalg::Mat(rows, cols, as_data(member(t, "data", p), p + "/data", rows * cols));
      model.signature.add_box({nt.name, nt.dom, nt.cod, nt.flavor});
      model.tensors.push_back(std::move(nt));
    }
  }

  if (auto it = doc.find("joint"); it != doc.end()) {
    model.joint = as_string(*it, "/joint");
    const NamedTensor& j = model.tensor(model.joint);
    if (!j.dom.empty()) schema_error("/joint", "the joint must be a state");
  } else {
    model.joint = model.tensors.front().name;
  }
  return model;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace frobayes::dsl
