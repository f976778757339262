// Copyright 2026 The Polysum Authors.
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


#include "polysum/gate.h"

#include <algorithm>
#include <cctype>
#include <utility>

#include "polysum/error.h"

namespace polysum {

std::string_view MleRoleName(MleRole role) {
  switch (role) {
    case MleRole::kSelector: return "selector";
    case MleRole::kWitness: return "witness";
    case MleRole::kPermutationAux: return "permutation-aux";
    case MleRole::kEq: return "eq";
    case MleRole::kTemp: return "temp";
  }
  return "witness";
}

std::size_t CompositePoly::degree() const {
  std::size_t d = 0;
  for (const Term& t : terms) d = std::max(d, t.degree());
  return d;
}

std::vector<std::size_t> CompositePoly::used_inputs() const {
  std::vector<bool> used(inputs.size(), false);
  for (const Term& t : terms) {
    for (std::size_t f : t.factors) used[f] = true;
  }
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < used.size(); ++i) {
    if (used[i]) out.push_back(i);
  }
  return out;
}

std::size_t CompositePoly::distinct_mles() const {
  return used_inputs().size();
}

std::optional<std::size_t> CompositePoly::input_index(
    std::string_view id) const {
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    if (inputs[i].id == id) return i;
  }
  return std::nullopt;
}

std::optional<std::size_t> CompositePoly::challenge_index(
    std::string_view id) const {
  for (std::size_t i = 0; i < challenges.size(); ++i) {
    if (challenges[i] == id) return i;
  }
  return std::nullopt;
}

bool CompositePoly::has_role(MleRole role) const {
  return std::any_of(inputs.begin(), inputs.end(),
                     [&](const MleRef& r) { return r.role == role; });
}

namespace {

// ---------------------------------------------------------------- lexer

enum class TokKind { kIdent, kInt, kSym, kEnd };

struct Token {
  TokKind kind = TokKind::kEnd;
  std::string text;
  std::size_t line = 1;
  std::size_t column = 1;
};

std::vector<Token> Lex(std::string_view text) {
  std::vector<Token> out;
  std::size_t line = 1, col = 1, i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < text.size()) {
    const char c = text[i];
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') advance(1);
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    Token tok;
    tok.line = line;
    tok.column = col;
    std::size_t j = i;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (j < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[j])) ||
              text[j] == '_')) {
        ++j;
      }
      tok.kind = TokKind::kIdent;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) {
        ++j;
      }
      tok.kind = TokKind::kInt;
    } else if (std::string_view("(){}:,=+-*^").find(c) != std::string_view::npos) {
      j = i + 1;
      tok.kind = TokKind::kSym;
    } else {
      throw Error(ErrorCode::kParseError,
                  std::string("unexpected character '") + c + "'", line, col);
    }
    tok.text = std::string(text.substr(i, j - i));
    out.push_back(std::move(tok));
    advance(j - i);
  }
  Token end;
  end.line = line;
  end.column = col;
  out.push_back(end);
  return out;
}

// ------------------------------------------------------- polynomial algebra

struct Monomial {
  Fr coeff;
  std::vector<std::size_t> challenges;
  std::vector<std::size_t> factors;
};

using Poly = std::vector<Monomial>;

// Merges like monomials keeping first-appearance order, drops zeros.
Poly Combine(const Poly& in) {
  Poly out;
  std::map<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>,
           std::size_t>
      where;
  for (const Monomial& m : in) {
    auto key = std::make_pair(m.challenges, m.factors);
    auto it = where.find(key);
    if (it == where.end()) {
      where.emplace(std::move(key), out.size());
      out.push_back(m);
    } else {
      out[it->second].coeff += m.coeff;
    }
  }
  std::erase_if(out, [](const Monomial& m) { return m.coeff.is_zero(); });
  return out;
}

Poly Add(Poly a, const Poly& b, bool negate) {
  for (Monomial m : b) {
    if (negate) m.coeff = -m.coeff;
    a.push_back(std::move(m));
  }
  return Combine(a);
}

Poly Mul(const Poly& a, const Poly& b) {
  Poly out;
  out.reserve(a.size() * b.size());
  for (const Monomial& x : a) {
    for (const Monomial& y : b) {
      Monomial m;
      m.coeff = x.coeff * y.coeff;
      m.challenges = x.challenges;
      m.challenges.insert(m.challenges.end(), y.challenges.begin(),
                          y.challenges.end());
      std::sort(m.challenges.begin(), m.challenges.end());
      m.factors = x.factors;
      m.factors.insert(m.factors.end(), y.factors.begin(), y.factors.end());
      std::sort(m.factors.begin(), m.factors.end());
      out.push_back(std::move(m));
    }
  }
  return Combine(out);
}

Poly Constant(const Fr& c) {
  if (c.is_zero()) return {};
  return {Monomial{c, {}, {}}};
}

// ---------------------------------------------------------------- parser

constexpr std::size_t kMaxExponent = 64;

class Parser {
 public:
  explicit Parser(std::string_view text) : toks_(Lex(text)) {}

  bool at_end() const { return peek().kind == TokKind::kEnd; }

  CompositePoly ParseOne() {
    const Token& first = peek();
    if (first.kind != TokKind::kIdent) Fail(first, "expected 'gate' or NAME");
    if (first.text == "gate" && peek(1).kind == TokKind::kIdent) {
      return ParseBlock();
    }
    return ParseShorthand();
  }

 private:
  CompositePoly ParseBlock() {
    Next();  // gate
    CompositePoly p;
    p.name = ExpectIdent("gate name").text;
    ExpectSym("(");
    const Token& kw = Next();
    if (kw.kind != TokKind::kIdent || kw.text != "inputs") {
      Fail(kw, "expected 'inputs'");
    }
    ExpectSym(":");
    for (;;) {
      const Token& id = ExpectIdent("input id");
      ExpectSym(":");
      const Token& role_tok = ExpectIdent("role");
      std::string role = role_tok.text;
      while (IsSym("-") && peek(1).kind == TokKind::kIdent) {
        Next();
        role += "-" + Next().text;
      }
      Declare(p, id, role, role_tok);
      if (IsSym(",")) {
        Next();
        continue;
      }
      break;
    }
    ExpectSym(")");
    ExpectSym("{");
    poly_ = &p;
    auto_declare_ = false;
    Poly body = ParseSum();
    ExpectSym("}");
    Finish(p, body);
    return p;
  }

  CompositePoly ParseShorthand() {
    CompositePoly p;
    p.name = ExpectIdent("gate name").text;
    ExpectSym("=");
    poly_ = &p;
    auto_declare_ = true;
    Poly body = ParseSum();
    if (!at_end() && !(peek().kind == TokKind::kIdent && peek().text == "gate" &&
                       peek(1).kind == TokKind::kIdent)) {
      // A following shorthand starts with NAME '='.
      if (!(peek().kind == TokKind::kIdent && peek(1).text == "=")) {
        Fail(peek(), "unexpected token '" + peek().text + "'");
      }
    }
    Finish(p, body);
    return p;
  }

  void Declare(CompositePoly& p, const Token& id, const std::string& role,
               const Token& role_tok) {
    if (p.input_index(id.text) || p.challenge_index(id.text)) {
      throw Error(ErrorCode::kDuplicateInput,
                  "input '" + id.text + "' declared twice", id.line, id.column);
    }
    if (role == "challenge") {
      p.challenges.push_back(id.text);
      return;
    }
    static const std::pair<const char*, MleRole> kRoles[] = {
        {"selector", MleRole::kSelector},
        {"witness", MleRole::kWitness},
        {"permutation-aux", MleRole::kPermutationAux},
        {"eq", MleRole::kEq},
        {"temp", MleRole::kTemp},
    };
    for (const auto& [name, r] : kRoles) {
      if (role == name) {
        p.inputs.push_back({id.text, r});
        return;
      }
    }
    Fail(role_tok, "unknown role '" + role + "'");
  }

  void Finish(CompositePoly& p, const Poly& body) {
    for (const Monomial& m : body) {
      p.terms.push_back(Term{m.coeff, m.challenges, m.factors});
    }
  }

  Poly ParseSum() {
    Poly acc;
    bool negate = false;
    if (IsSym("+") || IsSym("-")) negate = Next().text == "-";
    acc = Add({}, ParseProduct(), negate);
    while (IsSym("+") || IsSym("-")) {
      negate = Next().text == "-";
      acc = Add(std::move(acc), ParseProduct(), negate);
    }
    return acc;
  }

  Poly ParseProduct() {
    Poly acc = ParsePower();
    while (IsSym("*")) {
      Next();
      acc = Mul(acc, ParsePower());
    }
    return acc;
  }

  Poly ParsePower() {
    if (IsSym("-")) {
      Next();
      return Mul(Constant(-Fr::one()), ParsePower());
    }
    Poly base = ParseAtom();
    if (!IsSym("^")) return base;
    Next();
    const Token& e = Next();
    if (e.kind != TokKind::kInt || e.text.size() > 3 ||
        std::stoul(e.text) > kMaxExponent) {
      Fail(e, "exponent must be an integer in [0, 64]");
    }
    Poly out = Constant(Fr::one());
    for (unsigned long k = std::stoul(e.text); k > 0; --k) out = Mul(out, base);
    return out;
  }

  Poly ParseAtom() {
    const Token& t = Next();
    if (t.kind == TokKind::kInt) return Constant(Fr::from_decimal(t.text));
    if (t.kind == TokKind::kSym && t.text == "(") {
      Poly inner = ParseSum();
      ExpectSym(")");
      return inner;
    }
    if (t.kind != TokKind::kIdent) Fail(t, "expected term, got '" + t.text + "'");
    if (auto ci = poly_->challenge_index(t.text)) {
      return {Monomial{Fr::one(), {*ci}, {}}};
    }
    auto ii = poly_->input_index(t.text);
    if (!ii) {
      if (!auto_declare_) {
        throw Error(ErrorCode::kUnknownSymbol,
                    "undeclared identifier '" + t.text + "'", t.line, t.column);
      }
      poly_->inputs.push_back({t.text, MleRole::kWitness});
      ii = poly_->inputs.size() - 1;
    }
    return {Monomial{Fr::one(), {}, {*ii}}};
  }

  const Token& peek(std::size_t ahead = 0) const {
    return toks_[std::min(pos_ + ahead, toks_.size() - 1)];
  }
  const Token& Next() {
    const Token& t = peek();
    if (pos_ < toks_.size() - 1) ++pos_;
    return t;
  }
  bool IsSym(std::string_view s) const {
    return peek().kind == TokKind::kSym && peek().text == s;
  }
  void ExpectSym(std::string_view s) {
    const Token& t = Next();
    if (t.kind != TokKind::kSym || t.text != s) {
      Fail(t, "expected '" + std::string(s) + "'" +
                  (t.kind == TokKind::kEnd ? " before end of input"
                                           : ", got '" + t.text + "'"));
    }
  }
  const Token& ExpectIdent(std::string_view what) {
    const Token& t = Next();
    if (t.kind != TokKind::kIdent) Fail(t, "expected " + std::string(what));
    return t;
  }
  [[noreturn]] static void Fail(const Token& t, const std::string& msg) {
    throw Error(ErrorCode::kParseError, msg, t.line, t.column);
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  CompositePoly* poly_ = nullptr;
  bool auto_declare_ = false;
};

// ---------------------------------------------------------------- printer

bool AboveHalf(const Fr& c) {
  static const Fr::Limbs kHalf = [] {
    Fr::Limbs h = Fr::kModulus;
    for (int i = 0; i < 4; ++i) {
      h[i] = (h[i] >> 1) | (i < 3 ? h[i + 1] << 63 : 0);
    }
    return h;
  }();
  const Fr::Limbs v = c.to_canonical();
  for (int i = 3; i >= 0; --i) {
    if (v[i] != kHalf[i]) return v[i] > kHalf[i];
  }
  return false;
}

}  // namespace

CompositePoly parse_gate(std::string_view text) {
  Parser parser(text);
  CompositePoly p = parser.ParseOne();
  if (!parser.at_end()) {
    throw Error(ErrorCode::kParseError,
                "trailing input after gate '" + p.name + "'");
  }
  return p;
}

std::vector<CompositePoly> parse_gates(std::string_view text) {
  Parser parser(text);
  std::vector<CompositePoly> out;
  while (!parser.at_end()) out.push_back(parser.ParseOne());
  return out;
}

std::string print_expr(const CompositePoly& p) {
  if (p.terms.empty()) return "0";
  std::string out;
  for (std::size_t ti = 0; ti < p.terms.size(); ++ti) {
    const Term& t = p.terms[ti];
    Fr mag = t.coeff;
    bool negative = false;
    if (AboveHalf(mag)) {
      negative = true;
      mag = -mag;
    }
    if (ti == 0) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    std::vector<std::string> parts;
    if (!(mag == Fr::one()) || (t.factors.empty() && t.challenges.empty())) {
      parts.push_back(mag.to_decimal());
    }
    auto emit_powers = [&](const std::vector<std::size_t>& idx, auto name_of) {
      for (std::size_t i = 0; i < idx.size();) {
        std::size_t j = i;
        while (j < idx.size() && idx[j] == idx[i]) ++j;
        std::string s = name_of(idx[i]);
        if (j - i > 1) s += "^" + std::to_string(j - i);
        parts.push_back(std::move(s));
        i = j;
      }
    };
    emit_powers(t.challenges, [&](std::size_t i) { return p.challenges[i]; });
    emit_powers(t.factors, [&](std::size_t i) { return p.inputs[i].id; });
    for (std::size_t k = 0; k < parts.size(); ++k) {
      if (k > 0) out += " * ";
      out += parts[k];
    }
  }
  return out;
}

std::string print_gate(const CompositePoly& p) {
  std::string out = "gate " + p.name + " (inputs: ";
  bool first = true;
  for (const MleRef& r : p.inputs) {
    if (!first) out += ", ";
    first = false;
    out += r.id + ":" + std::string(MleRoleName(r.role));
  }
  for (const std::string& c : p.challenges) {
    if (!first) out += ", ";
    first = false;
    out += c + ":challenge";
  }
  out += ") {\n  " + print_expr(p) + "\n}\n";
  return out;
}

Fr term_scalar(const CompositePoly& p, const Term& t, const Scalars& scalars) {
  Fr s = t.coeff;
  for (std::size_t ci : t.challenges) {
    auto it = scalars.find(p.challenges[ci]);
    if (it == scalars.end()) {
      throw Error(ErrorCode::kMissingBinding,
                  "no value for challenge '" + p.challenges[ci] + "'");
    }
    s *= it->second;
  }
  return s;
}

Fr evaluate_composite(const CompositePoly& p, const Binding& binding,
                      const Scalars& scalars, std::size_t index) {
  std::vector<const Mle*> tables(p.inputs.size(), nullptr);
  std::optional<std::size_t> num_vars;
  for (std::size_t i : p.used_inputs()) {
    auto it = binding.find(p.inputs[i].id);
    if (it == binding.end()) {
      throw Error(ErrorCode::kMissingBinding,
                  "no table bound for '" + p.inputs[i].id + "'");
    }
    if (num_vars && *num_vars != it->second.num_vars()) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "table '" + p.inputs[i].id + "' has a different num_vars");
    }
    num_vars = it->second.num_vars();
    tables[i] = &it->second;
  }
  if (num_vars && index >= (std::size_t{1} << *num_vars)) {
    throw Error(ErrorCode::kDimensionMismatch, "index outside the hypercube");
  }
  Fr total;
  for (const Term& t : p.terms) {
    Fr v = term_scalar(p, t, scalars);
    for (std::size_t f : t.factors) v *= (*tables[f])[index];
    total += v;
  }
  return total;
}

CompositePoly multiply_by_eq(const CompositePoly& p, const std::string& eq_id) {
  if (p.input_index(eq_id) || p.challenge_index(eq_id)) {
    throw Error(ErrorCode::kDuplicateInput,
                "'" + eq_id + "' is already an input of " + p.name);
  }
  CompositePoly out = p;
  out.inputs.push_back({eq_id, MleRole::kEq});
  const std::size_t idx = out.inputs.size() - 1;
  for (Term& t : out.terms) t.factors.push_back(idx);
  return out;
}

}  // namespace polysum
