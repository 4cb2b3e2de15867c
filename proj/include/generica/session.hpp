/*
   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef GENERICA_SESSION_HPP
#define GENERICA_SESSION_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "perturb.hpp"

namespace generica {

struct ParseError : engine_error {
  int line, col;
  ParseError(const std::string& msg, int l, int c)
      : engine_error(msg + " at " + std::to_string(l) + ":" + std::to_string(c)),
        line(l),
        col(c) {}
};

namespace lex {

struct Token {
  enum class Kind { Ident, Int, Sym, Opt, End };
  Kind kind = Kind::End;
  std::string text;
  long long value = 0;  // Int
  int line = 1, col = 1;
};

inline std::vector<Token> tokenize(const std::string& src) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto push = [&](Token::Kind k, std::string text, long long v, int l, int c) {
    out.push_back(Token{k, std::move(text), v, l, c});
  };
  while (i < src.size()) {
    char ch = src[i];
    if (ch == '\n') {
      ++line;
      col = 1;
      ++i;
      continue;
    }
    if (ch == ' ' || ch == '\t' || ch == '\r') {
      ++col;
      ++i;
      continue;
    }
    if (ch == '#') {  // comment to end of line
      while (i < src.size() && src[i] != '\n') ++i;
      continue;
    }
    int tl = line, tc = col;
    if (ch == '-' && i + 1 < src.size() && src[i + 1] == '-') {
      std::size_t j = i + 2;
      std::string name;
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_'))
        name.push_back(src[j++]);
      if (name.empty()) throw ParseError("expected option name after '--'", tl, tc);
      col += static_cast<int>(j - i);
      i = j;
      push(Token::Kind::Opt, name, 0, tl, tc);
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      std::size_t j = i;
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_'))
        ++j;
      std::string name = src.substr(i, j - i);
      col += static_cast<int>(j - i);
      i = j;
      push(Token::Kind::Ident, name, 0, tl, tc);
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      std::string digits = src.substr(i, j - i);
      col += static_cast<int>(j - i);
      i = j;
      push(Token::Kind::Int, digits, std::stoll(digits), tl, tc);
      continue;
    }
    static const std::string syms = "()[]{},;=^*+-/";
    if (syms.find(ch) != std::string::npos) {
      push(Token::Kind::Sym, std::string(1, ch), 0, tl, tc);
      ++col;
      ++i;
      continue;
    }
    throw ParseError(std::string("unexpected character '") + ch + "'", tl, tc);
  }
  out.push_back(Token{Token::Kind::End, "", 0, line, col});
  return out;
}

}  // namespace lex

struct Command {
  std::string name;
  std::vector<std::string> args;              // positional (idents / ints)
  std::map<std::string, std::string> opts;    // --key value
  int line = 1, col = 1;

  bool has(const std::string& k) const { return opts.count(k) > 0; }
  std::string opt(const std::string& k, const std::string& def = "") const {
    auto it = opts.find(k);
    return it == opts.end() ? def : it->second;
  }
  long long opt_int(const std::string& k, long long def) const {
    auto it = opts.find(k);
    return it == opts.end() ? def : std::stoll(it->second);
  }
};

/// Parsed session: one ring, named objects, command list. Names are unique
/// across kinds and all references resolve at parse time.
struct Session {
  std::optional<RingCtx> ring;
  std::vector<Polynomial> ring_mod_gens;  // echo of the "mod" clause
  std::map<std::string, Ideal> ideals;
  std::map<std::string, std::vector<Polynomial>> tuples;
  std::map<std::string, PolyMatrix> matrices;
  std::map<std::string, PerturbSpace> spaces;
  std::vector<std::string> decl_order;  // "kind name" per declaration
  std::vector<Command> commands;

  bool name_taken(const std::string& n) const {
    return ideals.count(n) || tuples.count(n) || matrices.count(n) || spaces.count(n);
  }
};

namespace detail {

class SessionParser {
 public:
  explicit SessionParser(const std::string& src) : toks_(lex::tokenize(src)) {}

  Session parse() {
    Session s;
    while (!at_end()) parse_stmt(s);
    return s;
  }

 private:
  using Token = lex::Token;

  const Token& cur() const { return toks_[pos_]; }
  bool at_end() const { return cur().kind == Token::Kind::End; }
  const Token& advance() { return toks_[pos_++]; }

  [[noreturn]] void fail(const std::string& expected) const {
    std::string got = at_end() ? "end of input" : "'" + cur().text + "'";
    throw ParseError("expected " + expected + ", got " + got, cur().line, cur().col);
  }

  bool is_sym(const char* s) const {
    return cur().kind == Token::Kind::Sym && cur().text == s;
  }
  void expect_sym(const char* s) {
    if (!is_sym(s)) fail(std::string("'") + s + "'");
    advance();
  }
  std::string expect_ident(const char* what) {
    if (cur().kind != Token::Kind::Ident) fail(what);
    return advance().text;
  }
  long long expect_int(const char* what) {
    if (cur().kind != Token::Kind::Int) fail(what);
    return advance().value;
  }

  static const std::vector<std::string>& command_names() {
    static const std::vector<std::string> names = {
        "gb",      "nf",  "dim", "height", "grade",   "regseq",   "koszul",
        "detideal", "profile", "en", "tor", "ext", "perturb", "stability"};
    return names;
  }

  void parse_stmt(Session& s) {
    if (cur().kind != Token::Kind::Ident) fail("statement keyword");
    std::string kw = cur().text;
    if (kw == "ring") {
      parse_ring(s);
    } else if (kw == "ideal" || kw == "tuple") {
      parse_polylist_decl(s, kw);
    } else if (kw == "matrix") {
      parse_matrix(s);
    } else if (kw == "space") {
      parse_space(s);
    } else {
      bool known = false;
      for (const auto& n : command_names())
        if (n == kw) known = true;
      if (!known) fail("statement keyword ('ring', a declaration, or a command)");
      parse_command(s);
    }
  }

  const RingCtx& need_ring(const Session& s, int line, int col) const {
    if (!s.ring) throw ParseError("ring not declared", line, col);
    return *s.ring;
  }

  void parse_ring(Session& s) {
    const Token& kwTok = advance();
    if (s.ring) throw ParseError("ring already declared", kwTok.line, kwTok.col);
    FieldDesc field;
    std::string fname = expect_ident("field ('GF' or 'QQ')");
    if (fname == "GF") {
      expect_sym("(");
      long long p = expect_int("prime");
      expect_sym(")");
      field = gf(static_cast<std::uint64_t>(p));
    } else if (fname == "QQ") {
      field = rationals();
    } else {
      throw ParseError("expected field 'GF(p)' or 'QQ'", kwTok.line, kwTok.col);
    }
    expect_sym("[");
    std::vector<std::string> vars;
    vars.push_back(expect_ident("variable name"));
    while (is_sym(",")) {
      advance();
      vars.push_back(expect_ident("variable name"));
    }
    expect_sym("]");
    MonomialOrder ord = MonomialOrder::grevlex();
    std::vector<Polynomial> modgens;
    while (!is_sym(";")) {
      std::string kw = expect_ident("'order', 'mod' or ';'");
      if (kw == "order") {
        std::string o = expect_ident("order name");
        if (o == "grevlex")
          ord = MonomialOrder::grevlex();
        else if (o == "lex")
          ord = MonomialOrder::lex();
        else
          fail("'grevlex' or 'lex'");
      } else if (kw == "mod") {
        RingCtx tmp = RingCtx::polynomial(field, vars, ord);
        modgens.push_back(parse_poly(tmp));
        while (is_sym(",")) {
          advance();
          modgens.push_back(parse_poly(tmp));
        }
      } else {
        fail("'order', 'mod' or ';'");
      }
    }
    expect_sym(";");
    RingCtx R = RingCtx::polynomial(field, vars, ord);
    if (!modgens.empty()) R = make_quotient(R, modgens);
    s.ring = R;
    s.ring_mod_gens = modgens;
    s.decl_order.push_back("ring");
  }

  void declare_name(Session& s, const std::string& name, int line, int col) {
    if (s.name_taken(name)) throw ParseError("name '" + name + "' already declared", line, col);
  }

  void parse_polylist_decl(Session& s, const std::string& kind) {
    const Token& kw = advance();
    const RingCtx& R = need_ring(s, kw.line, kw.col);
    std::string name = expect_ident("name");
    declare_name(s, name, kw.line, kw.col);
    expect_sym("=");
    std::vector<Polynomial> polys;
    polys.push_back(parse_poly(R));
    while (is_sym(",")) {
      advance();
      polys.push_back(parse_poly(R));
    }
    expect_sym(";");
    if (kind == "ideal")
      s.ideals.emplace(name, Ideal(R, polys));
    else
      s.tuples.emplace(name, polys);
    s.decl_order.push_back(kind + " " + name);
  }

  void parse_matrix(Session& s) {
    const Token& kw = advance();
    const RingCtx& R = need_ring(s, kw.line, kw.col);
    std::string name = expect_ident("name");
    declare_name(s, name, kw.line, kw.col);
    long long rows = expect_int("row count");
    long long cols = expect_int("column count");
    expect_sym("=");
    expect_sym("[");
    PolyMatrix m(static_cast<int>(rows), static_cast<int>(cols));
    for (int i = 0; i < m.rows; ++i) {
      for (int j = 0; j < m.cols; ++j) {
        m.at(i, j) = parse_poly(R);
        if (j + 1 < m.cols) expect_sym(",");
      }
      if (i + 1 < m.rows) expect_sym(";");
    }
    expect_sym("]");
    expect_sym(";");
    s.matrices.emplace(name, std::move(m));
    s.decl_order.push_back("matrix " + name);
  }

  void parse_space(Session& s) {
    const Token& kw = advance();
    const RingCtx& R = need_ring(s, kw.line, kw.col);
    std::string name = expect_ident("name");
    declare_name(s, name, kw.line, kw.col);
    expect_sym("=");
    std::string sum = expect_ident("'sum'");
    if (sum != "sum") fail("'sum'");
    expect_sym("(");
    std::vector<Ideal> comps;
    auto component = [&] {
      std::string iname = expect_ident("ideal name");
      auto it = s.ideals.find(iname);
      if (it == s.ideals.end())
        throw ParseError("unknown ideal '" + iname + "'", kw.line, kw.col);
      comps.push_back(it->second);
    };
    component();
    while (is_sym(",")) {
      advance();
      component();
    }
    expect_sym(")");
    std::string okw = expect_ident("'order'");
    if (okw != "order") fail("'order'");
    long long q = expect_int("order");
    expect_sym(";");
    s.spaces.emplace(name, PerturbSpace(R, comps, static_cast<int>(q)));
    s.decl_order.push_back("space " + name);
  }

  void parse_command(Session& s) {
    Command c;
    const Token& kw = cur();
    c.name = advance().text;
    c.line = kw.line;
    c.col = kw.col;
    while (!is_sym(";")) {
      if (cur().kind == Token::Kind::Opt) {
        std::string key = advance().text;
        std::string val = parse_opt_value();
        c.opts[key] = val;
      } else if (cur().kind == Token::Kind::Ident || cur().kind == Token::Kind::Int) {
        c.args.push_back(advance().text);
      } else {
        fail("argument, option or ';'");
      }
    }
    expect_sym(";");
    s.commands.push_back(std::move(c));
  }

  std::string parse_opt_value() {
    if (cur().kind != Token::Kind::Ident && cur().kind != Token::Kind::Int)
      fail("option value");
    std::string v = advance().text;
    while (is_sym(",")) {  // comma lists: --cols 0,2
      advance();
      if (cur().kind != Token::Kind::Ident && cur().kind != Token::Kind::Int)
        fail("option value after ','");
      v += "," + advance().text;
    }
    return v;
  }

  // ---- polynomial expressions -------------------------------------------
  Polynomial parse_poly(const RingCtx& R) {
    Polynomial acc = parse_poly_term(R);
    while (is_sym("+") || is_sym("-")) {
      bool minus = cur().text == "-";
      advance();
      Polynomial t = parse_poly_term(R);
      acc = minus ? poly_sub(acc, t, R.order) : poly_add(acc, t, R.order);
    }
    return ring_nf(R, acc);
  }

  Polynomial parse_poly_term(const RingCtx& R) {
    bool neg = false;
    while (is_sym("-") || is_sym("+")) {
      if (cur().text == "-") neg = !neg;
      advance();
    }
    Polynomial acc = parse_poly_factor(R);
    while (is_sym("*")) {
      advance();
      acc = poly_mul_raw(acc, parse_poly_factor(R), R.order);
    }
    return neg ? poly_neg(acc) : acc;
  }

  Polynomial parse_poly_factor(const RingCtx& R) {
    Polynomial base = parse_poly_atom(R);
    if (is_sym("^")) {
      advance();
      long long e = expect_int("exponent");
      if (e < 0) fail("non-negative exponent");
      Polynomial r = R.constant(1);
      for (long long i = 0; i < e; ++i) r = poly_mul_raw(r, base, R.order);
      return r;
    }
    return base;
  }

  Polynomial parse_poly_atom(const RingCtx& R) {
    if (cur().kind == Token::Kind::Ident) {
      const Token& t = advance();
      int idx = R.var_index(t.text);
      if (idx < 0) throw ParseError("unknown variable '" + t.text + "'", t.line, t.col);
      return R.var(static_cast<std::size_t>(idx));
    }
    if (cur().kind == Token::Kind::Int) {
      long long n = advance().value;
      if (is_sym("/") && R.field.kind == FieldKind::Rational) {
        advance();
        long long d = expect_int("denominator");
        Polynomial one(poly_const(R.field, 1, R.nvars()));
        return poly_scale(one, Scalar::make_rational(n, d));
      }
      return R.constant(n);
    }
    if (is_sym("(")) {
      advance();
      Polynomial p = parse_poly(R);
      expect_sym(")");
      return p;
    }
    fail("polynomial");
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline Session parse_session(const std::string& text) {
  detail::SessionParser p(text);
  return p.parse();
}

// ---------------------------------------------------------------------------
// Pretty printing (round-trips through the parser)
// ---------------------------------------------------------------------------

inline std::string print_command(const Command& c) {
  std::string out = c.name;
  for (const auto& a : c.args) out += " " + a;
  for (const auto& [k, v] : c.opts) out += " --" + k + " " + v;
  out += ";";
  return out;
}

inline std::string print_session(const Session& s) {
  std::string out;
  if (s.ring) {
    const RingCtx& R = *s.ring;
    out += "ring ";
    out += R.field.kind == FieldKind::Fp ? "GF(" + std::to_string(R.field.p) + ")" : "QQ";
    out += "[";
    for (std::size_t i = 0; i < R.vars.size(); ++i) out += (i ? "," : "") + R.vars[i];
    out += "]";
    out += R.order.kind == MonomialOrder::Kind::Lex ? " order lex" : " order grevlex";
    if (!s.ring_mod_gens.empty()) {
      out += " mod ";
      for (std::size_t i = 0; i < s.ring_mod_gens.size(); ++i)
        out += (i ? ", " : "") + poly_str(R.free_ring(), s.ring_mod_gens[i]);
    }
    out += ";\n";
  }
  for (const auto& d : s.decl_order) {
    auto sp = d.find(' ');
    if (sp == std::string::npos) continue;  // the ring line, already printed
    std::string kind = d.substr(0, sp), name = d.substr(sp + 1);
    if (kind == "ideal") {
      const Ideal& I = s.ideals.at(name);
      out += "ideal " + name + " = ";
      if (I.gens().empty()) out += "0";
      for (std::size_t i = 0; i < I.gens().size(); ++i)
        out += (i ? ", " : "") + poly_str(I.ctx(), I.gens()[i]);
      out += ";\n";
    } else if (kind == "tuple") {
      const auto& t = s.tuples.at(name);
      out += "tuple " + name + " = ";
      for (std::size_t i = 0; i < t.size(); ++i) out += (i ? ", " : "") + poly_str(*s.ring, t[i]);
      out += ";\n";
    } else if (kind == "matrix") {
      const PolyMatrix& m = s.matrices.at(name);
      out += "matrix " + name + " " + std::to_string(m.rows) + " " + std::to_string(m.cols) +
             " = [";
      for (int i = 0; i < m.rows; ++i) {
        if (i) out += "; ";
        for (int j = 0; j < m.cols; ++j) {
          if (j) out += ", ";
          out += poly_str(*s.ring, m.at(i, j));
        }
      }
      out += "];\n";
    } else if (kind == "space") {
      const PerturbSpace& sp2 = s.spaces.at(name);
      out += "space " + name + " = sum(";
      // component ideals are printed by matching against declared names
      for (std::size_t i = 0; i < sp2.components().size(); ++i) {
        if (i) out += ",";
        std::string found = "?";
        for (const auto& [iname, ideal] : s.ideals)
          if (ideal.gens() == sp2.components()[i].gens()) {
            found = iname;
            break;
          }
        out += found;
      }
      out += ") order " + std::to_string(sp2.min_order()) + ";\n";
    }
  }
  for (const auto& c : s.commands) out += print_command(c) + "\n";
  return out;
}

}  // namespace generica

#endif  // GENERICA_SESSION_HPP
