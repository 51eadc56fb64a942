#include "diffelim/parser.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "diffelim/errors.hpp"

namespace diffelim {

namespace {

enum class Tok { Ident, Int, Punct, End };

struct Token {
  Tok kind;
  std::string text;
  int line, col;
};

std::vector<Token> lex(const std::string& s) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto adv = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (s[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < s.size()) {
    unsigned char ch = static_cast<unsigned char>(s[i]);
    if (std::isspace(ch)) {
      adv(1);
      continue;
    }
    if (ch == '#') {
      while (i < s.size() && s[i] != '\n') adv(1);
      continue;
    }
    if (std::isalpha(ch) || ch == '_') {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      out.push_back({Tok::Ident, s.substr(i, j - i), line, col});
      adv(j - i);
      continue;
    }
    if (std::isdigit(ch)) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Tok::Int, s.substr(i, j - i), line, col});
      adv(j - i);
      continue;
    }
    if (std::string("{};:,=+-*/^()'").find(static_cast<char>(ch)) != std::string::npos) {
      out.push_back({Tok::Punct, std::string(1, static_cast<char>(ch)), line, col});
      adv(1);
      continue;
    }
    throw ParseError(line, col, std::string("unexpected character '") + static_cast<char>(ch) + "'");
  }
  out.push_back({Tok::End, "", line, col});
  return out;
}

bool all_digits(const std::string& s, std::size_t from, std::size_t to) {
  if (from >= to) return false;
  for (std::size_t k = from; k < to; ++k)
    if (!std::isdigit(static_cast<unsigned char>(s[k]))) return false;
  return true;
}

// name{int}_{int}
bool split_two(const std::string& s, char head, int& p, int& q) {
  if (s.size() < 4 || s[0] != head) return false;
  auto us = s.find('_');
  if (us == std::string::npos || !all_digits(s, 1, us) || !all_digits(s, us + 1, s.size())) return false;
  p = std::stoi(s.substr(1, us - 1));
  q = std::stoi(s.substr(us + 1));
  return true;
}

bool split_one(const std::string& s, char head, int& p) {
  if (s.size() < 2 || s[0] != head || !all_digits(s, 1, s.size())) return false;
  p = std::stoi(s.substr(1));
  return true;
}

class Parser {
 public:
  Parser(std::vector<Token> toks, const DiffSystem* ctx, bool strict)
      : t_(std::move(toks)), ctx_(ctx), strict_(strict) {}

  const Token& peek(std::size_t ahead = 0) const { return t_[std::min(p_ + ahead, t_.size() - 1)]; }
  bool is(const std::string& punct, std::size_t ahead = 0) const {
    const auto& t = peek(ahead);
    return t.kind == Tok::Punct && t.text == punct;
  }
  Token take() { return t_[std::min(p_++, t_.size() - 1)]; }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(peek().line, peek().col, msg); }
  void expect(const std::string& punct) {
    if (!is(punct)) fail("expected '" + punct + "', found '" + peek().text + "'");
    take();
  }
  std::string ident() {
    if (peek().kind != Tok::Ident) fail("expected identifier, found '" + peek().text + "'");
    return take().text;
  }
  bool at_end() const { return peek().kind == Tok::End; }
  void set_context(const DiffSystem* ctx) { ctx_ = ctx; }

  MultiPoly expr() {
    MultiPoly r = term();
    while (is("+") || is("-")) {
      bool minus = take().text == "-";
      MultiPoly t = term();
      if (minus) r -= t;
      else r += t;
    }
    return r;
  }

 private:
  MultiPoly term() {
    MultiPoly r = unary();
    while (is("*") || is("/")) {
      bool div = take().text == "/";
      const Token at = peek();
      MultiPoly f = unary();
      if (div) {
        if (!f.is_constant() || f.is_zero())
          throw ParseError(at.line, at.col, "division only by a nonzero numeric literal");
        r *= Rational(1) / f.constant_term();
      } else {
        r *= f;
      }
    }
    return r;
  }

  MultiPoly unary() {
    if (is("-")) {
      take();
      return -unary();
    }
    if (is("+")) {
      take();
      return unary();
    }
    return power();
  }

  int signed_int() {
    bool neg = false;
    if (is("-")) {
      take();
      neg = true;
    }
    if (peek().kind != Tok::Int) fail("expected integer exponent");
    int e = std::stoi(take().text);
    return neg ? -e : e;
  }

  MultiPoly power() {
    const Token at = peek();
    MultiPoly base = atom();
    while (is("^")) {
      take();
      int e;
      if (is("(")) {
        take();
        e = signed_int();
        expect(")");
      } else {
        e = signed_int();
      }
      if (e >= 0) {
        base = base.pow(static_cast<unsigned>(e));
      } else {
        if (base.size() != 1) throw ParseError(at.line, at.col, "negative power of a non-monomial");
        const auto& [m, c] = *base.terms().begin();
        base = MultiPoly(m.inverse(), Rational(1) / c).pow(static_cast<unsigned>(-e));
      }
    }
    return base;
  }

  MultiPoly atom() {
    const Token at = peek();
    if (at.kind == Tok::Int) {
      take();
      return MultiPoly(Rational(Integer(at.text)));
    }
    if (is("(")) {
      take();
      MultiPoly r = expr();
      expect(")");
      return r;
    }
    if (at.kind == Tok::Ident) {
      take();
      int k = 0;
      if (is("'")) {
        while (is("'")) {
          take();
          ++k;
        }
      } else if (is("^") && is("(", 1) && peek(2).kind == Tok::Int && is(")", 3)) {
        take();
        take();
        k = std::stoi(take().text);
        take();
      }
      return resolve(at, k);
    }
    fail("unexpected '" + at.text + "'");
  }

  MultiPoly resolve(const Token& at, int k) {
    const std::string& name = at.text;
    if (ctx_) {
      auto dv = std::find(ctx_->diffvars.begin(), ctx_->diffvars.end(), name);
      if (dv != ctx_->diffvars.end()) return MultiPoly(ctx_->u(static_cast<int>(dv - ctx_->diffvars.begin()) + 1, k));
      bool declared = std::find(ctx_->params.begin(), ctx_->params.end(), name) != ctx_->params.end() ||
                      std::find(ctx_->consts.begin(), ctx_->consts.end(), name) != ctx_->consts.end();
      if (declared) {
        if (ctx_->rules.free_params().count(name)) return MultiPoly(Variable::diff_param(name, k));
        return derive(MultiPoly(Variable::diff_param(name, 0)), ctx_->rules, k);
      }
      if (strict_) throw ParseError(at.line, at.col, "undeclared identifier '" + name + "'");
    }
    int p, q;
    if (split_two(name, 'c', p, q)) {
      if (k) throw ParseError(at.line, at.col, "generic coefficient has no derivatives");
      return MultiPoly(Variable::gen_coeff(p, q));
    }
    if (split_two(name, 'a', p, q)) return MultiPoly(Variable::diff_coeff(p, q, k));
    if (split_two(name, 'x', p, q)) return MultiPoly(Variable::structural(p, q));
    if (split_one(name, 'y', p)) return MultiPoly(Variable::alg(p));
    if (split_one(name, 'u', p)) return MultiPoly(Variable::diff_ind(p, k));
    return MultiPoly(Variable::diff_param(name, k));
  }

  std::vector<Token> t_;
  std::size_t p_ = 0;
  const DiffSystem* ctx_;
  bool strict_;
};

}  // namespace

void make_generic(DiffSystem& sys) {
  sys.generic_terms.clear();
  for (int i = 1; i <= sys.n(); ++i) {
    const MultiPoly& f = sys.polys[static_cast<std::size_t>(i - 1)];
    std::set<Monomial, bool (*)(const Monomial&, const Monomial&)> supp(
        [](const Monomial& x, const Monomial& y) { return grlex_cmp(x, y) < 0; });
    for (const auto& [m, c] : f.terms()) {
      std::vector<Monomial::Factor> u;
      for (const auto& fe : m.factors())
        if (fe.first.kind == VarKind::DiffInd) u.push_back(fe);
      supp.insert(Monomial::from_sorted(std::move(u)));
    }
    auto terms = number_terms(std::vector<Monomial>(supp.begin(), supp.end()));
    sys.generic_terms.push_back(terms);
    sys.polys[static_cast<std::size_t>(i - 1)] = generic_poly(i, terms);
  }
  sys.mode = Mode::kGeneric;
}

DiffSystem genericize(const DiffSystem& sys) {
  DiffSystem g = sys;
  make_generic(g);
  return g;
}

DiffSystem parse_system(const std::string& text) {
  Parser ps(lex(text), nullptr, true);
  DiffSystem sys;
  auto kw = ps.ident();
  if (kw != "system") ps.fail("expected 'system'");
  ps.expect("{");
  ps.set_context(&sys);
  bool saw_eq = false;
  while (!ps.is("}")) {
    if (ps.at_end()) ps.fail("unterminated system block");
    const Token head = ps.peek();
    std::string name = ps.ident();
    if (ps.is(":")) {
      ps.take();
      if (saw_eq) throw ParseError(head.line, head.col, "declarations must precede equations");
      if (name == "diffvars") {
        do {
          sys.diffvars.push_back(ps.ident());
        } while (ps.is(",") && (ps.take(), true));
      } else if (name == "params") {
        do {
          std::string p = ps.ident();
          sys.params.push_back(p);
          if (ps.is("(")) {
            ps.take();
            const Token r = ps.peek();
            if (ps.ident() != "d" + p) throw ParseError(r.line, r.col, "expected rule 'd" + p + "=...'");
            ps.expect("=");
            sys.rules.declare_free(p);  // the rule may mention p itself
            MultiPoly img = ps.expr();
            sys.rules.set_rule(p, img);
            ps.expect(")");
          } else {
            sys.rules.declare_free(p);
          }
        } while (ps.is(",") && (ps.take(), true));
      } else if (name == "consts") {
        do {
          std::string p = ps.ident();
          sys.consts.push_back(p);
          sys.rules.set_rule(p, MultiPoly());
        } while (ps.is(",") && (ps.take(), true));
      } else if (name == "mode") {
        const Token m = ps.peek();
        std::string v = ps.ident();
        if (v == "generic") sys.mode = Mode::kGeneric;
        else if (v == "concrete") sys.mode = Mode::kConcrete;
        else throw ParseError(m.line, m.col, "mode must be 'concrete' or 'generic'");
      } else {
        throw ParseError(head.line, head.col, "unknown declaration '" + name + "'");
      }
      ps.expect(";");
    } else if (ps.is("=")) {
      ps.take();
      saw_eq = true;
      if (std::find(sys.names.begin(), sys.names.end(), name) != sys.names.end())
        throw ParseError(head.line, head.col, "duplicate equation name '" + name + "'");
      sys.names.push_back(name);
      sys.polys.push_back(ps.expr());
      ps.expect(";");
    } else {
      ps.fail("expected ':' or '='");
    }
  }
  ps.take();
  if (!ps.at_end()) ps.fail("trailing input after system block");
  if (sys.mode == Mode::kGeneric) make_generic(sys);
  sys.validate();
  return sys;
}

MultiPoly parse_poly(const std::string& text, const DiffSystem* context) {
  Parser ps(lex(text), context, false);
  MultiPoly r = ps.expr();
  if (!ps.at_end()) ps.fail("unexpected '" + ps.peek().text + "'");
  return r;
}

std::string print_system(const DiffSystem& sys) {
  std::ostringstream os;
  auto join = [](const std::vector<std::string>& v) {
    std::string s;
    for (std::size_t k = 0; k < v.size(); ++k) s += (k ? ", " : "") + v[k];
    return s;
  };
  os << "system {\n";
  os << "  diffvars: " << join(sys.diffvars) << ";\n";
  if (!sys.params.empty()) {
    std::vector<std::string> ps;
    for (const auto& p : sys.params) {
      auto it = sys.rules.rules().find(p);
      ps.push_back(it == sys.rules.rules().end() ? p : p + " (d" + p + "=" + it->second.str() + ")");
    }
    os << "  params: " << join(ps) << ";\n";
  }
  if (!sys.consts.empty()) os << "  consts: " << join(sys.consts) << ";\n";
  if (sys.mode == Mode::kGeneric) os << "  mode: generic;\n";
  for (int i = 0; i < sys.n(); ++i) {
    MultiPoly f = sys.polys[static_cast<std::size_t>(i)];
    if (sys.mode == Mode::kGeneric) {
      f = MultiPoly();
      for (const auto& m : sys.generic_terms[static_cast<std::size_t>(i)]) f.add_term(m, 1);
    }
    os << "  " << sys.names[static_cast<std::size_t>(i)] << " = " << f.str() << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace diffelim
