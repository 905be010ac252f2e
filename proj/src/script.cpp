#include "fourcalc/script.hpp"

#include <cctype>
#include <map>

#include <nlohmann/json.hpp>

#include "fourcalc/catalog.hpp"
#include "fourcalc/geography.hpp"
#include "fourcalc/json_io.hpp"
#include "fourcalc/pipelines.hpp"

namespace fourcalc {

namespace {

enum class Tok { Ident, Int, Str, Symbol, End };

struct Token {
  Tok kind = Tok::End;
  std::string text;
  i64 value = 0;
  SourcePos pos;
};

struct Lexer {
  const std::string& src;
  size_t i = 0;
  int line = 1, col = 1;

  explicit Lexer(const std::string& s) : src(s) {}

  void advance() {
    if (i < src.size() && src[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    ++i;
  }

  std::vector<Token> lex() {
    std::vector<Token> out;
    while (i < src.size()) {
      char c = src[i];
      if (c == '#') {
        while (i < src.size() && src[i] != '\n') advance();
        continue;
      }
      if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
        continue;
      }
      SourcePos pos{line, col};
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::string text;
        while (i < src.size() &&
               (std::isalnum(static_cast<unsigned char>(src[i])) || src[i] == '_')) {
          text += src[i];
          advance();
        }
        out.push_back({Tok::Ident, text, 0, pos});
        continue;
      }
      if (std::isdigit(static_cast<unsigned char>(c)) ||
          (c == '-' && i + 1 < src.size() &&
           std::isdigit(static_cast<unsigned char>(src[i + 1])))) {
        std::string text;
        if (c == '-') {
          text += c;
          advance();
        }
        while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) {
          text += src[i];
          advance();
        }
        out.push_back({Tok::Int, text, std::stoll(text), pos});
        continue;
      }
      if (c == '"') {
        advance();
        std::string text;
        while (i < src.size() && src[i] != '"') {
          if (src[i] == '\n') throw SyntaxError(pos, "unterminated string literal");
          text += src[i];
          advance();
        }
        if (i >= src.size()) throw SyntaxError(pos, "unterminated string literal");
        advance();  // closing quote
        out.push_back({Tok::Str, text, 0, pos});
        continue;
      }
      // two-character comparators first
      static const char* two[] = {"==", "!=", "<=", ">="};
      bool matched = false;
      for (const char* t : two) {
        if (src.compare(i, 2, t) == 0) {
          out.push_back({Tok::Symbol, t, 0, pos});
          advance();
          advance();
          matched = true;
          break;
        }
      }
      if (matched) continue;
      if (std::string("=().,").find(c) != std::string::npos) {
        out.push_back({Tok::Symbol, std::string(1, c), 0, pos});
        advance();
        continue;
      }
      throw SyntaxError(pos, std::string("unexpected character '") + c + "'");
    }
    out.push_back({Tok::End, "<end>", 0, {line, col}});
    return out;
  }
};

struct Parser {
  std::vector<Token> toks;
  size_t i = 0;

  const Token& peek() const { return toks[i]; }
  const Token& next() { return toks[i++]; }

  [[noreturn]] void fail(const std::string& expected) {
    const Token& t = peek();
    throw SyntaxError(t.pos, "expected " + expected + ", got '" + t.text + "'");
  }

  Token expect_ident() {
    if (peek().kind != Tok::Ident) fail("IDENT");
    return next();
  }
  void expect_symbol(const std::string& s) {
    if (peek().kind != Tok::Symbol || peek().text != s) fail("'" + s + "'");
    next();
  }

  ExprPtr parse_expr() {
    ExprPtr e = parse_primary();
    while (peek().kind == Tok::Symbol && peek().text == ".") {
      SourcePos pos = peek().pos;
      next();
      Token field = expect_ident();
      auto f = std::make_shared<Expr>();
      f->node = Expr::Field{e, field.text};
      f->pos = pos;
      e = f;
    }
    return e;
  }

  ExprPtr parse_primary() {
    const Token& t = peek();
    auto e = std::make_shared<Expr>();
    e->pos = t.pos;
    if (t.kind == Tok::Int) {
      e->node = Expr::IntLit{t.value};
      next();
      return e;
    }
    if (t.kind == Tok::Str) {
      e->node = Expr::StrLit{t.text};
      next();
      return e;
    }
    if (t.kind == Tok::Ident) {
      Token name = next();
      if (peek().kind == Tok::Symbol && peek().text == "(") {
        next();
        Expr::Call call;
        call.callee = name.text;
        if (!(peek().kind == Tok::Symbol && peek().text == ")")) {
          call.args.push_back(parse_expr());
          while (peek().kind == Tok::Symbol && peek().text == ",") {
            next();
            call.args.push_back(parse_expr());
          }
        }
        expect_symbol(")");
        e->node = std::move(call);
        return e;
      }
      e->node = Expr::Ident{name.text};
      return e;
    }
    fail("expression");
  }

  Stmt parse_stmt() {
    const Token& t = peek();
    if (t.kind != Tok::Ident) fail("'let', 'assert' or 'print'");
    Stmt s;
    s.pos = t.pos;
    if (t.text == "let") {
      next();
      Token name = expect_ident();
      expect_symbol("=");
      s.node = Stmt::Let{name.text, parse_expr()};
      return s;
    }
    if (t.text == "assert") {
      next();
      ExprPtr lhs = parse_expr();
      const Token& op = peek();
      Cmp cmp;
      if (op.kind == Tok::Symbol && op.text == "==")
        cmp = Cmp::Eq;
      else if (op.kind == Tok::Symbol && op.text == "!=")
        cmp = Cmp::Ne;
      else if (op.kind == Tok::Symbol && op.text == "<=")
        cmp = Cmp::Le;
      else if (op.kind == Tok::Symbol && op.text == ">=")
        cmp = Cmp::Ge;
      else
        fail("comparison ('==', '!=', '<=' or '>=')");
      next();
      s.node = Stmt::Assert{lhs, cmp, parse_expr()};
      return s;
    }
    if (t.text == "print") {
      next();
      s.node = Stmt::Print{parse_expr()};
      return s;
    }
    fail("'let', 'assert' or 'print'");
  }

  Script parse() {
    Script s;
    while (peek().kind != Tok::End) s.statements.push_back(parse_stmt());
    return s;
  }
};

void check_names(const ExprPtr& e, const std::map<std::string, bool>& bound) {
  if (const auto* id = std::get_if<Expr::Ident>(&e->node)) {
    if (!bound.count(id->name)) throw UnboundName(e->pos, "unbound name '" + id->name + "'");
    return;
  }
  if (const auto* call = std::get_if<Expr::Call>(&e->node)) {
    for (const ExprPtr& a : call->args) check_names(a, bound);
    return;
  }
  if (const auto* f = std::get_if<Expr::Field>(&e->node)) check_names(f->base, bound);
}

// interpreter values
using Value = std::variant<i64, std::string, ManifoldState, HomeoType>;

std::string value_kind(const Value& v) {
  switch (v.index()) {
    case 0:
      return "integer";
    case 1:
      return "string";
    case 2:
      return "manifold state";
    default:
      return "homeomorphism type";
  }
}

struct Interp {
  std::map<std::string, Value> env;
  std::vector<std::string> transcript;

  i64 as_int(const Value& v, SourcePos pos) {
    if (const i64* n = std::get_if<i64>(&v)) return *n;
    throw EvalError(pos, "expected an integer, got a " + value_kind(v));
  }
  std::string as_str(const Value& v, SourcePos pos) {
    if (const std::string* s = std::get_if<std::string>(&v)) return *s;
    throw EvalError(pos, "expected a string, got a " + value_kind(v));
  }
  const ManifoldState& as_state(const Value& v, SourcePos pos) {
    if (const ManifoldState* s = std::get_if<ManifoldState>(&v)) return *s;
    throw EvalError(pos, "expected a manifold state, got a " + value_kind(v));
  }

  void need_args(const Expr::Call& c, SourcePos pos, size_t lo, size_t hi) {
    if (c.args.size() < lo || c.args.size() > hi)
      throw ArityMismatch(pos, "'" + c.callee + "' takes " + std::to_string(lo) +
                                   (hi == lo ? "" : ".." + std::to_string(hi)) +
                                   " arguments, got " + std::to_string(c.args.size()));
  }

  Value eval(const ExprPtr& e) {
    if (const auto* id = std::get_if<Expr::Ident>(&e->node)) return env.at(id->name);
    if (const auto* n = std::get_if<Expr::IntLit>(&e->node)) return n->value;
    if (const auto* s = std::get_if<Expr::StrLit>(&e->node)) return s->value;
    if (const auto* f = std::get_if<Expr::Field>(&e->node)) return eval_field(*f, e->pos);
    return eval_call(std::get<Expr::Call>(e->node), e->pos);
  }

  Value eval_field(const Expr::Field& f, SourcePos pos) {
    Value base = eval(f.base);
    if (const HomeoType* t = std::get_if<HomeoType>(&base)) {
      if (f.name == "a") return t->a;
      if (f.name == "b") return t->b;
      throw EvalError(pos, "homeomorphism type has fields 'a' and 'b', not '" + f.name + "'");
    }
    const ManifoldState& st = as_state(base, pos);
    const InvariantVector& v = st.invariants;
    if (f.name == "e") return v.e;
    if (f.name == "sigma") return v.sigma;
    if (f.name == "b1") return v.b1;
    if (f.name == "b2") return v.b2;
    if (f.name == "c1sq") return v.c1_sq;
    if (f.name == "chi_h") {
      if (!v.chi_h) throw EvalError(pos, "chi_h is not integral ((e + sigma)/4 not an integer)");
      return *v.chi_h;
    }
    if (f.name == "b2plus") {
      if (!v.b2_plus) throw EvalError(pos, "b2+ undefined: sigma and b2 have different parity");
      return *v.b2_plus;
    }
    if (f.name == "b2minus") {
      if (!v.b2_minus) throw EvalError(pos, "b2- undefined: sigma and b2 have different parity");
      return *v.b2_minus;
    }
    throw EvalError(pos, "unknown state field '" + f.name + "'");
  }

  Value eval_call(const Expr::Call& c, SourcePos pos) {
    try {
      return eval_call_inner(c, pos);
    } catch (const ScriptError&) {
      throw;
    } catch (const CalcError& err) {
      throw EvalError(pos, std::string(err.what()));
    }
  }

  Value eval_call_inner(const Expr::Call& c, SourcePos pos) {
    if (c.callee == "block") {
      need_args(c, pos, 1, 5);
      std::string name = as_str(eval(c.args[0]), pos);
      std::vector<i64> params;
      for (size_t i = 1; i < c.args.size(); ++i) params.push_back(as_int(eval(c.args[i]), pos));
      return catalog_block(name, params);
    }
    if (c.callee == "blowup") {
      need_args(c, pos, 1, 3);
      ManifoldState st = as_state(eval(c.args[0]), pos);
      std::optional<std::string> surf, rename;
      if (c.args.size() >= 2) surf = as_str(eval(c.args[1]), pos);
      if (c.args.size() >= 3) rename = as_str(eval(c.args[2]), pos);
      return blow_up(st, surf, rename);
    }
    if (c.callee == "resolve") {
      need_args(c, pos, 2, 16);
      ManifoldState st = as_state(eval(c.args[0]), pos);
      std::vector<std::string> names;
      for (size_t i = 1; i < c.args.size(); ++i) names.push_back(as_str(eval(c.args[i]), pos));
      return resolve(st, names);
    }
    if (c.callee == "sum") {
      need_args(c, pos, 4, 4);
      ManifoldState a = as_state(eval(c.args[0]), pos);
      std::string sa = as_str(eval(c.args[1]), pos);
      ManifoldState b = as_state(eval(c.args[2]), pos);
      std::string sb = as_str(eval(c.args[3]), pos);
      return symplectic_sum(a, sa, b, sb);
    }
    if (c.callee == "luttinger") {
      need_args(c, pos, 4, 4);
      ManifoldState st = as_state(eval(c.args[0]), pos);
      LuttingerSpec spec;
      spec.torus_name = as_str(eval(c.args[1]), pos);
      spec.curve_label = as_str(eval(c.args[2]), pos);
      spec.coeff_num = as_int(eval(c.args[3]), pos);
      return luttinger(st, spec);
    }
    if (c.callee == "knot") {
      need_args(c, pos, 3, 3);
      ManifoldState st = as_state(eval(c.args[0]), pos);
      std::string torus = as_str(eval(c.args[1]), pos);
      return knot_surgery(st, torus, as_int(eval(c.args[2]), pos));
    }
    if (c.callee == "pipeline") {
      need_args(c, pos, 1, 2);
      std::string name = as_str(eval(c.args[0]), pos);
      std::optional<i64> param;
      if (c.args.size() == 2) param = as_int(eval(c.args[1]), pos);
      return run_named_pipeline(name, param).state;
    }
    if (c.callee == "homeo") {
      need_args(c, pos, 1, 1);
      return homeomorphism_type(as_state(eval(c.args[0]), pos).invariants);
    }
    if (c.callee == "threshold") {
      need_args(c, pos, 3, 3);
      return exotic_threshold(as_int(eval(c.args[0]), pos), as_int(eval(c.args[1]), pos),
                              as_int(eval(c.args[2]), pos));
    }
    throw EvalError(pos, "unknown builtin '" + c.callee + "'");
  }

  std::string show(const Value& v) {
    if (const i64* n = std::get_if<i64>(&v)) return std::to_string(*n);
    if (const std::string* s = std::get_if<std::string>(&v)) return *s;
    if (const HomeoType* t = std::get_if<HomeoType>(&v))
      return "(" + std::to_string(t->a) + ", " + std::to_string(t->b) + ")";
    return state_to_json(std::get<ManifoldState>(v)).dump();
  }
};

std::string cmp_text(Cmp c) {
  switch (c) {
    case Cmp::Eq:
      return "==";
    case Cmp::Ne:
      return "!=";
    case Cmp::Le:
      return "<=";
    default:
      return ">=";
  }
}

void render_expr(const Expr& e, std::string& out) {
  if (const auto* id = std::get_if<Expr::Ident>(&e.node)) {
    out += id->name;
  } else if (const auto* n = std::get_if<Expr::IntLit>(&e.node)) {
    out += std::to_string(n->value);
  } else if (const auto* s = std::get_if<Expr::StrLit>(&e.node)) {
    out += "\"" + s->value + "\"";
  } else if (const auto* c = std::get_if<Expr::Call>(&e.node)) {
    out += c->callee + "(";
    for (size_t i = 0; i < c->args.size(); ++i) {
      if (i) out += ", ";
      render_expr(*c->args[i], out);
    }
    out += ")";
  } else if (const auto* f = std::get_if<Expr::Field>(&e.node)) {
    render_expr(*f->base, out);
    out += "." + f->name;
  }
}

}  // namespace

bool expr_equal(const Expr& a, const Expr& b) {
  if (a.node.index() != b.node.index()) return false;
  if (const auto* id = std::get_if<Expr::Ident>(&a.node))
    return id->name == std::get<Expr::Ident>(b.node).name;
  if (const auto* n = std::get_if<Expr::IntLit>(&a.node))
    return n->value == std::get<Expr::IntLit>(b.node).value;
  if (const auto* s = std::get_if<Expr::StrLit>(&a.node))
    return s->value == std::get<Expr::StrLit>(b.node).value;
  if (const auto* c = std::get_if<Expr::Call>(&a.node)) {
    const auto& cb = std::get<Expr::Call>(b.node);
    if (c->callee != cb.callee || c->args.size() != cb.args.size()) return false;
    for (size_t i = 0; i < c->args.size(); ++i)
      if (!expr_equal(*c->args[i], *cb.args[i])) return false;
    return true;
  }
  const auto& fa = std::get<Expr::Field>(a.node);
  const auto& fb = std::get<Expr::Field>(b.node);
  return fa.name == fb.name && expr_equal(*fa.base, *fb.base);
}

bool script_equal(const Script& a, const Script& b) {
  if (a.statements.size() != b.statements.size()) return false;
  for (size_t i = 0; i < a.statements.size(); ++i) {
    const Stmt& sa = a.statements[i];
    const Stmt& sb = b.statements[i];
    if (sa.node.index() != sb.node.index()) return false;
    if (const auto* let = std::get_if<Stmt::Let>(&sa.node)) {
      const auto& lb = std::get<Stmt::Let>(sb.node);
      if (let->name != lb.name || !expr_equal(*let->value, *lb.value)) return false;
    } else if (const auto* as = std::get_if<Stmt::Assert>(&sa.node)) {
      const auto& ab = std::get<Stmt::Assert>(sb.node);
      if (as->cmp != ab.cmp || !expr_equal(*as->lhs, *ab.lhs) || !expr_equal(*as->rhs, *ab.rhs))
        return false;
    } else {
      const auto& pa = std::get<Stmt::Print>(sa.node);
      const auto& pb = std::get<Stmt::Print>(sb.node);
      if (!expr_equal(*pa.value, *pb.value)) return false;
    }
  }
  return true;
}

Script parse_script(const std::string& text) {
  Lexer lx(text);
  Parser p{lx.lex()};
  Script s = p.parse();
  // static checks: bound before use, no rebinding
  std::map<std::string, bool> bound;
  for (const Stmt& st : s.statements) {
    if (const auto* let = std::get_if<Stmt::Let>(&st.node)) {
      check_names(let->value, bound);
      if (bound.count(let->name))
        throw UnboundName(st.pos, "name '" + let->name + "' is already bound");
      bound[let->name] = true;
    } else if (const auto* as = std::get_if<Stmt::Assert>(&st.node)) {
      check_names(as->lhs, bound);
      check_names(as->rhs, bound);
    } else {
      check_names(std::get<Stmt::Print>(st.node).value, bound);
    }
  }
  return s;
}

std::string render_script(const Script& s) {
  std::string out;
  for (const Stmt& st : s.statements) {
    if (const auto* let = std::get_if<Stmt::Let>(&st.node)) {
      out += "let " + let->name + " = ";
      render_expr(*let->value, out);
    } else if (const auto* as = std::get_if<Stmt::Assert>(&st.node)) {
      out += "assert ";
      render_expr(*as->lhs, out);
      out += " " + cmp_text(as->cmp) + " ";
      render_expr(*as->rhs, out);
    } else {
      out += "print ";
      render_expr(*std::get<Stmt::Print>(st.node).value, out);
    }
    out += "\n";
  }
  return out;
}

RunResult run_script(const Script& s) {
  Interp interp;
  RunResult out;
  for (const Stmt& st : s.statements) {
    if (const auto* let = std::get_if<Stmt::Let>(&st.node)) {
      interp.env.emplace(let->name, interp.eval(let->value));
    } else if (const auto* as = std::get_if<Stmt::Assert>(&st.node)) {
      Value lv = interp.eval(as->lhs);
      Value rv = interp.eval(as->rhs);
      bool ok;
      std::string ls, rs;
      if (std::holds_alternative<std::string>(lv) && std::holds_alternative<std::string>(rv) &&
          (as->cmp == Cmp::Eq || as->cmp == Cmp::Ne)) {
        ls = std::get<std::string>(lv);
        rs = std::get<std::string>(rv);
        ok = (as->cmp == Cmp::Eq) == (ls == rs);
      } else {
        i64 l = interp.as_int(lv, st.pos);
        i64 r = interp.as_int(rv, st.pos);
        ls = std::to_string(l);
        rs = std::to_string(r);
        switch (as->cmp) {
          case Cmp::Eq:
            ok = l == r;
            break;
          case Cmp::Ne:
            ok = l != r;
            break;
          case Cmp::Le:
            ok = l <= r;
            break;
          default:
            ok = l >= r;
        }
      }
      if (!ok) {
        // report the relation that actually holds between the two sides
        std::string actual;
        switch (as->cmp) {
          case Cmp::Eq:
            actual = "!=";
            break;
          case Cmp::Ne:
            actual = "==";
            break;
          case Cmp::Le:
            actual = ">";
            break;
          default:
            actual = "<";
        }
        out.transcript.push_back("assert failed at line " + std::to_string(st.pos.line) + ": " +
                                 ls + " " + actual + " " + rs);
        out.exit_code = 1;
        return out;
      }
    } else {
      out.transcript.push_back(interp.show(interp.eval(std::get<Stmt::Print>(st.node).value)));
    }
  }
  return out;
}

}  // namespace fourcalc
