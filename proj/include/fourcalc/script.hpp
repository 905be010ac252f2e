// The construction-script language: a loop-free ledger of let/assert/
// print statements over the catalog and construction operations.
#pragma once

#include <memory>
#include <variant>

#include "fourcalc/manifold.hpp"

namespace fourcalc {

struct SourcePos {
  int line = 1;
  int column = 1;
  friend bool operator==(const SourcePos&, const SourcePos&) = default;
};

struct ScriptError : CalcError {
  SourcePos pos;
  ScriptError(SourcePos p, const std::string& msg)
      : CalcError("line " + std::to_string(p.line) + ", column " + std::to_string(p.column) +
                  ": " + msg),
        pos(p) {}
};

struct SyntaxError : ScriptError {
  using ScriptError::ScriptError;
};
struct UnboundName : ScriptError {
  using ScriptError::ScriptError;
};
struct ArityMismatch : ScriptError {
  using ScriptError::ScriptError;
};
struct EvalError : ScriptError {
  using ScriptError::ScriptError;
};

struct Expr;
using ExprPtr = std::shared_ptr<Expr>;

struct Expr {
  struct Ident {
    std::string name;
    friend bool operator==(const Ident&, const Ident&) = default;
  };
  struct IntLit {
    i64 value = 0;
    friend bool operator==(const IntLit&, const IntLit&) = default;
  };
  struct StrLit {
    std::string value;
    friend bool operator==(const StrLit&, const StrLit&) = default;
  };
  struct Call {
    std::string callee;
    std::vector<ExprPtr> args;
  };
  struct Field {
    ExprPtr base;
    std::string name;
  };

  std::variant<Ident, IntLit, StrLit, Call, Field> node;
  SourcePos pos;
};

bool expr_equal(const Expr& a, const Expr& b);

enum class Cmp { Eq, Ne, Le, Ge };

struct Stmt {
  struct Let {
    std::string name;
    ExprPtr value;
  };
  struct Assert {
    ExprPtr lhs;
    Cmp cmp = Cmp::Eq;
    ExprPtr rhs;
  };
  struct Print {
    ExprPtr value;
  };

  std::variant<Let, Assert, Print> node;
  SourcePos pos;
};

struct Script {
  std::vector<Stmt> statements;
};

bool script_equal(const Script& a, const Script& b);

// Throws SyntaxError (with 1-based position, offending token and the
// expected set), UnboundName, or ArityMismatch for statically checkable
// problems. Names must be bound before use and are never rebound.
Script parse_script(const std::string& text);

// Canonical pretty-printer; parse_script(render_script(s)) == s.
std::string render_script(const Script& s);

struct RunResult {
  std::vector<std::string> transcript;
  int exit_code = 0;  // 0 ok, 1 first failed assert
};

// Executes statements in order; stops at the first failed assert with
// both sides reported. Runtime errors from the underlying modules are
// rethrown as EvalError carrying the statement position.
RunResult run_script(const Script& s);

}  // namespace fourcalc
