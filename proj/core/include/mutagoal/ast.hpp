#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mutagoal/source.hpp"

namespace mutagoal {

enum class BinOp {
  Add, Sub, Mul, Div, Mod,        // arithmetic
  Eq, Ne, Lt, Le, Gt, Ge,         // relational
  And, Or,                        // logical
};

bool is_arith(BinOp op);
bool is_relational(BinOp op);
bool is_logical(BinOp op);
const char* binop_symbol(BinOp op);

enum class ExprKind {
  IntLit,
  BoolLit,
  LocalRead,
  FieldRead,   // self.<name>
  Binary,
  Not,
  New,         // new <name>(args)
  Invoke,      // <receiver>.<name>(args) with receiver a local or self
};

struct Expr {
  ExprKind kind{};
  Span span;
  std::int64_t int_value = 0;   // IntLit
  bool bool_value = false;      // BoolLit
  std::string name;             // LocalRead/FieldRead: target; New: class; Invoke: method
  bool self_receiver = false;   // Invoke only
  std::string receiver;         // Invoke only, when !self_receiver
  BinOp op{};                   // Binary
  std::vector<Expr> children;   // Binary: [lhs, rhs]; Not: [operand]; New/Invoke: args
};

enum class StmtKind {
  LocalBind,    // <name> := expr
  FieldAssign,  // self.<name> := expr
  If,
  While,
  Return,
  ExprStmt,     // bare invocation
};

struct Stmt {
  StmtKind kind{};
  Span span;
  std::string name;              // LocalBind/FieldAssign
  std::optional<Expr> expr;      // bound value / condition / return value / invocation
  std::vector<Stmt> block;       // If: then-branch; While: body
  std::vector<Stmt> else_block;  // If only
};

enum class TestStmtKind {
  LocalBind,
  ExprStmt,
  AssertTrue,
  AssertFalse,
  AssertEqual,
};

bool is_assertion(TestStmtKind kind);

struct TestStmt {
  TestStmtKind kind{};
  Span span;
  std::string name;          // LocalBind
  std::vector<Expr> exprs;   // LocalBind/ExprStmt/AssertTrue/AssertFalse: 1; AssertEqual: 2
};

struct FieldDecl {
  std::string name;
  Span span;
  bool is_bool = false;
  std::int64_t int_init = 0;
  bool bool_init = false;
};

struct MethodDecl {
  std::string name;
  Span span;
  std::vector<std::string> params;
  bool returns_value = false;
  std::vector<Stmt> body;
};

struct ClassDecl {
  std::string name;
  std::string file;
  Span span;
  std::vector<FieldDecl> fields;
  std::vector<MethodDecl> methods;

  // Filled by the resolver.
  std::map<std::string, int> field_index;
  std::map<std::string, int> method_index;

  const MethodDecl* find_method(const std::string& name) const;
  int find_field(const std::string& name) const;  // -1 when absent
};

struct TestCase {
  std::string name;
  Span span;
  std::vector<TestStmt> body;
};

struct TestSuite {
  std::string name;
  std::string file;
  Span span;
  std::vector<TestCase> tests;
};

/// Identifies one test within a Program.
struct TestRef {
  int suite = 0;
  int test = 0;

  friend bool operator==(const TestRef&, const TestRef&) = default;
  friend auto operator<=>(const TestRef&, const TestRef&) = default;
};

/// A fully parsed and resolved MiniLang program: production classes plus
/// test suites. Immutable after load; copies are deep and independent.
struct Program {
  std::vector<ClassDecl> classes;   // file path order, then declaration order
  std::vector<TestSuite> suites;    // file path order, then declaration order
  std::vector<Lint> lints;

  std::map<std::string, int> class_index;
  std::map<std::string, int> suite_index;

  const ClassDecl* find_class(const std::string& name) const;
  const TestSuite* find_suite(const std::string& name) const;

  const TestCase& test(TestRef ref) const { return suites[ref.suite].tests[ref.test]; }
  std::string test_id(TestRef ref) const {
    return suites[ref.suite].name + "." + test(ref).name;
  }

  /// All tests in the canonical global order: suite file path lexicographic,
  /// then declaration order within the file.
  std::vector<TestRef> all_tests() const;

  /// Resolves "Suite.test" back to a ref; returns nullopt when unknown.
  std::optional<TestRef> find_test(const std::string& id) const;
};

/// Structural equality, ignoring source spans. Whitespace-insensitive
/// round-trips compare equal under this.
bool structural_equal(const Expr& a, const Expr& b);
bool structural_equal(const Stmt& a, const Stmt& b);
bool structural_equal(const TestStmt& a, const TestStmt& b);
bool structural_equal(const Program& a, const Program& b);

/// Preorder walk over every statement of a method body, nested blocks
/// included. The index passed to the callback is the statement's preorder
/// position; it is the index mutant ids refer to.
void walk_statements(const std::vector<Stmt>& body,
                     const std::function<void(const Stmt&, int index)>& fn);

/// Preorder walk over an expression tree.
void walk_expr(const Expr& expr, const std::function<void(const Expr&)>& fn);

}  // namespace mutagoal
