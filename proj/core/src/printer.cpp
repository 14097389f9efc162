#include <string>

#include "mutagoal/frontend.hpp"

namespace mutagoal {

namespace {

// Binding strength, loosest first: or, and, not, relational, additive,
// multiplicative, atoms.
int prec(const Expr& expr) {
  switch (expr.kind) {
    case ExprKind::Binary:
      switch (expr.op) {
        case BinOp::Or: return 1;
        case BinOp::And: return 2;
        case BinOp::Eq:
        case BinOp::Ne:
        case BinOp::Lt:
        case BinOp::Le:
        case BinOp::Gt:
        case BinOp::Ge: return 4;
        case BinOp::Add:
        case BinOp::Sub: return 5;
        case BinOp::Mul:
        case BinOp::Div:
        case BinOp::Mod: return 6;
      }
      return 7;
    case ExprKind::Not:
      return 3;
    default:
      return 7;
  }
}

std::string render(const Expr& expr);

std::string render_child(const Expr& child, int parent_prec, bool tight) {
  // tight: parenthesize even at equal strength (right operands of
  // left-associative operators, both sides of the non-chaining relationals).
  const int child_prec = prec(child);
  const bool parens = tight ? child_prec <= parent_prec : child_prec < parent_prec;
  return parens ? "(" + render(child) + ")" : render(child);
}

std::string render_args(const std::vector<Expr>& args) {
  std::string out = "(";
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (i > 0) out += ", ";
    out += render(args[i]);
  }
  return out + ")";
}

std::string render(const Expr& expr) {
  switch (expr.kind) {
    case ExprKind::IntLit:
      return std::to_string(expr.int_value);
    case ExprKind::BoolLit:
      return expr.bool_value ? "true" : "false";
    case ExprKind::LocalRead:
      return expr.name;
    case ExprKind::FieldRead:
      return "self." + expr.name;
    case ExprKind::New:
      return "new " + expr.name + render_args(expr.children);
    case ExprKind::Invoke:
      return (expr.self_receiver ? "self" : expr.receiver) + "." + expr.name +
             render_args(expr.children);
    case ExprKind::Not:
      return "not " + render_child(expr.children[0], prec(expr), false);
    case ExprKind::Binary: {
      const int p = prec(expr);
      const bool non_assoc = is_relational(expr.op);
      return render_child(expr.children[0], p, non_assoc) + " " +
             binop_symbol(expr.op) + " " +
             render_child(expr.children[1], p, true);
    }
  }
  return "?";
}

std::string indent_of(int depth) { return std::string(4 * depth, ' '); }

void render_block(const std::vector<Stmt>& body, int depth, std::string& out);

void render_stmt(const Stmt& stmt, int depth, std::string& out) {
  const std::string pad = indent_of(depth);
  switch (stmt.kind) {
    case StmtKind::LocalBind:
      out += pad + stmt.name + " := " + render(*stmt.expr) + "\n";
      break;
    case StmtKind::FieldAssign:
      out += pad + "self." + stmt.name + " := " + render(*stmt.expr) + "\n";
      break;
    case StmtKind::Return:
      out += pad + (stmt.expr ? "return " + render(*stmt.expr) : "return") + "\n";
      break;
    case StmtKind::ExprStmt:
      out += pad + render(*stmt.expr) + "\n";
      break;
    case StmtKind::If:
      out += pad + "if " + render(*stmt.expr) + " {\n";
      render_block(stmt.block, depth + 1, out);
      if (stmt.else_block.empty()) {
        out += pad + "}\n";
      } else {
        out += pad + "} else {\n";
        render_block(stmt.else_block, depth + 1, out);
        out += pad + "}\n";
      }
      break;
    case StmtKind::While:
      out += pad + "while " + render(*stmt.expr) + " {\n";
      render_block(stmt.block, depth + 1, out);
      out += pad + "}\n";
      break;
  }
}

void render_block(const std::vector<Stmt>& body, int depth, std::string& out) {
  for (const Stmt& stmt : body) render_stmt(stmt, depth, out);
}

void render_test_stmt(const TestStmt& stmt, std::string& out) {
  switch (stmt.kind) {
    case TestStmtKind::LocalBind:
      out += stmt.name + " := " + render(stmt.exprs[0]);
      break;
    case TestStmtKind::ExprStmt:
      out += render(stmt.exprs[0]);
      break;
    case TestStmtKind::AssertTrue:
      out += "assertTrue(" + render(stmt.exprs[0]) + ")";
      break;
    case TestStmtKind::AssertFalse:
      out += "assertFalse(" + render(stmt.exprs[0]) + ")";
      break;
    case TestStmtKind::AssertEqual:
      out += "assertEqual(" + render(stmt.exprs[0]) + ", " + render(stmt.exprs[1]) + ")";
      break;
  }
}

}  // namespace

std::string expr_text(const Expr& expr) { return render(expr); }

std::string stmt_text(const Stmt& stmt) {
  switch (stmt.kind) {
    case StmtKind::If: {
      std::string out = "if " + render(*stmt.expr) + " { ... }";
      if (!stmt.else_block.empty()) out += " else { ... }";
      return out;
    }
    case StmtKind::While:
      return "while " + render(*stmt.expr) + " { ... }";
    default: {
      std::string out;
      render_stmt(stmt, 0, out);
      if (!out.empty() && out.back() == '\n') out.pop_back();
      return out;
    }
  }
}

std::string test_stmt_text(const TestStmt& stmt) {
  std::string out;
  render_test_stmt(stmt, out);
  return out;
}

std::string pretty_print(const ClassDecl& cls) {
  std::string out = "class " + cls.name + " {\n";
  for (const FieldDecl& field : cls.fields) {
    out += indent_of(1) + "field " + field.name + " := ";
    out += field.is_bool ? (field.bool_init ? "true" : "false")
                         : std::to_string(field.int_init);
    out += "\n";
  }
  for (std::size_t i = 0; i < cls.methods.size(); ++i) {
    const MethodDecl& method = cls.methods[i];
    if (i > 0 || !cls.fields.empty()) out += "\n";
    out += indent_of(1) + "method " + method.name + "(";
    for (std::size_t p = 0; p < method.params.size(); ++p) {
      if (p > 0) out += ", ";
      out += method.params[p];
    }
    out += method.returns_value ? ") returns {\n" : ") {\n";
    render_block(method.body, 2, out);
    out += indent_of(1) + "}\n";
  }
  out += "}\n";
  return out;
}

std::string pretty_print(const TestSuite& suite) {
  std::string out = "suite " + suite.name + " {\n";
  for (std::size_t i = 0; i < suite.tests.size(); ++i) {
    const TestCase& test = suite.tests[i];
    if (i > 0) out += "\n";
    out += indent_of(1) + "test " + test.name + " {\n";
    for (const TestStmt& stmt : test.body) {
      out += indent_of(2);
      render_test_stmt(stmt, out);
      out += "\n";
    }
    out += indent_of(1) + "}\n";
  }
  out += "}\n";
  return out;
}

std::map<std::string, std::string> print_program(const Program& program) {
  std::map<std::string, std::string> out;
  auto append = [&](const std::string& file, const std::string& text) {
    std::string& slot = out[file];
    if (!slot.empty()) slot += "\n";
    slot += text;
  };
  for (const ClassDecl& cls : program.classes) append(cls.file, pretty_print(cls));
  for (const TestSuite& suite : program.suites) append(suite.file, pretty_print(suite));
  return out;
}

}  // namespace mutagoal
