#include "mutagoal/ast.hpp"

namespace mutagoal {

bool is_arith(BinOp op) {
  switch (op) {
    case BinOp::Add:
    case BinOp::Sub:
    case BinOp::Mul:
    case BinOp::Div:
    case BinOp::Mod:
      return true;
    default:
      return false;
  }
}

bool is_relational(BinOp op) {
  switch (op) {
    case BinOp::Eq:
    case BinOp::Ne:
    case BinOp::Lt:
    case BinOp::Le:
    case BinOp::Gt:
    case BinOp::Ge:
      return true;
    default:
      return false;
  }
}

bool is_logical(BinOp op) { return op == BinOp::And || op == BinOp::Or; }

const char* binop_symbol(BinOp op) {
  switch (op) {
    case BinOp::Add: return "+";
    case BinOp::Sub: return "-";
    case BinOp::Mul: return "*";
    case BinOp::Div: return "/";
    case BinOp::Mod: return "%";
    case BinOp::Eq: return "==";
    case BinOp::Ne: return "!=";
    case BinOp::Lt: return "<";
    case BinOp::Le: return "<=";
    case BinOp::Gt: return ">";
    case BinOp::Ge: return ">=";
    case BinOp::And: return "and";
    case BinOp::Or: return "or";
  }
  return "?";
}

bool is_assertion(TestStmtKind kind) {
  return kind == TestStmtKind::AssertTrue || kind == TestStmtKind::AssertFalse ||
         kind == TestStmtKind::AssertEqual;
}

const MethodDecl* ClassDecl::find_method(const std::string& wanted) const {
  auto it = method_index.find(wanted);
  return it == method_index.end() ? nullptr : &methods[it->second];
}

int ClassDecl::find_field(const std::string& wanted) const {
  auto it = field_index.find(wanted);
  return it == field_index.end() ? -1 : it->second;
}

const ClassDecl* Program::find_class(const std::string& name) const {
  auto it = class_index.find(name);
  return it == class_index.end() ? nullptr : &classes[it->second];
}

const TestSuite* Program::find_suite(const std::string& name) const {
  auto it = suite_index.find(name);
  return it == suite_index.end() ? nullptr : &suites[it->second];
}

std::vector<TestRef> Program::all_tests() const {
  // Suites are stored in file-path, then declaration order, which is exactly
  // the canonical global order.
  std::vector<TestRef> out;
  for (int s = 0; s < static_cast<int>(suites.size()); ++s) {
    for (int t = 0; t < static_cast<int>(suites[s].tests.size()); ++t) {
      out.push_back(TestRef{s, t});
    }
  }
  return out;
}

std::optional<TestRef> Program::find_test(const std::string& id) const {
  auto dot = id.find('.');
  if (dot == std::string::npos) return std::nullopt;
  auto it = suite_index.find(id.substr(0, dot));
  if (it == suite_index.end()) return std::nullopt;
  const TestSuite& suite = suites[it->second];
  const std::string test_name = id.substr(dot + 1);
  for (int t = 0; t < static_cast<int>(suite.tests.size()); ++t) {
    if (suite.tests[t].name == test_name) return TestRef{it->second, t};
  }
  return std::nullopt;
}

bool structural_equal(const Expr& a, const Expr& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case ExprKind::IntLit:
      if (a.int_value != b.int_value) return false;
      break;
    case ExprKind::BoolLit:
      if (a.bool_value != b.bool_value) return false;
      break;
    case ExprKind::LocalRead:
    case ExprKind::FieldRead:
    case ExprKind::New:
      if (a.name != b.name) return false;
      break;
    case ExprKind::Binary:
      if (a.op != b.op) return false;
      break;
    case ExprKind::Not:
      break;
    case ExprKind::Invoke:
      if (a.name != b.name || a.self_receiver != b.self_receiver) return false;
      if (!a.self_receiver && a.receiver != b.receiver) return false;
      break;
  }
  if (a.children.size() != b.children.size()) return false;
  for (std::size_t i = 0; i < a.children.size(); ++i) {
    if (!structural_equal(a.children[i], b.children[i])) return false;
  }
  return true;
}

namespace {

bool blocks_equal(const std::vector<Stmt>& a, const std::vector<Stmt>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!structural_equal(a[i], b[i])) return false;
  }
  return true;
}

}  // namespace

bool structural_equal(const Stmt& a, const Stmt& b) {
  if (a.kind != b.kind || a.name != b.name) return false;
  if (a.expr.has_value() != b.expr.has_value()) return false;
  if (a.expr && !structural_equal(*a.expr, *b.expr)) return false;
  return blocks_equal(a.block, b.block) && blocks_equal(a.else_block, b.else_block);
}

bool structural_equal(const TestStmt& a, const TestStmt& b) {
  if (a.kind != b.kind || a.name != b.name) return false;
  if (a.exprs.size() != b.exprs.size()) return false;
  for (std::size_t i = 0; i < a.exprs.size(); ++i) {
    if (!structural_equal(a.exprs[i], b.exprs[i])) return false;
  }
  return true;
}

namespace {

bool classes_equal(const ClassDecl& a, const ClassDecl& b) {
  if (a.name != b.name) return false;
  if (a.fields.size() != b.fields.size() || a.methods.size() != b.methods.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.fields.size(); ++i) {
    const FieldDecl& fa = a.fields[i];
    const FieldDecl& fb = b.fields[i];
    if (fa.name != fb.name || fa.is_bool != fb.is_bool) return false;
    if (fa.is_bool ? fa.bool_init != fb.bool_init : fa.int_init != fb.int_init) {
      return false;
    }
  }
  for (std::size_t i = 0; i < a.methods.size(); ++i) {
    const MethodDecl& ma = a.methods[i];
    const MethodDecl& mb = b.methods[i];
    if (ma.name != mb.name || ma.params != mb.params ||
        ma.returns_value != mb.returns_value) {
      return false;
    }
    if (!blocks_equal(ma.body, mb.body)) return false;
  }
  return true;
}

bool suites_equal(const TestSuite& a, const TestSuite& b) {
  if (a.name != b.name || a.tests.size() != b.tests.size()) return false;
  for (std::size_t i = 0; i < a.tests.size(); ++i) {
    const TestCase& ta = a.tests[i];
    const TestCase& tb = b.tests[i];
    if (ta.name != tb.name || ta.body.size() != tb.body.size()) return false;
    for (std::size_t j = 0; j < ta.body.size(); ++j) {
      if (!structural_equal(ta.body[j], tb.body[j])) return false;
    }
  }
  return true;
}

}  // namespace

bool structural_equal(const Program& a, const Program& b) {
  if (a.classes.size() != b.classes.size() || a.suites.size() != b.suites.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.classes.size(); ++i) {
    if (!classes_equal(a.classes[i], b.classes[i])) return false;
  }
  for (std::size_t i = 0; i < a.suites.size(); ++i) {
    if (!suites_equal(a.suites[i], b.suites[i])) return false;
  }
  return true;
}

namespace {

void walk_rec(const std::vector<Stmt>& body, int& next,
              const std::function<void(const Stmt&, int)>& fn) {
  for (const Stmt& stmt : body) {
    fn(stmt, next++);
    if (stmt.kind == StmtKind::If) {
      walk_rec(stmt.block, next, fn);
      walk_rec(stmt.else_block, next, fn);
    } else if (stmt.kind == StmtKind::While) {
      walk_rec(stmt.block, next, fn);
    }
  }
}

}  // namespace

void walk_statements(const std::vector<Stmt>& body,
                     const std::function<void(const Stmt&, int index)>& fn) {
  int next = 0;
  walk_rec(body, next, fn);
}

void walk_expr(const Expr& expr, const std::function<void(const Expr&)>& fn) {
  fn(expr);
  for (const Expr& child : expr.children) walk_expr(child, fn);
}

}  // namespace mutagoal
