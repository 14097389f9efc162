#include <set>
#include <string>

#include "frontend_internal.hpp"
#include "mutagoal/ast.hpp"

namespace mutagoal {

namespace {

class Resolver {
 public:
  explicit Resolver(Program& program) : program_(program) {}

  void run() {
    index_classes();
    index_suites();
    for (const ClassDecl& cls : program_.classes) check_class(cls);
    for (const TestSuite& suite : program_.suites) check_suite(suite);
  }

 private:
  [[noreturn]] void fail(const std::string& file, Span span, const std::string& message) {
    throw ResolveError(file, span, message);
  }

  void index_classes() {
    for (int i = 0; i < static_cast<int>(program_.classes.size()); ++i) {
      ClassDecl& cls = program_.classes[i];
      if (!program_.class_index.emplace(cls.name, i).second) {
        fail(cls.file, cls.span, "duplicate class '" + cls.name + "'");
      }
      for (int f = 0; f < static_cast<int>(cls.fields.size()); ++f) {
        const FieldDecl& field = cls.fields[f];
        if (!cls.field_index.emplace(field.name, f).second) {
          fail(cls.file, field.span,
               "duplicate field '" + field.name + "' in class '" + cls.name + "'");
        }
      }
      for (int m = 0; m < static_cast<int>(cls.methods.size()); ++m) {
        const MethodDecl& method = cls.methods[m];
        if (!cls.method_index.emplace(method.name, m).second) {
          fail(cls.file, method.span,
               "duplicate method '" + method.name + "' in class '" + cls.name + "'");
        }
        std::set<std::string> params(method.params.begin(), method.params.end());
        if (params.size() != method.params.size()) {
          fail(cls.file, method.span,
               "duplicate parameter in method '" + cls.name + "." + method.name + "'");
        }
        method_names_.insert(method.name);
      }
    }
  }

  void index_suites() {
    for (int i = 0; i < static_cast<int>(program_.suites.size()); ++i) {
      const TestSuite& suite = program_.suites[i];
      if (!suite.name.ends_with("Test")) {
        fail(suite.file, suite.span,
             "suite name '" + suite.name + "' must end with 'Test'");
      }
      if (!program_.suite_index.emplace(suite.name, i).second) {
        fail(suite.file, suite.span, "duplicate suite '" + suite.name + "'");
      }
      std::set<std::string> seen;
      for (const TestCase& test : suite.tests) {
        if (!seen.insert(test.name).second) {
          fail(suite.file, test.span,
               "duplicate test '" + test.name + "' in suite '" + suite.name + "'");
        }
      }
    }
  }

  void check_class(const ClassDecl& cls) {
    for (const MethodDecl& method : cls.methods) {
      walk_statements(method.body, [&](const Stmt& stmt, int) {
        check_stmt(cls, method, stmt);
      });
    }
  }

  void check_stmt(const ClassDecl& cls, const MethodDecl& method, const Stmt& stmt) {
    if (stmt.kind == StmtKind::Return) {
      if (method.returns_value && !stmt.expr) {
        fail(cls.file, stmt.span,
             "method '" + cls.name + "." + method.name +
                 "' returns a value; bare return is not allowed");
      }
      if (!method.returns_value && stmt.expr) {
        fail(cls.file, stmt.span,
             "method '" + cls.name + "." + method.name +
                 "' returns no value; return must be bare");
      }
    }
    if (stmt.kind == StmtKind::FieldAssign && cls.find_field(stmt.name) < 0) {
      fail(cls.file, stmt.span,
           "class '" + cls.name + "' has no field '" + stmt.name + "'");
    }
    if (stmt.expr) check_expr(cls.file, &cls, *stmt.expr);
  }

  void check_suite(const TestSuite& suite) {
    for (const TestCase& test : suite.tests) {
      const std::string id = suite.name + "." + test.name;
      if (test.body.empty()) {
        fail(suite.file, test.span, "test '" + id + "' has an empty body");
      }
      bool asserts = false;
      for (const TestStmt& stmt : test.body) {
        if (is_assertion(stmt.kind)) asserts = true;
        for (const Expr& expr : stmt.exprs) check_expr(suite.file, nullptr, expr);
      }
      if (!asserts) {
        program_.lints.push_back(
            Lint{suite.file, test.span, id, "test has no assertions"});
      }
    }
  }

  // cls is the enclosing class for method bodies, null inside tests.
  void check_expr(const std::string& file, const ClassDecl* cls, const Expr& root) {
    walk_expr(root, [&](const Expr& expr) {
      switch (expr.kind) {
        case ExprKind::FieldRead:
          if (!cls) fail(file, expr.span, "'self' is not available in tests");
          if (cls->find_field(expr.name) < 0) {
            fail(file, expr.span,
                 "class '" + cls->name + "' has no field '" + expr.name + "'");
          }
          break;
        case ExprKind::New: {
          const ClassDecl* target = program_.find_class(expr.name);
          if (!target) fail(file, expr.span, "unknown class '" + expr.name + "'");
          if (expr.children.size() > target->fields.size()) {
            fail(file, expr.span,
                 "constructor for '" + expr.name + "' takes at most " +
                     std::to_string(target->fields.size()) + " arguments");
          }
          break;
        }
        case ExprKind::Invoke:
          if (expr.self_receiver) {
            if (!cls) fail(file, expr.span, "'self' is not available in tests");
            if (!cls->find_method(expr.name)) {
              fail(file, expr.span,
                   "class '" + cls->name + "' has no method '" + expr.name + "'");
            }
          } else if (!method_names_.contains(expr.name)) {
            fail(file, expr.span, "no class declares a method '" + expr.name + "'");
          }
          break;
        default:
          break;
      }
    });
  }

  Program& program_;
  std::set<std::string> method_names_;
};

}  // namespace

void resolve_program(Program& program) { Resolver(program).run(); }

}  // namespace mutagoal
