#include "mutagoal/interp.hpp"

#include <limits>
#include <map>
#include <utility>
#include <variant>

namespace mutagoal {

const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DivByZero: return "div-by-zero";
    case ErrorKind::ModByZero: return "mod-by-zero";
    case ErrorKind::Overflow: return "overflow";
    case ErrorKind::TypeError: return "type-error";
    case ErrorKind::UnboundLocal: return "unbound-local";
    case ErrorKind::UnknownMethod: return "unknown-method";
    case ErrorKind::ArityMismatch: return "arity-mismatch";
    case ErrorKind::NotAnObject: return "not-an-object";
    case ErrorKind::KindMismatch: return "kind-mismatch";
    case ErrorKind::MissingReturn: return "missing-return";
    case ErrorKind::VoidValue: return "void-value";
    case ErrorKind::RecursionLimit: return "recursion-limit";
  }
  return "?";
}

std::string verdict_text(const Verdict& verdict) {
  switch (verdict.kind) {
    case VerdictKind::Pass:
      return "pass";
    case VerdictKind::AssertionFailure:
      return "assertion-failure at " + std::to_string(verdict.location.line) + ":" +
             std::to_string(verdict.location.col) + " (expected " + verdict.expected +
             ", actual " + verdict.actual + ")";
    case VerdictKind::ExecutionError:
      return "execution-error: " + std::string(error_kind_name(verdict.error)) + " at " +
             std::to_string(verdict.location.line) + ":" +
             std::to_string(verdict.location.col) + " (" + verdict.detail + ")";
    case VerdictKind::BudgetExceeded:
      return "step-budget-exceeded";
  }
  return "?";
}

namespace {

struct ObjRef {
  int index = 0;
};

using Value = std::variant<std::monostate, std::int64_t, bool, ObjRef>;

struct Object {
  int class_index = 0;
  std::vector<Value> fields;  // parallel to the class's declared fields
};

// Non-local exits of the tree walk; caught in run_test, never escape.
struct BudgetSignal {};
struct ErrorSignal {
  ErrorKind kind;
  Span span;
  std::string detail;
};
struct AssertSignal {
  Span span;
  std::string expected;
  std::string actual;
};

constexpr int kMaxCallDepth = 256;

class Interp {
 public:
  Interp(const Program& program, std::int64_t budget)
      : program_(program), budget_(budget) {}

  void exec_test(const TestCase& test) {
    std::map<std::string, Value> locals;
    for (const TestStmt& stmt : test.body) exec_test_stmt(stmt, locals);
  }

  std::int64_t steps() const { return steps_; }

 private:
  struct Frame {
    const ClassDecl* cls = nullptr;  // enclosing class; null in test bodies
    ObjRef self;
    std::map<std::string, Value>* locals = nullptr;
    std::optional<Value> ret;
  };

  enum class Flow { Normal, Returned };

  void step() {
    if (steps_ >= budget_) throw BudgetSignal{};
    ++steps_;
  }

  [[noreturn]] void error(ErrorKind kind, Span span, std::string detail) {
    throw ErrorSignal{kind, span, std::move(detail)};
  }

  static const char* kind_name(const Value& value) {
    switch (value.index()) {
      case 1: return "integer";
      case 2: return "boolean";
      case 3: return "object";
      default: return "void";
    }
  }

  std::string render(const Value& value) const {
    if (const auto* i = std::get_if<std::int64_t>(&value)) return std::to_string(*i);
    if (const auto* b = std::get_if<bool>(&value)) return *b ? "true" : "false";
    if (const auto* o = std::get_if<ObjRef>(&value)) {
      return program_.classes[heap_[o->index].class_index].name + "@" +
             std::to_string(o->index);
    }
    return "void";
  }

  std::int64_t want_int(const Value& value, Span span, const char* what) {
    if (const auto* i = std::get_if<std::int64_t>(&value)) return *i;
    error(ErrorKind::TypeError, span,
          std::string(what) + " must be an integer, got " + kind_name(value));
  }

  bool want_bool(const Value& value, Span span, const char* what) {
    if (const auto* b = std::get_if<bool>(&value)) return *b;
    error(ErrorKind::TypeError, span,
          std::string(what) + " must be a boolean, got " + kind_name(value));
  }

  // Tests -------------------------------------------------------------------

  void exec_test_stmt(const TestStmt& stmt, std::map<std::string, Value>& locals) {
    step();
    Frame frame;
    frame.locals = &locals;
    switch (stmt.kind) {
      case TestStmtKind::LocalBind:
        locals[stmt.name] = eval(stmt.exprs[0], frame, false);
        break;
      case TestStmtKind::ExprStmt:
        eval(stmt.exprs[0], frame, true);
        break;
      case TestStmtKind::AssertTrue: {
        if (!want_bool(eval(stmt.exprs[0], frame, false), stmt.span, "assertTrue argument")) {
          throw AssertSignal{stmt.span, "true", "false"};
        }
        break;
      }
      case TestStmtKind::AssertFalse: {
        if (want_bool(eval(stmt.exprs[0], frame, false), stmt.span, "assertFalse argument")) {
          throw AssertSignal{stmt.span, "false", "true"};
        }
        break;
      }
      case TestStmtKind::AssertEqual: {
        Value actual = eval(stmt.exprs[0], frame, false);
        Value expected = eval(stmt.exprs[1], frame, false);
        if (!values_equal(actual, expected, stmt.span)) {
          throw AssertSignal{stmt.span, render(expected), render(actual)};
        }
        break;
      }
    }
  }

  // Statements --------------------------------------------------------------

  Flow exec_block(const std::vector<Stmt>& body, Frame& frame) {
    for (const Stmt& stmt : body) {
      if (exec_stmt(stmt, frame) == Flow::Returned) return Flow::Returned;
    }
    return Flow::Normal;
  }

  Flow exec_stmt(const Stmt& stmt, Frame& frame) {
    step();
    switch (stmt.kind) {
      case StmtKind::LocalBind:
        (*frame.locals)[stmt.name] = eval(*stmt.expr, frame, false);
        return Flow::Normal;
      case StmtKind::FieldAssign: {
        Value value = eval(*stmt.expr, frame, false);
        Object& obj = heap_[frame.self.index];
        const int index = frame.cls->find_field(stmt.name);
        store_field(obj, *frame.cls, index, std::move(value), stmt.span);
        return Flow::Normal;
      }
      case StmtKind::If: {
        const bool cond = want_bool(eval(*stmt.expr, frame, false), stmt.span, "condition");
        return exec_block(cond ? stmt.block : stmt.else_block, frame);
      }
      case StmtKind::While:
        while (want_bool(eval(*stmt.expr, frame, false), stmt.span, "condition")) {
          if (exec_block(stmt.block, frame) == Flow::Returned) return Flow::Returned;
        }
        return Flow::Normal;
      case StmtKind::Return:
        if (stmt.expr) frame.ret = eval(*stmt.expr, frame, false);
        return Flow::Returned;
      case StmtKind::ExprStmt:
        eval(*stmt.expr, frame, true);
        return Flow::Normal;
    }
    return Flow::Normal;
  }

  void store_field(Object& obj, const ClassDecl& cls, int index, Value value, Span span) {
    const FieldDecl& decl = cls.fields[index];
    const bool ok = decl.is_bool ? std::holds_alternative<bool>(value)
                                 : std::holds_alternative<std::int64_t>(value);
    if (!ok) {
      error(ErrorKind::KindMismatch, span,
            "field '" + decl.name + "' holds " +
                std::string(decl.is_bool ? "a boolean" : "an integer") + ", got " +
                kind_name(value));
    }
    obj.fields[index] = std::move(value);
  }

  // Expressions -------------------------------------------------------------

  Value eval(const Expr& expr, Frame& frame, bool stmt_root) {
    step();
    switch (expr.kind) {
      case ExprKind::IntLit:
        return expr.int_value;
      case ExprKind::BoolLit:
        return expr.bool_value;
      case ExprKind::LocalRead: {
        auto it = frame.locals->find(expr.name);
        if (it == frame.locals->end()) {
          error(ErrorKind::UnboundLocal, expr.span, "'" + expr.name + "' is not bound");
        }
        return it->second;
      }
      case ExprKind::FieldRead: {
        const Object& obj = heap_[frame.self.index];
        return obj.fields[frame.cls->find_field(expr.name)];
      }
      case ExprKind::Not:
        return !want_bool(eval(expr.children[0], frame, false), expr.span,
                          "operand of 'not'");
      case ExprKind::Binary:
        return eval_binary(expr, frame);
      case ExprKind::New:
        return eval_new(expr, frame);
      case ExprKind::Invoke:
        return eval_invoke(expr, frame, stmt_root);
    }
    return {};
  }

  Value eval_binary(const Expr& expr, Frame& frame) {
    const BinOp op = expr.op;
    if (is_logical(op)) {
      const bool lhs = want_bool(eval(expr.children[0], frame, false), expr.span,
                                 "left operand");
      if (op == BinOp::And && !lhs) return false;
      if (op == BinOp::Or && lhs) return true;
      return want_bool(eval(expr.children[1], frame, false), expr.span, "right operand");
    }
    Value lhs = eval(expr.children[0], frame, false);
    Value rhs = eval(expr.children[1], frame, false);
    if (op == BinOp::Eq || op == BinOp::Ne) {
      const bool eq = values_equal(lhs, rhs, expr.span);
      return op == BinOp::Eq ? eq : !eq;
    }
    const std::int64_t a = want_int(lhs, expr.span, "left operand");
    const std::int64_t b = want_int(rhs, expr.span, "right operand");
    switch (op) {
      case BinOp::Lt: return a < b;
      case BinOp::Le: return a <= b;
      case BinOp::Gt: return a > b;
      case BinOp::Ge: return a >= b;
      case BinOp::Add: {
        std::int64_t r;
        if (__builtin_add_overflow(a, b, &r)) {
          error(ErrorKind::Overflow, expr.span,
                std::to_string(a) + " + " + std::to_string(b) + " overflows");
        }
        return r;
      }
      case BinOp::Sub: {
        std::int64_t r;
        if (__builtin_sub_overflow(a, b, &r)) {
          error(ErrorKind::Overflow, expr.span,
                std::to_string(a) + " - " + std::to_string(b) + " overflows");
        }
        return r;
      }
      case BinOp::Mul: {
        std::int64_t r;
        if (__builtin_mul_overflow(a, b, &r)) {
          error(ErrorKind::Overflow, expr.span,
                std::to_string(a) + " * " + std::to_string(b) + " overflows");
        }
        return r;
      }
      case BinOp::Div:
        if (b == 0) error(ErrorKind::DivByZero, expr.span, std::to_string(a) + " / 0");
        if (a == std::numeric_limits<std::int64_t>::min() && b == -1) {
          error(ErrorKind::Overflow, expr.span,
                std::to_string(a) + " / -1 overflows");
        }
        return a / b;
      case BinOp::Mod:
        if (b == 0) error(ErrorKind::ModByZero, expr.span, std::to_string(a) + " % 0");
        if (a == std::numeric_limits<std::int64_t>::min() && b == -1) {
          error(ErrorKind::Overflow, expr.span,
                std::to_string(a) + " % -1 overflows");
        }
        return a % b;
      default:
        break;
    }
    return {};
  }

  bool values_equal(const Value& a, const Value& b, Span span) {
    if (std::holds_alternative<std::int64_t>(a) && std::holds_alternative<std::int64_t>(b)) {
      return std::get<std::int64_t>(a) == std::get<std::int64_t>(b);
    }
    if (std::holds_alternative<bool>(a) && std::holds_alternative<bool>(b)) {
      return std::get<bool>(a) == std::get<bool>(b);
    }
    if (std::holds_alternative<ObjRef>(a) && std::holds_alternative<ObjRef>(b)) {
      return std::get<ObjRef>(a).index == std::get<ObjRef>(b).index;
    }
    error(ErrorKind::TypeError, span,
          std::string("cannot compare ") + kind_name(a) + " with " + kind_name(b));
  }

  Value eval_new(const Expr& expr, Frame& frame) {
    const int class_index = program_.class_index.at(expr.name);
    const ClassDecl& cls = program_.classes[class_index];
    std::vector<Value> args;
    args.reserve(expr.children.size());
    for (const Expr& arg : expr.children) args.push_back(eval(arg, frame, false));

    Object obj;
    obj.class_index = class_index;
    obj.fields.reserve(cls.fields.size());
    for (const FieldDecl& field : cls.fields) {
      obj.fields.push_back(field.is_bool ? Value(field.bool_init) : Value(field.int_init));
    }
    for (std::size_t i = 0; i < args.size(); ++i) {
      store_field(obj, cls, static_cast<int>(i), std::move(args[i]), expr.span);
    }
    const int index = static_cast<int>(heap_.size());
    heap_.push_back(std::move(obj));
    return ObjRef{index};
  }

  Value eval_invoke(const Expr& expr, Frame& frame, bool stmt_root) {
    Value receiver;
    if (expr.self_receiver) {
      receiver = frame.self;
    } else {
      auto it = frame.locals->find(expr.receiver);
      if (it == frame.locals->end()) {
        error(ErrorKind::UnboundLocal, expr.span, "'" + expr.receiver + "' is not bound");
      }
      receiver = it->second;
    }
    const auto* ref = std::get_if<ObjRef>(&receiver);
    if (!ref) {
      error(ErrorKind::NotAnObject, expr.span,
            "cannot invoke '" + expr.name + "' on " + kind_name(receiver));
    }
    const ObjRef self = *ref;
    const ClassDecl& cls = program_.classes[heap_[self.index].class_index];
    const MethodDecl* method = cls.find_method(expr.name);
    if (!method) {
      error(ErrorKind::UnknownMethod, expr.span,
            "class '" + cls.name + "' has no method '" + expr.name + "'");
    }
    if (method->params.size() != expr.children.size()) {
      error(ErrorKind::ArityMismatch, expr.span,
            "'" + cls.name + "." + method->name + "' takes " +
                std::to_string(method->params.size()) + " arguments, got " +
                std::to_string(expr.children.size()));
    }
    std::map<std::string, Value> locals;
    for (std::size_t i = 0; i < method->params.size(); ++i) {
      locals[method->params[i]] = eval(expr.children[i], frame, false);
    }

    if (depth_ >= kMaxCallDepth) {
      error(ErrorKind::RecursionLimit, expr.span,
            "call depth exceeds " + std::to_string(kMaxCallDepth));
    }
    ++depth_;
    Frame callee;
    callee.cls = &cls;
    callee.self = self;
    callee.locals = &locals;
    exec_block(method->body, callee);
    --depth_;

    if (method->returns_value) {
      if (!callee.ret) {
        error(ErrorKind::MissingReturn, expr.span,
              "'" + cls.name + "." + method->name + "' completed without returning");
      }
      return *callee.ret;
    }
    if (!stmt_root) {
      error(ErrorKind::VoidValue, expr.span,
            "'" + cls.name + "." + method->name + "' returns no value");
    }
    return {};
  }

  const Program& program_;
  std::int64_t budget_;
  std::int64_t steps_ = 0;
  int depth_ = 0;
  std::vector<Object> heap_;
};

}  // namespace

TestOutcome run_test(const Program& program, TestRef test, const CostModel& cost) {
  const auto start = std::chrono::steady_clock::now();
  TestOutcome out;
  out.test_id = program.test_id(test);
  Interp interp(program, cost.step_budget);
  try {
    interp.exec_test(program.test(test));
    out.verdict.kind = VerdictKind::Pass;
  } catch (const AssertSignal& sig) {
    out.verdict.kind = VerdictKind::AssertionFailure;
    out.verdict.location = sig.span;
    out.verdict.expected = sig.expected;
    out.verdict.actual = sig.actual;
  } catch (const ErrorSignal& sig) {
    out.verdict.kind = VerdictKind::ExecutionError;
    out.verdict.location = sig.span;
    out.verdict.error = sig.kind;
    out.verdict.detail = sig.detail;
  } catch (const BudgetSignal&) {
    out.verdict.kind = VerdictKind::BudgetExceeded;
  }
  out.steps = interp.steps();
  out.wall_time = std::chrono::duration_cast<std::chrono::nanoseconds>(
      std::chrono::steady_clock::now() - start);
  return out;
}

std::vector<TestOutcome> run_suite(const Program& program,
                                   const std::vector<TestRef>& tests,
                                   const CostModel& cost, bool early_stop) {
  std::vector<TestOutcome> out;
  out.reserve(tests.size());
  for (TestRef test : tests) {
    out.push_back(run_test(program, test, cost));
    if (early_stop && !out.back().passed()) break;
  }
  return out;
}

}  // namespace mutagoal
