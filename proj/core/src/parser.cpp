#include <string>
#include <utility>
#include <vector>

#include "frontend_internal.hpp"
#include "lexer.hpp"
#include "mutagoal/frontend.hpp"

namespace mutagoal {

namespace {

std::string found_desc(const Token& tok) {
  switch (tok.kind) {
    case Tok::Ident: return "identifier '" + tok.text + "'";
    case Tok::Int: return "integer " + tok.text;
    default: return tok_name(tok.kind);
  }
}

std::string join_expected(const std::vector<std::string>& expected) {
  std::string out;
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (i > 0) out += expected.size() == 2 ? " or " : (i + 1 == expected.size() ? ", or " : ", ");
    out += expected[i];
  }
  return out;
}

class Parser {
 public:
  Parser(std::string file, const std::string& text)
      : file_(std::move(file)), toks_(tokenize(file_, text)) {}

  std::vector<ClassDecl> classes() {
    std::vector<ClassDecl> out;
    while (!at(Tok::End)) out.push_back(parse_class());
    return out;
  }

  std::vector<TestSuite> suites() {
    std::vector<TestSuite> out;
    while (!at(Tok::End)) out.push_back(parse_suite());
    return out;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  bool at(Tok kind) const { return peek().kind == kind; }

  const Token& take() {
    const Token& tok = toks_[pos_];
    if (tok.kind != Tok::End) ++pos_;
    return tok;
  }

  [[noreturn]] void fail(std::vector<std::string> expected, std::string what = {}) {
    std::string message = what.empty()
        ? "expected " + join_expected(expected) + ", found " + found_desc(peek())
        : std::move(what);
    throw ParseError(file_, peek().span, message, std::move(expected));
  }

  const Token& expect(Tok kind) {
    if (!at(kind)) fail({tok_name(kind)});
    return take();
  }

  // Declarations ------------------------------------------------------------

  ClassDecl parse_class() {
    expect(Tok::KwClass);
    const Token& name = expect(Tok::Ident);
    ClassDecl cls;
    cls.name = name.text;
    cls.file = file_;
    cls.span = name.span;
    expect(Tok::LBrace);
    if (!at(Tok::RBrace)) {
      expect(Tok::Newline);
      while (!at(Tok::RBrace)) {
        if (at(Tok::KwField)) {
          cls.fields.push_back(parse_field());
        } else if (at(Tok::KwMethod)) {
          cls.methods.push_back(parse_method());
        } else {
          fail({"'field'", "'method'", "'}'"});
        }
      }
    }
    expect(Tok::RBrace);
    expect(Tok::Newline);
    return cls;
  }

  FieldDecl parse_field() {
    expect(Tok::KwField);
    const Token& name = expect(Tok::Ident);
    FieldDecl field;
    field.name = name.text;
    field.span = name.span;
    expect(Tok::Assign);
    if (at(Tok::Int)) {
      field.int_init = take().int_value;
    } else if (at(Tok::KwTrue)) {
      take();
      field.is_bool = true;
      field.bool_init = true;
    } else if (at(Tok::KwFalse)) {
      take();
      field.is_bool = true;
      field.bool_init = false;
    } else {
      fail({"integer", "'true'", "'false'"});
    }
    expect(Tok::Newline);
    return field;
  }

  MethodDecl parse_method() {
    expect(Tok::KwMethod);
    const Token& name = expect(Tok::Ident);
    MethodDecl method;
    method.name = name.text;
    method.span = name.span;
    expect(Tok::LParen);
    if (!at(Tok::RParen)) {
      method.params.push_back(expect(Tok::Ident).text);
      while (at(Tok::Comma)) {
        take();
        method.params.push_back(expect(Tok::Ident).text);
      }
    }
    expect(Tok::RParen);
    if (at(Tok::KwReturns)) {
      take();
      method.returns_value = true;
    }
    method.body = parse_block();
    expect(Tok::Newline);
    return method;
  }

  TestSuite parse_suite() {
    expect(Tok::KwSuite);
    const Token& name = expect(Tok::Ident);
    TestSuite suite;
    suite.name = name.text;
    suite.file = file_;
    suite.span = name.span;
    expect(Tok::LBrace);
    if (!at(Tok::RBrace)) {
      expect(Tok::Newline);
      while (!at(Tok::RBrace)) {
        if (!at(Tok::KwTest)) fail({"'test'", "'}'"});
        suite.tests.push_back(parse_test());
      }
    }
    expect(Tok::RBrace);
    expect(Tok::Newline);
    return suite;
  }

  TestCase parse_test() {
    expect(Tok::KwTest);
    const Token& name = expect(Tok::Ident);
    TestCase test;
    test.name = name.text;
    test.span = name.span;
    expect(Tok::LBrace);
    if (!at(Tok::RBrace)) {
      expect(Tok::Newline);
      while (!at(Tok::RBrace)) test.body.push_back(parse_test_stmt());
    }
    expect(Tok::RBrace);
    expect(Tok::Newline);
    return test;
  }

  // Statements --------------------------------------------------------------

  std::vector<Stmt> parse_block() {
    expect(Tok::LBrace);
    std::vector<Stmt> body;
    if (at(Tok::RBrace)) {
      take();
      return body;
    }
    expect(Tok::Newline);
    while (!at(Tok::RBrace)) body.push_back(parse_stmt());
    take();
    return body;
  }

  Stmt parse_stmt() {
    switch (peek().kind) {
      case Tok::KwIf: {
        Stmt stmt;
        stmt.kind = StmtKind::If;
        stmt.span = take().span;
        stmt.expr = parse_expr();
        stmt.block = parse_block();
        if (at(Tok::KwElse)) {
          take();
          stmt.else_block = parse_block();
        }
        expect(Tok::Newline);
        return stmt;
      }
      case Tok::KwWhile: {
        Stmt stmt;
        stmt.kind = StmtKind::While;
        stmt.span = take().span;
        stmt.expr = parse_expr();
        stmt.block = parse_block();
        expect(Tok::Newline);
        return stmt;
      }
      case Tok::KwReturn: {
        Stmt stmt;
        stmt.kind = StmtKind::Return;
        stmt.span = take().span;
        if (!at(Tok::Newline)) stmt.expr = parse_expr();
        expect(Tok::Newline);
        return stmt;
      }
      case Tok::KwSelf: {
        const Token& self_tok = take();
        expect(Tok::Dot);
        const Token& name = expect(Tok::Ident);
        Stmt stmt;
        stmt.span = self_tok.span;
        if (at(Tok::Assign)) {
          take();
          stmt.kind = StmtKind::FieldAssign;
          stmt.name = name.text;
          stmt.expr = parse_expr();
        } else if (at(Tok::LParen)) {
          stmt.kind = StmtKind::ExprStmt;
          Expr call;
          call.kind = ExprKind::Invoke;
          call.span = name.span;
          call.name = name.text;
          call.self_receiver = true;
          call.children = parse_args();
          stmt.expr = std::move(call);
        } else {
          fail({"':='", "'('"});
        }
        expect(Tok::Newline);
        return stmt;
      }
      case Tok::Ident: {
        const Token& name = take();
        Stmt stmt;
        stmt.span = name.span;
        if (at(Tok::Assign)) {
          take();
          stmt.kind = StmtKind::LocalBind;
          stmt.name = name.text;
          stmt.expr = parse_expr();
        } else if (at(Tok::Dot)) {
          take();
          const Token& method = expect(Tok::Ident);
          stmt.kind = StmtKind::ExprStmt;
          Expr call;
          call.kind = ExprKind::Invoke;
          call.span = method.span;
          call.name = method.text;
          call.receiver = name.text;
          call.children = parse_args();
          stmt.expr = std::move(call);
        } else {
          fail({"':='", "'.'"});
        }
        expect(Tok::Newline);
        return stmt;
      }
      default:
        fail({"'if'", "'while'", "'return'", "'self'", "identifier", "'}'"});
    }
  }

  TestStmt parse_test_stmt() {
    switch (peek().kind) {
      case Tok::KwAssertTrue:
      case Tok::KwAssertFalse: {
        const Token& kw = take();
        TestStmt stmt;
        stmt.kind = kw.kind == Tok::KwAssertTrue ? TestStmtKind::AssertTrue
                                                 : TestStmtKind::AssertFalse;
        stmt.span = kw.span;
        expect(Tok::LParen);
        stmt.exprs.push_back(parse_expr());
        if (at(Tok::Comma)) {
          fail({"')'"}, std::string(kw.kind == Tok::KwAssertTrue ? "assertTrue" : "assertFalse") +
                            " expects exactly one argument");
        }
        expect(Tok::RParen);
        expect(Tok::Newline);
        return stmt;
      }
      case Tok::KwAssertEqual: {
        const Token& kw = take();
        TestStmt stmt;
        stmt.kind = TestStmtKind::AssertEqual;
        stmt.span = kw.span;
        expect(Tok::LParen);
        stmt.exprs.push_back(parse_expr());
        if (at(Tok::RParen)) fail({"','"}, "assertEqual expects exactly two arguments");
        expect(Tok::Comma);
        stmt.exprs.push_back(parse_expr());
        if (at(Tok::Comma)) fail({"')'"}, "assertEqual expects exactly two arguments");
        expect(Tok::RParen);
        expect(Tok::Newline);
        return stmt;
      }
      case Tok::Ident: {
        const Token& name = take();
        TestStmt stmt;
        stmt.span = name.span;
        if (at(Tok::Assign)) {
          take();
          stmt.kind = TestStmtKind::LocalBind;
          stmt.name = name.text;
          stmt.exprs.push_back(parse_expr());
        } else if (at(Tok::Dot)) {
          take();
          const Token& method = expect(Tok::Ident);
          stmt.kind = TestStmtKind::ExprStmt;
          Expr call;
          call.kind = ExprKind::Invoke;
          call.span = method.span;
          call.name = method.text;
          call.receiver = name.text;
          call.children = parse_args();
          stmt.exprs.push_back(std::move(call));
        } else {
          fail({"':='", "'.'"});
        }
        expect(Tok::Newline);
        return stmt;
      }
      default:
        fail({"'assertTrue'", "'assertFalse'", "'assertEqual'", "identifier", "'}'"});
    }
  }

  // Expressions -------------------------------------------------------------

  std::vector<Expr> parse_args() {
    expect(Tok::LParen);
    std::vector<Expr> args;
    if (!at(Tok::RParen)) {
      args.push_back(parse_expr());
      while (at(Tok::Comma)) {
        take();
        args.push_back(parse_expr());
      }
    }
    expect(Tok::RParen);
    return args;
  }

  Expr binary(BinOp op, Span span, Expr lhs, Expr rhs) {
    Expr expr;
    expr.kind = ExprKind::Binary;
    expr.span = span;
    expr.op = op;
    expr.children.push_back(std::move(lhs));
    expr.children.push_back(std::move(rhs));
    return expr;
  }

  Expr parse_expr() { return parse_or(); }

  Expr parse_or() {
    Expr lhs = parse_and();
    while (at(Tok::KwOr)) {
      Span span = take().span;
      lhs = binary(BinOp::Or, span, std::move(lhs), parse_and());
    }
    return lhs;
  }

  Expr parse_and() {
    Expr lhs = parse_unary();
    while (at(Tok::KwAnd)) {
      Span span = take().span;
      lhs = binary(BinOp::And, span, std::move(lhs), parse_unary());
    }
    return lhs;
  }

  Expr parse_unary() {
    if (at(Tok::KwNot)) {
      Span span = take().span;
      Expr expr;
      expr.kind = ExprKind::Not;
      expr.span = span;
      expr.children.push_back(parse_unary());
      return expr;
    }
    return parse_rel();
  }

  static bool rel_op(Tok kind, BinOp& op) {
    switch (kind) {
      case Tok::EqEq: op = BinOp::Eq; return true;
      case Tok::NotEq: op = BinOp::Ne; return true;
      case Tok::Lt: op = BinOp::Lt; return true;
      case Tok::Le: op = BinOp::Le; return true;
      case Tok::Gt: op = BinOp::Gt; return true;
      case Tok::Ge: op = BinOp::Ge; return true;
      default: return false;
    }
  }

  Expr parse_rel() {
    Expr lhs = parse_add();
    BinOp op;
    if (!rel_op(peek().kind, op)) return lhs;
    Span span = take().span;
    Expr rhs = parse_add();
    BinOp chained;
    if (rel_op(peek().kind, chained)) {
      fail({"end of line"}, "relational operators do not chain; parenthesize");
    }
    return binary(op, span, std::move(lhs), std::move(rhs));
  }

  Expr parse_add() {
    Expr lhs = parse_mul();
    while (at(Tok::Plus) || at(Tok::Minus)) {
      BinOp op = at(Tok::Plus) ? BinOp::Add : BinOp::Sub;
      Span span = take().span;
      lhs = binary(op, span, std::move(lhs), parse_mul());
    }
    return lhs;
  }

  Expr parse_mul() {
    Expr lhs = parse_primary();
    while (at(Tok::Star) || at(Tok::Slash) || at(Tok::Percent)) {
      BinOp op = at(Tok::Star) ? BinOp::Mul : at(Tok::Slash) ? BinOp::Div : BinOp::Mod;
      Span span = take().span;
      lhs = binary(op, span, std::move(lhs), parse_primary());
    }
    return lhs;
  }

  Expr parse_primary() {
    switch (peek().kind) {
      case Tok::Int: {
        const Token& tok = take();
        Expr expr;
        expr.kind = ExprKind::IntLit;
        expr.span = tok.span;
        expr.int_value = tok.int_value;
        return expr;
      }
      case Tok::KwTrue:
      case Tok::KwFalse: {
        const Token& tok = take();
        Expr expr;
        expr.kind = ExprKind::BoolLit;
        expr.span = tok.span;
        expr.bool_value = tok.kind == Tok::KwTrue;
        return expr;
      }
      case Tok::LParen: {
        take();
        Expr expr = parse_expr();
        expect(Tok::RParen);
        return expr;
      }
      case Tok::KwNew: {
        Span span = take().span;
        const Token& cls = expect(Tok::Ident);
        Expr expr;
        expr.kind = ExprKind::New;
        expr.span = span;
        expr.name = cls.text;
        expr.children = parse_args();
        return expr;
      }
      case Tok::KwSelf: {
        Span span = take().span;
        expect(Tok::Dot);
        const Token& name = expect(Tok::Ident);
        Expr expr;
        expr.span = name.span;
        expr.name = name.text;
        if (at(Tok::LParen)) {
          expr.kind = ExprKind::Invoke;
          expr.self_receiver = true;
          expr.children = parse_args();
        } else {
          expr.kind = ExprKind::FieldRead;
          expr.span = span;
        }
        return expr;
      }
      case Tok::Ident: {
        const Token& name = take();
        Expr expr;
        expr.span = name.span;
        if (at(Tok::Dot)) {
          take();
          const Token& method = expect(Tok::Ident);
          expr.kind = ExprKind::Invoke;
          expr.span = method.span;
          expr.name = method.text;
          expr.receiver = name.text;
          expr.children = parse_args();
        } else {
          expr.kind = ExprKind::LocalRead;
          expr.name = name.text;
        }
        return expr;
      }
      default:
        fail({"integer", "'true'", "'false'", "'('", "identifier", "'self'", "'new'"});
    }
  }

  std::string file_;
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace

std::vector<ClassDecl> parse_class_file(const std::string& file, const std::string& text) {
  return Parser(file, text).classes();
}

std::vector<TestSuite> parse_suite_file(const std::string& file, const std::string& text) {
  return Parser(file, text).suites();
}

Program parse_program(const std::map<std::string, std::string>& source_tree) {
  Program program;
  for (const auto& [path, text] : source_tree) {
    const bool is_mini = path.ends_with(".mini");
    if (is_mini && path.starts_with("src/")) {
      for (ClassDecl& cls : parse_class_file(path, text)) {
        program.classes.push_back(std::move(cls));
      }
    } else if (is_mini && path.starts_with("tests/")) {
      for (TestSuite& suite : parse_suite_file(path, text)) {
        program.suites.push_back(std::move(suite));
      }
    } else {
      throw LoadError(path, Span{1, 1, 1, 1},
                      "unrecognized project path; expected src/**.mini or tests/**.mini");
    }
  }
  resolve_program(program);
  return program;
}

}  // namespace mutagoal
