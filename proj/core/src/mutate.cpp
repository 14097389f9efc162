#include "mutagoal/mutate.hpp"

#include <limits>
#include <utility>

#include "mutagoal/frontend.hpp"

namespace mutagoal {

const char* mutop_name(MutOp op) {
  switch (op) {
    case MutOp::AOR: return "AOR";
    case MutOp::CNB: return "CNB";
    case MutOp::CRP: return "CRP";
    case MutOp::LCR: return "LCR";
    case MutOp::ROR: return "ROR";
  }
  return "?";
}

std::optional<MutOp> mutop_from_name(const std::string& name) {
  for (MutOp op : all_mutops()) {
    if (name == mutop_name(op)) return op;
  }
  return std::nullopt;
}

const std::vector<MutOp>& all_mutops() {
  static const std::vector<MutOp> ops = {MutOp::AOR, MutOp::CNB, MutOp::CRP,
                                         MutOp::LCR, MutOp::ROR};
  return ops;
}

namespace {

std::optional<BinOp> aor_swap(BinOp op) {
  switch (op) {
    case BinOp::Add: return BinOp::Sub;
    case BinOp::Sub: return BinOp::Add;
    case BinOp::Mul: return BinOp::Div;
    case BinOp::Div: return BinOp::Mul;
    case BinOp::Mod: return BinOp::Mul;
    default: return std::nullopt;
  }
}

std::optional<BinOp> ror_swap(BinOp op) {
  switch (op) {
    case BinOp::Lt: return BinOp::Le;
    case BinOp::Le: return BinOp::Lt;
    case BinOp::Gt: return BinOp::Ge;
    case BinOp::Ge: return BinOp::Gt;
    case BinOp::Eq: return BinOp::Ne;
    case BinOp::Ne: return BinOp::Eq;
    default: return std::nullopt;
  }
}

std::optional<BinOp> lcr_swap(BinOp op) {
  switch (op) {
    case BinOp::And: return BinOp::Or;
    case BinOp::Or: return BinOp::And;
    default: return std::nullopt;
  }
}

/// Preorder enumeration of the expression nodes of one tree, paired with
/// their preorder index.
void each_site(const Expr& expr, int& next,
               const std::function<void(const Expr&, int)>& fn) {
  fn(expr, next++);
  for (const Expr& child : expr.children) each_site(child, next, fn);
}

class Generator {
 public:
  Generator(const Program& program, const std::set<MutOp>& enabled)
      : program_(program), enabled_(enabled) {}

  std::vector<Mutant> run() {
    for (const ClassDecl& cls : program_.classes) {
      for (const MethodDecl& method : cls.methods) {
        walk_statements(method.body, [&](const Stmt& stmt, int index) {
          for (MutOp op : all_mutops()) {
            if (enabled_.contains(op)) visit_stmt(cls, method, stmt, index, op);
          }
        });
      }
    }
    return std::move(out_);
  }

 private:
  void visit_stmt(const ClassDecl& cls, const MethodDecl& method, const Stmt& stmt,
                  int stmt_index, MutOp op) {
    if (!stmt.expr) return;
    int seq = 0;
    if (op == MutOp::CNB) {
      if (stmt.kind != StmtKind::If && stmt.kind != StmtKind::While) return;
      Expr negated;
      negated.kind = ExprKind::Not;
      negated.span = stmt.expr->span;
      negated.children.push_back(*stmt.expr);
      emit(cls, method, stmt_index, op, seq++, *stmt.expr, 0, std::move(negated));
      return;
    }
    int next = 0;
    each_site(*stmt.expr, next, [&](const Expr& node, int site) {
      switch (op) {
        case MutOp::AOR:
        case MutOp::ROR:
        case MutOp::LCR: {
          if (node.kind != ExprKind::Binary) return;
          const auto swapped = op == MutOp::AOR   ? aor_swap(node.op)
                               : op == MutOp::ROR ? ror_swap(node.op)
                                                  : lcr_swap(node.op);
          if (!swapped) return;
          Expr replacement = node;
          replacement.op = *swapped;
          emit(cls, method, stmt_index, op, seq++, node, site, std::move(replacement));
          return;
        }
        case MutOp::CRP: {
          if (node.kind != ExprKind::IntLit) return;
          if (node.int_value != std::numeric_limits<std::int64_t>::max()) {
            Expr plus_one = node;
            plus_one.int_value = node.int_value + 1;
            emit(cls, method, stmt_index, op, seq++, node, site, std::move(plus_one));
          }
          if (node.int_value != 0) {
            Expr zero = node;
            zero.int_value = 0;
            emit(cls, method, stmt_index, op, seq++, node, site, std::move(zero));
          }
          return;
        }
        default:
          return;
      }
    });
  }

  void emit(const ClassDecl& cls, const MethodDecl& method, int stmt_index, MutOp op,
            int seq, const Expr& original, int site, Expr replacement) {
    Mutant m;
    m.op = op;
    m.class_name = cls.name;
    m.method_name = method.name;
    m.stmt_index = stmt_index;
    m.seq = seq;
    m.location = original.span;
    m.original = expr_text(original);
    m.mutated = expr_text(replacement);
    m.expr_index = site;
    m.replacement = std::move(replacement);
    m.id = cls.file + ":" + cls.name + "." + method.name + ":" +
           std::to_string(stmt_index) + ":" + mutop_name(op) + ":" + std::to_string(seq);
    out_.push_back(std::move(m));
  }

  const Program& program_;
  const std::set<MutOp>& enabled_;
  std::vector<Mutant> out_;
};

Stmt* find_stmt(std::vector<Stmt>& body, int& next, int target) {
  for (Stmt& stmt : body) {
    if (next++ == target) return &stmt;
    if (stmt.kind == StmtKind::If) {
      if (Stmt* hit = find_stmt(stmt.block, next, target)) return hit;
      if (Stmt* hit = find_stmt(stmt.else_block, next, target)) return hit;
    } else if (stmt.kind == StmtKind::While) {
      if (Stmt* hit = find_stmt(stmt.block, next, target)) return hit;
    }
  }
  return nullptr;
}

Expr* find_site(Expr& expr, int& next, int target) {
  if (next++ == target) return &expr;
  for (Expr& child : expr.children) {
    if (Expr* hit = find_site(child, next, target)) return hit;
  }
  return nullptr;
}

}  // namespace

std::vector<Mutant> generate_mutants(const Program& program,
                                     const std::set<MutOp>& enabled) {
  return Generator(program, enabled).run();
}

Program materialize(const Program& program, const Mutant& mutant) {
  Program copy = program;
  const ClassDecl* cls = copy.find_class(mutant.class_name);
  if (!cls) throw StaleMutantError(mutant.id, "no class '" + mutant.class_name + "'");
  ClassDecl& mut_cls = copy.classes[copy.class_index.at(mutant.class_name)];
  auto method_it = mut_cls.method_index.find(mutant.method_name);
  if (method_it == mut_cls.method_index.end()) {
    throw StaleMutantError(mutant.id, "no method '" + mutant.method_name + "'");
  }
  MethodDecl& method = mut_cls.methods[method_it->second];
  int next_stmt = 0;
  Stmt* stmt = find_stmt(method.body, next_stmt, mutant.stmt_index);
  if (!stmt || !stmt->expr) {
    throw StaleMutantError(mutant.id, "no statement at index " +
                                          std::to_string(mutant.stmt_index));
  }
  int next_site = 0;
  Expr* site = find_site(*stmt->expr, next_site, mutant.expr_index);
  if (!site) {
    throw StaleMutantError(mutant.id, "no expression at site " +
                                          std::to_string(mutant.expr_index));
  }
  if (expr_text(*site) != mutant.original) {
    throw StaleMutantError(mutant.id, "target fragment is '" + expr_text(*site) +
                                          "', expected '" + mutant.original + "'");
  }
  *site = mutant.replacement;
  return copy;
}

}  // namespace mutagoal
