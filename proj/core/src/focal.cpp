#include "mutagoal/focal.hpp"

#include <optional>
#include <utility>

namespace mutagoal {

const char* method_kind_name(MethodKind kind) {
  return kind == MethodKind::Mutator ? "mutator" : "inspector";
}

std::vector<MethodKindEntry> classify_methods(const Program& program) {
  std::vector<MethodKindEntry> out;
  for (const ClassDecl& cls : program.classes) {
    // Per class: direct field writers, then the least fixpoint over self-calls.
    std::map<std::string, bool> mutator;
    std::map<std::string, std::set<std::string>> self_calls;
    for (const MethodDecl& method : cls.methods) {
      bool writes = false;
      std::set<std::string> calls;
      walk_statements(method.body, [&](const Stmt& stmt, int) {
        if (stmt.kind == StmtKind::FieldAssign) writes = true;
        if (stmt.expr) {
          walk_expr(*stmt.expr, [&](const Expr& expr) {
            if (expr.kind == ExprKind::Invoke && expr.self_receiver) {
              calls.insert(expr.name);
            }
          });
        }
      });
      mutator[method.name] = writes;
      self_calls[method.name] = std::move(calls);
    }
    bool changed = true;
    while (changed) {
      changed = false;
      for (const MethodDecl& method : cls.methods) {
        if (mutator[method.name]) continue;
        for (const std::string& callee : self_calls[method.name]) {
          if (mutator[callee]) {
            mutator[method.name] = true;
            changed = true;
            break;
          }
        }
      }
    }
    for (const MethodDecl& method : cls.methods) {
      out.push_back(MethodKindEntry{
          MethodRef{cls.name, method.name},
          mutator[method.name] ? MethodKind::Mutator : MethodKind::Inspector});
    }
  }
  return out;
}

KindTable kind_table(const Program& program) {
  KindTable table;
  for (const MethodKindEntry& entry : classify_methods(program)) {
    table.emplace(entry.ref, entry.kind);
  }
  return table;
}

std::vector<SubScenario> segment(const TestCase& test) {
  std::vector<SubScenario> out;
  const int n = static_cast<int>(test.body.size());
  int pre_begin = 0;
  int i = 0;
  while (i < n) {
    if (!is_assertion(test.body[i].kind)) {
      ++i;
      continue;
    }
    int end = i;
    while (end < n && is_assertion(test.body[end].kind)) ++end;
    out.push_back(SubScenario{pre_begin, i, end});
    pre_begin = end;
    i = end;
  }
  return out;
}

namespace {

struct ObjKey {
  std::string name;
  int version = 0;

  friend auto operator<=>(const ObjKey&, const ObjKey&) = default;
};

enum class BindKind { Plain, Object, InspectorCall, MutatorCall };

struct BindInfo {
  BindKind kind = BindKind::Plain;
  ObjKey object;    // Object: the local's own identity; InspectorCall: receiver
  MethodRef ref;    // MutatorCall: the bound-from method
};

struct MutatorEvent {
  int stmt_index = 0;  // position of the invocation; oracle_begin for calls
                       // inside the oracle itself
  MethodRef ref;
};

/// Straight-line scan state over a test body. Locals are tracked per binding
/// version; no aliasing analysis.
class Tracker {
 public:
  explicit Tracker(const KindTable& kinds) : kinds_(kinds) {
    for (const auto& [ref, kind] : kinds_) {
      (void)kind;
      by_name_[ref.method].push_back(ref);
    }
  }

  ObjKey key_of(const std::string& local) const {
    auto it = version_.find(local);
    return ObjKey{local, it == version_.end() ? 0 : it->second};
  }

  /// Resolves an invocation to a concrete declared method. Uses the tracked
  /// class of the receiver when known; otherwise the method name must be
  /// unambiguous program-wide.
  std::optional<MethodRef> resolve(const ObjKey& receiver,
                                   const std::string& method) const {
    auto cls = obj_class_.find(receiver);
    if (cls != obj_class_.end()) {
      MethodRef ref{cls->second, method};
      if (kinds_.contains(ref)) return ref;
      return std::nullopt;
    }
    auto candidates = by_name_.find(method);
    if (candidates != by_name_.end() && candidates->second.size() == 1) {
      return candidates->second.front();
    }
    return std::nullopt;
  }

  std::optional<MethodKind> kind_of(const MethodRef& ref) const {
    auto it = kinds_.find(ref);
    if (it == kinds_.end()) return std::nullopt;
    return it->second;
  }

  /// Records every invocation of the expression tree in evaluation order
  /// (arguments before the call itself), at statement position `index`.
  void scan_calls(const Expr& expr, int index) {
    for (const Expr& child : expr.children) scan_calls(child, index);
    if (expr.kind != ExprKind::Invoke) return;
    const ObjKey receiver = key_of(expr.receiver);
    auto ref = resolve(receiver, expr.name);
    if (ref && kind_of(*ref) == MethodKind::Mutator) {
      mutator_events_[receiver].push_back(MutatorEvent{index, *ref});
    }
  }

  /// Processes one pre-oracle statement at position `index`.
  void scan_stmt(const TestStmt& stmt, int index) {
    for (const Expr& expr : stmt.exprs) scan_calls(expr, index);
    if (stmt.kind != TestStmtKind::LocalBind) return;
    const int version = ++version_[stmt.name];
    const ObjKey self{stmt.name, version};
    const Expr& value = stmt.exprs[0];
    BindInfo info;
    switch (value.kind) {
      case ExprKind::New:
        obj_class_[self] = value.name;
        info = BindInfo{BindKind::Object, self, {}};
        break;
      case ExprKind::LocalRead: {
        // Copies the class (type information) but not the identity: the new
        // binding is its own tracked object.
        auto source = obj_class_.find(key_of(value.name));
        if (source != obj_class_.end()) {
          obj_class_[self] = source->second;
          info = BindInfo{BindKind::Object, self, {}};
        }
        break;
      }
      case ExprKind::Invoke: {
        const ObjKey receiver = key_of(value.receiver);
        if (auto ref = resolve(receiver, value.name)) {
          info = kind_of(*ref) == MethodKind::Mutator
                     ? BindInfo{BindKind::MutatorCall, {}, *ref}
                     : BindInfo{BindKind::InspectorCall, receiver, *ref};
        }
        break;
      }
      default:
        break;
    }
    bindings_[self] = info;
  }

  std::optional<BindInfo> binding_of(const std::string& local) const {
    auto it = bindings_.find(key_of(local));
    if (it == bindings_.end()) return std::nullopt;
    return it->second;
  }

  /// Rule (b): the last mutator invoked on the object within [from, to].
  std::optional<MethodRef> last_mutator(const ObjKey& object, int from, int to) const {
    auto events = mutator_events_.find(object);
    if (events == mutator_events_.end()) return std::nullopt;
    std::optional<MethodRef> hit;
    for (const MutatorEvent& event : events->second) {
      if (event.stmt_index >= from && event.stmt_index <= to) hit = event.ref;
    }
    return hit;
  }

 private:
  const KindTable& kinds_;
  std::map<std::string, std::vector<MethodRef>> by_name_;
  std::map<std::string, int> version_;
  std::map<ObjKey, std::string> obj_class_;
  std::map<ObjKey, BindInfo> bindings_;
  std::map<ObjKey, std::vector<MutatorEvent>> mutator_events_;
};

}  // namespace

std::set<MethodRef> extract_focal(const TestCase& test, const KindTable& kinds) {
  std::set<MethodRef> focal;
  Tracker tracker(kinds);
  int scanned = 0;
  for (const SubScenario& scenario : segment(test)) {
    for (; scanned < scenario.oracle_begin; ++scanned) {
      tracker.scan_stmt(test.body[scanned], scanned);
    }

    // (a) asserted entities of this oracle block.
    std::set<std::string> asserted_locals;
    std::set<ObjKey> asserted_objects;
    for (int i = scenario.oracle_begin; i < scenario.oracle_end; ++i) {
      for (const Expr& root : test.body[i].exprs) {
        walk_expr(root, [&](const Expr& expr) {
          if (expr.kind == ExprKind::LocalRead) {
            asserted_locals.insert(expr.name);
          } else if (expr.kind == ExprKind::Invoke) {
            const ObjKey receiver = tracker.key_of(expr.receiver);
            auto ref = tracker.resolve(receiver, expr.name);
            if (!ref) return;
            if (tracker.kind_of(*ref) == MethodKind::Inspector) {
              asserted_objects.insert(receiver);
            } else {
              // A mutator stimulated inside the oracle acts immediately
              // before it: its result is asserted, so it is focal, and it is
              // the object's most recent mutation.
              focal.insert(*ref);
              tracker.scan_calls(expr, scenario.oracle_begin);
            }
          }
        });
      }
    }

    // (c) locals bound from calls: mutator results are focal; inspector
    // results lift the assertion onto the inspected object.
    for (const std::string& local : asserted_locals) {
      auto info = tracker.binding_of(local);
      if (!info) continue;
      switch (info->kind) {
        case BindKind::MutatorCall: focal.insert(info->ref); break;
        case BindKind::InspectorCall:
        case BindKind::Object: asserted_objects.insert(info->object); break;
        case BindKind::Plain: break;
      }
    }

    // (b) per asserted object, the last mutator before this oracle.
    for (const ObjKey& object : asserted_objects) {
      if (auto ref = tracker.last_mutator(object, scenario.pre_begin,
                                          scenario.oracle_begin)) {
        focal.insert(*ref);
      }
    }
    scanned = scenario.oracle_end;
  }
  return focal;
}

const std::vector<std::string>& FocalIndex::tests_of(const MethodRef& ref) const {
  static const std::vector<std::string> empty;
  auto it = tests.find(ref);
  return it == tests.end() ? empty : it->second;
}

bool FocalIndex::is_focal_for(const std::string& test_id, const MethodRef& ref) const {
  auto it = focal.find(test_id);
  return it != focal.end() && it->second.contains(ref);
}

FocalIndex build_index(const Program& program) {
  FocalIndex index;
  index.kinds = kind_table(program);
  for (TestRef ref : program.all_tests()) {
    const TestCase& test = program.test(ref);
    const std::string id = program.test_id(ref);
    const std::string file = program.suites[ref.suite].file;
    auto scenarios = segment(test);
    if (scenarios.empty()) {
      index.lints.push_back(
          Lint{file, test.span, id, "no assertions: no sub-scenarios formed"});
    } else if (scenarios.back().oracle_end < static_cast<int>(test.body.size())) {
      index.lints.push_back(
          Lint{file, test.body[scenarios.back().oracle_end].span, id,
               "statements after the final oracle belong to no sub-scenario"});
    }
    std::set<MethodRef> focal = extract_focal(test, index.kinds);
    for (const MethodRef& method : focal) {
      index.tests[method].push_back(id);  // all_tests() order is global order
    }
    index.focal.emplace(id, std::move(focal));
    index.scenarios.emplace(id, std::move(scenarios));
  }
  return index;
}

}  // namespace mutagoal
