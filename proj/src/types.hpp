// Copyright 2026 The rolebind Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ROLEBIND_TYPES_HPP
#define ROLEBIND_TYPES_HPP

#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "mask.hpp"

namespace rolebind {

/// A role identity: an optional sub-process scope plus a name. Two refs are
/// equal iff both parts are equal; this equality is the identity used by the
/// role table, the runtime, and the code generator.
struct RoleRef {
  std::optional<std::string> scope;  // absent = root scope
  std::string name;

  bool operator==(const RoleRef& o) const = default;
  bool operator<(const RoleRef& o) const {
    return std::tie(scope, name) < std::tie(o.scope, o.name);
  }

  /// "Scope::Name" for scoped roles, plain "Name" otherwise.
  std::string display() const {
    return scope ? *scope + "::" + name : name;
  }
};

enum class SetOp { And, Or };

/// Negation-free boolean expression over role names: a single role, or a
/// binary and/or combination. Immutable; cheap to copy (shared nodes).
class SetExpr {
 public:
  static SetExpr role(std::string name);
  static SetExpr combine(SetOp op, SetExpr lhs, SetExpr rhs);

  bool is_role() const { return node_->kind == Kind::Role; }
  const std::string& role_name() const { return node_->name; }
  SetOp op() const { return node_->op; }
  const SetExpr& lhs() const { return *node_->lhs; }
  const SetExpr& rhs() const { return *node_->rhs; }

  bool operator==(const SetExpr& o) const;

 private:
  enum class Kind { Role, Binary };
  struct Node {
    Kind kind;
    std::string name;  // Role
    SetOp op{SetOp::And};
    std::shared_ptr<const SetExpr> lhs, rhs;  // Binary
  };
  explicit SetExpr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

enum class StatementKind { Nominates, Releases };
enum class Polarity { In, NotIn };

struct BindingConstraint {
  Polarity polarity;
  SetExpr expr;

  bool operator==(const BindingConstraint& o) const {
    return polarity == o.polarity && expr == o.expr;
  }
};

/// One nominate/release statement as written in the policy text. Role names
/// are kept unresolved here; scope resolution happens against the role table.
struct BindingStatement {
  std::optional<std::string> scope;
  StatementKind kind{StatementKind::Nominates};
  std::string nominator;
  std::string nominee;
  std::optional<BindingConstraint> binding;
  /// All endorsed-by clauses of the statement, conjoined into one expression.
  std::optional<SetExpr> endorsement;

  bool operator==(const BindingStatement& o) const = default;
};

struct Policy {
  std::vector<std::string> caseCreators;
  std::vector<BindingStatement> statements;  // order preserved as parsed

  bool operator==(const Policy& o) const = default;
};

/// Scoped role universe with dense indices; basis of every bitmask encoding.
class RoleTable {
 public:
  struct Entry {
    RoleRef ref;
    std::size_t index;
    bool isCaseCreator;
    bool isMulti;
  };

  const std::vector<Entry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  const Entry& entry(std::size_t index) const { return entries_.at(index); }

  std::optional<std::size_t> find(const RoleRef& ref) const;

  /// Resolves a role name used inside a statement with the given scope:
  /// the scoped role (scope, name) if it exists, else the root role, else
  /// the unique role with that name in any other scope. Throws UnknownRole
  /// when nothing matches and ScopeResolutionError on ambiguity.
  std::size_t resolve(const std::string& name,
                      const std::optional<std::string>& scope) const;

  /// Used by the builder; entries must keep dense 0..n-1 indices.
  void add(Entry e) { entries_.push_back(std::move(e)); }
  void set_multi(std::size_t index, bool multi) { entries_.at(index).isMulti = multi; }

 private:
  std::vector<Entry> entries_;
};

/// DNF endorsement/binding constraint: a non-empty disjunction of conjunction
/// sets, each a role bitmask. Minimal after absorption.
struct DnfConstraint {
  std::vector<Mask256> conjunctionSets;

  bool operator==(const DnfConstraint& o) const = default;

  /// OR of all conjunction sets: every role that occurs in the constraint.
  Mask256 relevant_roles() const {
    Mask256 m;
    for (const auto& cs : conjunctionSets) m |= cs;
    return m;
  }
};

enum class EndorsementOutcome { Satisfied, Unsatisfiable, Pending };

}  // namespace rolebind

#endif  // ROLEBIND_TYPES_HPP
