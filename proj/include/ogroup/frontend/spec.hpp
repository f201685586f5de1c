#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ogroup/errors.hpp"
#include "ogroup/group.hpp"
#include "ogroup/limits.hpp"

namespace ogroup::frontend {

/// 1-based line and column (columns count code points).
struct Location {
  std::size_t line = 0;
  std::size_t column = 0;
};

/// Malformed spec text.
class ParseError : public Error {
public:
  ParseError(Location at, const std::string &message);
  Location where() const { return at_; }
  const std::string &message() const { return message_; }

private:
  Location at_;
  std::string message_;
};

/// Well-formed text that does not describe a valid group.
class SemanticError : public Error {
public:
  SemanticError(Location at, const std::string &message,
                std::optional<Axiom> axiom = std::nullopt);
  Location where() const { return at_; }
  const std::string &message() const { return message_; }
  std::optional<Axiom> axiom() const { return axiom_; }

private:
  Location at_;
  std::string message_;
  std::optional<Axiom> axiom_;
};

struct SubgroupExpr {
  enum class Kind { generated, socle, center, derived };
  Kind kind = Kind::generated;
  std::vector<Element> elements;

  bool operator==(const SubgroupExpr &) const = default;
};

struct GroupExpr {
  enum class Kind { named, table, product, quotient, inner };
  Kind kind = Kind::named;
  NamedKind named = NamedKind::cyclic;
  std::size_t parameter = 0;
  std::vector<std::vector<Element>> table;
  /// Group names: the factors of a product, or the single operand of
  /// quotient and inner.
  std::vector<std::string> operands;
  SubgroupExpr by;

  bool operator==(const GroupExpr &) const = default;
};

struct OperatorAction {
  enum class Kind { values, inner, power };
  Kind kind = Kind::values;
  std::vector<Element> values;
  long long parameter = 0;

  bool operator==(const OperatorAction &) const = default;
};

struct Statement {
  enum class Kind { group, op };
  Kind kind = Kind::group;
  /// The group being defined, or the group receiving the operator.
  std::string name;
  GroupExpr group;
  std::string label;
  OperatorAction action;
  Location at;

  /// Locations are ignored.
  bool operator==(const Statement &o) const {
    return kind == o.kind && name == o.name && group == o.group &&
           label == o.label && action == o.action;
  }
};

struct GroupSpec {
  std::vector<Statement> statements;
  bool operator==(const GroupSpec &) const = default;
};

GroupSpec parse_spec(std::string_view text);

/// Canonical text: one statement per line, single spaces, no comments.
std::string print_spec(const GroupSpec &spec);

/// Groups defined by a spec, in order of first definition. An operator
/// statement replaces the group it extends.
class Environment {
public:
  const Group *find(std::string_view name) const;
  const std::vector<std::pair<std::string, Group>> &groups() const { return groups_; }
  void define(const std::string &name, Group g);
  void replace(const std::string &name, Group g);

private:
  std::vector<std::pair<std::string, Group>> groups_;
};

/// Builds every group. Validation failures become SemanticError at the
/// offending statement; CapExceeded passes through unchanged.
Environment elaborate(const GroupSpec &spec, const Limits &limits = {});

} // namespace ogroup::frontend
