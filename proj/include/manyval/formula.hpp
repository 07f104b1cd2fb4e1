#pragma once

#include <memory>
#include <string>
#include <vector>

#include "manyval/error.hpp"

namespace manyval {

// A propositional term over atoms and operation symbols. Formulas are
// immutable values sharing structure; copies are cheap, equality is
// structural. The concrete syntax knows ~ (neg), & (and) and | (or), but
// compound nodes may carry any operation name.
class Formula {
 public:
  static Formula atom(std::string name);
  static Formula compound(std::string op, std::vector<Formula> children);
  static Formula neg(Formula f);
  static Formula conj(Formula a, Formula b);
  static Formula disj(Formula a, Formula b);

  bool is_atom() const;
  // Atom name, or the operation name for compounds.
  const std::string& name() const;
  int arity() const;
  const std::vector<Formula>& children() const;

  bool operator==(const Formula& other) const;
  bool operator!=(const Formula& other) const { return !(*this == other); }

  // Minimal-parentheses rendering; re-parsing yields an equal AST.
  std::string to_string() const;

  // The distinct atom names, sorted lexicographically.
  std::vector<std::string> atoms() const;

  std::size_t node_count() const;
  int depth() const;  // atoms have depth 0

 private:
  struct Node {
    bool is_atom;
    std::string name;
    std::vector<Formula> children;
  };
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

inline const std::string kOpNeg = "neg";
inline const std::string kOpAnd = "and";
inline const std::string kOpOr = "or";

}  // namespace manyval
