#include "manyval/formula.hpp"

#include <algorithm>
#include <set>

namespace manyval {

Formula Formula::atom(std::string name) {
  return Formula(std::make_shared<Node>(Node{true, std::move(name), {}}));
}

Formula Formula::compound(std::string op, std::vector<Formula> children) {
  return Formula(std::make_shared<Node>(Node{false, std::move(op), std::move(children)}));
}

Formula Formula::neg(Formula f) { return compound(kOpNeg, {std::move(f)}); }
Formula Formula::conj(Formula a, Formula b) {
  return compound(kOpAnd, {std::move(a), std::move(b)});
}
Formula Formula::disj(Formula a, Formula b) {
  return compound(kOpOr, {std::move(a), std::move(b)});
}

bool Formula::is_atom() const { return node_->is_atom; }
const std::string& Formula::name() const { return node_->name; }
int Formula::arity() const { return static_cast<int>(node_->children.size()); }
const std::vector<Formula>& Formula::children() const { return node_->children; }

bool Formula::operator==(const Formula& other) const {
  if (node_ == other.node_) return true;
  if (node_->is_atom != other.node_->is_atom || node_->name != other.node_->name)
    return false;
  if (node_->children.size() != other.node_->children.size()) return false;
  for (std::size_t i = 0; i < node_->children.size(); ++i) {
    if (node_->children[i] != other.node_->children[i]) return false;
  }
  return true;
}

namespace {

// Higher binds tighter; atoms and function-style compounds never need parens.
int precedence(const Formula& f) {
  if (f.is_atom()) return 4;
  if (f.name() == kOpNeg && f.arity() == 1) return 3;
  if (f.name() == kOpAnd && f.arity() == 2) return 2;
  if (f.name() == kOpOr && f.arity() == 2) return 1;
  return 4;
}

void render(const Formula& f, int required, std::string& out) {
  const int prec = precedence(f);
  const bool parens = prec < required;
  if (parens) out += '(';
  if (f.is_atom()) {
    out += f.name();
  } else if (f.name() == kOpNeg && f.arity() == 1) {
    out += '~';
    render(f.children()[0], 3, out);
  } else if ((f.name() == kOpAnd || f.name() == kOpOr) && f.arity() == 2) {
    // Left associative: the right operand needs strictly higher precedence.
    render(f.children()[0], prec, out);
    out += f.name() == kOpAnd ? " & " : " | ";
    render(f.children()[1], prec + 1, out);
  } else {
    out += f.name();
    out += '(';
    for (int i = 0; i < f.arity(); ++i) {
      if (i) out += ", ";
      render(f.children()[static_cast<std::size_t>(i)], 0, out);
    }
    out += ')';
  }
  if (parens) out += ')';
}

void collect_atoms(const Formula& f, std::set<std::string>& out) {
  if (f.is_atom()) {
    out.insert(f.name());
    return;
  }
  for (const auto& c : f.children()) collect_atoms(c, out);
}

}  // namespace

std::string Formula::to_string() const {
  std::string out;
  render(*this, 0, out);
  return out;
}

std::vector<std::string> Formula::atoms() const {
  std::set<std::string> set;
  collect_atoms(*this, set);
  return {set.begin(), set.end()};
}

std::size_t Formula::node_count() const {
  std::size_t n = 1;
  for (const auto& c : node_->children) n += c.node_count();
  return n;
}

int Formula::depth() const {
  if (is_atom()) return 0;
  int d = 0;
  for (const auto& c : node_->children) d = std::max(d, c.depth());
  return d + 1;
}

}  // namespace manyval
