#include "manyval/tableau.hpp"

#include <algorithm>
#include <chrono>

namespace manyval {

std::string SignedFormula::to_string(const Matrix& m) const {
  return m.value_name(sign) + ":" + formula.to_string();
}

bool Rule::tuple_satisfies(std::span<const Value> args) const {
  for (const RuleBranch& branch : branches) {
    bool ok = true;
    for (const RuleConstraint& c : branch) {
      if (args[static_cast<std::size_t>(c.arg)] == c.sign) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  }
  return false;
}

RuleSet::RuleSet(std::string matrix_name, std::vector<Rule> rules)
    : matrix_name_(std::move(matrix_name)), rules_(std::move(rules)) {}

const Rule& RuleSet::rule(std::string_view op, int arity, Value sign) const {
  for (const Rule& r : rules_) {
    if (r.sign == sign && r.arity == arity && r.op == op) return r;
  }
  throw Error("no rule for " + std::string(op) + "/" + std::to_string(arity) +
              " with sign index " + std::to_string(sign));
}

namespace {

bool constraint_less(const RuleConstraint& a, const RuleConstraint& b) {
  return a.arg != b.arg ? a.arg < b.arg : a.sign < b.sign;
}

// b1 subset of b2? Both sorted by constraint_less.
bool branch_subset(const RuleBranch& b1, const RuleBranch& b2) {
  std::size_t j = 0;
  for (const RuleConstraint& c : b1) {
    while (j < b2.size() && constraint_less(b2[j], c)) ++j;
    if (j == b2.size() || !(b2[j] == c)) return false;
    ++j;
  }
  return true;
}

// A branch requiring one argument to differ from every value is unsatisfiable.
bool branch_satisfiable(const RuleBranch& branch, int arity, std::size_t n_values) {
  std::vector<std::size_t> forbidden(static_cast<std::size_t>(arity), 0);
  for (const RuleConstraint& c : branch) ++forbidden[static_cast<std::size_t>(c.arg)];
  // Constraints are deduplicated, so the count per argument is exact.
  return std::all_of(forbidden.begin(), forbidden.end(),
                     [n_values](std::size_t k) { return k < n_values; });
}

void dedupe_and_subsume(std::vector<RuleBranch>& branches, bool prune_subsumed) {
  std::sort(branches.begin(), branches.end());
  branches.erase(std::unique(branches.begin(), branches.end()), branches.end());
  if (!prune_subsumed) return;
  // Keep a branch only if no other kept branch is a proper subset of it;
  // shorter branches are considered first.
  std::stable_sort(branches.begin(), branches.end(),
                   [](const RuleBranch& a, const RuleBranch& b) {
                     return a.size() < b.size();
                   });
  std::vector<RuleBranch> kept;
  for (const RuleBranch& candidate : branches) {
    bool subsumed = false;
    for (const RuleBranch& small : kept) {
      if (branch_subset(small, candidate)) {
        subsumed = true;
        break;
      }
    }
    if (!subsumed) kept.push_back(candidate);
  }
  branches = std::move(kept);
}

}  // namespace

RuleSet generate_rules(const Matrix& m, const RuleGenOptions& options) {
  std::vector<Rule> rules;
  const std::size_t n = m.size();
  for (const auto& op : m.ops()) {
    for (std::size_t sign = 0; sign < n; ++sign) {
      // One clause per tuple the rule must exclude: "some argument differs".
      std::vector<RuleBranch> clauses;
      for (std::size_t index = 0; index < op.table.size(); ++index) {
        if (op.table[index] != static_cast<Value>(sign)) continue;
        RuleBranch clause;
        std::size_t rest = index;
        for (int i = op.arity - 1; i >= 0; --i) {
          clause.push_back(RuleConstraint{static_cast<Value>(rest % n), i});
          rest /= n;
        }
        std::sort(clause.begin(), clause.end(), constraint_less);
        clauses.push_back(std::move(clause));
      }

      std::vector<RuleBranch> branches{RuleBranch{}};
      for (const RuleBranch& clause : clauses) {
        std::vector<RuleBranch> next;
        next.reserve(branches.size());
        for (const RuleBranch& branch : branches) {
          for (const RuleConstraint& lit : clause) {
            RuleBranch extended = branch;
            auto pos = std::lower_bound(extended.begin(), extended.end(), lit,
                                        constraint_less);
            if (pos != extended.end() && *pos == lit) {
              extended = branch;  // literal already present, nothing to add
            } else {
              extended.insert(pos, lit);
            }
            if (branch_satisfiable(extended, op.arity, n))
              next.push_back(std::move(extended));
          }
        }
        dedupe_and_subsume(next, options.prune_subsumed);
        branches = std::move(next);
      }
      dedupe_and_subsume(branches, options.prune_subsumed);
      std::sort(branches.begin(), branches.end());

      Rule rule;
      rule.op = op.name;
      rule.arity = op.arity;
      rule.sign = static_cast<Value>(sign);
      rule.branches = std::move(branches);
      rules.push_back(std::move(rule));
    }
  }
  return RuleSet(m.name(), std::move(rules));
}

// ---------------------------------------------------------------------------
// Tableau
// ---------------------------------------------------------------------------

Tableau::Tableau(const Matrix& m, std::vector<SignedFormula> initial)
    : matrix_(&m) {
  if (initial.empty()) throw Error("a tableau needs at least one signed formula");
  BranchState state;
  int parent = -1;
  for (SignedFormula& sf : initial) {
    parent = add_node(parent, std::move(sf), state);
  }
  branches_.emplace(parent, std::move(state));
}

std::uint64_t Tableau::full_mask() const {
  const std::size_t n = matrix_->size();
  return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

void Tableau::note_formula(const SignedFormula& sf, int id, BranchState& state) {
  const std::string text = sf.formula.to_string();
  std::uint64_t& mask = state.sign_masks[text];
  mask |= std::uint64_t{1} << sf.sign;
  if (mask == full_mask()) state.closed = true;
  if (!sf.formula.is_atom()) {
    const std::string key = std::to_string(sf.sign) + ":" + text;
    if (state.enqueued.insert(key).second) state.queue.push_back(id);
  }
}

int Tableau::add_node(int parent, SignedFormula sf, BranchState& state) {
  const int id = static_cast<int>(nodes_.size());
  nodes_.push_back(Node{sf, parent, {}});
  if (parent >= 0) nodes_[static_cast<std::size_t>(parent)].children.push_back(id);
  ++stats_.nodes_created;
  note_formula(nodes_.back().sf, id, state);
  return id;
}

std::vector<int> Tableau::leaves() const {
  std::vector<int> out;
  out.reserve(branches_.size());
  for (const auto& [leaf, state] : branches_) out.push_back(leaf);
  return out;
}

bool Tableau::branch_closed(int leaf) const {
  auto it = branches_.find(leaf);
  if (it == branches_.end()) throw Error("no branch ends at node " + std::to_string(leaf));
  return it->second.closed;
}

bool Tableau::branch_saturated(int leaf) const {
  auto it = branches_.find(leaf);
  if (it == branches_.end()) throw Error("no branch ends at node " + std::to_string(leaf));
  return !it->second.closed && it->second.queue.empty();
}

bool Tableau::all_branches_closed() const {
  for (const auto& [leaf, state] : branches_) {
    if (!state.closed) return false;
  }
  return true;
}

std::optional<int> Tableau::saturated_open_branch() const {
  for (const auto& [leaf, state] : branches_) {
    if (!state.closed && state.queue.empty()) return leaf;
  }
  return std::nullopt;
}

int Tableau::next_unexpanded(int leaf) const {
  auto it = branches_.find(leaf);
  if (it == branches_.end()) throw Error("no branch ends at node " + std::to_string(leaf));
  return it->second.queue.empty() ? -1 : it->second.queue.front();
}

std::vector<int> Tableau::expand_on(const RuleSet& rules, int leaf, int node_id) {
  auto it = branches_.find(leaf);
  if (it == branches_.end()) throw Error("no branch ends at node " + std::to_string(leaf));
  if (it->second.closed) return {leaf};  // closed branches are never extended
  // Copy: add_node below reallocates nodes_.
  const SignedFormula sf = nodes_[static_cast<std::size_t>(node_id)].sf;
  if (sf.formula.is_atom())
    throw Error("cannot expand atomic signed formula " + sf.to_string(*matrix_));
  if (it->second.expanded.count(node_id))
    throw Error("node " + std::to_string(node_id) + " already expanded on this branch");

  BranchState base = std::move(it->second);
  branches_.erase(it);
  base.expanded.insert(node_id);
  std::erase(base.queue, node_id);
  ++stats_.expansions;

  const Rule& rule = rules.rule(sf.formula.name(), sf.formula.arity(), sf.sign);
  if (rule.branches.empty()) {
    // Nothing satisfies this sign; the branch closes outright.
    base.closed = true;
    branches_.emplace(leaf, std::move(base));
    return {};
  }

  // Signed formulas already asserted on the branch are never re-added, and
  // a rule branch whose constraints all hold already discharges the whole
  // rule, so the expansion adds nothing.
  std::vector<std::string> child_text;
  child_text.reserve(sf.formula.children().size());
  for (const auto& child : sf.formula.children())
    child_text.push_back(child.to_string());
  auto asserted = [&](const RuleConstraint& c) {
    auto it = base.sign_masks.find(child_text[static_cast<std::size_t>(c.arg)]);
    return it != base.sign_masks.end() && (it->second >> c.sign & 1);
  };
  std::vector<RuleBranch> pending;
  pending.reserve(rule.branches.size());
  bool discharged = false;
  for (const RuleBranch& rb : rule.branches) {
    RuleBranch missing;
    for (const RuleConstraint& c : rb) {
      if (!asserted(c)) missing.push_back(c);
    }
    if (missing.empty()) {
      discharged = true;
      break;
    }
    pending.push_back(std::move(missing));
  }
  if (discharged) {
    branches_.emplace(leaf, std::move(base));
    return {leaf};
  }

  std::vector<int> new_leaves;
  for (const RuleBranch& rb : pending) {
    BranchState state = base;
    int tip = leaf;
    for (const RuleConstraint& c : rb) {
      tip = add_node(tip,
                     SignedFormula{c.sign,
                                   sf.formula.children()[static_cast<std::size_t>(c.arg)]},
                     state);
    }
    new_leaves.push_back(tip);
    branches_.emplace(tip, std::move(state));
  }
  return new_leaves;
}

void Tableau::expand(const RuleSet& rules, int node_id) {
  if (node_id < 0 || node_id >= node_count())
    throw Error("no node " + std::to_string(node_id));
  const SignedFormula& sf = nodes_[static_cast<std::size_t>(node_id)].sf;
  if (sf.formula.is_atom())
    throw Error("cannot expand atomic signed formula " + sf.to_string(*matrix_));

  // Branches through the node: leaves with node_id on their root path.
  std::vector<int> targets;
  bool on_some_open_branch = false;
  for (const auto& [leaf, state] : branches_) {
    int walk = leaf;
    bool through = false;
    while (walk != -1) {
      if (walk == node_id) {
        through = true;
        break;
      }
      walk = nodes_[static_cast<std::size_t>(walk)].parent;
    }
    if (!through || state.closed) continue;
    on_some_open_branch = true;
    if (!state.expanded.count(node_id)) targets.push_back(leaf);
  }
  if (targets.empty()) {
    if (on_some_open_branch)
      throw Error("node " + std::to_string(node_id) +
                  " already expanded on every open branch through it");
    return;  // only closed branches: unchanged
  }
  for (int leaf : targets) expand_on(rules, leaf, node_id);
}

Valuation Tableau::extract_countervaluation(
    int leaf, const std::vector<std::string>& atoms) const {
  auto it = branches_.find(leaf);
  if (it == branches_.end()) throw Error("no branch ends at node " + std::to_string(leaf));
  if (it->second.closed)
    throw Error("cannot extract a countervaluation from a closed branch");
  Valuation valuation;
  for (const std::string& atom : atoms) {
    std::uint64_t mask = 0;
    auto found = it->second.sign_masks.find(atom);
    if (found != it->second.sign_masks.end()) mask = found->second;
    Value pick = kNoValue;
    for (std::size_t v = 0; v < matrix_->size(); ++v) {
      if (!(mask >> v & 1)) {
        pick = static_cast<Value>(v);
        break;
      }
    }
    if (pick == kNoValue)
      throw Error("atom '" + atom + "' carries every sign; branch should be closed");
    valuation[atom] = pick;
  }
  return valuation;
}

std::string Tableau::to_text() const {
  std::string out;
  // Chains share their parent's indentation; forks indent their children.
  auto walk = [&](auto&& self, int id, int indent) -> void {
    const Node& nd = nodes_[static_cast<std::size_t>(id)];
    out.append(static_cast<std::size_t>(indent) * 2, ' ');
    out += nd.sf.to_string(*matrix_);
    out += '\n';
    if (nd.children.empty()) {
      auto it = branches_.find(id);
      if (it != branches_.end() && it->second.closed) {
        out.append(static_cast<std::size_t>(indent) * 2, ' ');
        out += "×\n";
      }
      return;
    }
    const int child_indent = nd.children.size() > 1 ? indent + 1 : indent;
    for (int child : nd.children) self(self, child, child_indent);
  };
  if (!nodes_.empty()) walk(walk, 0, 0);
  return out;
}

// ---------------------------------------------------------------------------
// Prover
// ---------------------------------------------------------------------------

ProofResult prove_entailment(const Matrix& m, const RuleSet& rules,
                             const std::vector<Formula>& premises,
                             const Formula& conclusion, const ProverBudget& budget) {
  if (rules.matrix_name() != m.name())
    throw Error("rule set belongs to matrix '" + rules.matrix_name() + "', not '" +
                m.name() + "'");

  std::vector<SignedFormula> initial;
  for (const Formula& premise : premises) {
    for (std::size_t v = 0; v < m.size(); ++v) {
      if (!m.is_designated(static_cast<Value>(v)))
        initial.push_back(SignedFormula{static_cast<Value>(v), premise});
    }
  }
  for (std::size_t v = 0; v < m.size(); ++v) {
    if (m.is_designated(static_cast<Value>(v)))
      initial.push_back(SignedFormula{static_cast<Value>(v), conclusion});
  }

  std::vector<std::string> atoms;
  {
    std::vector<Formula> all = premises;
    all.push_back(conclusion);
    std::set<std::string> set;
    for (const Formula& f : all) {
      for (const auto& a : f.atoms()) set.insert(a);
    }
    atoms.assign(set.begin(), set.end());
  }

  const auto deadline = std::chrono::steady_clock::now() +
                        std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                            std::chrono::duration<double>(budget.seconds));

  ProofResult result{false, Tableau(m, std::move(initial)), std::nullopt};
  Tableau& tableau = result.tableau;

  std::deque<int> active;
  for (int leaf : tableau.leaves()) active.push_back(leaf);

  while (!active.empty()) {
    if (static_cast<std::uint64_t>(tableau.node_count()) > budget.max_nodes)
      throw BudgetExhausted("tableau exceeded " + std::to_string(budget.max_nodes) +
                            " nodes");
    if (std::chrono::steady_clock::now() >= deadline)
      throw BudgetExhausted("tableau proof search ran out of time");

    const int leaf = active.front();
    active.pop_front();
    if (tableau.branch_closed(leaf)) continue;
    const int node = tableau.next_unexpanded(leaf);
    if (node == -1) {
      // Saturated open branch: the tableau can never close.
      result.holds = false;
      result.countervaluation = tableau.extract_countervaluation(leaf, atoms);
      return result;
    }
    for (int next : tableau.expand_on(rules, leaf, node)) {
      if (!tableau.branch_closed(next)) active.push_back(next);
    }
  }

  result.holds = true;
  return result;
}

}  // namespace manyval
