#pragma once

#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "manyval/formula.hpp"
#include "manyval/matrix.hpp"
#include "manyval/semantics.hpp"

namespace manyval {

// v:A asserts that A does not take value v: an interpretation satisfies
// v:A iff it evaluates A to something other than v.
struct SignedFormula {
  Value sign = 0;
  Formula formula = Formula::atom("?");

  std::string to_string(const Matrix& m) const;
};

// A child constraint of a rule branch: the signed formula sign:argument.
struct RuleConstraint {
  Value sign = 0;
  int arg = 0;

  auto operator<=>(const RuleConstraint&) const = default;
};

// Constraints sorted by (arg, sign); a tuple satisfies the branch iff
// args[c.arg] != c.sign for every constraint c.
using RuleBranch = std::vector<RuleConstraint>;

// Branch expansion rule for one (operation, sign) pair. Correctness: an
// argument tuple satisfies some branch iff op(args) != sign. A branch never
// constrains one argument with every value (such branches are
// unsatisfiable and are pruned during generation).
struct Rule {
  std::string op;
  int arity = 0;
  Value sign = 0;
  std::vector<RuleBranch> branches;

  bool tuple_satisfies(std::span<const Value> args) const;
};

struct RuleGenOptions {
  // Dropping branches that are supersets of other branches never changes
  // the satisfaction predicate; the switch exists so tests can compare.
  bool prune_subsumed = true;
};

class RuleSet {
 public:
  RuleSet() = default;
  RuleSet(std::string matrix_name, std::vector<Rule> rules);

  const std::string& matrix_name() const { return matrix_name_; }
  const std::vector<Rule>& rules() const { return rules_; }
  const Rule& rule(std::string_view op, int arity, Value sign) const;

 private:
  std::string matrix_name_;
  std::vector<Rule> rules_;
};

// One rule per (operation, sign). The condition op(args) != sign is the
// conjunction, over tuples t with op(t) = sign, of "some argument differs
// from t"; that conjunctive form is multiplied out into branches, with
// unsatisfiable branches dropped, duplicates removed and subsumed branches
// (supersets of another branch) pruned.
RuleSet generate_rules(const Matrix& m, const RuleGenOptions& options = {});

// A downward tree of signed formulas. Branches are identified by their
// leaf node; each keeps per-formula sign masks so closure detection is a
// bitmask test: a branch is closed iff some formula carries every sign.
class Tableau {
 public:
  struct Node {
    SignedFormula sf;
    int parent = -1;
    std::vector<int> children;
  };

  struct Stats {
    std::uint64_t expansions = 0;
    std::uint64_t nodes_created = 0;
  };

  // The initial signed formulas form a single chain (one branch).
  Tableau(const Matrix& m, std::vector<SignedFormula> initial);

  const Matrix& matrix() const { return *matrix_; }
  int node_count() const { return static_cast<int>(nodes_.size()); }
  const Node& node(int id) const { return nodes_[static_cast<std::size_t>(id)]; }
  int root() const { return 0; }

  std::vector<int> leaves() const;
  bool branch_closed(int leaf) const;
  // Open with no compound signed formula left to expand.
  bool branch_saturated(int leaf) const;
  bool all_branches_closed() const;
  // Some open branch is saturated (the tableau can never close).
  std::optional<int> saturated_open_branch() const;

  // Expands `node_id` on every open branch through it where it is not yet
  // expanded; closed branches are never extended. Throws Error for atomic
  // nodes, and when every open branch through the node has already
  // expanded it.
  void expand(const RuleSet& rules, int node_id);

  // Single-branch primitive: expands node_id on the branch of `leaf` and
  // returns the leaves that replace it (empty when the expansion closed
  // the branch without children).
  std::vector<int> expand_on(const RuleSet& rules, int leaf, int node_id);

  // Pops the next unexpanded compound node of the branch (FIFO), or -1.
  int next_unexpanded(int leaf) const;

  // For a saturated open branch: assigns every listed atom the first value
  // that does not appear as its sign on the branch.
  Valuation extract_countervaluation(int leaf,
                                     const std::vector<std::string>& atoms) const;

  const Stats& stats() const { return stats_; }

  // Indented tree, one signed formula per line, closed branches marked ×.
  std::string to_text() const;

 private:
  struct BranchState {
    bool closed = false;
    std::map<std::string, std::uint64_t> sign_masks;  // formula text -> sign bits
    std::deque<int> queue;                            // unexpanded compound nodes
    std::set<std::string> enqueued;                   // sign:formula dedupe
    std::set<int> expanded;
  };

  int add_node(int parent, SignedFormula sf, BranchState& state);
  void note_formula(const SignedFormula& sf, int id, BranchState& state);
  std::uint64_t full_mask() const;

  const Matrix* matrix_ = nullptr;
  std::vector<Node> nodes_;
  std::map<int, BranchState> branches_;  // keyed by leaf node id
  Stats stats_;
};

struct ProverBudget {
  double seconds = 600.0;
  std::uint64_t max_nodes = 1'000'000;
};

struct ProofResult {
  bool holds = false;
  Tableau tableau;
  // Present iff holds=false; checked genuine against the matrix.
  std::optional<Valuation> countervaluation;
};

// Decides premises |= conclusion: seeds the tableau with v:P for every
// undesignated v and premise P plus v:C for every designated v, then
// saturates with a FIFO strategy. A closed tableau proves the entailment;
// a saturated open branch yields a countervaluation. Propositional only.
// Throws BudgetExhausted when the budget runs out first.
ProofResult prove_entailment(const Matrix& m, const RuleSet& rules,
                             const std::vector<Formula>& premises,
                             const Formula& conclusion,
                             const ProverBudget& budget = {});

}  // namespace manyval
