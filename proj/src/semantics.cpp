#include "manyval/semantics.hpp"

#include <algorithm>
#include <bit>

namespace manyval {

Value evaluate(const Matrix& m, const Formula& f, const Valuation& valuation) {
  if (f.is_atom()) {
    auto it = valuation.find(f.name());
    if (it == valuation.end())
      throw Error("missing atom '" + f.name() + "' in valuation");
    if (it->second >= m.size())
      throw Error("valuation assigns a foreign value to atom '" + f.name() + "'");
    return it->second;
  }
  std::vector<Value> args;
  args.reserve(f.children().size());
  for (const auto& child : f.children()) args.push_back(evaluate(m, child, valuation));
  return m.apply(f.name(), args);
}

namespace {

// Formulas flattened to postfix programs over an atom slot vector, so the
// valuation odometer does not re-walk the AST for every valuation.
struct CompiledFormula {
  struct Step {
    const Operation* op = nullptr;  // nullptr: push atom slot
    int slot = 0;
  };
  std::vector<Step> steps;

  void compile(const Matrix& m, const Formula& f,
               const std::vector<std::string>& atoms) {
    if (f.is_atom()) {
      auto it = std::lower_bound(atoms.begin(), atoms.end(), f.name());
      steps.push_back(Step{nullptr, static_cast<int>(it - atoms.begin())});
      return;
    }
    for (const auto& child : f.children()) compile(m, child, atoms);
    const Operation* op = m.find_op(f.name(), f.arity());
    if (!op)
      throw Error("unknown operation '" + f.name() + "/" +
                  std::to_string(f.arity()) + "' in matrix '" + m.name() + "'");
    steps.push_back(Step{op, 0});
  }

  Value run(const Matrix& m, const std::vector<Value>& slots,
            std::vector<Value>& stack) const {
    stack.clear();
    for (const Step& step : steps) {
      if (!step.op) {
        stack.push_back(slots[static_cast<std::size_t>(step.slot)]);
        continue;
      }
      const std::size_t arity = static_cast<std::size_t>(step.op->arity);
      const Value result =
          m.apply(*step.op, std::span<const Value>(stack.data() + stack.size() - arity,
                                                   arity));
      stack.resize(stack.size() - arity);
      stack.push_back(result);
    }
    return stack.back();
  }
};

std::vector<std::string> gather_atoms(const std::vector<Formula>& premises,
                                      const Formula& conclusion) {
  std::vector<std::string> atoms;
  for (const auto& p : premises) {
    auto a = p.atoms();
    atoms.insert(atoms.end(), a.begin(), a.end());
  }
  auto a = conclusion.atoms();
  atoms.insert(atoms.end(), a.begin(), a.end());
  std::sort(atoms.begin(), atoms.end());
  atoms.erase(std::unique(atoms.begin(), atoms.end()), atoms.end());
  return atoms;
}

}  // namespace

EntailmentVerdict entails(const Matrix& m, const std::vector<Formula>& premises,
                          const Formula& conclusion, int atom_cap) {
  const std::vector<std::string> atoms = gather_atoms(premises, conclusion);
  if (static_cast<int>(atoms.size()) > atom_cap)
    throw Error("atom cap exceeded: " + std::to_string(atoms.size()) + " atoms (cap " +
                std::to_string(atom_cap) + "); raise the cap to search " +
                std::to_string(m.size()) + "^" + std::to_string(atoms.size()) +
                " valuations");

  std::vector<CompiledFormula> compiled_premises(premises.size());
  for (std::size_t i = 0; i < premises.size(); ++i)
    compiled_premises[i].compile(m, premises[i], atoms);
  CompiledFormula compiled_conclusion;
  compiled_conclusion.compile(m, conclusion, atoms);

  EntailmentVerdict verdict;
  std::vector<Value> slots(atoms.size(), 0);
  std::vector<Value> stack;
  const std::size_t n = m.size();

  // Odometer over the atom slots, last atom cycling fastest.
  for (;;) {
    ++verdict.valuations_checked;
    bool premises_designated = true;
    for (const auto& p : compiled_premises) {
      if (!m.is_designated(p.run(m, slots, stack))) {
        premises_designated = false;
        break;
      }
    }
    if (premises_designated &&
        !m.is_designated(compiled_conclusion.run(m, slots, stack))) {
      verdict.holds = false;
      Valuation counter;
      for (std::size_t i = 0; i < atoms.size(); ++i) counter[atoms[i]] = slots[i];
      verdict.countervaluation = std::move(counter);
      return verdict;
    }
    int i = static_cast<int>(slots.size()) - 1;
    while (i >= 0 && slots[static_cast<std::size_t>(i)] == n - 1) {
      slots[static_cast<std::size_t>(i)] = 0;
      --i;
    }
    if (i < 0) break;
    ++slots[static_cast<std::size_t>(i)];
  }
  return verdict;
}

EntailmentVerdict is_tautology(const Matrix& m, const Formula& f, int atom_cap) {
  return entails(m, {}, f, atom_cap);
}

AgreementReport check_consequence_agreement(const Matrix& source, const Matrix& target,
                                            const ValueMap& epi,
                                            const std::vector<FormulaPair>& suite,
                                            int atom_cap) {
  if (epi.kind != ValueMap::Kind::Epi)
    throw Error("consequence agreement requires a map of kind epi");
  if (epi.source != source.name() || epi.target != target.name())
    throw Error("map connects '" + epi.source + "' to '" + epi.target +
                "', not '" + source.name() + "' to '" + target.name() + "'");

  AgreementReport report;
  for (const FormulaPair& pair : suite) {
    const bool holds_source = entails(source, pair.premises, pair.conclusion, atom_cap).holds;
    const bool holds_target = entails(target, pair.premises, pair.conclusion, atom_cap).holds;
    ++report.pairs_checked;
    if (holds_source != holds_target) {
      report.all_agree = false;
      report.disagreements.push_back(Disagreement{pair, holds_source, holds_target});
    }
  }
  return report;
}

std::string AciViolation::describe(const Matrix& m) const {
  auto name = [&](std::size_t i) { return m.value_name(args[i]); };
  switch (law) {
    case Law::Associativity:
      return "associativity fails at (" + name(0) + "," + name(1) + "," + name(2) + ")";
    case Law::Commutativity:
      return "commutativity fails at (" + name(0) + "," + name(1) + ")";
    case Law::Idempotence:
      return "idempotence fails at " + name(0);
  }
  return "?";
}

std::optional<AciViolation> aci_violation(const Matrix& m, std::string_view binop) {
  const Operation& op = m.op(binop, 2);
  const std::size_t n = m.size();
  auto at = [&](std::size_t x, std::size_t y) { return op.table[x * n + y]; };

  for (std::size_t x = 0; x < n; ++x) {
    if (at(x, x) != x)
      return AciViolation{AciViolation::Law::Idempotence, {static_cast<Value>(x)}};
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x + 1; y < n; ++y) {
      if (at(x, y) != at(y, x))
        return AciViolation{AciViolation::Law::Commutativity,
                            {static_cast<Value>(x), static_cast<Value>(y)}};
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t z = 0; z < n; ++z) {
        if (at(at(x, y), z) != at(x, at(y, z)))
          return AciViolation{
              AciViolation::Law::Associativity,
              {static_cast<Value>(x), static_cast<Value>(y), static_cast<Value>(z)}};
      }
    }
  }
  return std::nullopt;
}

bool is_aci(const Matrix& m, std::string_view binop) {
  return !aci_violation(m, binop).has_value();
}

Value DistributionTable::fold(std::uint64_t subset_mask) const {
  if (subset_mask == 0 || subset_mask >= by_subset.size())
    throw Error("distribution table: subset mask out of range (empty subsets excluded)");
  return by_subset[subset_mask];
}

std::size_t DistributionTable::count_not(Value v) const {
  std::size_t count = 0;
  for (std::size_t mask = 1; mask < by_subset.size(); ++mask) {
    if (by_subset[mask] != v) ++count;
  }
  return count;
}

DistributionTable distribution_table(const Matrix& m, std::string_view binop) {
  if (m.size() > 16)
    throw Error("distribution tables support at most 16 values (" +
                std::to_string(m.size()) + " given)");
  if (auto violation = aci_violation(m, binop))
    throw Error("operation '" + std::string(binop) + "' of '" + m.name() +
                "' is not ACI: " + violation->describe(m));

  const Operation& op = m.op(binop, 2);
  DistributionTable table;
  table.op = std::string(binop);
  table.n_values = m.size();
  table.by_subset.assign(std::size_t{1} << m.size(), kNoValue);
  // Fold each subset by extending the fold of subset-without-lowest-bit.
  for (std::size_t mask = 1; mask < table.by_subset.size(); ++mask) {
    const auto low = static_cast<std::size_t>(std::countr_zero(mask));
    const std::size_t rest = mask & (mask - 1);
    table.by_subset[mask] =
        rest == 0 ? static_cast<Value>(low)
                  : op.table[static_cast<std::size_t>(table.by_subset[rest]) * m.size() + low];
  }
  return table;
}

}  // namespace manyval
