#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "manyval/formula.hpp"
#include "manyval/matrix.hpp"
#include "manyval/partition.hpp"

namespace manyval {

// Atom name -> value of the matrix under consideration. std::map keeps
// atoms in lexicographic order, matching the enumeration order.
using Valuation = std::map<std::string, Value>;

struct EntailmentVerdict {
  bool holds = true;
  // Present iff holds=false: all premises designated, conclusion not.
  std::optional<Valuation> countervaluation;
  std::uint64_t valuations_checked = 0;
};

// Exhaustive valuation search rejects formula sets with more atoms than
// this up front (|values|^atoms valuations); overridable per call.
inline constexpr int kDefaultAtomCap = 8;

// Compositional evaluation through m's tables. Throws on an atom missing
// from the valuation or an operation unknown to m.
Value evaluate(const Matrix& m, const Formula& f, const Valuation& valuation);

// holds iff every valuation designating all premises designates the
// conclusion; exhaustive over |values|^atoms. Atoms iterate in lexicographic
// order with values in declaration order (last atom fastest), and the first
// countervaluation in that order is returned.
EntailmentVerdict entails(const Matrix& m, const std::vector<Formula>& premises,
                          const Formula& conclusion, int atom_cap = kDefaultAtomCap);

EntailmentVerdict is_tautology(const Matrix& m, const Formula& f,
                               int atom_cap = kDefaultAtomCap);

struct FormulaPair {
  std::vector<Formula> premises;
  Formula conclusion;
};

struct Disagreement {
  FormulaPair pair;
  bool holds_source = false;
  bool holds_target = false;
};

struct AgreementReport {
  bool all_agree = true;
  std::size_t pairs_checked = 0;
  std::vector<Disagreement> disagreements;
};

// Checks that the consequence relations of source and target agree on every
// pair in the suite. epi must be a verified epimorphism source -> target; a
// disagreement would falsify it and is reported, never silently dropped.
AgreementReport check_consequence_agreement(const Matrix& source, const Matrix& target,
                                            const ValueMap& epi,
                                            const std::vector<FormulaPair>& suite,
                                            int atom_cap = kDefaultAtomCap);

struct AciViolation {
  enum class Law { Associativity, Commutativity, Idempotence };
  Law law = Law::Associativity;
  std::vector<Value> args;
  std::string describe(const Matrix& m) const;
};

// Exhaustive check that binop is associative, commutative and idempotent.
bool is_aci(const Matrix& m, std::string_view binop);
std::optional<AciViolation> aci_violation(const Matrix& m, std::string_view binop);

// The quantifier induced by an ACI operation: for every non-empty value set
// the fold of its members (order-independent by ACI). Dense, subset masks
// over declaration order; entry 0 is unused.
struct DistributionTable {
  std::string op;
  std::size_t n_values = 0;
  std::vector<Value> by_subset;  // size 2^n, indices 1..2^n-1 populated

  Value fold(std::uint64_t subset_mask) const;
  std::size_t subset_count() const { return by_subset.size() - 1; }
  std::size_t count_not(Value v) const;
};

// Requires is_aci(m, binop); otherwise throws an Error naming the violated
// law and a witness. Requires |values| <= 16 (2^16 - 1 subsets).
DistributionTable distribution_table(const Matrix& m, std::string_view binop);

}  // namespace manyval
