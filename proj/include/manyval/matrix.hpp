#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "manyval/error.hpp"

namespace manyval {

// A truth value is identified by its position in the declaring matrix's
// value list. kNoValue marks a missing table entry in unvalidated input.
using Value = std::uint8_t;
inline constexpr Value kNoValue = 0xFF;

// Value subsets are machine-word bitsets over declaration order; the
// searches (congruence enumeration, stats) refuse matrices above this.
inline constexpr std::size_t kMaxValues = 64;

// Hard representation limit of Value (0xFF is the missing-entry sentinel).
// Plain construction, products and evaluation work up to here.
inline constexpr std::size_t kMaxRepresentable = 254;

struct Issue {
  enum class Severity { Error, Warning };
  Severity severity;
  std::string message;
  std::string location;  // e.g. "values", "designated", "op and/2"
};

struct ValidationReport {
  bool ok = true;  // true iff no issue has Severity::Error
  std::vector<Issue> issues;

  void add(Issue::Severity severity, std::string message, std::string location);
  std::string to_string() const;
};

// A named finitary operation with a dense table: n^arity entries in
// row-major order, first argument most significant.
struct Operation {
  std::string name;
  int arity = 0;
  std::vector<Value> table;
};

// A finite logical matrix: truth values in declaration order, a designated
// subset, and operations. Immutable after construction; "modifications"
// build new matrices, so instances are safe to share across workers.
//
// Construction is deliberately permissive: validate_matrix reports broken
// invariants instead of the constructor throwing. Everything downstream of
// validation assumes a well-formed matrix.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::string name, std::vector<std::string> values,
         std::vector<std::string> designated, std::vector<Operation> ops);

  const std::string& name() const { return name_; }
  std::size_t size() const { return values_.size(); }
  const std::vector<std::string>& values() const { return values_; }
  const std::string& value_name(Value v) const;

  std::optional<Value> find_value(std::string_view name) const;
  // Throws Error on a foreign value name.
  Value value(std::string_view name) const;

  bool is_designated(Value v) const;  // throws on a foreign value
  std::size_t designated_count() const;
  std::vector<Value> designated_values() const;  // declaration order
  std::uint64_t designated_mask() const;         // requires size() <= 64
  // The designated names exactly as given at construction (for validation).
  const std::vector<std::string>& designated_names() const { return designated_raw_; }

  const std::vector<Operation>& ops() const { return ops_; }
  const Operation* find_op(std::string_view name, int arity) const;
  // Throws Error("unknown operation ...") when absent.
  const Operation& op(std::string_view name, int arity) const;

  // Fast table lookup; args must already be in range and op well-formed.
  Value apply(const Operation& op, std::span<const Value> args) const;
  // Checked lookup: verifies the op exists, the arity matches and every
  // argument is a value of this matrix.
  Value apply(std::string_view op_name, std::span<const Value> args) const;
  // Name-level convenience used by tests and the CLI.
  std::string apply_named(std::string_view op_name,
                          const std::vector<std::string>& args) const;

  Matrix with_name(std::string name) const;

  // Order-sensitive structural equality: same value order, same designated
  // flags, same operations and tables. The matrix name does not
  // participate; isomorphism is the semantic comparison.
  bool structurally_equal(const Matrix& other) const;

 private:
  std::string name_;
  std::vector<std::string> values_;
  std::vector<std::uint8_t> designated_flags_;  // per value
  std::vector<std::string> designated_raw_;
  std::vector<Operation> ops_;
};

// Reports every violated Matrix invariant; ok=true iff m is well-formed.
// Never throws: problems are reported, not thrown.
ValidationReport validate_matrix(const Matrix& m);

// Characters a truth-value name may never contain.
bool is_valid_value_name(std::string_view name);

}  // namespace manyval
